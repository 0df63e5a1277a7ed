#include "hamstab/cycnum.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hamstab/errors.hpp"

namespace hamstab {

namespace {

// x^8 = x^4 - 1, applied from the top down.
void reduce(std::array<Rational, 2 * CycNum::kDegree - 1>& c) {
    for (int d = 2 * CycNum::kDegree - 2; d >= CycNum::kDegree; --d) {
        if (c[d].is_zero()) continue;
        c[d - 4] += c[d];
        c[d - 8] -= c[d];
        c[d] = Rational();
    }
}

const std::array<CycNum, CycNum::kOrder>& zeta_table() {
    static const std::array<CycNum, CycNum::kOrder> table = [] {
        std::array<CycNum, CycNum::kOrder> t;
        CycNum::Coeffs one{};
        one[0] = Rational(1);
        t[0] = CycNum(one);
        CycNum::Coeffs z{};
        z[1] = Rational(1);
        const CycNum zeta(z);
        for (int n = 1; n < CycNum::kOrder; ++n) t[n] = t[n - 1] * zeta;
        return t;
    }();
    return table;
}

struct RootTable {
    CycNum root2, root3, root6;
};

// Square roots the metric computations need; each is checked by squaring.
const RootTable& root_table() {
    static const RootTable table = [] {
        RootTable t;
        t.root2 = CycNum::zeta(3) + CycNum::zeta(-3);
        t.root3 = CycNum::zeta(2) + CycNum::zeta(-2);
        t.root6 = t.root2 * t.root3;
        if (t.root2 * t.root2 != CycNum(2) || t.root3 * t.root3 != CycNum(3) ||
            t.root6 * t.root6 != CycNum(6))
            throw std::logic_error("square-root table failed its squaring check");
        return t;
    }();
    return table;
}

}  // namespace

CycNum CycNum::zeta(long n) {
    long r = n % kOrder;
    if (r < 0) r += kOrder;
    return zeta_table()[static_cast<std::size_t>(r)];
}

CycNum CycNum::sqrt2() { return root_table().root2; }
CycNum CycNum::sqrt3() { return root_table().root3; }

bool CycNum::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (int j = 1; j < kDegree; ++j)
        if (!c_[j].is_zero()) return false;
    return true;
}

bool CycNum::is_real() const { return conj() == *this; }

std::optional<Rational> CycNum::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
}

CycNum CycNum::operator-() const {
    CycNum r;
    for (int j = 0; j < kDegree; ++j) r.c_[j] = -c_[j];
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    for (int j = 0; j < kDegree; ++j) c_[j] += o.c_[j];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    for (int j = 0; j < kDegree; ++j) c_[j] -= o.c_[j];
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum operator*(const CycNum& a, const CycNum& b) {
    std::array<Rational, 2 * CycNum::kDegree - 1> prod{};
    for (int i = 0; i < CycNum::kDegree; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; j < CycNum::kDegree; ++j) {
            if (b.c_[j].is_zero()) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    reduce(prod);
    CycNum r;
    for (int j = 0; j < CycNum::kDegree; ++j) r.c_[j] = std::move(prod[j]);
    return r;
}

CycNum CycNum::scaled(const Rational& r) const {
    CycNum out = *this;
    for (auto& x : out.c_) x *= r;
    return out;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycNum: division by zero");
    // Column j of the multiplication matrix is x * zeta^j; solve M y = e_0.
    constexpr int n = kDegree;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int j = 0; j < n; ++j) {
        const CycNum col = *this * zeta(j);
        for (int i = 0; i < n; ++i) m[i][j] = col.c_[i];
    }
    m[0][n] = Rational(1);
    for (int col = 0, row = 0; col < n; ++col, ++row) {
        int piv = row;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::logic_error("CycNum: singular multiplication matrix");
        std::swap(m[piv], m[row]);
        const Rational inv = Rational(1) / m[row][col];
        for (int k = col; k <= n; ++k) m[row][k] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const Rational f = m[r][col];
            for (int k = col; k <= n; ++k) m[r][k] -= f * m[row][k];
        }
    }
    CycNum y;
    for (int i = 0; i < n; ++i) y.c_[i] = m[i][n];
    return y;
}

CycNum CycNum::conj() const {
    CycNum r;
    for (int j = 0; j < kDegree; ++j) {
        if (c_[j].is_zero()) continue;
        r += zeta(-j).scaled(c_[j]);
    }
    return r;
}

CycNum CycNum::real_part() const { return (*this + conj()).scaled(Rational(1, 2)); }

CycNum CycNum::imag_part() const {
    // (x - conj x) / (2i) = -(i/2)(x - conj x)
    return ((*this - conj()) * i()).scaled(Rational(-1, 2));
}

CycNum CycNum::pow(unsigned e) const {
    CycNum result(1), base = *this;
    while (e) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

std::complex<double> CycNum::to_complex() const {
    std::complex<double> sum = 0.0;
    for (int j = 0; j < kDegree; ++j) {
        if (c_[j].is_zero()) continue;
        const double angle = 2.0 * std::numbers::pi * j / kOrder;
        sum += c_[j].to_double() * std::polar(1.0, angle);
    }
    return sum;
}

std::string CycNum::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < kDegree; ++j) {
        const Rational& c = c_[j];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = c.abs();
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (j == 0) {
            os << mag.to_string();
        } else {
            if (mag != Rational(1)) os << mag.to_string() << "*";
            os << "zeta24^" << j;
        }
    }
    return os.str();
}

CycNum sqrt_rational(const Rational& r) {
    if (r.sign() < 0) throw NotExpressible("square root of negative rational " + r.to_string());
    if (r.is_zero()) return CycNum(0);
    // sqrt(n/d) = sqrt(n d) / d
    const mpz_class nd = r.numerator() * r.denominator();
    const RootTable& roots = root_table();
    const std::array<std::pair<long, CycNum>, 4> basis{{
        {1, CycNum(1)}, {2, roots.root2}, {3, roots.root3}, {6, roots.root6}}};
    for (const auto& [f, root] : basis) {
        if (nd % f != 0) continue;
        const mpz_class q = nd / f;
        if (!mpz_perfect_square_p(q.get_mpz_t())) continue;
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), q.get_mpz_t());
        const CycNum out = root.scaled(Rational(mpq_class(s, r.denominator())));
        if (out * out != CycNum(r)) throw std::logic_error("sqrt_rational: squaring check failed");
        return out;
    }
    throw NotExpressible("square root of " + r.to_string() + " is not in the root table of Q(zeta24)");
}

CycNum sqrt_real(const CycNum& x) {
    auto q = x.as_rational();
    if (!q) throw NotExpressible("square root of irrational element " + x.to_string());
    return sqrt_rational(*q);
}

}  // namespace hamstab
