#pragma once

// Test-only oracles. Nothing here calls the code path it is used to check:
// field elements are evaluated numerically, characters come from the
// Clebsch-Gordan recurrence instead of sym_power traces, fixed vectors from
// the explicit monomial action, fundamental fields from finite differences.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "hamstab/cyc_matrix.hpp"
#include "hamstab/su2rep.hpp"

namespace oracle {

using hamstab::CycMatrix;
using hamstab::CycNum;
using hamstab::CycVector;
using hamstab::Rational;
using cd = std::complex<double>;

/// sum_j c_j exp(2 pi i j / 24), evaluated from the raw coefficients.
inline cd evaluate(const CycNum& x) {
    cd sum = 0.0;
    for (int j = 0; j < CycNum::kDegree; ++j) {
        const double angle = 2.0 * std::numbers::pi * j / 24.0;
        sum += x.coeff(j).to_double() * cd(std::cos(angle), std::sin(angle));
    }
    return sum;
}

inline bool near(cd a, cd b, double tol = 1e-9) { return std::abs(a - b) < tol; }

/// Remainder of a polynomial modulo a monic divisor by schoolbook long division.
inline std::vector<Rational> poly_rem(std::vector<Rational> p, const std::vector<Rational>& monic) {
    const std::size_t dd = monic.size() - 1;
    while (p.size() > dd) {
        const Rational lead = p.back();
        const std::size_t shift = p.size() - 1 - dd;
        for (std::size_t i = 0; i <= dd; ++i) p[shift + i] -= lead * monic[i];
        p.pop_back();
    }
    p.resize(dd);
    return p;
}

/// x^8 - x^4 + 1, low degree first.
inline std::vector<Rational> phi24() {
    std::vector<Rational> phi(9);
    phi[0] = Rational(1);
    phi[4] = Rational(-1);
    phi[8] = Rational(1);
    return phi;
}

/// Product of power-basis vectors via plain convolution and long division.
inline CycNum poly_mul(const CycNum& x, const CycNum& y) {
    std::vector<Rational> prod(15);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) prod[i + j] += x.coeff(i) * y.coeff(j);
    const auto rem = poly_rem(prod, phi24());
    CycNum::Coeffs c;
    for (int j = 0; j < 8; ++j) c[j] = rem[j];
    return CycNum(c);
}

/// chi_0 = 1, chi_1 = tr g, chi_{k+1} = tr(g) chi_k - chi_{k-1}.
inline CycNum character_recurrence(const CycMatrix& g, unsigned k) {
    const CycNum t = g.trace();
    CycNum prev(1), cur = t;
    if (k == 0) return prev;
    for (unsigned n = 1; n < k; ++n) {
        CycNum next = t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// V^F for F = <a, b> from the explicit monomial action: a scales
/// z1^l z2^(k-l) by exp(-i pi (2l - k)/3) and b sends it to
/// (-i)^k z1^(k-l) z2^l. Fixed vectors: m_l + i^k m_(k-l) with 6 | 2l - k.
inline std::vector<CycVector> congruence_fixed_basis(unsigned k) {
    std::vector<CycVector> out;
    if (k % 2) return out;
    const CycNum ik = CycNum::i().pow(k);
    for (unsigned l = (k + 1) / 2; l <= k; ++l) {
        const long w = 2 * static_cast<long>(l) - static_cast<long>(k);
        if (w % 6 != 0) continue;
        CycVector v(k + 1);
        v[k - l] += CycNum(1);  // index = power of z2
        v[l] += ik;
        bool zero = true;
        for (const auto& x : v) zero = zero && x.is_zero();
        if (!zero) out.push_back(std::move(v));
    }
    return out;
}

using CMat = std::array<std::array<cd, 2>, 2>;

inline CMat to_complex(const CycMatrix& m) {
    return {{{evaluate(m(0, 0)), evaluate(m(0, 1))}, {evaluate(m(1, 0)), evaluate(m(1, 1))}}};
}

inline CMat mat_mul(const CMat& a, const CMat& b) {
    CMat r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

inline CMat expm(const CMat& x, double t) {
    CMat result{{{1.0, 0.0}, {0.0, 1.0}}}, term = result;
    for (int n = 1; n < 30; ++n) {
        term = mat_mul(term, x);
        for (auto& row : term)
            for (auto& e : row) e *= t / n;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) result[i][j] += term[i][j];
    }
    return result;
}

/// Coefficients of f(g^-1 z) for f = sum_j c_j z1^(n-j) z2^j, in doubles.
inline std::vector<cd> act_numeric(const CMat& ginv, const std::vector<cd>& c) {
    const std::size_t n = c.size() - 1;
    std::vector<cd> out(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        // (a z1 + b z2)^(n-j) (c z1 + d z2)^j by repeated convolution
        std::vector<cd> poly{1.0};
        auto times = [&poly](cd x1, cd x2) {
            std::vector<cd> next(poly.size() + 1);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i] += poly[i] * x1;
                next[i + 1] += poly[i] * x2;
            }
            poly = std::move(next);
        };
        for (std::size_t e = 0; e < n - j; ++e) times(ginv[0][0], ginv[0][1]);
        for (std::size_t e = 0; e < j; ++e) times(ginv[1][0], ginv[1][1]);
        for (std::size_t i = 0; i <= n; ++i) out[i] += c[j] * poly[i];
    }
    return out;
}

/// Central-difference chart velocity of t -> [rho(exp t xi) p], as (a_j, b_j).
inline std::vector<double> numeric_fundamental_field(const CycMatrix& xi, const std::vector<cd>& p) {
    const double h = 1e-5;
    const CMat x = to_complex(xi);
    auto chart = [&](double t) {
        const std::vector<cd> img = act_numeric(expm(x, -t), p);
        std::vector<cd> w(img.size() - 1);
        for (std::size_t j = 1; j < img.size(); ++j) w[j - 1] = img[j] / img[0];
        return w;
    };
    const auto plus = chart(h), minus = chart(-h);
    std::vector<double> out;
    for (std::size_t j = 0; j < plus.size(); ++j) out.push_back(((plus[j] - minus[j]) / (2 * h)).real());
    for (std::size_t j = 0; j < plus.size(); ++j) out.push_back(((plus[j] - minus[j]) / (2 * h)).imag());
    return out;
}

/// Horizontal lift at (1/sqrt(2u))(1, 0, 0, 1) as displayed for the cubic:
/// (1/(2 sqrt(2u))) (-c3, 2 c1, 2 c2, c3), c_j = a_j + i b_j.
inline std::vector<cd> displayed_lift(const std::vector<double>& a, const std::vector<double>& b, double u) {
    const double s = 1.0 / (2.0 * std::sqrt(2.0 * u));
    const cd c1(a[0], b[0]), c2(a[1], b[1]), c3(a[2], b[2]);
    return {s * -c3, s * 2.0 * c1, s * 2.0 * c2, s * c3};
}

struct RandomCyc {
    std::mt19937_64 rng;
    explicit RandomCyc(std::uint64_t seed) : rng(seed) {}

    Rational rational(long span = 9) {
        std::uniform_int_distribution<long> num(-span, span), den(1, span);
        return Rational(num(rng), den(rng));
    }

    CycNum cyc(double density = 0.6) {
        std::bernoulli_distribution keep(density);
        CycNum::Coeffs c;
        for (auto& x : c)
            if (keep(rng)) x = rational();
        return CycNum(c);
    }

    CycNum nonzero() {
        for (;;) {
            CycNum x = cyc();
            if (!x.is_zero()) return x;
        }
    }
};

}  // namespace oracle
