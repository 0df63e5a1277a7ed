#include "hamstab/su2rep.hpp"

#include <sstream>
#include <stdexcept>

#include "hamstab/errors.hpp"

namespace hamstab {

BinaryForm::BinaryForm(CycVector coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("BinaryForm: needs at least one coefficient");
}

BinaryForm BinaryForm::monomial(unsigned degree, unsigned j) {
    if (j > degree) throw std::out_of_range("BinaryForm::monomial: index beyond degree");
    CycVector c(degree + 1);
    c[j] = CycNum(1);
    return BinaryForm(std::move(c));
}

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
    CycVector c(f.degree() + g.degree() + 1);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
            if (g.coeffs_[j].is_zero()) continue;
            c[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
    }
    return BinaryForm(std::move(c));
}

std::string BinaryForm::to_string() const {
    std::ostringstream os;
    const unsigned k = degree();
    bool first = true;
    for (unsigned j = 0; j <= k; ++j) {
        if (coeffs_[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[j].to_string() << ")";
        if (k - j) os << "*z1^" << (k - j);
        if (j) os << "*z2^" << j;
    }
    return first ? "0" : os.str();
}

GroupElement::GroupElement(CycMatrix m) : m_(std::move(m)) {
    if (m_.rows() != 2 || m_.cols() != 2) throw ConfigError("group element must be a 2x2 matrix");
    if (m_.determinant() != CycNum(1)) throw ConfigError("group element has determinant != 1");
    if (m_.conj_transpose() * m_ != CycMatrix::identity(2)) throw ConfigError("group element is not unitary");
}

GroupElement GroupElement::identity() { return GroupElement(CycMatrix::identity(2), Trusted{}); }

GroupElement GroupElement::inverse() const { return GroupElement(m_.conj_transpose(), Trusted{}); }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement(a.m_ * b.m_, GroupElement::Trusted{});
}

AlgebraElement::AlgebraElement(CycMatrix m) : m_(std::move(m)) {
    if (m_.rows() != 2 || m_.cols() != 2) throw ConfigError("algebra element must be a 2x2 matrix");
    if (!m_.trace().is_zero()) throw ConfigError("algebra element is not traceless");
    if (m_.conj_transpose() != m_.scaled(CycNum(-1))) throw ConfigError("algebra element is not anti-Hermitian");
}

namespace su2 {

GroupElement generator_a() {
    return GroupElement(CycMatrix{{CycNum::omega6(), 0}, {0, CycNum::omega6().conj()}});
}

GroupElement generator_b() {
    return GroupElement(CycMatrix{{0, CycNum::i()}, {CycNum::i(), 0}});
}

AlgebraElement H() { return AlgebraElement(CycMatrix{{CycNum::i(), 0}, {0, -CycNum::i()}}); }
AlgebraElement X() { return AlgebraElement(CycMatrix{{0, 1}, {-1, 0}}); }
AlgebraElement Y() { return AlgebraElement(CycMatrix{{0, CycNum::i()}, {CycNum::i(), 0}}); }

std::array<AlgebraElement, 3> orthonormal_basis() {
    const CycNum s = (CycNum::sqrt2() * CycNum(2)).inverse();
    return {AlgebraElement(H().matrix().scaled(s)), AlgebraElement(X().matrix().scaled(s)),
            AlgebraElement(Y().matrix().scaled(s))};
}

AlgebraElement from_coordinates(const CycVector& coords) {
    if (coords.size() != 3) throw std::invalid_argument("su(2) coordinates need 3 entries");
    const auto basis = orthonormal_basis();
    CycMatrix m(2, 2);
    for (std::size_t i = 0; i < 3; ++i) m += basis[i].matrix().scaled(coords[i]);
    return AlgebraElement(std::move(m));
}

CycNum killing_form(const AlgebraElement& xi, const AlgebraElement& eta) {
    return (xi.matrix() * eta.matrix()).trace() * CycNum(4);
}

CycVector coordinates(const AlgebraElement& xi) {
    const auto basis = orthonormal_basis();
    CycVector c(3);
    for (std::size_t i = 0; i < 3; ++i) c[i] = -killing_form(xi, basis[i]);
    return c;
}

CycMatrix adjoint_matrix(const GroupElement& g) {
    const auto basis = orthonormal_basis();
    const CycMatrix& m = g.matrix();
    const CycMatrix minv = g.inverse().matrix();
    CycMatrix ad(3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        const CycVector c = coordinates(AlgebraElement(m * basis[j].matrix() * minv));
        for (std::size_t i = 0; i < 3; ++i) ad(i, j) = c[i];
    }
    return ad;
}

CycMatrix sym_power(const GroupElement& g, unsigned k) {
    // f(g^-1 z): z1 -> a z1 + b z2, z2 -> c z1 + d z2 with g^-1 = [[a, b], [c, d]].
    const CycMatrix inv = g.inverse().matrix();
    const BinaryForm l1(CycVector{inv(0, 0), inv(0, 1)});
    const BinaryForm l2(CycVector{inv(1, 0), inv(1, 1)});
    std::vector<BinaryForm> p1{BinaryForm(CycVector{CycNum(1)})}, p2 = p1;
    for (unsigned e = 1; e <= k; ++e) {
        p1.push_back(p1.back() * l1);
        p2.push_back(p2.back() * l2);
    }
    CycMatrix rho(k + 1, k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        const BinaryForm image = p1[k - j] * p2[j];
        for (unsigned i = 0; i <= k; ++i) rho(i, j) = image[i];
    }
    return rho;
}

CycMatrix algebra_action(const AlgebraElement& xi, unsigned k) {
    const CycMatrix& x = xi.matrix();
    CycMatrix d(k + 1, k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        const long a = static_cast<long>(k - j), b = static_cast<long>(j);
        // d/dt of (z1 - t(x00 z1 + x01 z2))^a (z2 - t(x10 z1 + x11 z2))^b
        d(j, j) = -(x(0, 0) * CycNum(a) + x(1, 1) * CycNum(b));
        if (j + 1 <= k) d(j + 1, j) = -(x(0, 1) * CycNum(a));
        if (j >= 1) d(j - 1, j) = -(x(1, 0) * CycNum(b));
    }
    return d;
}

CycMatrix invariant_form(unsigned k) {
    CycVector w(k + 1);
    for (unsigned j = 0; j <= k; ++j) w[j] = CycNum(Rational(1) / binomial(k, j));
    return CycMatrix::diagonal(w);
}

CycNum character(const GroupElement& g, unsigned k) { return sym_power(g, k).trace(); }

CycNum highest_weight_on_H(unsigned k) {
    const CycMatrix dh = algebra_action(H(), k);
    if (!dh.is_diagonal()) throw std::logic_error("d rho(H) is not diagonal");
    std::optional<Rational> best;
    for (unsigned j = 0; j <= k; ++j) {
        const CycNum im = dh(j, j).imag_part();
        const auto m = im.as_rational();
        if (!m || !dh(j, j).real_part().is_zero())
            throw std::logic_error("d rho(H) has an entry that is not in i*Q");
        if (!best || *m > *best) best = *m;
    }
    return CycNum::i() * CycNum(*best);
}

CycNum positive_root_on_H() {
    const CycMatrix raise{{0, 1}, {0, 0}};
    const CycMatrix ad = commutator(H().matrix(), raise);
    // ad(H) E = alpha(H) E; read the scalar from the only nonzero entry.
    const CycNum alpha = ad(0, 1);
    if (ad != raise.scaled(alpha)) throw std::logic_error("raising operator is not an ad(H) eigenvector");
    return alpha;
}

Rational casimir_eigenvalue(unsigned k) {
    // (lambda, mu) = lambda(H) mu(H) / B(H, H), lambda = mu + alpha+.
    const CycNum mu = highest_weight_on_H(k);
    const CycNum lambda = mu + positive_root_on_H();
    const CycNum value = lambda * mu / killing_form(H(), H());
    const auto q = value.as_rational();
    if (!q) throw std::logic_error("Casimir eigenvalue is not rational");
    return *q;
}

Rational casimir_closed_form(unsigned k) {
    const Rational kk(static_cast<long>(k));
    return kk / Rational(4) + kk * kk / Rational(8);
}

}  // namespace su2

CycVector apply(const CycMatrix& m, const BinaryForm& f) { return m * f.coeffs(); }

}  // namespace hamstab
