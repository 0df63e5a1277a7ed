#pragma once

#include <array>

#include "hamstab/cyc_matrix.hpp"

namespace hamstab {

/// Homogeneous polynomial of degree k in z1, z2. Index j holds the
/// coefficient of z1^(k-j) z2^j.
class BinaryForm {
public:
    BinaryForm() : coeffs_(1) {}
    explicit BinaryForm(CycVector coeffs);
    static BinaryForm zero(unsigned degree) { return BinaryForm(CycVector(degree + 1)); }
    static BinaryForm monomial(unsigned degree, unsigned j);

    unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const CycVector& coeffs() const { return coeffs_; }
    const CycNum& operator[](std::size_t j) const { return coeffs_[j]; }
    bool is_zero() const { return hamstab::is_zero(coeffs_); }

    friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) = default;

    std::string to_string() const;

private:
    CycVector coeffs_;
};

/// Element of SU(2): det m = 1 and m* m = I, checked at construction.
class GroupElement {
public:
    /// Throws ConfigError unless m is 2x2 special unitary.
    explicit GroupElement(CycMatrix m);
    static GroupElement identity();

    const CycMatrix& matrix() const { return m_; }
    GroupElement inverse() const;
    friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
    friend bool operator==(const GroupElement& a, const GroupElement& b) = default;

private:
    struct Trusted {};
    GroupElement(CycMatrix m, Trusted) : m_(std::move(m)) {}
    CycMatrix m_;
};

/// Element of su(2): anti-Hermitian and traceless, checked at construction.
class AlgebraElement {
public:
    explicit AlgebraElement(CycMatrix m);
    const CycMatrix& matrix() const { return m_; }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) = default;

private:
    CycMatrix m_;
};

namespace su2 {

/// diag(e^{i pi/3}, e^{-i pi/3})
GroupElement generator_a();
/// [[0, i], [i, 0]]
GroupElement generator_b();

AlgebraElement H();  ///< diag(i, -i)
AlgebraElement X();  ///< [[0, 1], [-1, 0]]
AlgebraElement Y();  ///< [[0, i], [i, 0]]

/// H, X, Y divided by 2 sqrt2: orthonormal for -B.
std::array<AlgebraElement, 3> orthonormal_basis();

/// sum_i coords[i] * X_i over the orthonormal basis.
AlgebraElement from_coordinates(const CycVector& coords);

/// B(xi, eta) = 4 tr(xi eta).
CycNum killing_form(const AlgebraElement& xi, const AlgebraElement& eta);

/// Coordinates of xi in the orthonormal basis X_1, X_2, X_3.
CycVector coordinates(const AlgebraElement& xi);

/// Matrix of Ad(g) on su(2) in the basis X_1, X_2, X_3 (real, orthogonal).
CycMatrix adjoint_matrix(const GroupElement& g);

/// Matrix of (rho_k(g) f)(z) = f(g^-1 z) on the monomial basis.
CycMatrix sym_power(const GroupElement& g, unsigned k);

/// d rho_k(xi): first-order term of f((I - t xi) z).
CycMatrix algebra_action(const AlgebraElement& xi, unsigned k);

/// Invariant Hermitian form on S^k C^2: diag(1 / binomial(k, j)).
CycMatrix invariant_form(unsigned k);

/// trace rho_k(g)
CycNum character(const GroupElement& g, unsigned k);

/// Highest weight of rho_k evaluated on H, read off the diagonal of
/// d rho_k(H) (the eigenvalue with the largest imaginary part).
CycNum highest_weight_on_H(unsigned k);

/// Positive root evaluated on H: the eigenvalue of ad(H) on the raising
/// operator [[0,1],[0,0]].
CycNum positive_root_on_H();

/// (mu + alpha+, mu) for the highest weight mu of rho_k, with the inner
/// product on weights dual to the Killing form on the torus spanned by H.
Rational casimir_eigenvalue(unsigned k);

/// k/4 + k^2/8, kept as a cross-check of casimir_eigenvalue.
Rational casimir_closed_form(unsigned k);

}  // namespace su2

CycVector apply(const CycMatrix& m, const BinaryForm& f);

}  // namespace hamstab
