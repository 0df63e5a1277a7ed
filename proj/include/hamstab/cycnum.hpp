#pragma once

#include <array>
#include <complex>
#include <optional>
#include <ostream>
#include <string>

#include "hamstab/rational.hpp"

namespace hamstab {

/// Element of the cyclotomic field Q(zeta), zeta = exp(2 pi i / 24).
///
/// Stored in the power basis zeta^0 .. zeta^7 and kept fully reduced modulo
/// Phi_24(x) = x^8 - x^4 + 1, so equality is coefficient-wise. The field
/// contains i = zeta^6, exp(i pi/3) = zeta^4, sqrt2 = zeta^3 + zeta^-3 and
/// sqrt3 = zeta^2 + zeta^-2.
class CycNum {
public:
    static constexpr int kDegree = 8;
    static constexpr int kOrder = 24;
    using Coeffs = std::array<Rational, kDegree>;

    CycNum() = default;
    CycNum(long n) { c_[0] = Rational(n); }                  // NOLINT
    CycNum(const Rational& r) { c_[0] = r; }                 // NOLINT
    explicit CycNum(const Coeffs& c) : c_(c) {}

    /// zeta^n for any integer n, reduced.
    static CycNum zeta(long n);
    static CycNum i() { return zeta(6); }
    static CycNum sqrt2();
    static CycNum sqrt3();
    /// exp(i pi / 3)
    static CycNum omega6() { return zeta(4); }

    const Coeffs& coeffs() const { return c_; }
    const Rational& coeff(int j) const { return c_[j]; }

    bool is_zero() const;
    bool is_rational() const;
    /// Fixed by complex conjugation.
    bool is_real() const;
    std::optional<Rational> as_rational() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator/=(const CycNum& o) { return *this *= o.inverse(); }

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    friend bool operator==(const CycNum& a, const CycNum& b) { return a.c_ == b.c_; }

    CycNum scaled(const Rational& r) const;
    /// Throws std::domain_error on zero.
    CycNum inverse() const;
    /// Field automorphism zeta -> zeta^-1 (complex conjugation).
    CycNum conj() const;
    CycNum real_part() const;
    /// Im(x) as an element of the real subfield.
    CycNum imag_part() const;
    CycNum pow(unsigned e) const;

    /// Evaluation at zeta = exp(2 pi i / 24). Reporting only.
    std::complex<double> to_complex() const;
    /// Literal in the expression grammar, e.g. "1/2*zeta24^3 - zeta24^5".
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const CycNum& x) {
        return os << x.to_string();
    }

private:
    Coeffs c_{};
};

/// Exact square root of a non-negative rational whose square-free part is one
/// of 1, 2, 3, 6. Throws NotExpressible otherwise.
CycNum sqrt_rational(const Rational& r);

/// Square root of a CycNum that is a non-negative rational.
CycNum sqrt_real(const CycNum& x);

}  // namespace hamstab
