#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamstab/isotropy.hpp"

namespace hamstab {

/// Tangent vector sum_j a_j d/dx_j + b_j d/dy_j in the affine chart
/// x_j + i y_j = w_j / w_0 (j = 1..n) of P(S^n C^2). Components are real.
struct ChartVector {
    CycVector a, b;

    static ChartVector zero(std::size_t n) { return {CycVector(n), CycVector(n)}; }
    /// d/dx_j (imaginary = false) or d/dy_j, 1-based j as in the chart.
    static ChartVector unit(std::size_t n, std::size_t j, bool imaginary);
    std::size_t dim() const { return a.size(); }
    /// Complex chart components a_j + i b_j.
    CycVector complex() const;
    friend bool operator==(const ChartVector&, const ChartVector&) = default;
};

/// Invariant Hermitian metric h = u * sum_j |dw_j|^2 / binomial(n, j) on
/// S^n C^2 and the lift of the basepoint to the unit sphere of h.
class MetricModel {
public:
    /// Throws ConfigError if u <= 0 or p has w_0 = 0, NotExpressible if
    /// h(p, p) has no root in Q(zeta24).
    MetricModel(const BinaryForm& p, const Rational& u);

    const Rational& u() const { return u_; }
    unsigned n() const { return static_cast<unsigned>(weights_.size() - 1); }
    const std::vector<Rational>& weights() const { return weights_; }
    /// p rescaled so that w_0 = 1.
    const CycVector& chart_point() const { return chart_point_; }
    /// Unit-sphere lift of [p] (h(lift, lift) = 1).
    const CycVector& basepoint_lift() const { return lift_; }
    /// Holomorphic sectional curvature of the quotient metric.
    Rational curvature() const { return Rational(4); }

    /// h(x, y) = sum_j w_j x_j conj(y_j)
    CycNum hermitian(const CycVector& x, const CycVector& y) const;

private:
    Rational u_;
    std::vector<Rational> weights_;
    CycVector chart_point_;
    CycVector lift_;
};

/// Chart velocity of t -> [rho_n(exp t xi) p] at t = 0.
/// Throws ConfigError if w_0(p) = 0.
ChartVector fundamental_field(const AlgebraElement& xi, const BinaryForm& p);

/// Fundamental fields of the orthonormal basis X_1, X_2, X_3 at p.
std::array<ChartVector, 3> orbit_frame(const BinaryForm& p);

/// Lift tangent to the h-unit sphere at the basepoint lift, h-orthogonal to
/// the Hopf fiber, projecting to v.
CycVector horizontal_lift(const ChartVector& v, const MetricModel& m);

/// Chart differential at the basepoint lift (inverse of horizontal_lift on
/// horizontal vectors).
ChartVector chart_projection(const CycVector& lifted, const MetricModel& m);

/// g_ij = Re h(lift v_i, lift v_j)
CycMatrix induced_gram(const std::vector<ChartVector>& frame, const MetricModel& m);

struct LagrangianCertificate {
    bool lagrangian = false;
    /// Im h(lift v_i, lift v_j)
    CycMatrix kahler_pairings;
    std::size_t rank = 0;
    std::optional<std::pair<std::size_t, std::size_t>> offending_pair;
    std::string reason;
};

/// The Kahler form vanishes on the frame and the frame has real rank n.
LagrangianCertificate lagrangian_check(const std::vector<ChartVector>& frame, const MetricModel& m);

/// Q = sum_i Y_i (x) Y_i in the X basis, split as Q = c_cas I + R.
struct LaplaceDecomposition {
    CycMatrix gram;
    /// Coordinates of the g-orthonormal frame Y_i in the X basis.
    std::vector<CycVector> orthonormal_frame;
    CycMatrix q;
    Rational c_cas;
    CycMatrix r;
};

/// Picks c_cas as the eigenvalue of maximal multiplicity of a diagonal Q
/// (smallest on ties), or trace(Q)/3 when Q is not diagonal. Throws
/// InvariantViolation if R is not Ad(F)-invariant or Q is not rational.
LaplaceDecomposition laplace_decomposition(const CycMatrix& gram, const FiniteSubgroup& f);

}  // namespace hamstab
