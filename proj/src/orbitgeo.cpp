#include "hamstab/orbitgeo.hpp"

#include <map>
#include <stdexcept>

#include "hamstab/errors.hpp"

namespace hamstab {

ChartVector ChartVector::unit(std::size_t n, std::size_t j, bool imaginary) {
    if (j < 1 || j > n) throw std::out_of_range("ChartVector::unit: index outside 1..n");
    ChartVector v = zero(n);
    (imaginary ? v.b : v.a)[j - 1] = CycNum(1);
    return v;
}

CycVector ChartVector::complex() const {
    CycVector c(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) c[j] = a[j] + b[j] * CycNum::i();
    return c;
}

MetricModel::MetricModel(const BinaryForm& p, const Rational& u) : u_(u) {
    if (u.sign() <= 0) throw ConfigError("Hermitian scale u must be positive");
    if (p.is_zero()) throw ConfigError("form must be nonzero");
    if (p[0].is_zero()) throw ConfigError("form has w0 = 0; the affine chart w0 != 0 is required");
    const unsigned n = p.degree();
    for (unsigned j = 0; j <= n; ++j) weights_.push_back(u / binomial(n, j));
    chart_point_ = scaled(p.coeffs(), p[0].inverse());
    const CycNum norm2 = hermitian(chart_point_, chart_point_);
    lift_ = scaled(chart_point_, sqrt_real(norm2).inverse());
    if (hermitian(lift_, lift_) != CycNum(1)) throw std::logic_error("basepoint lift not on the unit sphere");
}

CycNum MetricModel::hermitian(const CycVector& x, const CycVector& y) const {
    if (x.size() != weights_.size() || y.size() != weights_.size())
        throw std::invalid_argument("MetricModel::hermitian: length mismatch");
    CycNum s;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j].is_zero() || y[j].is_zero()) continue;
        s += (x[j] * y[j].conj()).scaled(weights_[j]);
    }
    return s;
}

ChartVector fundamental_field(const AlgebraElement& xi, const BinaryForm& p) {
    if (p[0].is_zero()) throw ConfigError("fundamental_field: p has w0 = 0 (outside the chart)");
    const unsigned n = p.degree();
    const CycVector ph = scaled(p.coeffs(), p[0].inverse());
    const CycVector v = su2::algebra_action(xi, n) * ph;
    ChartVector out = ChartVector::zero(n);
    // d(w_j / w_0) = (v_j w_0 - p_j v_0) / w_0^2 with w_0 = 1
    for (unsigned j = 1; j <= n; ++j) {
        const CycNum c = v[j] - ph[j] * v[0];
        out.a[j - 1] = c.real_part();
        out.b[j - 1] = c.imag_part();
    }
    return out;
}

std::array<ChartVector, 3> orbit_frame(const BinaryForm& p) {
    const auto basis = su2::orthonormal_basis();
    return {fundamental_field(basis[0], p), fundamental_field(basis[1], p), fundamental_field(basis[2], p)};
}

CycVector horizontal_lift(const ChartVector& v, const MetricModel& m) {
    const CycVector& base = m.basepoint_lift();
    if (v.dim() + 1 != base.size()) throw std::invalid_argument("horizontal_lift: dimension mismatch");
    // z projects to v; subtracting its h-component along the basepoint makes
    // it tangent to the sphere and orthogonal to the fiber at once.
    const CycVector c = v.complex();
    CycVector z(base.size());
    for (std::size_t j = 1; j < base.size(); ++j) z[j] = base[0] * c[j - 1];
    return add(z, scaled(base, -m.hermitian(z, base)));
}

ChartVector chart_projection(const CycVector& lifted, const MetricModel& m) {
    const CycVector& base = m.basepoint_lift();
    const CycNum inv0 = base[0].inverse();
    ChartVector out = ChartVector::zero(base.size() - 1);
    for (std::size_t j = 1; j < base.size(); ++j) {
        const CycNum c = (lifted[j] * base[0] - base[j] * lifted[0]) * inv0 * inv0;
        out.a[j - 1] = c.real_part();
        out.b[j - 1] = c.imag_part();
    }
    return out;
}

CycMatrix induced_gram(const std::vector<ChartVector>& frame, const MetricModel& m) {
    std::vector<CycVector> lifts;
    for (const auto& v : frame) lifts.push_back(horizontal_lift(v, m));
    CycMatrix g(frame.size(), frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i)
        for (std::size_t j = 0; j < frame.size(); ++j) g(i, j) = m.hermitian(lifts[i], lifts[j]).real_part();
    return g;
}

LagrangianCertificate lagrangian_check(const std::vector<ChartVector>& frame, const MetricModel& m) {
    LagrangianCertificate cert;
    const std::size_t k = frame.size();
    std::vector<CycVector> lifts;
    for (const auto& v : frame) lifts.push_back(horizontal_lift(v, m));
    cert.kahler_pairings = CycMatrix(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            cert.kahler_pairings(i, j) = m.hermitian(lifts[i], lifts[j]).imag_part();
            if (!cert.offending_pair && !cert.kahler_pairings(i, j).is_zero())
                cert.offending_pair = std::make_pair(i, j);
        }
    std::vector<CycVector> real_vectors;
    for (const auto& v : frame) {
        CycVector r = v.a;
        r.insert(r.end(), v.b.begin(), v.b.end());
        real_vectors.push_back(std::move(r));
    }
    cert.rank = k ? rank(from_columns(real_vectors, 2 * m.n())) : 0;
    if (cert.offending_pair) {
        cert.reason = "Kahler form nonzero on frame vectors " + std::to_string(cert.offending_pair->first) +
                      ", " + std::to_string(cert.offending_pair->second);
    } else if (cert.rank != m.n()) {
        cert.reason = "frame rank " + std::to_string(cert.rank) + " != complex dimension " +
                      std::to_string(m.n());
    } else {
        cert.lagrangian = true;
    }
    return cert;
}

LaplaceDecomposition laplace_decomposition(const CycMatrix& gram, const FiniteSubgroup& f) {
    if (gram.rows() != 3 || gram.cols() != 3) throw std::invalid_argument("laplace_decomposition: gram must be 3x3");
    LaplaceDecomposition out;
    out.gram = gram;
    const InnerProduct form = [&gram](const CycVector& x, const CycVector& y) {
        CycNum s;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                if (x[i].is_zero() || y[j].is_zero() || gram(i, j).is_zero()) continue;
                s += x[i] * gram(i, j) * y[j];
            }
        return s;
    };
    std::vector<CycVector> axes;
    for (std::size_t i = 0; i < 3; ++i) {
        CycVector e(3);
        e[i] = CycNum(1);
        axes.push_back(std::move(e));
    }
    out.orthonormal_frame = gram_schmidt_real(axes, form);
    out.q = CycMatrix(3, 3);
    for (const auto& y : out.orthonormal_frame)
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) out.q(a, b) += y[a] * y[b];
    if (!out.q.is_rational()) throw InvariantViolation("laplace_decomposition: Q is not rational");

    if (out.q.is_diagonal()) {
        std::map<Rational, int> multiplicity;
        for (std::size_t i = 0; i < 3; ++i) ++multiplicity[out.q(i, i).coeff(0)];
        int best = 0;
        for (const auto& [value, count] : multiplicity)
            if (count > best) {
                best = count;
                out.c_cas = value;
            }
    } else {
        out.c_cas = out.q.trace().coeff(0) / Rational(3);
    }
    out.r = out.q - CycMatrix::identity(3).scaled(CycNum(out.c_cas));

    for (std::size_t n = 0; n < f.order(); ++n) {
        const CycMatrix ad = su2::adjoint_matrix(f.elements()[n]);
        if (ad * out.r * ad.transpose() != out.r)
            throw InvariantViolation("laplace_decomposition: R is not Ad-invariant under element #" +
                                     std::to_string(n));
    }
    return out;
}

}  // namespace hamstab
