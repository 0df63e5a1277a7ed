#include "hamstab/spectrum.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>

#include "hamstab/errors.hpp"

namespace hamstab {

CycMatrix correction_operator(const CycMatrix& r, unsigned k) {
    const auto basis = su2::orthonormal_basis();
    std::array<CycMatrix, 3> d;
    for (std::size_t i = 0; i < 3; ++i) d[i] = su2::algebra_action(basis[i], k);
    CycMatrix c(k + 1, k + 1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (r(i, j).is_zero()) continue;
            c += (d[i] * d[j]).scaled(r(i, j));
        }
    return c;
}

std::vector<SpectralLine> spectrum_for_k(unsigned k, const LaplaceDecomposition& dec, const FiniteSubgroup& f) {
    const FixedSubspace fixed = fixed_subspace(f, k);
    std::vector<SpectralLine> lines;
    if (fixed.dim() == 0) return lines;

    const std::size_t n = k + 1;
    std::vector<CycVector> cols;
    for (const auto& b : fixed.basis) cols.push_back(b.coeffs());
    const CycMatrix basis = from_columns(cols, n);

    const CycMatrix dh = su2::algebra_action(su2::H(), k);
    const CycMatrix d = dh * dh;
    const CycMatrix corr = correction_operator(dec.r, k);
    const Rational base = dec.c_cas * su2::casimir_eigenvalue(k);

    std::map<Rational, int> spectrum_of_d;
    for (std::size_t j = 0; j < n; ++j) {
        const auto mu = d(j, j).as_rational();
        if (!mu) throw std::logic_error("d rho(H)^2 has a non-rational diagonal entry");
        spectrum_of_d[*mu];
    }

    std::size_t total = 0;
    for (const auto& entry : spectrum_of_d) {
        const Rational& mu = entry.first;
        const std::vector<CycVector> coeffs =
            nullspace((d - CycMatrix::identity(n).scaled(CycNum(mu))) * basis);
        if (coeffs.empty()) continue;

        std::optional<Rational> nu;
        for (const auto& c : coeffs) {
            const CycVector w = basis * c;
            const CycVector cw = corr * w;
            std::size_t lead = 0;
            while (w[lead].is_zero()) ++lead;
            const CycNum ratio = cw[lead] / w[lead];
            const auto q = ratio.as_rational();
            if (!q || cw != scaled(w, ratio))
                throw InvariantViolation("correction operator is not a rational scalar on V^F cap E_mu (k = " +
                                         std::to_string(k) + ", mu = " + mu.to_string() + ")");
            if (nu && *nu != *q)
                throw InvariantViolation("correction operator has two eigenvalues on V^F cap E_mu (k = " +
                                         std::to_string(k) + ")");
            nu = *q;
        }
        SpectralLine line;
        line.k = k;
        line.d_eigenvalue = mu;
        line.laplace_eigenvalue = base - *nu;
        line.subspace_dim = coeffs.size();
        line.multiplicity = n * coeffs.size();
        if (k >= 1 && line.laplace_eigenvalue.sign() <= 0)
            throw InvariantViolation("non-positive Laplace eigenvalue " + line.laplace_eigenvalue.to_string() +
                                     " at k = " + std::to_string(k));
        total += coeffs.size();
        lines.push_back(std::move(line));
    }
    if (total != fixed.dim())
        throw InvariantViolation("eigenspace pieces do not partition V^F at k = " + std::to_string(k));

    std::sort(lines.begin(), lines.end(), [](const SpectralLine& x, const SpectralLine& y) {
        if (x.laplace_eigenvalue != y.laplace_eigenvalue) return x.laplace_eigenvalue < y.laplace_eigenvalue;
        return x.d_eigenvalue > y.d_eigenvalue;
    });
    return lines;
}

EigenvalueBound::EigenvalueBound(const LaplaceDecomposition& d) : c_cas_(d.c_cas) {
    if (!d.r.is_rational()) throw InvariantViolation("termination bound needs a rational R");
    // Negative part of R: exact on the diagonal, else the entrywise l1 norm,
    // which dominates the nuclear norm.
    if (d.r.is_diagonal()) {
        for (std::size_t i = 0; i < 3; ++i)
            if (d.r(i, i).coeff(0).sign() < 0) beta_ += d.r(i, i).coeff(0).abs();
    } else {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) beta_ += d.r(i, j).coeff(0).abs();
    }
}

Rational EigenvalueBound::operator()(unsigned k) const {
    const Rational kk(static_cast<long>(k));
    return c_cas_ * su2::casimir_closed_form(k) - beta_ * kk * kk / Rational(8);
}

bool EigenvalueBound::increasing() const { return c_cas_.sign() > 0 && c_cas_ >= beta_; }

namespace {

std::vector<std::vector<SpectralLine>> evaluate_batch(unsigned first, unsigned count, const LaplaceDecomposition& d,
                                                      const FiniteSubgroup& f, unsigned threads) {
    std::vector<std::vector<SpectralLine>> out(count);
    if (threads <= 1) {
        for (unsigned i = 0; i < count; ++i) out[i] = spectrum_for_k(first + i, d, f);
        return out;
    }
    std::vector<std::future<std::vector<SpectralLine>>> jobs;
    for (unsigned i = 0; i < count; ++i)
        jobs.push_back(std::async(std::launch::async, [&, k = first + i] { return spectrum_for_k(k, d, f); }));
    for (unsigned i = 0; i < count; ++i) out[i] = jobs[i].get();
    return out;
}

}  // namespace

SearchResult lambda1_search(const LaplaceDecomposition& d, const FiniteSubgroup& f, const SearchOptions& options) {
    const EigenvalueBound bound(d);
    if (!bound.increasing())
        throw InvariantViolation("termination bound c_cas*Cas(k) - beta*k^2/8 is not increasing (c_cas = " +
                                 d.c_cas.to_string() + ", beta = " + bound.beta().to_string() + ")");

    SearchResult result;
    const unsigned batch = std::max(1u, options.threads);
    const unsigned limit = options.max_k.value_or(options.safety_cap);
    unsigned k = 1;
    bool done = false;
    while (!done && k <= limit) {
        const unsigned count = std::min(batch, limit - k + 1);
        auto evaluated = evaluate_batch(k, count, d, f, batch);
        for (unsigned i = 0; i < count; ++i, ++k) {
            if (!options.max_k && result.lambda1 && bound(k) > *result.lambda1) {
                done = true;
                break;
            }
            for (auto& line : evaluated[i]) {
                if (line.laplace_eigenvalue < bound(line.k))
                    throw InvariantViolation("eigenvalue below the termination bound at k = " +
                                             std::to_string(line.k));
                if (!result.lambda1 || line.laplace_eigenvalue < *result.lambda1)
                    result.lambda1 = line.laplace_eigenvalue;
                result.lines.push_back(std::move(line));
            }
            result.horizon = k;
        }
    }
    if (!result.lambda1) {
        if (options.max_k) return result;
        throw InvariantViolation("no spherical representation with a fixed vector below k = " +
                                 std::to_string(options.safety_cap));
    }

    unsigned stop = 1;
    while (bound(stop) <= *result.lambda1) ++stop;
    result.stop_index = stop;
    result.certified = stop <= result.horizon + 1;

    for (const auto& line : result.lines)
        if (line.laplace_eigenvalue == *result.lambda1) {
            result.lambda1_multiplicity += line.multiplicity;
            if (result.attaining_k.empty() || result.attaining_k.back() != line.k)
                result.attaining_k.push_back(line.k);
        }
    return result;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::HamiltonianStable: return "HamiltonianStable";
        case Verdict::Unstable: return "Unstable";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

StabilityReport stability_verdict(const std::optional<Rational>& lambda1, const Rational& c, unsigned n,
                                  bool certified) {
    if (c.sign() <= 0) throw ConfigError("curvature must be positive");
    if (n < 1) throw ConfigError("complex dimension must be at least 1");
    StabilityReport report;
    report.lambda1 = lambda1;
    report.kappa = c * Rational(static_cast<long>(n) + 1) / Rational(2);
    if (!lambda1 || !certified) {
        report.verdict = Verdict::Inconclusive;
        report.note = "lambda1 not certified: the search horizon is below the termination bound";
        return report;
    }
    report.verdict = *lambda1 >= report.kappa ? Verdict::HamiltonianStable : Verdict::Unstable;
    if (*lambda1 > report.kappa) {
        report.ono_contradiction = true;
        report.note = "lambda1 > kappa contradicts lambda1 <= kappa for minimal Lagrangians of CP^n; "
                      "the unit-sphere submersion fixes c = 4";
    }
    return report;
}

}  // namespace hamstab
