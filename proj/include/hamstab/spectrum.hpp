#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamstab/orbitgeo.hpp"

namespace hamstab {

/// Laplace eigenvalue contributed by rho_k through V^F intersected with one
/// eigenspace of d rho(H)^2.
struct SpectralLine {
    unsigned k = 0;
    /// Eigenvalue mu of d rho(H)^2 on this piece: -(2l - k)^2.
    Rational d_eigenvalue;
    Rational laplace_eigenvalue;
    std::size_t subspace_dim = 0;
    /// (k + 1) * subspace_dim
    std::size_t multiplicity = 0;
    friend bool operator==(const SpectralLine&, const SpectralLine&) = default;
};

/// Correction operator sum_ij r_ij d rho(X_i) d rho(X_j) on S^k C^2.
CycMatrix correction_operator(const CycMatrix& r, unsigned k);

/// Lines for rho_k, sorted by Laplace eigenvalue (then by d_eigenvalue,
/// descending). Empty when V^F = 0. Throws InvariantViolation if the pieces
/// do not partition V^F, if the correction operator is not a rational scalar
/// on a piece, or if an eigenvalue for k >= 1 is not positive.
std::vector<SpectralLine> spectrum_for_k(unsigned k, const LaplaceDecomposition& d, const FiniteSubgroup& f);

/// Lower bound c_cas * Cas(k) - beta * k^2 / 8 on every eigenvalue from rho_k,
/// where beta bounds the negative part of R.
class EigenvalueBound {
public:
    explicit EigenvalueBound(const LaplaceDecomposition& d);
    Rational operator()(unsigned k) const;
    const Rational& beta() const { return beta_; }
    /// c_cas > 0 and c_cas >= beta, so the bound increases with k.
    bool increasing() const;

private:
    Rational c_cas_;
    Rational beta_;
};

struct SearchOptions {
    /// Scan exactly k = 1..max_k instead of stopping at the certified index.
    std::optional<unsigned> max_k;
    /// Worker threads for spectrum_for_k; 1 disables fan-out.
    unsigned threads = 1;
    /// Hard ceiling when no horizon is given.
    unsigned safety_cap = 2000;
};

struct SearchResult {
    std::optional<Rational> lambda1;
    std::vector<unsigned> attaining_k;
    std::size_t lambda1_multiplicity = 0;
    /// Lines for every scanned k, ordered by k.
    std::vector<SpectralLine> lines;
    unsigned horizon = 0;
    /// First K with bound(K) > lambda1; nullopt if no line was found.
    std::optional<unsigned> stop_index;
    bool certified = false;
};

/// Minimizes positive Laplace eigenvalues over k >= 1 with the termination
/// bound above. Throws InvariantViolation if the bound is not increasing or
/// no spherical representation turns up before the safety cap.
SearchResult lambda1_search(const LaplaceDecomposition& d, const FiniteSubgroup& f,
                            const SearchOptions& options = {});

enum class Verdict { HamiltonianStable, Unstable, Inconclusive };

std::string to_string(Verdict v);

struct StabilityReport {
    std::optional<Rational> lambda1;
    Rational kappa;
    std::vector<unsigned> attaining_k;
    Verdict verdict = Verdict::Inconclusive;
    /// lambda1 > kappa contradicts the upper bound lambda1 <= kappa that holds
    /// in Hermitian symmetric ambient spaces.
    bool ono_contradiction = false;
    std::string note;
    std::vector<SpectralLine> lines;
    std::optional<LaplaceDecomposition> metric;
    std::size_t lambda1_multiplicity = 0;
    std::optional<unsigned> stop_index;
    unsigned horizon = 0;
};

/// kappa = c (n + 1) / 2 and the Oh criterion lambda1 >= kappa. An absent or
/// uncertified lambda1 gives Inconclusive.
StabilityReport stability_verdict(const std::optional<Rational>& lambda1, const Rational& c, unsigned n,
                                  bool certified = true);

}  // namespace hamstab
