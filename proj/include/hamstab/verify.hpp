#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamstab/report.hpp"

namespace hamstab {

/// Closed-form spanning set for V^F of rho_k, k even, built from the six
/// k mod 12 families: z1^l z2^(k-l) +- z1^(k-l) z2^l for l = l0, l0 - 3, ...
/// down to k/2, sign + iff 4 | k. Identically-zero members are dropped.
/// Odd k gives an empty list.
std::vector<BinaryForm> family_generators(unsigned k);

/// Minimal eigenvalue per k from the closed forms for the orbit metric:
/// 2k/3 + k^2/9 (k = 0 mod 6), (k^2 + 14k - 8)/9 (k = 2 mod 6, k >= 8),
/// (k^2 + 22k - 32)/9 (k = 4 mod 6). nullopt elsewhere.
std::optional<Rational> closed_form_lambda(unsigned k);

struct CheckLine {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    /// Replaces the computed Gram matrix (harness sensitivity tests).
    std::optional<CycMatrix> gram_override;
    /// Horizon for the lambda1 search; below the certified stop index the
    /// harness refuses to run.
    std::optional<unsigned> max_k;
    unsigned threads = 1;
};

struct VerifyResult {
    std::vector<CheckLine> lines;
    bool refused = false;
    std::string refusal;
    bool all_passed() const;
};

VerifyResult verify_paper(const VerifyOptions& options = {});

std::string verify_text(const VerifyResult& r);
ordered_json verify_json(const VerifyResult& r);

}  // namespace hamstab
