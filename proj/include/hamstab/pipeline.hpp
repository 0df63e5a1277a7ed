#pragma once

#include <optional>
#include <vector>

#include "hamstab/spectrum.hpp"

namespace hamstab {

enum class OutputFormat { Text, Json };

struct RunConfig {
    Rational curvature{4};
    BinaryForm form = default_form();
    std::vector<CycMatrix> generators = default_generators();
    Rational u{1, 2};
    std::optional<unsigned> max_k;
    OutputFormat format = OutputFormat::Text;
    unsigned threads = 1;

    /// z1^3 + z2^3
    static BinaryForm default_form();
    /// a = diag(e^{i pi/3}, e^{-i pi/3}), b = [[0, i], [i, 0]]
    static std::vector<CycMatrix> default_generators();
};

/// Everything the pipeline computed, kept for reporting and tests.
struct PipelineResult {
    RunConfig config;
    FiniteSubgroup group;
    std::vector<CycNum> stabilizer_scalars;
    IsotropySplitting splitting;
    std::vector<ChartVector> frame;
    LagrangianCertificate lagrangian;
    CycMatrix gram;
    LaplaceDecomposition decomposition;
    SearchResult search;
    StabilityReport report;
};

/// close generators -> stabilizer check -> isotropy splitting -> fundamental
/// fields -> Lagrangian check -> induced Gram -> Laplace decomposition ->
/// lambda1 search -> verdict.
///
/// Throws ConfigError for invalid input and InvariantViolation when a
/// certificate fails.
PipelineResult run_pipeline(const RunConfig& cfg);

}  // namespace hamstab
