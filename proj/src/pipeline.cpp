#include "hamstab/pipeline.hpp"

#include "hamstab/errors.hpp"

namespace hamstab {

BinaryForm RunConfig::default_form() { return BinaryForm(CycVector{1, 0, 0, 1}); }

std::vector<CycMatrix> RunConfig::default_generators() {
    return {su2::generator_a().matrix(), su2::generator_b().matrix()};
}

PipelineResult run_pipeline(const RunConfig& cfg) {
    if (cfg.curvature.sign() <= 0) throw ConfigError("curvature must be positive");
    if (cfg.form.is_zero()) throw ConfigError("form must be nonzero");
    if (cfg.generators.empty()) throw ConfigError("at least one generator is required");
    if (cfg.max_k && *cfg.max_k < 1) throw ConfigError("--max-k must be at least 1");

    PipelineResult out;
    out.config = cfg;
    std::vector<GroupElement> gens;
    for (const auto& m : cfg.generators) gens.emplace_back(m);

    if (cfg.u.sign() <= 0) throw ConfigError("u must be positive");
    out.group = close_generators(gens);
    out.stabilizer_scalars = projective_stabilizer_check(out.group, cfg.form);
    const MetricModel metric(cfg.form, cfg.u);
    out.splitting = isotropy_splitting(out.group);

    const auto frame = orbit_frame(cfg.form);
    out.frame.assign(frame.begin(), frame.end());
    out.lagrangian = lagrangian_check(out.frame, metric);
    if (!out.lagrangian.lagrangian) throw InvariantViolation("orbit frame is not Lagrangian: " + out.lagrangian.reason);

    out.gram = induced_gram(out.frame, metric);
    out.decomposition = laplace_decomposition(out.gram, out.group);

    SearchOptions options;
    options.max_k = cfg.max_k;
    options.threads = cfg.threads;
    out.search = lambda1_search(out.decomposition, out.group, options);

    out.report = stability_verdict(out.search.lambda1, cfg.curvature, metric.n(), out.search.certified);
    if (cfg.curvature != metric.curvature() && out.report.note.empty())
        out.report.note = "curvature differs from the value 4 fixed by the unit-sphere submersion";
    out.report.attaining_k = out.search.attaining_k;
    out.report.lines = out.search.lines;
    out.report.metric = out.decomposition;
    out.report.lambda1_multiplicity = out.search.lambda1_multiplicity;
    out.report.stop_index = out.search.stop_index;
    out.report.horizon = out.search.horizon;
    return out;
}

}  // namespace hamstab
