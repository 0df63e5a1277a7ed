// hamstab: certify the spectral stability data of the SU(2)-orbit through
// [z1^3 + z2^3] in P(S^3 C^2).
//
//   hamstab compute [--curvature R] [--form COEFFS] [--gen MATRIX]... [--u R]
//                   [--max-k N] [--format text|json] [--threads N]
//   hamstab verify-paper [--format text|json] [--max-k N]
//
// Exit codes: 0 ok, 1 invalid configuration, 2 invariant violation,
// 3 a reproduction check failed.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "hamstab/errors.hpp"
#include "hamstab/expr.hpp"
#include "hamstab/verify.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitVerify = 3;

const std::map<std::string, hamstab::OutputFormat> kFormats{{"text", hamstab::OutputFormat::Text},
                                                            {"json", hamstab::OutputFormat::Json}};

int run_compute(const std::string& curvature, const std::string& form, const std::vector<std::string>& gens,
                const std::string& u, std::optional<unsigned> max_k, hamstab::OutputFormat format,
                unsigned threads) {
    hamstab::RunConfig cfg;
    try {
        cfg.curvature = hamstab::Rational::parse(curvature);
        cfg.u = hamstab::Rational::parse(u);
        if (!form.empty()) cfg.form = hamstab::BinaryForm(hamstab::parse_cyc_list(form));
        if (!gens.empty()) {
            cfg.generators.clear();
            for (const auto& g : gens) cfg.generators.push_back(hamstab::parse_cyc_matrix(g));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitConfig;
    }
    cfg.max_k = max_k;
    cfg.format = format;
    cfg.threads = threads;

    try {
        const hamstab::PipelineResult result = hamstab::run_pipeline(cfg);
        if (format == hamstab::OutputFormat::Json)
            std::cout << hamstab::report_json(result).dump(2) << "\n";
        else
            std::cout << hamstab::report_text(result);
        return 0;
    } catch (const hamstab::ConfigError& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitConfig;
    } catch (const hamstab::NotExpressible& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitConfig;
    } catch (const hamstab::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    }
}

int run_verify(hamstab::OutputFormat format, std::optional<unsigned> max_k) {
    hamstab::VerifyOptions options;
    options.max_k = max_k;
    const hamstab::VerifyResult result = hamstab::verify_paper(options);
    if (format == hamstab::OutputFormat::Json)
        std::cout << hamstab::verify_json(result).dump(2) << "\n";
    else
        std::cout << hamstab::verify_text(result);
    if (result.refused) {
        std::cerr << "refused: " << result.refusal << "\n";
        return kExitConfig;
    }
    return result.all_passed() ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Laplace spectrum and Hamiltonian stability of the Lagrangian SU(2)-orbit in CP^3"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "Run the full pipeline and print the stability report");
    std::string curvature = "4", form, u = "1/2";
    std::vector<std::string> gens;
    std::optional<unsigned> max_k;
    hamstab::OutputFormat format = hamstab::OutputFormat::Text;
    unsigned threads = 1;
    compute->add_option("--curvature", curvature, "Holomorphic sectional curvature c (rational)");
    compute->add_option("--form", form, "Coefficients of z1^(n-j) z2^j, comma separated");
    compute->add_option("--gen", gens, "Isotropy generator 'a,b;c,d' (repeatable)");
    compute->add_option("--u", u, "Hermitian scale u (rational)");
    compute->add_option("--max-k", max_k, "Scan exactly k = 1..N");
    compute->add_option("--format", format, "text or json")->transform(CLI::CheckedTransformer(kFormats));
    compute->add_option("--threads", threads, "Worker threads for the spectrum scan")->check(CLI::Range(1u, 256u));

    auto* verify = app.add_subcommand("verify-paper", "Run the reproduction checks and print a pass/fail table");
    hamstab::OutputFormat vformat = hamstab::OutputFormat::Text;
    std::optional<unsigned> vmax_k;
    verify->add_option("--format", vformat, "text or json")->transform(CLI::CheckedTransformer(kFormats));
    verify->add_option("--max-k", vmax_k, "Search horizon (refused below the certified stop index)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    if (*compute) return run_compute(curvature, form, gens, u, max_k, format, threads);
    return run_verify(vformat, vmax_k);
}
