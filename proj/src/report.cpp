#include "hamstab/report.hpp"

#include <iomanip>
#include <sstream>

namespace hamstab {

namespace {

std::string decimal(double x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(12) << x;
    return os.str();
}

ordered_json optional_rational(const std::optional<Rational>& r) {
    return r ? ordered_json(r->to_fraction_string()) : ordered_json(nullptr);
}

}  // namespace

std::string exact_string(const CycNum& x) {
    if (auto q = x.as_rational()) return q->to_fraction_string();
    return x.to_string();
}

ordered_json matrix_json(const CycMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(exact_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string matrix_literal(const CycMatrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += ";";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ",";
            s += m(i, j).to_string();
        }
    }
    return s;
}

ordered_json report_json(const PipelineResult& result) {
    const StabilityReport& rep = result.report;
    const LaplaceDecomposition& dec = result.decomposition;
    ordered_json j;
    j["lambda1"] = optional_rational(rep.lambda1);
    j["kappa"] = rep.kappa.to_fraction_string();
    j["verdict"] = to_string(rep.verdict);
    j["attaining_k"] = rep.attaining_k;

    ordered_json lines = ordered_json::array();
    for (const auto& line : rep.lines) {
        ordered_json l;
        l["k"] = line.k;
        l["d_eigenvalue"] = line.d_eigenvalue.to_fraction_string();
        l["laplace_eigenvalue"] = line.laplace_eigenvalue.to_fraction_string();
        l["subspace_dim"] = line.subspace_dim;
        l["multiplicity"] = line.multiplicity;
        lines.push_back(std::move(l));
    }
    j["lines"] = std::move(lines);
    j["gram"] = matrix_json(dec.gram);
    j["q"] = matrix_json(dec.q);
    j["c_cas"] = dec.c_cas.to_fraction_string();
    j["r"] = matrix_json(dec.r);

    const RunConfig& cfg = result.config;
    ordered_json echo;
    echo["curvature"] = cfg.curvature.to_fraction_string();
    ordered_json form = ordered_json::array();
    for (const auto& c : cfg.form.coeffs()) form.push_back(exact_string(c));
    echo["form"] = std::move(form);
    ordered_json gens = ordered_json::array();
    for (const auto& g : cfg.generators) gens.push_back(matrix_literal(g));
    echo["generators"] = std::move(gens);
    echo["u"] = cfg.u.to_fraction_string();
    echo["max_k"] = cfg.max_k ? ordered_json(*cfg.max_k) : ordered_json(nullptr);
    j["config_echo"] = std::move(echo);

    j["ono_contradiction"] = rep.ono_contradiction;
    j["note"] = rep.note;
    j["certified"] = result.search.certified;
    j["stop_index"] = rep.stop_index ? ordered_json(*rep.stop_index) : ordered_json(nullptr);
    j["horizon"] = rep.horizon;
    j["group_order"] = result.group.order();
    j["lambda1_multiplicity"] = rep.lambda1_multiplicity;

    ordered_json approx;
    approx["lambda1"] = rep.lambda1 ? ordered_json(decimal(rep.lambda1->to_double())) : ordered_json(nullptr);
    approx["kappa"] = decimal(rep.kappa.to_double());
    approx["authoritative"] = false;
    j["approx"] = std::move(approx);
    return j;
}

std::string report_text(const PipelineResult& result) {
    const StabilityReport& rep = result.report;
    const LaplaceDecomposition& dec = result.decomposition;
    std::ostringstream os;
    os << "isotropy group order      " << result.group.order() << "\n";
    os << "Lagrangian                " << (result.lagrangian.lagrangian ? "yes" : "no") << " (rank "
       << result.lagrangian.rank << ")\n";
    os << "induced Gram              diag? " << (dec.gram.is_diagonal() ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < dec.gram.rows(); ++i) {
        os << "  ";
        for (std::size_t c = 0; c < dec.gram.cols(); ++c) os << std::setw(10) << dec.gram(i, c).to_string();
        os << "\n";
    }
    os << "Q = c_cas I + R           c_cas = " << dec.c_cas << ", Q diag = (";
    for (std::size_t i = 0; i < 3; ++i) os << (i ? ", " : "") << dec.q(i, i).to_string();
    os << "), R diag = (";
    for (std::size_t i = 0; i < 3; ++i) os << (i ? ", " : "") << dec.r(i, i).to_string();
    os << ")\n\n";

    os << "   k        mu   eigenvalue  dim  mult\n";
    for (const auto& line : rep.lines)
        os << std::setw(4) << line.k << std::setw(10) << line.d_eigenvalue.to_string() << std::setw(13)
           << line.laplace_eigenvalue.to_string() << std::setw(5) << line.subspace_dim << std::setw(6)
           << line.multiplicity << "\n";
    os << "\n";
    os << "lambda1                   " << (rep.lambda1 ? rep.lambda1->to_string() : "n/a") << "\n";
    os << "kappa                     " << rep.kappa << "\n";
    os << "attained at k             ";
    for (std::size_t i = 0; i < rep.attaining_k.size(); ++i) os << (i ? ", " : "") << rep.attaining_k[i];
    os << "\n";
    os << "multiplicity (derived)    " << rep.lambda1_multiplicity << "\n";
    os << "search horizon            k <= " << rep.horizon;
    if (rep.stop_index) os << " (certified stop at k = " << *rep.stop_index << ")";
    os << "\n";
    os << "verdict                   " << to_string(rep.verdict) << "\n";
    if (!rep.note.empty()) os << "note                      " << rep.note << "\n";
    return os.str();
}

}  // namespace hamstab
