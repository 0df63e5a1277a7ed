#pragma once

#include <string>

#include <json.hpp>

#include "hamstab/pipeline.hpp"

namespace hamstab {

using ordered_json = nlohmann::ordered_json;

/// Rationals as "num/den"; other field elements in the literal grammar.
std::string exact_string(const CycNum& x);
ordered_json matrix_json(const CycMatrix& m);
/// "r0c0,r0c1;r1c0,r1c1", the --gen wire format.
std::string matrix_literal(const CycMatrix& m);

/// Fixed key order: lambda1, kappa, verdict, attaining_k, lines, gram, q,
/// c_cas, r, config_echo, then certification details and decimal
/// annotations (never authoritative).
ordered_json report_json(const PipelineResult& result);

std::string report_text(const PipelineResult& result);

}  // namespace hamstab
