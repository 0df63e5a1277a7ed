#pragma once

#include <string_view>

#include "hamstab/cyc_matrix.hpp"

namespace hamstab {

// Literal grammar for field elements:
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/' | '·') unary)*
//   unary := ('-' | '+') unary | power
//   power := atom ('^' ['-'] integer)?
//   atom  := integer | 'i' | 'sqrt2' | 'sqrt3' | 'zeta24' | '(' expr ')'
//
// CycNum::to_string() emits this grammar, so parse_cyc(x.to_string()) == x.
// All parse errors throw ConfigError.

CycNum parse_cyc(std::string_view text);

/// Comma-separated list of expressions.
CycVector parse_cyc_list(std::string_view text);

/// Rows separated by ';', entries by ',': "zeta24^4,0;0,zeta24^20".
CycMatrix parse_cyc_matrix(std::string_view text);

}  // namespace hamstab
