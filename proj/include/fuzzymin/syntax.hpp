#pragma once

#include <string>
#include <string_view>

#include "fuzzymin/concept.hpp"

namespace fuzzymin {

// Surface syntax, loosest binding first:
//
//   concepts  C -> D (right-assoc)  |  C | D  |  C & D  |  tri C, not C
//             all R . C, some R . C (body extends as far right as possible)
//             degrees (0.5, 1/2), names, {a}, ( C )
//   roles     R | S  |  R ; S  |  postfix R-, R*, C?  |  names, U, ( R )
//
// Identifiers are [A-Za-z_][A-Za-z0-9_]*; tri, not, all and some are
// reserved, and U always denotes the universal role.

/// Throws ParseError on malformed text and FeatureError on constructors
/// that `phi` does not enable.
ConceptPtr parse_concept(std::string_view text, FeatureSet phi = FeatureSet::all());
RolePtr parse_role(std::string_view text, FeatureSet phi = FeatureSet::all());

/// Canonical text; parse_concept(print_concept(c)) is structurally equal to c.
std::string print_concept(const ConceptExpr &c);
std::string print_role(const RoleExpr &r);

} // namespace fuzzymin
