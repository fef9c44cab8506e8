#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hilb/multipoly.hpp"

namespace hilb {

/// Parses polynomial text into `ring`. Variables must be declared by the
/// ring; `s_1`-style names are accepted for `s1`.
///
/// Grammar (whitespace insignificant):
///   poly  := ["+"|"-"] term (("+"|"-") term)*
///   term  := [coeff ["*"]] factor ("*" factor)* | coeff
///   coeff := digits ["/" digits]
///   factor:= name ["^" digits]
MultiPoly parse_poly(std::string_view text, const RingPtr& ring);

/// Parses text over a ring inferred from the variables that occur, in
/// natural order (alphabetical, numeric suffixes compared as numbers).
MultiPoly parse_poly(std::string_view text, Domain domain = Domain::rationals());

/// Variable names occurring in the text, normalized, in natural order.
std::vector<std::string> scan_variables(std::string_view text);

/// "s_1" -> "s1"; other names unchanged.
std::string normalize_variable(std::string_view name);

/// Natural-order comparison of variable names ("s2" < "s10").
bool natural_less(const std::string& a, const std::string& b);

/// Canonical text: terms in degrevlex order over the declared variable
/// order (largest first), e.g. "x^4 - 3*x^2*y + y^2".
std::string format_poly(const MultiPoly& f);

}  // namespace hilb
