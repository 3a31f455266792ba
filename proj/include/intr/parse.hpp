#pragma once

// Text formats for groups, group elements, monoids, coefficient fields,
// elements of K and rational functions in x. Every parser accepts the output
// of the matching to_string(). Malformed input raises ParseError.

#include <optional>
#include <string>

#include "intr/gadgets_intr.hpp"
#include "intr/rational_function.hpp"

namespace intr {

// "Z", "Q", "Z[sqrt2]", "Z[sqrt(2)]", "Q(sqrt3)".
Lattice parse_group(const std::string& text);

// "5/2", "-3", "1+2*sqrt2", "3/4*sqrt(3)-1", "2sqrt2".
GroupElement parse_group_element(const std::string& text);

// "Q: 0 u [1,inf)", "Z[sqrt2]: 0 u [2,3] u [4,inf)". A bare point such as
// "5" stands for [5,5]. Also the names "one-gap" and "two-three-four".
// The result is validated (shape and closure under addition).
MonoidSpec parse_monoid(const std::string& text);

// "Q", "QQ", "F2", "F_3", "GF(5)".
CoefficientField parse_field(const std::string& text);

// Expressions in t over the field: "t^6", "t^(3/2) + t^2", "(1 + t)/(1 - t^(1/2))",
// "2*t^(1+sqrt2)". When a lattice is given, every exponent must lie in it.
FieldElement parse_field_element(const std::string& text, CoefficientField field,
                                 const std::optional<Lattice>& lattice = std::nullopt);

// Expressions in x and t: "x^2 + t", "(x^3 + t^2)/(x^3 + t)".
RationalFunction parse_rational_function(const std::string& text, CoefficientField field,
                                         const std::optional<Lattice>& lattice = std::nullopt);

}  // namespace intr
