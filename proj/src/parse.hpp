#pragma once

// Text frontends: polynomial expressions, field tags, comma lists, matrices.

#include <string>
#include <string_view>
#include <vector>

#include "poly.hpp"

namespace qe {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*      divisors must be nonzero constants
// factor := atom ('^' nat)*
// atom   := integer | ident | '(' expr ')'
// `t` denotes the transcendental of a function field and is rejected elsewhere.
Poly parse_poly(std::string_view src, const RingPtr& ring);

// A single field element, e.g. "-3/4", "(2*t + t^2)/(1 - t)".
Scalar parse_scalar(std::string_view src, FieldId field);

// "Q", "Fp:7", "Qt", "Fpt:7"
FieldId parse_field(std::string_view src);

// Splits on commas outside parentheses, trimming blanks; empty input gives {}.
std::vector<std::string> split_list(std::string_view src, char sep = ',');
std::vector<std::string> parse_names(std::string_view src);
std::vector<int> parse_ints(std::string_view src);

// Rows separated by ';', entries by ','.
std::vector<std::vector<Scalar>> parse_matrix(std::string_view src, FieldId field);

}  // namespace qe
