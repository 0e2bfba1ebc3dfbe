#pragma once

#include <string>

#include "parse.hpp"
#include "poly.hpp"

namespace testing_helpers {

inline qe::Poly poly(const std::string& src, const std::string& vars, const std::string& weights = "",
                     qe::FieldId field = qe::FieldId::rationals()) {
  auto names = qe::parse_names(vars);
  std::vector<int> w = weights.empty() ? std::vector<int>(names.size(), 1) : qe::parse_ints(weights);
  return qe::parse_poly(src, qe::make_ring(field, names, w));
}

inline qe::Scalar q(long num, long den = 1) { return qe::Scalar::from_rational(qe::FieldId::rationals(), qe::Rational(num, den)); }

}  // namespace testing_helpers
