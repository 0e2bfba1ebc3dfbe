#include <doctest.h>

#include "error.hpp"
#include "helpers.hpp"
#include "parse.hpp"

using namespace qe;
using testing_helpers::poly;

TEST_CASE("Fermat cubic") {
  const Poly f = poly("x0^3 + x1^3 + x2^3", "x0,x1,x2");
  CHECK(f.size() == 3);
  CHECK(weighted_degree(f) == 3);
  CHECK(f.to_string() == "x0^3 + x1^3 + x2^3");
}

TEST_CASE("generic fiber over Q(t)") {
  const Poly f = poly("x0^3 + x1^3 + x2^3 - t*x3^3", "x0,x1,x2,x3", "", FieldId::rational_functions());
  CHECK(f.size() == 4);
  CHECK(f.to_string() == "x0^3 + x1^3 + x2^3 - t*x3^3");
  CHECK_THROWS_AS(poly("x0 - t*x1", "x0,x1"), Error);
}

TEST_CASE("syntax error offsets") {
  try {
    poly("x0 + + x1", "x0,x1");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 5);
  }
  CHECK_THROWS_AS(poly("x0 x1", "x0,x1"), SyntaxError);
  CHECK_THROWS_AS(poly("(x0 + x1", "x0,x1"), SyntaxError);
  CHECK_THROWS_AS(poly("x0^", "x0,x1"), SyntaxError);
  CHECK_THROWS_AS(poly("x0/x1", "x0,x1"), Error);
}

TEST_CASE("unknown variables") {
  try {
    poly("x0 + y", "x0,x1");
    FAIL("expected UnknownVariable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownVariable);
  }
}

TEST_CASE("print then parse is the identity") {
  const FieldId qt = FieldId::rational_functions();
  const std::vector<std::pair<std::string, FieldId>> cases = {
      {"x0^3 + x1^3 + x2^3 - 2/3*x0*x1*x2", FieldId::rationals()},
      {"-x0^4 + 5*x0^2*x1^2 - x1^4", FieldId::rationals()},
      {"x0^3 - t*x1^3 + (t^2 + 1)/(t - 1)*x0*x1^2", qt},
      {"3*x0^2 + 6*x1^2", FieldId::prime(7)},
      {"x0^2 - 1/2", FieldId::rationals()},
  };
  for (const auto& [src, field] : cases) {
    const Poly f = poly(src, "x0,x1,x2", "", field);
    const Poly g = poly(f.to_string(), "x0,x1,x2", "", field);
    CHECK(f == g);
    CHECK(g.to_string() == f.to_string());
  }
}

TEST_CASE("field tags and lists") {
  CHECK(parse_field("Q") == FieldId::rationals());
  CHECK(parse_field("Fp:11") == FieldId::prime(11));
  CHECK(parse_field("Qt") == FieldId::rational_functions());
  CHECK(parse_field("Fpt:5") == FieldId::rational_functions(5));
  CHECK_THROWS_AS(parse_field("R"), Error);
  CHECK(split_list("a, (b, c), d") == std::vector<std::string>{"a", "(b, c)", "d"});
  CHECK(parse_ints("1, 1,2") == std::vector<int>{1, 1, 2});
  const auto m = parse_matrix("0,1;1,0", FieldId::rationals());
  CHECK(m.size() == 2);
  CHECK(m[0][1] == testing_helpers::q(1));
}
