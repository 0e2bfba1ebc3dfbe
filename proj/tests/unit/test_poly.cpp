#include <doctest.h>

#include "error.hpp"
#include "helpers.hpp"
#include "poly.hpp"

using namespace qe;
using testing_helpers::poly;

TEST_CASE("partial derivatives") {
  CHECK(partial_derivative(poly("x^3 + y^3", "x,y"), 0) == poly("3*x^2", "x,y"));
  CHECK(partial_derivative(poly("x^2*y", "x,y"), 1) == poly("x^2", "x,y"));
  const Poly f = poly("y0^6 + y2^2", "y0,y1,y2", "1,1,3");
  const Poly d = partial_derivative(f, 2);
  CHECK(d == poly("2*y2", "y0,y1,y2", "1,1,3"));
  CHECK(weighted_degree(d) == 3);
}

TEST_CASE("weighted degree") {
  CHECK(weighted_degree(poly("x^3 + y^3", "x,y")) == 3);
  CHECK(weighted_degree(poly("y0^6 + y2^2", "y0,y1,y2", "1,1,3")) == 6);
  CHECK_THROWS_AS(weighted_degree(poly("x + y^2", "x,y")), Error);
  CHECK_FALSE(is_homogeneous(poly("x + y^2", "x,y")));
}

TEST_CASE("monomials of a degree") {
  auto names = [](const WeightedRing& r, const std::vector<Monomial>& ms) {
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(monomial_to_string(r, m));
    return out;
  };
  auto r11 = make_ring(FieldId::rationals(), {"x", "y"}, {1, 1});
  CHECK(names(*r11, monomials_of_degree(*r11, 2)) == std::vector<std::string>{"x^2", "x*y", "y^2"});
  CHECK(names(*r11, monomials_of_degree(*r11, 0)) == std::vector<std::string>{"1"});
  auto r12 = make_ring(FieldId::rationals(), {"x", "y"}, {1, 2});
  CHECK(names(*r12, monomials_of_degree(*r12, 4)) == std::vector<std::string>{"x^4", "x^2*y", "y^2"});
  CHECK(monomials_of_degree(*r12, -1).empty());
}

TEST_CASE("substitute powers") {
  CHECK(substitute_powers(poly("y0^4 + y1^2", "y0,y1", "1,2")) == poly("y0^4 + y1^4", "y0,y1"));
  CHECK(substitute_powers(poly("y0^6 + y1^6 + y2^2", "y0,y1,y2", "1,1,3")) == poly("y0^6 + y1^6 + y2^6", "y0,y1,y2"));
  CHECK(substitute_powers(poly("5", "y0,y1", "1,2")) == poly("5", "y0,y1"));
}

TEST_CASE("Hessian determinant") {
  CHECK(hessian_det(poly("x^2 + y^2", "x,y")) == poly("4", "x,y"));
  CHECK(hessian_det(poly("x^3 + y^3", "x,y")) == poly("36*x*y", "x,y"));
  CHECK(hessian_det(poly("x*y", "x,y")) == poly("-1", "x,y"));
}

TEST_CASE("Euler relation") {
  CHECK(euler_defect(poly("x^3 + y^3", "x,y")).is_zero());
  CHECK(euler_defect(poly("y0^6 + y1^2", "y0,y1", "1,3")).is_zero());
  CHECK_FALSE(euler_defect(poly("x^3 + y", "x,y")).is_zero());
}

TEST_CASE("ring arithmetic") {
  const Poly a = poly("x + y", "x,y");
  CHECK(a.pow(3) == poly("x^3 + 3*x^2*y + 3*x*y^2 + y^3", "x,y"));
  CHECK((a - a).is_zero());
  CHECK(a * poly("x - y", "x,y") == poly("x^2 - y^2", "x,y"));
}

TEST_CASE("change of field") {
  const Poly f = poly("7*x^2 + 8*y^2", "x,y");
  const Poly g = change_field(f, FieldId::prime(7));
  CHECK(g == poly("y^2", "x,y", "", FieldId::prime(7)));
  CHECK_THROWS_AS(convert_scalar(Scalar::from_int(FieldId::prime(7), 1), FieldId::rationals()), Error);
}
