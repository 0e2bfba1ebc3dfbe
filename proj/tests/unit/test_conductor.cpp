#include <doctest.h>

#include "conductor.hpp"
#include "error.hpp"
#include "helpers.hpp"

using namespace qe;
using testing_helpers::poly;

TEST_CASE("generic fiber") {
  const Poly ft = cone_generic_fiber(poly("x0^3 + x1^3 + x2^3", "x0,x1,x2"));
  CHECK(ft.to_string() == "x0^3 + x1^3 + x2^3 - t*x3^3");
  CHECK(ft.field() == FieldId::rational_functions());
  const Poly named = cone_generic_fiber(poly("x^2 + y^2", "x,y"));
  CHECK(named.ring().names().back() == "x2");
}

TEST_CASE("conductor identities") {
  struct Case {
    const char* src;
    const char* vars;
    const char* weights;
    long rank;
  };
  const std::vector<Case> cases = {
      {"x0^3 + x1^3 + x2^3", "x0,x1,x2", "1,1,1", 8},
      {"x0^4 + x1^4", "x0,x1", "1,1", -9},
      {"x0^4 + x1^4 + x2^2", "x0,x1,x2", "1,1,2", 9},
      {"x0^2 + x1^2", "x0,x1", "1,1", -1},
      {"x0^3 + x1^3 + x2^3 + x0*x1^2 - 2*x1^2*x2", "x0,x1,x2", "1,1,1", 8},
  };
  for (const auto& c : cases) {
    INFO(c.src);
    const auto r = conductor_check(poly(c.src, c.vars, c.weights));
    CHECK(r.equal);
    CHECK(r.forward.equal);
    CHECK(r.backward.equal);
    CHECK(r.rank_identity);
    CHECK(r.lhs.rank() == c.rank);
    CHECK(r.rhs.rank() == c.rank);
  }
}

TEST_CASE("right-hand side for two quartic points") {
  // <4> - <1> + (-<4>) q with q = <1> + 4H: <1> - <1> - <1> - 4H.
  const GWClass rhs = delta_rhs(poly("x0^4 + x1^4", "x0,x1"));
  CHECK(rhs.rank() == -9);
  CHECK(gw_equal(rhs, -gw_from_entries("1,4H", FieldId::rationals())).equal);
}

TEST_CASE("finite base fields give partial evidence") {
  const auto r = conductor_check(poly("x0^3 + x1^3 + x2^3", "x0,x1,x2", "", FieldId::prime(7)));
  CHECK(r.equal);
  CHECK(r.partial_evidence);
}

TEST_CASE("unsupported inputs") {
  CHECK_THROWS_AS(conductor_check(poly("x0^2*x1", "x0,x1")), Error);
  CHECK_THROWS_AS(conductor_check(poly("x0^2 + t*x1^2", "x0,x1", "", FieldId::rational_functions())), Error);
}

TEST_CASE("trace forms in relative dimension 0") {
  const FieldId qt = FieldId::rational_functions();
  CHECK(trace_form_dim0(2, 1) == gw_from_entries("2, 2*t", qt));
  CHECK(trace_form_dim0(3, 1) == gw_from_entries("3, H", qt));
  CHECK(trace_form_dim0(4, 3) == gw_from_entries("1, 3*t, H", qt));
  for (int e = 2; e <= 8; ++e) {
    for (int a : {1, 2, 3, 5, -1}) {
      const auto r = delta_dim0(e, a);
      CHECK(r.cert.equal);
      CHECK(r.trace == trace_form_closed(e, a));
    }
  }
  const auto r2 = delta_dim0(2, 1);
  CHECK(gw_equal(r2.lhs, gw_from_entries("2, 2, ~1", FieldId::rationals())).equal);
  CHECK_THROWS_AS(trace_form_dim0(1, 1), Error);
  CHECK_THROWS_AS(trace_form_dim0(3, 0), Error);
}

TEST_CASE("tensor decomposition of the generic form") {
  for (const char* src : {"x0^4 + x1^4", "x0^4 + x1^4 + x2^4", "x0^3 + x1^3 + x2^3", "x0^5 + x1^5"}) {
    const std::string s = src;
    const std::string vars = s.find("x2") != std::string::npos ? "x0,x1,x2" : "x0,x1";
    const auto t = tensor_decomposition_check(poly(src, vars));
    CHECK(t.cert.equal);
  }
}

TEST_CASE("corpus lines") {
  const Poly f = corpus_poly(R"({"field":"Q","vars":"x0,x1","weights":"1,2","poly":"x0^4 + x1^2"})");
  CHECK(f.ring().weights() == std::vector<int>{1, 2});
  const Poly g = corpus_poly(R"({"field":"Q","vars":["x0","x1"],"weights":[1,1],"poly":"x0^3 + x1^3"})");
  CHECK(weighted_degree(g) == 3);
  CHECK_THROWS_AS(corpus_poly("{"), Error);
  CHECK_THROWS_AS(corpus_poly(R"({"field":"Q"})"), Error);
}
