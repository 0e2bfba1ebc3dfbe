#include <doctest.h>

#include "../oracles.hpp"
#include "error.hpp"
#include "helpers.hpp"
#include "jacobian.hpp"

using namespace qe;
using testing_helpers::poly;
using testing_helpers::q;

namespace {

std::vector<std::string> basis_names(const JacobianRing& j, int m) {
  std::vector<std::string> out;
  for (const auto& mono : j.piece(m).basis) out.push_back(monomial_to_string(j.ring(), mono));
  return out;
}

void check_hilbert(const Poly& f) {
  const JacobianRing j(f);
  const auto series = oracle::hilbert_series(j.degree(), j.ring().weights());
  const auto hf = j.hilbert_function(static_cast<int>(series.size()) + 2);
  for (std::size_t m = 0; m < hf.size(); ++m) {
    const long expect = m < series.size() ? series[m] : 0;
    CHECK(static_cast<long>(hf[m]) == expect);
  }
}

}  // namespace

TEST_CASE("quadric in two variables") {
  const JacobianRing j(poly("x^2 + y^2", "x,y"));
  CHECK(j.socle_degree() == 0);
  CHECK(j.total_dimension() == 1);
  CHECK(j.is_finite_dimensional());
}

TEST_CASE("Fermat cubic pieces") {
  const JacobianRing j(poly("x^3 + y^3 + z^3", "x,y,z"));
  CHECK(j.socle_degree() == 3);
  CHECK(j.total_dimension() == 8);
  CHECK(basis_names(j, 1) == std::vector<std::string>{"x", "y", "z"});
  CHECK(basis_names(j, 3) == std::vector<std::string>{"x*y*z"});
  CHECK(j.piece(4).dim() == 0);
  CHECK(j.piece(-1).dim() == 0);
}

TEST_CASE("Fermat cubic over Q(t)") {
  const JacobianRing j(poly("x^3 + y^3 + z^3 - t*w^3", "x,y,z,w", "", FieldId::rational_functions()));
  CHECK(j.socle_degree() == 4);
  CHECK(j.total_dimension() == 16);
}

TEST_CASE("Hilbert function matches the series oracle") {
  check_hilbert(poly("x0^4 + x1^4 + x2^4 + x3^4", "x0,x1,x2,x3"));
  check_hilbert(poly("x0^3 + x1^3 + x2^3 + x0*x1*x2", "x0,x1,x2"));
  check_hilbert(poly("x0^5 + x1^5 + x2^5 + x0*x1^4 - x1*x2^4", "x0,x1,x2"));
  check_hilbert(poly("x0^4 + x1^4 + x2^2 + x0^2*x2 + 3*x0*x1^3", "x0,x1,x2", "1,1,2"));
  check_hilbert(poly("x0^6 + x1^6 + x2^2", "x0,x1,x2", "1,1,3"));
  check_hilbert(poly("x0^4 + x1^2", "x0,x1", "1,2"));
  check_hilbert(poly("x0^4 + x1^4 + x2^4 + 3*x0^2*x1^2", "x0,x1,x2", "", FieldId::prime(7)));
  const JacobianRing k3(poly("x0^4 + x1^4 + x2^4 + x3^4", "x0,x1,x2,x3"));
  CHECK(k3.piece(4).dim() == 19);
}

TEST_CASE("singular forms are detected") {
  const JacobianRing j(poly("x^2*y", "x,y"));
  CHECK_FALSE(j.is_finite_dimensional());
  CHECK_THROWS_AS(scheja_storch(j, SplitStrategy::LowestVar), Error);
  CHECK(JacobianRing(poly("x^3 + y^3 + z^3", "x,y,z")).is_finite_dimensional());
}

TEST_CASE("characteristic dividing the degree is rejected") {
  CHECK_THROWS_AS(JacobianRing(poly("x^3 + y^3", "x,y", "", FieldId::prime(3))), Error);
}

TEST_CASE("Scheja-Storch element of Fermat forms") {
  for (int e : {2, 3, 4, 5}) {
    for (int vars : {2, 3, 4}) {
      std::string names, src;
      for (int i = 0; i < vars; ++i) {
        names += (i ? "," : "") + std::string("x") + std::to_string(i);
        src += (i ? " + " : "") + std::string("x") + std::to_string(i) + "^" + std::to_string(e);
      }
      const JacobianRing j(poly(src, names));
      const Row ef = scheja_storch(j, SplitStrategy::LowestVar);
      REQUIRE(ef.size() == 1);
      // The socle basis monomial is prod x_i^{e-2} and e_F = e^{N+1} times it.
      CHECK(ef[0] == q(oracle::ipow(e, vars)));
      CHECK(scheja_storch(j, SplitStrategy::HighestVar) == ef);
      CHECK(scheja_storch(j, SplitStrategy::Hessian) == ef);
    }
  }
}

TEST_CASE("splitting strategies agree on a non-diagonal form") {
  const JacobianRing j(poly("x0^3 + x1^3 + x2^3 + x0*x1^2 - 2*x1^2*x2", "x0,x1,x2"));
  const Row a = scheja_storch(j, SplitStrategy::LowestVar);
  CHECK(scheja_storch(j, SplitStrategy::HighestVar) == a);
  CHECK(scheja_storch(j, SplitStrategy::Hessian) == a);
  // det Hess(F) = (e-1)^{N+1} e_F in the socle.
  const Row h = j.reduce(hessian_det(j.polynomial()));
  CHECK(h[0] == q(8) * a[0]);
}

TEST_CASE("Gram matrix of x^4 + y^4 against a hand-built pairing") {
  const JacobianRing j(poly("x^4 + y^4", "x,y"));
  std::vector<int> degs{0, 1, 2, 3, 4};
  const Matrix g = gram_matrix(j, degs);
  // x^3 = y^3 = 0 in J and e_F = 16 x^2 y^2, so B(x^i y^j, x^k y^l) = 1/16
  // exactly when i + k = 2 and j + l = 2.
  std::vector<std::pair<int, int>> expos;
  for (int m : degs)
    for (const auto& mono : j.piece(m).basis) expos.emplace_back(mono[0], mono[1]);
  REQUIRE(expos.size() == 9);
  for (std::size_t r = 0; r < 9; ++r) {
    for (std::size_t c = 0; c < 9; ++c) {
      const bool hit = expos[r].first + expos[c].first == 2 && expos[r].second + expos[c].second == 2;
      CHECK(g[r][c] == (hit ? q(1, 16) : q(0)));
    }
  }
  const GWClass form = jacobian_form_full(j);
  CHECK(form.rank() == 9);
  CHECK(form.to_string() == "<1> + 4H");
  CHECK(invariants(form).signature.value() == 1);
}

TEST_CASE("full forms") {
  CHECK(jacobian_form_full(JacobianRing(poly("x^3 + y^3 + z^3", "x,y,z"))).to_string() == "4H");
  CHECK(jacobian_form_full(JacobianRing(poly("x^2 + y^2", "x,y"))).to_string() == "<1>");
}

TEST_CASE("zero Gram matrix off the complementary degree") {
  const JacobianRing j(poly("x^3 + y^3 + z^3", "x,y,z"));
  const Matrix g = gram_matrix(j, {1});
  for (const auto& row : g)
    for (const auto& s : row) CHECK(s.is_zero());
}

TEST_CASE("block assembly agrees with diagonalizing the whole Gram matrix") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"x0^3 + x1^3 + x2^3 + x0*x1^2 - 2*x1^2*x2", "1,1,1"},
      {"x0^4 + x1^4 + x0*x1^3", "1,1"},
      {"x0^4 + x1^4 + x2^4 + x0*x1^3", "1,1,1"},
      {"x0^4 + x1^4 + x2^2 + x0^2*x2 + 3*x0*x1^3", "1,1,2"},
      {"x0^5 + x1^5 + x2^5 + x0*x1^4 - x1*x2^4", "1,1,1"},
  };
  for (const auto& [src, w] : cases) {
    const JacobianRing j(poly(src, w == std::string("1,1") ? "x0,x1" : "x0,x1,x2", w));
    std::vector<int> all;
    for (int m = 0; m <= j.socle_degree(); ++m) all.push_back(m);
    const GWClass whole = diagonalize(gram_matrix(j, all)).form;
    const GWClass blocks = jacobian_form_full(j);
    CHECK(gw_equal(whole, blocks).equal);
    CHECK(gw_equal(blocks, whole).equal);
  }
}

TEST_CASE("primitive forms") {
  const JacobianRing plane(poly("x^3 + y^3 + z^3", "x,y,z"));
  CHECK(primitive_degrees(plane, 1) == std::vector<int>{0, 3});
  CHECK(jacobian_form_primitive(plane, 1).to_string() == "H");
  const JacobianRing surf(poly("x0^3 + x1^3 + x2^3 - t*x3^3", "x0,x1,x2,x3", "", FieldId::rational_functions()));
  CHECK(primitive_degrees(surf, 2) == std::vector<int>{2, 5});
  CHECK(surf.piece(2).dim() == 6);
  CHECK(surf.piece(5).dim() == 0);
}

TEST_CASE("weighted cover identity") {
  struct Case {
    const char* src;
    const char* vars;
    const char* weights;
  };
  const std::vector<Case> cases = {
      {"x0^4 + x1^4 + x2^2", "x0,x1,x2", "1,1,2"},
      {"x0^6 + x1^6 + x2^2", "x0,x1,x2", "1,1,3"},
      {"x0^4 + x1^2", "x0,x1", "1,2"},
      {"x0^4 + x1^4 + x2^2 + x0^2*x2 + 3*x0*x1^3", "x0,x1,x2", "1,1,2"},
  };
  for (const auto& [src, vars, w] : cases) {
    const JacobianRing j(poly(src, vars, w));
    CHECK(weighted_cover_check(j).holds());
  }
}
