#include <doctest.h>

#include "error.hpp"
#include "helpers.hpp"
#include "parse.hpp"
#include "scalar.hpp"

using namespace qe;
using testing_helpers::q;

TEST_CASE("rational arithmetic") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(q(3, 4) - q(3, 4) == q(0));
  CHECK(q(2, 3) / q(4, 9) == q(3, 2));
  CHECK_THROWS_AS(q(1) / q(0), Error);
}

TEST_CASE("prime field arithmetic") {
  const FieldId f7 = FieldId::prime(7);
  CHECK(Scalar::from_int(f7, 2) * Scalar::from_int(f7, 4) == Scalar::one(f7));
  CHECK(Scalar::from_int(f7, -1) == Scalar::from_int(f7, 6));
  CHECK(Scalar::from_int(f7, 3).inv() * Scalar::from_int(f7, 3) == Scalar::one(f7));
  CHECK_THROWS(FieldId::prime(9));
}

TEST_CASE("rational functions") {
  const FieldId qt = FieldId::rational_functions();
  const Scalar a = parse_scalar("t/(1+t)", qt);
  CHECK(a * parse_scalar("1+t", qt) == Scalar::variable_t(qt));
  CHECK(parse_scalar("(t^2 - 1)/(t - 1)", qt) == parse_scalar("t + 1", qt));
  CHECK(parse_scalar("t/(1+t)", qt).to_string() == "t/(t + 1)");
}

TEST_CASE("square classes over Q") {
  CHECK(square_class(q(18)) == q(2));
  CHECK(square_class(q(-8, 25)) == q(-2));
  CHECK(square_class(q(1, 4)) == q(1));
  CHECK(square_class(q(-3, 12)) == q(-1));
  CHECK(squarefree_part(Integer(-360)) == Integer(-10));
}

TEST_CASE("square classes over F_p match exhaustive squares") {
  for (std::uint32_t p : {3U, 5U, 7U, 11U, 13U}) {
    std::vector<bool> is_sq(p, false);
    for (std::uint32_t x = 1; x < p; ++x) is_sq[x * x % p] = true;
    const FieldId f = FieldId::prime(p);
    for (std::uint32_t u = 1; u < p; ++u) {
      CHECK(is_square_mod_p(u, p) == is_sq[u]);
      const Scalar c = square_class(Scalar::from_int(f, u));
      CHECK(c == (is_sq[u] ? Scalar::one(f) : Scalar::from_int(f, least_nonresidue(p))));
    }
  }
  // 3 is not among the squares {1, 2, 4} mod 7.
  CHECK(square_class(Scalar::from_int(FieldId::prime(7), 3)) == Scalar::from_int(FieldId::prime(7), 3));
}

TEST_CASE("t-adic order and leading unit") {
  const FieldId qt = FieldId::rational_functions();
  auto check = [&](const char* src, long ord, long u) {
    const TOrder r = t_order_and_unit(parse_scalar(src, qt));
    CHECK(r.order == ord);
    CHECK(r.unit_value == q(u));
  };
  check("t^2", 2, 1);
  check("(2*t + t^3)/(1 - t)", 1, 2);
  check("5", 0, 5);
  check("-6*t", 1, -6);
  check("1/t^3", -3, 1);
}

TEST_CASE("square classes over Q(t)") {
  const FieldId qt = FieldId::rational_functions();
  CHECK(square_class(parse_scalar("4*t^2", qt)) == Scalar::one(qt));
  CHECK(square_class(parse_scalar("18*t^3", qt)) == parse_scalar("2*t", qt));
  CHECK(square_class(parse_scalar("(t+1)/(t-1)", qt)) == square_class(parse_scalar("(t+1)*(t-1)", qt)));
}

TEST_CASE("large cofactors are refused") {
  // Product of two primes beyond the trial-division bound.
  const Integer n = Integer("1000003") * Integer("1000033");
  CHECK_THROWS_AS(squarefree_part(n), Error);
  // A prime beyond the bound is accepted.
  CHECK(squarefree_part(Integer("1000003")) == Integer("1000003"));
}
