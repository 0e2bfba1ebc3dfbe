// Links only the shared library and its C header.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <quadeuler/quadeuler.h>

#include <string>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  qe_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parse and print") {
  qe_poly* p = nullptr;
  REQUIRE(qe_poly_parse("Q", "x0,x1,x2", "1,1,1", "x0^3+x1^3+x2^3", &p) == QE_OK);
  char* s = nullptr;
  REQUIRE(qe_poly_to_string(p, &s) == QE_OK);
  CHECK(take(s) == "x0^3 + x1^3 + x2^3");
  qe_poly_destroy(p);
}

TEST_CASE("error reporting") {
  qe_poly* p = nullptr;
  CHECK(qe_poly_parse("Q", "x0,x1", "", "x0 + + x1", &p) == QE_ERR_USER);
  CHECK(p == nullptr);
  CHECK(std::string(qe_last_error_kind()) == "SyntaxError");
  CHECK(std::string(qe_last_error()).find("offset 5") != std::string::npos);
  REQUIRE(qe_poly_parse("Q", "x,y", "", "x^2*y", &p) == QE_OK);
  qe_gwclass* q = nullptr;
  CHECK(qe_chi(p, &q, nullptr) == QE_ERR_MATH);
  CHECK(std::string(qe_last_error_kind()) == "NotSmooth");
  qe_poly_destroy(p);
  CHECK(qe_poly_to_string(nullptr, nullptr) == QE_ERR_USER);
}

TEST_CASE("chi and conductor through the C API") {
  qe_poly* p = nullptr;
  REQUIRE(qe_poly_parse("Q", "x0,x1,x2,x3", nullptr, "x0^4+x1^4+x2^4+x3^4", &p) == QE_OK);
  qe_gwclass* q = nullptr;
  REQUIRE(qe_chi(p, &q, nullptr) == QE_OK);
  long rank = 0;
  REQUIRE(qe_gw_rank(q, &rank) == QE_OK);
  CHECK(rank == 24);
  qe_gw_destroy(q);
  qe_poly_destroy(p);

  REQUIRE(qe_poly_parse("Q", "x0,x1,x2", "1,1,1", "x0^3+x1^3+x2^3", &p) == QE_OK);
  int equal = 0;
  char* json = nullptr;
  REQUIRE(qe_conductor(p, &json, &equal) == QE_OK);
  CHECK(equal == 1);
  CHECK(take(json).find("\"rank\":8") != std::string::npos);
  qe_poly_destroy(p);
}

TEST_CASE("GW utilities") {
  char* s = nullptr;
  REQUIRE(qe_gw_specialize_entries("Qt", "t, -6*t, 2+t", &s) == QE_OK);
  CHECK(take(s) == "1, -6, 2");

  qe_gwclass* a = nullptr;
  qe_gwclass* b = nullptr;
  REQUIRE(qe_gw_from_entries("Q", "1,-1", &a) == QE_OK);
  REQUIRE(qe_gw_from_entries("Q", "H", &b) == QE_OK);
  int equal = 0;
  REQUIRE(qe_gw_equal(a, b, &equal, nullptr) == QE_OK);
  CHECK(equal == 1);

  REQUIRE(qe_gw_to_json(a, &s) == QE_OK);
  qe_gwclass* c = nullptr;
  REQUIRE(qe_gw_from_json(s, &c) == QE_OK);
  qe_string_free(s);
  REQUIRE(qe_gw_equal(a, c, &equal, nullptr) == QE_OK);
  CHECK(equal == 1);

  qe_gwclass* d = nullptr;
  REQUIRE(qe_gw_diagonalize("Q", "0,1,0;1,0,0;0,0,5", &d, nullptr) == QE_OK);
  REQUIRE(qe_gw_to_string(d, &s) == QE_OK);
  CHECK(take(s) == "<5> + H");
  for (qe_gwclass* x : {a, b, c, d}) qe_gw_destroy(x);
}

TEST_CASE("dimension 0") {
  int equal = 0;
  for (int e = 2; e <= 8; ++e) {
    REQUIRE(qe_delta_dim0(e, "-1", nullptr, &equal) == QE_OK);
    CHECK(equal == 1);
  }
  qe_gwclass* q = nullptr;
  CHECK(qe_trace_dim0(3, "0", &q) == QE_ERR_USER);
}
