#pragma once

// Grothendieck-Witt classes as signed multiplicities of rank-one forms <u>
// plus a count of hyperbolic planes H = <1> + <-1>.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "scalar.hpp"

namespace qe {

struct ScalarLess {
  bool operator()(const Scalar& a, const Scalar& b) const { return canonical_compare(a, b) < 0; }
};

class GWClass {
 public:
  explicit GWClass(FieldId field = FieldId::rationals()) : field_(field) {}

  static GWClass rank_one(const Scalar& u);
  static GWClass hyperbolic(FieldId field, long count);

  FieldId field() const { return field_; }
  // Canonical square classes with nonzero multiplicity, ascending.
  const std::map<Scalar, long, ScalarLess>& entries() const { return entries_; }
  long hyperbolic_count() const { return hyperbolic_; }
  long rank() const;
  bool is_virtual() const;  // some multiplicity or the H count is negative

  void add(const Scalar& u, long mult = 1);
  void add_hyperbolic(long count) { hyperbolic_ += count; }

  GWClass operator-() const;
  friend GWClass operator+(const GWClass& a, const GWClass& b);
  friend GWClass operator-(const GWClass& a, const GWClass& b);
  friend GWClass operator*(const GWClass& a, const GWClass& b);
  GWClass& operator+=(const GWClass& b) { return *this = *this + b; }
  // <u> * q
  GWClass scaled(const Scalar& u) const;
  GWClass times(long k) const;

  // Structural identity of canonical forms (not isometry; see gw_equal).
  friend bool operator==(const GWClass& a, const GWClass& b);

  // "<3> + <-1> + 4H", "-<1>", "0"
  std::string to_string() const;

 private:
  void fold(const Scalar& key);

  FieldId field_;
  std::map<Scalar, long, ScalarLess> entries_;
  long hyperbolic_ = 0;
};

// (-<e>)^n * q: scale by <e>^n, then take the additive inverse if n is odd.
GWClass sign_power(const Scalar& e, int n, const GWClass& q);

// Hilbert symbol (a, b)_v over Q; place 0 stands for the real place.
int hilbert_symbol(const Rational& a, const Rational& b, const Integer& place);

struct HasseData {
  std::map<Integer, int> at;  // prime -> s_p
};

struct GWInvariants {
  long rank = 0;
  std::optional<long> signature;       // Q only
  std::optional<Scalar> disc;          // signed discriminant class
  std::optional<HasseData> hasse;      // genuine classes over Q
  std::optional<HasseData> hasse_pos;  // virtual classes over Q
  std::optional<HasseData> hasse_neg;
};
GWInvariants invariants(const GWClass& q);

// Determinant class prod u^m * (-1)^h.
Scalar determinant_class(const GWClass& q);
// Hasse-Witt invariant of a genuine class at p, expanding H as <1>,<-1>.
int hasse_invariant(const GWClass& q, const Integer& p);
// 2 and every prime dividing an entry.
std::vector<Integer> relevant_primes(const GWClass& q);

struct InvariantCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool ok;
};

struct EqualityCertificate {
  bool equal = false;
  std::vector<InvariantCheck> checks;
};

// Isometry of virtual classes. Over F_p rank and discriminant decide. Over Q: q1 - q2 is split into genuine parts P
// and N and P ~ N is decided by Hasse-Minkowski. UnsupportedField over k(t).
EqualityCertificate gw_equal(const GWClass& q1, const GWClass& q2);

struct Diagonalization {
  Matrix transform;  // P with P^T G P = diag(diagonal)
  Row diagonal;
  GWClass form;
};
Diagonalization diagonalize(const Matrix& gram);

// sp_t : GW(k(t)) -> GW(k), <t^n u> -> <u(0)>.
GWClass specialize(const GWClass& q);
// The constant-field unit u(0) of each entry's square class, order kept.
std::vector<Scalar> specialize_entries(const std::vector<Scalar>& entries);

// Comma list of field elements; "H" or "kH" adds hyperbolic planes, a leading
// '~' subtracts the entry.
GWClass gw_from_entries(std::string_view src, FieldId field);
std::string gw_to_json(const GWClass& q);
GWClass gw_from_json(std::string_view src);

}  // namespace qe
