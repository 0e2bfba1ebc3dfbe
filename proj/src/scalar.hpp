#pragma once

// Exact coefficient fields: Q, F_p (odd p < 2^31) and k(t) for k = Q or F_p.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qe {

using Integer = mpz_class;
using Rational = mpq_class;

struct FieldId {
  enum class Kind : std::uint8_t { Rationals, PrimeField, RationalFunctions };

  Kind kind = Kind::Rationals;
  // PrimeField: the characteristic. RationalFunctions: characteristic of the
  // constant field (0 for Q(t)).
  std::uint32_t p = 0;

  static FieldId rationals() { return {}; }
  static FieldId prime(std::uint32_t p);
  static FieldId rational_functions(std::uint32_t base_p = 0);

  FieldId base() const;
  std::uint32_t characteristic() const { return p; }
  bool is_function_field() const { return kind == Kind::RationalFunctions; }
  std::string name() const;

  friend bool operator==(const FieldId&, const FieldId&) = default;
};

struct ModP {
  std::uint32_t value = 0;
  std::uint32_t p = 0;
};

struct RatFunc;

class Scalar {
 public:
  Scalar() = default;  // rational zero
  explicit Scalar(Rational q);
  explicit Scalar(ModP m);
  explicit Scalar(std::shared_ptr<const RatFunc> f);

  static Scalar zero(FieldId field);
  static Scalar one(FieldId field);
  static Scalar from_int(FieldId field, long long n);
  static Scalar from_integer(FieldId field, const Integer& n);
  static Scalar from_rational(FieldId field, const Rational& q);
  // The transcendental t of a function field.
  static Scalar variable_t(FieldId field);

  FieldId field() const;
  bool is_zero() const;
  bool is_one() const;
  // True for elements of the constant field (always true outside k(t)).
  bool is_constant() const;

  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(long long exponent) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  const Rational& rational() const;
  ModP modp() const;
  const RatFunc& ratfunc() const;
  // For function fields: the constant-field value of a constant element.
  Scalar constant_value() const;

  std::string to_string() const;

 private:
  std::variant<Rational, ModP, std::shared_ptr<const RatFunc>> v_;
};

// Total order used to key square classes; only meaningful within one field.
int canonical_compare(const Scalar& a, const Scalar& b);

// Univariate polynomials in t over the constant field, coefficients from low to
// high degree, no trailing zeros (the zero polynomial is empty).
using UPoly = std::vector<Scalar>;

namespace upoly {
int degree(const UPoly& f);  // -1 for zero
UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Scalar& c);
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);  // monic
UPoly derivative(const UPoly& f);
UPoly make_monic(const UPoly& f);
int valuation(const UPoly& f);  // t-adic order, f nonzero
std::string to_string(const UPoly& f);
}  // namespace upoly

struct RatFunc {
  FieldId base;
  UPoly num;  // coprime to den
  UPoly den;  // monic
};

// Builds the reduced fraction num/den over `base`.
Scalar make_ratfunc(FieldId base, UPoly num, UPoly den);

// --- square classes -------------------------------------------------------

inline constexpr unsigned long kTrialDivisionBound = 1000000;

// Square-free part of a nonzero integer (sign kept).
Integer squarefree_part(const Integer& n);
// Distinct primes dividing n (n != 0).
std::vector<Integer> prime_divisors(const Integer& n);

// Canonical representative of the square class of a nonzero scalar:
//  Q: square-free integer; F_p: 1 or the least non-residue;
//  k(t): constant-field class times the odd-multiplicity part of num*den.
Scalar square_class(const Scalar& a);
bool is_square_mod_p(std::uint32_t value, std::uint32_t p);
std::uint32_t least_nonresidue(std::uint32_t p);

struct TOrder {
  long order;
  Scalar unit_value;  // in the constant field
};
// f = t^order * u(t) with u(0) = unit_value != 0.
TOrder t_order_and_unit(const Scalar& f);

}  // namespace qe
