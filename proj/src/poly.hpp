#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace qe {

inline constexpr int kMaxVars = 8;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  std::uint16_t operator[](int i) const { return exp[static_cast<std::size_t>(i)]; }
  std::uint16_t& operator[](int i) { return exp[static_cast<std::size_t>(i)]; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  Monomial operator*(const Monomial& other) const;
  // True when `other` divides this monomial.
  bool divisible_by(const Monomial& other) const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Polynomial ring k[x_0..x_N] graded by deg(x_i) = weights[i].
class WeightedRing {
 public:
  WeightedRing(FieldId field, std::vector<std::string> names, std::vector<int> weights);

  FieldId field() const { return field_; }
  int num_vars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
  int weight_sum() const;
  bool unweighted() const;
  std::optional<int> index_of(const std::string& name) const;

  int degree(const Monomial& m) const;
  // Same variables, different field or weights.
  std::shared_ptr<const WeightedRing> with_field(FieldId field) const;
  std::shared_ptr<const WeightedRing> with_weights(std::vector<int> weights) const;

  friend bool operator==(const WeightedRing&, const WeightedRing&) = default;

 private:
  FieldId field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const WeightedRing>;

RingPtr make_ring(FieldId field, std::vector<std::string> names, std::vector<int> weights);

// All exponent vectors of weighted degree m, in graded-lex order (x_0 highest).
std::vector<Monomial> monomials_of_degree(const WeightedRing& ring, int m);

class Poly {
 public:
  // Terms keyed in descending lex order on exponent vectors.
  using TermMap = std::map<Monomial, Scalar, std::greater<>>;

  explicit Poly(RingPtr ring);
  Poly(RingPtr ring, TermMap terms);

  static Poly constant(RingPtr ring, const Scalar& c);
  static Poly variable(RingPtr ring, int index);
  static Poly monomial(RingPtr ring, const Monomial& m, const Scalar& c);

  const RingPtr& ring_ptr() const { return ring_; }
  const WeightedRing& ring() const { return *ring_; }
  FieldId field() const { return ring_->field(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Scalar& c) const;
  Poly pow(unsigned exponent) const;
  friend bool operator==(const Poly& a, const Poly& b);

  // Terms sorted by weighted degree then lex, both descending.
  std::vector<std::pair<Monomial, Scalar>> sorted_terms() const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  TermMap terms_;
};

Poly partial_derivative(const Poly& f, int i);
// The common weighted degree; NotHomogeneous if terms disagree.
int weighted_degree(const Poly& f);
bool is_homogeneous(const Poly& f);
// Y_i -> X_i^{a_i}; result lives in the same variables with all weights 1.
Poly substitute_powers(const Poly& f);
Poly hessian_det(const Poly& f);
// d*f - sum a_i x_i df/dx_i with d the degree of the leading term.
Poly euler_defect(const Poly& f);
// Coefficientwise image in another field (Q -> F_p, k -> k(t), ...).
Poly change_field(const Poly& f, FieldId field);
Scalar convert_scalar(const Scalar& c, FieldId field);

// Determinant of a square matrix of polynomials by cofactor expansion over
// column subsets.
Poly poly_determinant(const std::vector<std::vector<Poly>>& m, const RingPtr& ring);

std::string monomial_to_string(const WeightedRing& ring, const Monomial& m);

}  // namespace qe
