#pragma once

// Graded Jacobian rings J(F) = k[X]/(dF/dX_0, ..., dF/dX_N) by per-degree
// linear algebra on the relation slices {F_i * mu}.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "gw.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace qe {

struct GradedPiece {
  int degree = 0;
  std::vector<Monomial> monomials;  // every monomial of this degree, lex descending
  std::vector<Monomial> basis;      // non-pivot monomials, same order
  // Normal form of each monomial in basis coordinates (dense rows).
  std::unordered_map<Monomial, Row, MonomialHash> normal_form;

  std::size_t dim() const { return basis.size(); }
  // Basis coordinates of a homogeneous polynomial of this degree.
  Row reduce(const Poly& p) const;
};

enum class SplitStrategy { LowestVar, HighestVar, Hessian };

class JacobianRing {
 public:
  // Validates homogeneity and characteristic; does not test smoothness.
  explicit JacobianRing(Poly f);

  const Poly& polynomial() const { return f_; }
  const WeightedRing& ring() const { return f_.ring(); }
  const RingPtr& ring_ptr() const { return f_.ring_ptr(); }
  FieldId field() const { return f_.field(); }
  int degree() const { return e_; }
  const std::vector<Poly>& partials() const { return partials_; }
  int socle_degree() const { return socle_; }

  // Cached; degrees outside [0, inf) give an empty piece.
  const GradedPiece& piece(int m) const;
  std::vector<std::size_t> hilbert_function(int up_to) const;
  // dim J_socle = 1 and J_m = 0 for socle < m <= socle + max weight.
  bool is_finite_dimensional() const;
  std::size_t total_dimension() const;

  // Basis coordinates of a homogeneous element.
  Row reduce(const Poly& p) const;
  // Coordinates of p * x where x is given in the basis of J_m.
  Row multiply(const Poly& p, const Row& x, int m) const;
  Poly lift(const Row& x, int m) const;

  // e_F from the lowest-variable splitting, computed once.
  const Row& socle_generator() const;

 private:
  std::shared_ptr<const GradedPiece> compute_piece(int m) const;

  Poly f_;
  int e_;
  int socle_;
  std::vector<Poly> partials_;
  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<const GradedPiece>> cache_;
  mutable std::once_flag ef_once_;
  mutable Row ef_;
};

// Socle generator e_F = det(a_ij) with F_i = sum_j a_ij X_j, in the basis of
// J_socle. NotFiniteDimensional if J is not Artinian.
Row scheja_storch(const JacobianRing& j, SplitStrategy strategy);
// a_ij for the chosen strategy.
std::vector<std::vector<Poly>> splitting_matrix(const JacobianRing& j, SplitStrategy strategy);

// B_Jac between the bases of J_m and J_{socle - m}.
Matrix pairing_block(const JacobianRing& j, int m);
// Gram matrix of B_Jac on the concatenated quotient bases of the listed degrees.
Matrix gram_matrix(const JacobianRing& j, const std::vector<int>& degrees);

// Degrees (q+1)e - |a| for q = 0..n that are non-negative.
std::vector<int> primitive_degrees(const JacobianRing& j, int n);

// B_Jac restricted to the listed degrees, assembled block by block: a pair of
// distinct complementary degrees contributes dim * H, the middle degree is
// diagonalized. DegenerateForm if a degree lacks its partner or a block is
// singular.
GWClass jacobian_form(const JacobianRing& j, const std::vector<int>& degrees);
GWClass jacobian_form_full(const JacobianRing& j);
GWClass jacobian_form_primitive(const JacobianRing& j, int n);

struct CoverCheck {
  Row e_g;        // Scheja-Storch element of G = F(X_i^{a_i})
  Row predicted;  // (prod a_i) (prod X_i^{a_i-1})^2 pi^*(e_F), reduced in J(G)
  bool holds() const;
};
CoverCheck weighted_cover_check(const JacobianRing& j_f);

std::string jacobian_json(const JacobianRing& j);

}  // namespace qe
