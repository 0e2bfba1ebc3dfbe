#pragma once

// Quadratic Euler characteristics of smooth (weighted) projective hypersurfaces.

#include <memory>
#include <string>
#include <vector>

#include "gw.hpp"
#include "jacobian.hpp"

namespace qe {

struct HypersurfaceData {
  std::shared_ptr<const JacobianRing> jacobian;
  int dim = 0;  // n, with n + 2 ambient coordinates
  std::vector<std::string> warnings;

  const Poly& polynomial() const { return jacobian->polynomial(); }
  int degree() const { return jacobian->degree(); }
};

// Checks lcm(a) | e, gcd(a) = 1 and finite-dimensionality of J(F).
HypersurfaceData make_hypersurface(const Poly& f);

// n even: <e prod a> + (n/2) H + <-e> q_prim.  n odd: r H with
// 2r = (n + 1) - rank q_prim, q_prim required to be hyperbolic.
GWClass chi_smooth(const HypersurfaceData& h);
// <1> + <-1> chi(base): the projective cone over the base hypersurface.
GWClass chi_c_cone(const HypersurfaceData& base);
// (n + 1) + (-1)^n sum_q dim J_{(q+1)e - |a|}, from graded dimensions only.
long hodge_rank_oracle(const HypersurfaceData& h);

std::string chi_report_json(const HypersurfaceData& h, const GWClass& chi, bool cone);

}  // namespace qe
