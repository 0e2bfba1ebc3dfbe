#include "hyper.hpp"

#include <numeric>

#include <json.hpp>

#include "error.hpp"

namespace qe {

HypersurfaceData make_hypersurface(const Poly& f) {
  const auto& ring = f.ring();
  if (ring.num_vars() < 2) fail(ErrorKind::InvalidArgument, "a hypersurface needs at least two coordinates");
  HypersurfaceData h;
  h.dim = ring.num_vars() - 2;
  const int e = weighted_degree(f);
  int l = 1;
  int g = 0;
  for (int w : ring.weights()) {
    l = std::lcm(l, w);
    g = std::gcd(g, w);
  }
  if (e % l != 0) fail(ErrorKind::WeightsInvalid, "degree " + std::to_string(e) + " is not divisible by lcm of the weights " + std::to_string(l));
  if (g != 1) fail(ErrorKind::WeightsInvalid, "weights must have gcd 1");
  h.jacobian = std::make_shared<const JacobianRing>(f);
  if (!h.jacobian->is_finite_dimensional()) fail(ErrorKind::NotSmooth, "J(F) is infinite-dimensional: F = " + f.to_string() + " is singular");
  if (!ring.unweighted()) {
    if (h.dim >= 3) {
      for (int i = 0; i < ring.num_vars(); ++i) {
        for (int k = 0; k < i; ++k) {
          if (std::gcd(ring.weight(i), ring.weight(k)) != 1) {
            h.warnings.push_back("weights " + std::to_string(ring.weight(k)) + " and " + std::to_string(ring.weight(i)) +
                                 " are not coprime; smoothness of the weighted hypersurface is not checked");
          }
        }
      }
    }
    for (int i = 0; i < ring.num_vars(); ++i) {
      Monomial m;
      m[i] = static_cast<std::uint16_t>(e / ring.weight(i));
      if (f.coefficient(m).is_zero()) {
        h.warnings.push_back("no " + monomial_to_string(ring, m) + " term; the hypersurface may meet a singular point of the ambient space");
      }
    }
  }
  return h;
}

GWClass chi_smooth(const HypersurfaceData& h) {
  const JacobianRing& j = *h.jacobian;
  const FieldId field = j.field();
  const int n = h.dim;
  const GWClass prim = jacobian_form_primitive(j, n);
  if (n % 2 == 1) {
    if (!prim.entries().empty()) fail(ErrorKind::OddRankPrimitive, "primitive form in odd dimension is not hyperbolic: " + prim.to_string());
    const long twice = (n + 1) - prim.rank();
    if (twice % 2 != 0) fail(ErrorKind::OddRankPrimitive, "odd Hodge rank in odd dimension");
    return GWClass::hyperbolic(field, twice / 2);
  }
  long prod_a = 1;
  for (int w : j.ring().weights()) prod_a *= w;
  const Scalar e = Scalar::from_int(field, j.degree());
  GWClass chi = GWClass::rank_one(e * Scalar::from_int(field, prod_a));
  chi.add_hyperbolic(n / 2);
  chi += prim.scaled(-e);
  return chi;
}

GWClass chi_c_cone(const HypersurfaceData& base) {
  const FieldId field = base.jacobian->field();
  return GWClass::rank_one(Scalar::one(field)) + chi_smooth(base).scaled(Scalar::from_int(field, -1));
}

long hodge_rank_oracle(const HypersurfaceData& h) {
  const JacobianRing& j = *h.jacobian;
  long total = 0;
  for (int m : primitive_degrees(j, h.dim)) total += static_cast<long>(j.piece(m).dim());
  return (h.dim + 1) + (h.dim % 2 == 0 ? total : -total);
}

std::string chi_report_json(const HypersurfaceData& h, const GWClass& chi, bool cone) {
  const JacobianRing& j = *h.jacobian;
  nlohmann::ordered_json out;
  out["field"] = j.field().name();
  out["vars"] = j.ring().names();
  out["weights"] = j.ring().weights();
  out["poly"] = j.polynomial().to_string();
  out["degree"] = j.degree();
  out["dim"] = h.dim;
  out["socle_degree"] = j.socle_degree();
  out["hilbert_function"] = j.hilbert_function(j.socle_degree());
  nlohmann::ordered_json prim = nlohmann::ordered_json::array();
  for (int m : primitive_degrees(j, h.dim)) prim.push_back({{"degree", m}, {"dim", j.piece(m).dim()}});
  out["primitive"] = prim;
  out["hodge_rank_oracle"] = hodge_rank_oracle(h);
  out[cone ? "chi_c" : "chi"] = nlohmann::ordered_json::parse(gw_to_json(chi));
  out["warnings"] = h.warnings;
  return out.dump();
}

}  // namespace qe
