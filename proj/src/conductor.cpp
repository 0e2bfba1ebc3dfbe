#include "conductor.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "error.hpp"
#include "parse.hpp"

namespace qe {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fresh_name(const std::vector<std::string>& names) {
  const auto taken = [&](const std::string& s) { return std::find(names.begin(), names.end(), s) != names.end(); };
  std::string cand = "x" + std::to_string(names.size());
  if (!taken(cand)) return cand;
  for (const char* c : {"w", "u", "v", "z", "s"}) {
    if (!taken(c)) return c;
  }
  for (int i = 0;; ++i) {
    cand = "X" + std::to_string(i);
    if (!taken(cand)) return cand;
  }
}

long product_of_weights(const WeightedRing& ring) {
  long p = 1;
  for (int w : ring.weights()) p *= w;
  return p;
}

nlohmann::ordered_json cert_json(const EqualityCertificate& c) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& ch : c.checks) checks.push_back({{"name", ch.name}, {"lhs", ch.lhs}, {"rhs", ch.rhs}, {"ok", ch.ok}});
  return {{"equal", c.equal}, {"checks", checks}};
}

}  // namespace

Poly cone_generic_fiber(const Poly& f) {
  const auto& ring = f.ring();
  if (ring.field().is_function_field()) fail(ErrorKind::InvalidArgument, "the cone family needs a constant base field");
  const int e = weighted_degree(f);
  auto names = ring.names();
  auto weights = ring.weights();
  names.push_back(fresh_name(names));
  weights.push_back(1);
  const FieldId kt = FieldId::rational_functions(ring.field().characteristic());
  RingPtr big = make_ring(kt, names, weights);
  Poly ft(big);
  for (const auto& [m, c] : f.terms()) ft.add_term(m, convert_scalar(c, kt));
  Monomial top;
  top[ring.num_vars()] = static_cast<std::uint16_t>(e);
  ft.add_term(top, -Scalar::variable_t(kt));
  return ft;
}

GWClass delta_lhs(const Poly& f) {
  const Poly ft = cone_generic_fiber(f);
  HypersurfaceData generic;
  try {
    generic = make_hypersurface(ft);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::NotSmooth) fail(ErrorKind::NotSmoothGenericFiber, "generic fiber is singular: " + ft.to_string());
    throw;
  }
  const GWClass chi_t = specialize(chi_smooth(generic));
  const HypersurfaceData base = make_hypersurface(f);
  return chi_t - chi_c_cone(base);
}

GWClass delta_rhs(const Poly& f) {
  const JacobianRing j(f);
  if (!j.is_finite_dimensional()) fail(ErrorKind::NotFiniteDimensional, "the cone singularity is not isolated: J(F) is infinite-dimensional");
  const FieldId field = j.field();
  const int n = j.ring().num_vars() - 1;
  const Scalar e = Scalar::from_int(field, j.degree());
  GWClass rhs = GWClass::rank_one(e * Scalar::from_int(field, product_of_weights(j.ring())));
  rhs = rhs - GWClass::rank_one(Scalar::one(field));
  return rhs + sign_power(e, n, jacobian_form_full(j));
}

ConductorReport conductor_check(const Poly& f) {
  ConductorReport r;
  const auto& ring = f.ring();
  r.field = ring.field().name();
  r.vars = ring.names();
  r.weights = ring.weights();
  r.poly = f.to_string();
  r.n = ring.num_vars() - 1;
  r.e = weighted_degree(f);
  if (ring.field().is_function_field()) fail(ErrorKind::UnsupportedField, "conductor check needs base field Q or F_p");

  auto start = Clock::now();
  r.lhs = delta_lhs(f);
  r.lhs_ms = ms_since(start);
  start = Clock::now();
  r.rhs = delta_rhs(f);
  r.rhs_ms = ms_since(start);

  r.warnings = make_hypersurface(f).warnings;
  const JacobianRing j(f);
  r.milnor = static_cast<long>(j.total_dimension());
  r.expected_rank = r.n % 2 == 0 ? r.milnor : -r.milnor;
  r.rank_identity = r.lhs.rank() == r.expected_rank;
  r.forward = gw_equal(r.lhs, r.rhs);
  r.backward = gw_equal(r.rhs, r.lhs);
  r.partial_evidence = ring.field().kind == FieldId::Kind::PrimeField;
  r.equal = r.forward.equal && r.backward.equal;
  return r;
}

std::string conductor_json(const ConductorReport& r) {
  nlohmann::ordered_json out;
  out["field"] = r.field;
  out["vars"] = r.vars;
  out["weights"] = r.weights;
  out["poly"] = r.poly;
  out["n"] = r.n;
  out["degree"] = r.e;
  out["lhs"] = nlohmann::ordered_json::parse(gw_to_json(r.lhs));
  out["rhs"] = nlohmann::ordered_json::parse(gw_to_json(r.rhs));
  out["forward"] = cert_json(r.forward);
  out["backward"] = cert_json(r.backward);
  out["equal"] = r.equal;
  out["rank"] = r.lhs.rank();
  out["milnor"] = r.milnor;
  out["expected_rank"] = r.expected_rank;
  out["rank_identity"] = r.rank_identity;
  out["partial_evidence"] = r.partial_evidence;
  out["timing_ms"] = {{"lhs", r.lhs_ms}, {"rhs", r.rhs_ms}};
  out["warnings"] = r.warnings;
  return out.dump();
}

Poly corpus_poly(const std::string& json_line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_line);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::InvalidArgument, std::string("bad corpus line: ") + e.what());
  }
  const auto text = [&](const char* key) -> std::string {
    if (!j.contains(key)) fail(ErrorKind::InvalidArgument, std::string("corpus line lacks \"") + key + "\"");
    const auto& v = j.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (const auto& item : v) {
        if (!s.empty()) s += ",";
        s += item.is_string() ? item.get<std::string>() : item.dump();
      }
      return s;
    }
    return v.dump();
  };
  const FieldId field = parse_field(text("field"));
  auto ring = make_ring(field, parse_names(text("vars")), parse_ints(text("weights")));
  return parse_poly(text("poly"), ring);
}

std::vector<CorpusOutcome> run_corpus(const std::string& path, unsigned threads) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open corpus file " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  std::vector<CorpusOutcome> out(lines.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      out[i].source = lines[i];
      try {
        out[i].report = conductor_check(corpus_poly(lines[i]));
      } catch (const Error& e) {
        out[i].error_kind = std::string(error_kind_name(e.kind()));
        out[i].error = e.what();
      }
    }
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(lines.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

std::string corpus_outcome_json(const CorpusOutcome& c) {
  if (c.report) return conductor_json(*c.report);
  nlohmann::ordered_json out;
  out["input"] = c.source;
  out["error_kind"] = c.error_kind;
  out["error"] = c.error;
  return out.dump();
}

// --- relative dimension 0 -----------------------------------------------------

GWClass trace_form_dim0(int e, const Rational& a) {
  if (e < 2) fail(ErrorKind::InvalidArgument, "ramification index must be at least 2");
  if (sgn(a) == 0) fail(ErrorKind::InvalidArgument, "a must be nonzero");
  const FieldId qt = FieldId::rational_functions();
  const Scalar at = Scalar::from_rational(qt, a) * Scalar::variable_t(qt);
  // Tr(s^m) = e (a t)^{m/e} if e | m, else 0.
  Matrix g = zero_matrix(qt, static_cast<std::size_t>(e), static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) {
    for (int k = 0; k < e; ++k) {
      const int m = i + k;
      if (m % e == 0) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = Scalar::from_int(qt, e) * at.pow(m / e);
    }
  }
  return diagonalize(g).form;
}

GWClass trace_form_closed(int e, const Rational& a) {
  const FieldId qt = FieldId::rational_functions();
  const Scalar es = Scalar::from_int(qt, e);
  GWClass q = GWClass::rank_one(es);
  if (e % 2 == 1) {
    q.add_hyperbolic((e - 1) / 2);
  } else {
    q.add(es * Scalar::from_rational(qt, a) * Scalar::variable_t(qt), 1);
    q.add_hyperbolic((e - 2) / 2);
  }
  return q;
}

Dim0Result delta_dim0(int e, const Rational& a) {
  Dim0Result r;
  r.trace = trace_form_dim0(e, a);
  const FieldId q = FieldId::rationals();
  const GWClass one = GWClass::rank_one(Scalar::one(q));
  r.lhs = specialize(r.trace) - one;
  const Scalar es = Scalar::from_int(q, e);
  GWClass euler(q);
  if (e % 2 == 1) {
    euler.add_hyperbolic((e - 1) / 2);
  } else {
    euler.add(es * Scalar::from_rational(q, a), 1);
    euler.add_hyperbolic((e - 2) / 2);
  }
  r.rhs = GWClass::rank_one(es) - one + euler;
  r.cert = gw_equal(r.lhs, r.rhs);
  return r;
}

std::string dim0_json(int e, const Rational& a, const Dim0Result& r) {
  nlohmann::ordered_json out;
  out["e"] = e;
  out["a"] = a.get_str();
  out["trace"] = nlohmann::ordered_json::parse(gw_to_json(r.trace));
  out["lhs"] = nlohmann::ordered_json::parse(gw_to_json(r.lhs));
  out["rhs"] = nlohmann::ordered_json::parse(gw_to_json(r.rhs));
  out["certificate"] = cert_json(r.cert);
  out["equal"] = r.cert.equal;
  return out.dump();
}

TensorCheck tensor_decomposition_check(const Poly& f) {
  TensorCheck out;
  const JacobianRing jt(cone_generic_fiber(f));
  if (!jt.is_finite_dimensional()) fail(ErrorKind::NotSmoothGenericFiber, "generic fiber is singular");
  out.generic = specialize(jacobian_form_full(jt));
  const JacobianRing jf(f);
  const FieldId field = jf.field();
  const int e = jf.degree();
  GWClass core(field);
  if (e % 2 == 0) core = jacobian_form_full(jf).scaled(Scalar::from_int(field, -e));
  const long diff = out.generic.rank() - core.rank();
  if (diff % 2 != 0) fail(ErrorKind::Internal, "rank difference is odd");
  out.l = diff / 2;
  out.predicted = core + GWClass::hyperbolic(field, out.l);
  out.cert = gw_equal(out.generic, out.predicted);
  return out;
}

}  // namespace qe
