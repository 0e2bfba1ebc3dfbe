#include "quadeuler/quadeuler.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include <json.hpp>

#include "conductor.hpp"
#include "error.hpp"
#include "gw.hpp"
#include "hyper.hpp"
#include "jacobian.hpp"
#include "parse.hpp"

struct qe_poly {
  qe::Poly poly;
};

struct qe_gwclass {
  qe::GWClass q;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_kind;

void clear_error() {
  g_error.clear();
  g_kind.clear();
}

qe_status set_error(qe_status st, std::string kind, std::string msg) {
  g_kind = std::move(kind);
  g_error = std::move(msg);
  return st;
}

qe_status status_of(qe::ErrorKind kind) {
  switch (qe::error_category(kind)) {
    case qe::ErrorCategory::User: return QE_ERR_USER;
    case qe::ErrorCategory::Math: return QE_ERR_MATH;
    case qe::ErrorCategory::Internal: return QE_ERR_INTERNAL;
  }
  return QE_ERR_INTERNAL;
}

template <class Fn>
qe_status guarded(Fn&& fn) {
  clear_error();
  try {
    fn();
    return QE_OK;
  } catch (const qe::Error& e) {
    return set_error(status_of(e.kind()), std::string(qe::error_kind_name(e.kind())), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(QE_ERR_INTERNAL, "OutOfMemory", "out of memory");
  } catch (const std::exception& e) {
    return set_error(QE_ERR_INTERNAL, "Internal", e.what());
  } catch (...) {
    return set_error(QE_ERR_INTERNAL, "Internal", "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) qe::fail(qe::ErrorKind::InvalidArgument, std::string("null argument: ") + what);
}

std::string nonnull(const char* s) { return s ? s : ""; }

qe::SplitStrategy strategy_of(const char* s) {
  const std::string name = s ? s : "lowest";
  if (name == "lowest") return qe::SplitStrategy::LowestVar;
  if (name == "highest") return qe::SplitStrategy::HighestVar;
  if (name == "hessian") return qe::SplitStrategy::Hessian;
  qe::fail(qe::ErrorKind::InvalidArgument, "unknown strategy '" + name + "' (lowest, highest, hessian)");
}

std::vector<int> degree_list(const int* degrees, size_t count) {
  if (count > 0) require(degrees, "degrees");
  return std::vector<int>(degrees, degrees + count);
}

nlohmann::ordered_json row_json(const qe::Row& r) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& s : r) out.push_back(s.to_string());
  return out;
}

nlohmann::ordered_json matrix_json(const qe::Matrix& m) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : m) out.push_back(row_json(r));
  return out;
}

nlohmann::ordered_json cert_json(const qe::EqualityCertificate& c) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& ch : c.checks) checks.push_back({{"name", ch.name}, {"lhs", ch.lhs}, {"rhs", ch.rhs}, {"ok", ch.ok}});
  return {{"equal", c.equal}, {"checks", checks}};
}

qe_gwclass* wrap(qe::GWClass q) { return new qe_gwclass{std::move(q)}; }

}  // namespace

extern "C" {

const char* qe_version(void) { return "1.0.0"; }
const char* qe_last_error(void) { return g_error.c_str(); }
const char* qe_last_error_kind(void) { return g_kind.c_str(); }
void qe_string_free(char* s) { std::free(s); }

qe_status qe_poly_parse(const char* field, const char* vars, const char* weights, const char* src, qe_poly** out) {
  return guarded([&] {
    require(out, "out");
    require(src, "src");
    *out = nullptr;
    const qe::FieldId f = qe::parse_field(nonnull(field));
    auto names = qe::parse_names(nonnull(vars));
    std::vector<int> w = weights && *weights ? qe::parse_ints(weights) : std::vector<int>(names.size(), 1);
    auto ring = qe::make_ring(f, std::move(names), std::move(w));
    *out = new qe_poly{qe::parse_poly(src, ring)};
  });
}

qe_status qe_poly_to_string(const qe_poly* p, char** out) {
  return guarded([&] {
    require(p, "poly");
    require(out, "out");
    *out = dup_string(p->poly.to_string());
  });
}

void qe_poly_destroy(qe_poly* p) { delete p; }

qe_status qe_jacobian_report(const qe_poly* f, const char* strategy, char** json_out) {
  return guarded([&] {
    require(f, "poly");
    require(json_out, "json_out");
    const qe::SplitStrategy st = strategy_of(strategy);
    const qe::JacobianRing j(f->poly);
    auto out = nlohmann::ordered_json::parse(qe::jacobian_json(j));
    if (j.is_finite_dimensional()) {
      out["strategy"] = strategy ? strategy : "lowest";
      out["e_F"] = row_json(qe::scheja_storch(j, st));
      out["e_F_poly"] = j.lift(qe::scheja_storch(j, st), j.socle_degree()).to_string();
    }
    *json_out = dup_string(out.dump());
  });
}

qe_status qe_gram(const qe_poly* f, const int* degrees, size_t count, char** json_out) {
  return guarded([&] {
    require(f, "poly");
    require(json_out, "json_out");
    const qe::JacobianRing j(f->poly);
    if (!j.is_finite_dimensional()) qe::fail(qe::ErrorKind::NotFiniteDimensional, "J(F) is infinite-dimensional");
    std::vector<int> degs = degree_list(degrees, count);
    if (degs.empty()) {
      for (int m = 0; m <= j.socle_degree(); ++m) degs.push_back(m);
    }
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (int m : degs) {
      for (const auto& mono : j.piece(m).basis) basis.push_back(qe::monomial_to_string(j.ring(), mono));
    }
    nlohmann::ordered_json out;
    out["degrees"] = degs;
    out["basis"] = basis;
    out["gram"] = matrix_json(qe::gram_matrix(j, degs));
    *json_out = dup_string(out.dump());
  });
}

qe_status qe_jacobian_form(const qe_poly* f, qe_form_kind kind, const int* degrees, size_t count, qe_gwclass** out) {
  return guarded([&] {
    require(f, "poly");
    require(out, "out");
    *out = nullptr;
    const qe::JacobianRing j(f->poly);
    if (!j.is_finite_dimensional()) qe::fail(qe::ErrorKind::NotFiniteDimensional, "J(F) is infinite-dimensional");
    switch (kind) {
      case QE_FORM_FULL: *out = wrap(qe::jacobian_form_full(j)); break;
      case QE_FORM_PRIMITIVE: *out = wrap(qe::jacobian_form_primitive(j, j.ring().num_vars() - 2)); break;
      case QE_FORM_DEGREES: *out = wrap(qe::jacobian_form(j, degree_list(degrees, count))); break;
      default: qe::fail(qe::ErrorKind::InvalidArgument, "unknown form kind");
    }
  });
}

qe_status qe_chi(const qe_poly* f, qe_gwclass** out, char** report_json) {
  return guarded([&] {
    require(f, "poly");
    require(out, "out");
    *out = nullptr;
    const auto h = qe::make_hypersurface(f->poly);
    qe::GWClass chi = qe::chi_smooth(h);
    if (report_json) *report_json = dup_string(qe::chi_report_json(h, chi, false));
    *out = wrap(std::move(chi));
  });
}

qe_status qe_chi_c_cone(const qe_poly* f, qe_gwclass** out, char** report_json) {
  return guarded([&] {
    require(f, "poly");
    require(out, "out");
    *out = nullptr;
    const auto h = qe::make_hypersurface(f->poly);
    qe::GWClass chi = qe::chi_c_cone(h);
    if (report_json) *report_json = dup_string(qe::chi_report_json(h, chi, true));
    *out = wrap(std::move(chi));
  });
}

qe_status qe_conductor(const qe_poly* f, char** json_out, int* equal) {
  return guarded([&] {
    require(f, "poly");
    const auto r = qe::conductor_check(f->poly);
    if (equal) *equal = r.equal ? 1 : 0;
    if (json_out) *json_out = dup_string(qe::conductor_json(r));
  });
}

qe_status qe_conductor_corpus(const char* path, unsigned threads, char** jsonl_out, int* all_equal) {
  return guarded([&] {
    require(path, "path");
    const auto outcomes = qe::run_corpus(path, threads);
    bool ok = !outcomes.empty();
    std::string text;
    for (const auto& o : outcomes) {
      ok = ok && o.report && o.report->equal;
      text += qe::corpus_outcome_json(o);
      text += '\n';
    }
    if (all_equal) *all_equal = ok ? 1 : 0;
    if (jsonl_out) *jsonl_out = dup_string(text);
  });
}

qe_status qe_trace_dim0(int e, const char* a, qe_gwclass** out) {
  return guarded([&] {
    require(a, "a");
    require(out, "out");
    *out = nullptr;
    const qe::Scalar s = qe::parse_scalar(a, qe::FieldId::rationals());
    *out = wrap(qe::trace_form_dim0(e, s.rational()));
  });
}

qe_status qe_delta_dim0(int e, const char* a, char** json_out, int* equal) {
  return guarded([&] {
    require(a, "a");
    const qe::Rational q = qe::parse_scalar(a, qe::FieldId::rationals()).rational();
    const auto r = qe::delta_dim0(e, q);
    if (equal) *equal = r.cert.equal ? 1 : 0;
    if (json_out) *json_out = dup_string(qe::dim0_json(e, q, r));
  });
}

qe_status qe_gw_from_entries(const char* field, const char* entries, qe_gwclass** out) {
  return guarded([&] {
    require(entries, "entries");
    require(out, "out");
    *out = nullptr;
    *out = wrap(qe::gw_from_entries(entries, qe::parse_field(nonnull(field))));
  });
}

qe_status qe_gw_from_json(const char* json, qe_gwclass** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = nullptr;
    *out = wrap(qe::gw_from_json(json));
  });
}

qe_status qe_gw_diagonalize(const char* field, const char* matrix, qe_gwclass** out, char** transform_json) {
  return guarded([&] {
    require(matrix, "matrix");
    require(out, "out");
    *out = nullptr;
    const qe::Matrix g = qe::parse_matrix(matrix, qe::parse_field(nonnull(field)));
    auto d = qe::diagonalize(g);
    if (transform_json) {
      nlohmann::ordered_json j;
      j["transform"] = matrix_json(d.transform);
      j["diagonal"] = row_json(d.diagonal);
      j["form"] = nlohmann::ordered_json::parse(qe::gw_to_json(d.form));
      *transform_json = dup_string(j.dump());
    }
    *out = wrap(std::move(d.form));
  });
}

qe_status qe_gw_equal(const qe_gwclass* a, const qe_gwclass* b, int* equal, char** certificate_json) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    const auto c = qe::gw_equal(a->q, b->q);
    if (equal) *equal = c.equal ? 1 : 0;
    if (certificate_json) *certificate_json = dup_string(cert_json(c).dump());
  });
}

qe_status qe_gw_add(const qe_gwclass* a, const qe_gwclass* b, qe_gwclass** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = wrap(a->q + b->q);
  });
}

qe_status qe_gw_sub(const qe_gwclass* a, const qe_gwclass* b, qe_gwclass** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = wrap(a->q - b->q);
  });
}

qe_status qe_gw_specialize(const qe_gwclass* q, qe_gwclass** out) {
  return guarded([&] {
    require(q, "q");
    require(out, "out");
    *out = wrap(qe::specialize(q->q));
  });
}

qe_status qe_gw_specialize_entries(const char* field, const char* entries, char** out) {
  return guarded([&] {
    require(entries, "entries");
    require(out, "out");
    const qe::FieldId f = qe::parse_field(nonnull(field));
    std::vector<qe::Scalar> xs;
    for (const auto& item : qe::split_list(entries)) xs.push_back(qe::parse_scalar(item, f));
    std::string text;
    for (const auto& s : qe::specialize_entries(xs)) {
      if (!text.empty()) text += ", ";
      text += s.to_string();
    }
    *out = dup_string(text);
  });
}

qe_status qe_gw_to_json(const qe_gwclass* q, char** out) {
  return guarded([&] {
    require(q, "q");
    require(out, "out");
    *out = dup_string(qe::gw_to_json(q->q));
  });
}

qe_status qe_gw_to_string(const qe_gwclass* q, char** out) {
  return guarded([&] {
    require(q, "q");
    require(out, "out");
    *out = dup_string(q->q.to_string());
  });
}

qe_status qe_gw_invariants(const qe_gwclass* q, char** json_out) {
  return guarded([&] {
    require(q, "q");
    require(json_out, "json_out");
    const auto inv = qe::invariants(q->q);
    const auto hasse = [](const qe::HasseData& h) {
      nlohmann::ordered_json o = nlohmann::ordered_json::object();
      for (const auto& [p, s] : h.at) o[p.get_str()] = s;
      return o;
    };
    nlohmann::ordered_json j;
    j["field"] = q->q.field().name();
    j["class"] = q->q.to_string();
    j["rank"] = inv.rank;
    j["signature"] = inv.signature ? nlohmann::ordered_json(*inv.signature) : nlohmann::ordered_json();
    j["discriminant"] = inv.disc ? nlohmann::ordered_json(inv.disc->to_string()) : nlohmann::ordered_json();
    if (inv.hasse) j["hasse"] = hasse(*inv.hasse);
    if (inv.hasse_pos) j["hasse_positive_part"] = hasse(*inv.hasse_pos);
    if (inv.hasse_neg) j["hasse_negative_part"] = hasse(*inv.hasse_neg);
    *json_out = dup_string(j.dump());
  });
}

qe_status qe_gw_rank(const qe_gwclass* q, long* out) {
  return guarded([&] {
    require(q, "q");
    require(out, "out");
    *out = q->q.rank();
  });
}

void qe_gw_destroy(qe_gwclass* q) { delete q; }

}  // extern "C"
