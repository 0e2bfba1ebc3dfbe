// Command-line frontend. Talks to the library only through the C API.

#include <quadeuler/quadeuler.h>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using json = nlohmann::ordered_json;

struct Failure {
  qe_status status;
};

void check(qe_status st) {
  if (st != QE_OK) throw Failure{st};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  qe_string_free(s);
  return out;
}

struct PolyDeleter {
  void operator()(qe_poly* p) const { qe_poly_destroy(p); }
};
struct GWDeleter {
  void operator()(qe_gwclass* q) const { qe_gw_destroy(q); }
};
using PolyPtr = std::unique_ptr<qe_poly, PolyDeleter>;
using GWPtr = std::unique_ptr<qe_gwclass, GWDeleter>;

struct PolyOpts {
  std::string field = "Q";
  std::string vars;
  std::string weights;
  std::string poly;
};

void add_poly_opts(CLI::App* cmd, PolyOpts& o, bool required = true) {
  cmd->add_option("--field", o.field, "Q, Fp:<p>, Qt or Fpt:<p>")->capture_default_str();
  auto* v = cmd->add_option("--vars", o.vars, "comma-separated variable names");
  cmd->add_option("--weights", o.weights, "comma-separated weights (default all 1)");
  auto* p = cmd->add_option("--poly", o.poly, "polynomial expression");
  if (required) {
    v->required();
    p->required();
  }
}

PolyPtr load_poly(const PolyOpts& o) {
  qe_poly* p = nullptr;
  check(qe_poly_parse(o.field.c_str(), o.vars.c_str(), o.weights.c_str(), o.poly.c_str(), &p));
  return PolyPtr(p);
}

std::vector<int> parse_degree_set(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    const auto a = item.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item.substr(a), &used));
      if (item.find_first_not_of(" \t", a + used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--degree-set", "not an integer list: " + s);
    }
  }
  return out;
}

// A class given either as GW JSON or as an entry list.
GWPtr load_class(const std::string& field, const std::string& src) {
  qe_gwclass* q = nullptr;
  const auto a = src.find_first_not_of(" \t\n");
  if (a != std::string::npos && src[a] == '{') {
    check(qe_gw_from_json(src.c_str(), &q));
  } else {
    check(qe_gw_from_entries(field.c_str(), src.c_str(), &q));
  }
  return GWPtr(q);
}

std::string class_json(const qe_gwclass* q) {
  char* s = nullptr;
  check(qe_gw_to_json(q, &s));
  return take(s);
}

std::string class_text(const qe_gwclass* q) {
  char* s = nullptr;
  check(qe_gw_to_string(q, &s));
  return take(s);
}

std::string join(const json& arr) {
  std::string out;
  for (const auto& x : arr) {
    if (!out.empty()) out += ", ";
    out += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return out;
}

void print_checks(const json& cert, const char* label) {
  std::cout << label << ": " << (cert.at("equal").get<bool>() ? "equal" : "NOT equal") << "\n";
  for (const auto& c : cert.at("checks")) {
    std::cout << "  " << (c.at("ok").get<bool>() ? "ok  " : "FAIL") << " " << c.at("name").get<std::string>() << ": "
              << c.at("lhs").get<std::string>() << " | " << c.at("rhs").get<std::string>() << "\n";
  }
}

void print_conductor_text(const json& r) {
  std::cout << "F = " << r.at("poly").get<std::string>() << " over " << r.at("field").get<std::string>() << "  (n = " << r.at("n")
            << ", e = " << r.at("degree") << ", weights " << join(r.at("weights")) << ")\n";
  std::cout << "lhs = " << r.at("lhs").at("text").get<std::string>() << "\n";
  std::cout << "rhs = " << r.at("rhs").at("text").get<std::string>() << "\n";
  std::cout << "rank = " << r.at("rank") << ", (-1)^n dim J(F) = " << r.at("expected_rank")
            << (r.at("rank_identity").get<bool>() ? " (holds)" : " (FAILS)") << "\n";
  print_checks(r.at("forward"), "lhs vs rhs");
  print_checks(r.at("backward"), "rhs vs lhs");
  if (r.at("partial_evidence").get<bool>()) std::cout << "note: finite base field, rank and discriminant only\n";
  for (const auto& w : r.at("warnings")) std::cout << "warning: " << w.get<std::string>() << "\n";
  std::cout << "equal = " << (r.at("equal").get<bool>() ? "true" : "false") << "\n";
}

// Timing fields would make output differ run to run.
json strip_timing(json r, bool keep) {
  if (!keep && r.is_object()) r.erase("timing_ms");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadeuler: quadratic Euler characteristics and conductor formulas"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qe_version()));

  bool as_json = false;
  PolyOpts po;
  std::string strategy = "lowest";
  std::string degree_set;
  std::string form = "full";

  auto* jac = app.add_subcommand("jacobian", "Hilbert function, socle and Scheja-Storch element of J(F)");
  add_poly_opts(jac, po);
  jac->add_option("--strategy", strategy, "splitting strategy")->check(CLI::IsMember({"lowest", "highest", "hessian"}))->capture_default_str();
  jac->add_flag("--json", as_json, "JSON output");

  auto* gram = app.add_subcommand("gram", "Gram matrix of the Jacobian pairing on monomial bases");
  add_poly_opts(gram, po);
  gram->add_option("--degree-set", degree_set, "comma-separated degrees (default all)");
  gram->add_flag("--json", as_json, "JSON output");

  auto* gwform = app.add_subcommand("gwform", "class of the Jacobian pairing");
  add_poly_opts(gwform, po);
  gwform->add_option("--form", form, "full or primitive")->check(CLI::IsMember({"full", "primitive"}))->capture_default_str();
  gwform->add_option("--degree-set", degree_set, "restrict to these degrees (overrides --form)");
  gwform->add_flag("--json", as_json, "JSON output");

  bool report = false;
  auto* chi = app.add_subcommand("chi", "quadratic Euler characteristic of a smooth hypersurface");
  add_poly_opts(chi, po);
  chi->add_flag("--json", as_json, "JSON output");
  chi->add_flag("--report", report, "include graded dimensions and warnings");

  auto* chic = app.add_subcommand("chi-c-cone", "compactly supported chi of the affine cone");
  add_poly_opts(chic, po);
  chic->add_flag("--json", as_json, "JSON output");
  chic->add_flag("--report", report, "include graded dimensions and warnings");

  std::string corpus;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  bool timing = false;
  auto* cond = app.add_subcommand("conductor", "conductor formula for the cone degeneration F - t X^e");
  add_poly_opts(cond, po, false);
  cond->add_option("--corpus", corpus, "JSON-lines file of families {field, vars, weights, poly}");
  cond->add_option("--threads", threads, "worker threads for --corpus")->capture_default_str();
  cond->add_flag("--timing", timing, "include timings in JSON output");
  cond->add_flag("--json", as_json, "JSON output");

  int e = 0;
  std::string a = "1";
  auto* dim0 = app.add_subcommand("trace-dim0", "trace form and conductor identity for s^e = a t");
  dim0->add_option("--e", e, "ramification index")->required();
  dim0->add_option("--a", a, "nonzero rational")->capture_default_str();
  dim0->add_flag("--json", as_json, "JSON output");

  auto* gw = app.add_subcommand("gw", "Grothendieck-Witt utilities");
  gw->require_subcommand(1);
  std::string gfield = "Q";
  std::string matrix, lhs, rhs, entries;

  auto* diag = gw->add_subcommand("diag", "diagonalize a symmetric matrix");
  diag->add_option("--field", gfield)->capture_default_str();
  diag->add_option("--matrix", matrix, "rows separated by ';', entries by ','")->required();
  diag->add_flag("--json", as_json, "JSON output");

  auto* eq = gw->add_subcommand("eq", "decide equality of two classes");
  eq->add_option("--field", gfield)->capture_default_str();
  eq->add_option("--lhs", lhs, "entry list or GW JSON")->required();
  eq->add_option("--rhs", rhs, "entry list or GW JSON")->required();
  eq->add_flag("--json", as_json, "JSON output");

  auto* sp = gw->add_subcommand("sp", "specialize entries at t = 0");
  sp->add_option("--field", gfield)->capture_default_str();
  sp->add_option("--entries", entries, "comma-separated entries over k(t)")->required();
  sp->add_flag("--json", as_json, "JSON output");

  auto* inv = gw->add_subcommand("inv", "invariants of a class");
  inv->add_option("--field", gfield)->capture_default_str();
  inv->add_option("--entries", entries, "entry list or GW JSON")->required();
  inv->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (jac->parsed()) {
      auto f = load_poly(po);
      char* s = nullptr;
      check(qe_jacobian_report(f.get(), strategy.c_str(), &s));
      const json r = json::parse(take(s));
      if (as_json) {
        std::cout << r.dump() << "\n";
      } else {
        std::cout << "F = " << r.at("poly").get<std::string>() << " over " << r.at("field").get<std::string>() << "\n";
        std::cout << "degree " << r.at("degree") << ", socle degree " << r.at("socle_degree") << "\n";
        std::cout << "Hilbert function: " << join(r.at("hilbert_function")) << "\n";
        if (r.at("finite_dimensional").get<bool>()) {
          std::cout << "dim J(F) = " << r.at("dimension") << "\n";
          std::cout << "socle basis: " << r.at("socle_monomial").get<std::string>() << "\n";
          std::cout << "e_F (" << strategy << ") = " << r.at("e_F_poly").get<std::string>() << "\n";
        } else {
          std::cout << "J(F) is not finite-dimensional\n";
        }
      }
    } else if (gram->parsed()) {
      auto f = load_poly(po);
      const auto degs = parse_degree_set(degree_set);
      char* s = nullptr;
      check(qe_gram(f.get(), degs.data(), degs.size(), &s));
      const json r = json::parse(take(s));
      if (as_json) {
        std::cout << r.dump() << "\n";
      } else {
        std::cout << "degrees: " << join(r.at("degrees")) << "\n";
        std::cout << "basis: " << join(r.at("basis")) << "\n";
        for (const auto& row : r.at("gram")) std::cout << "  [" << join(row) << "]\n";
      }
    } else if (gwform->parsed()) {
      auto f = load_poly(po);
      qe_gwclass* q = nullptr;
      if (!degree_set.empty()) {
        const auto degs = parse_degree_set(degree_set);
        check(qe_jacobian_form(f.get(), QE_FORM_DEGREES, degs.data(), degs.size(), &q));
      } else {
        check(qe_jacobian_form(f.get(), form == "primitive" ? QE_FORM_PRIMITIVE : QE_FORM_FULL, nullptr, 0, &q));
      }
      GWPtr cls(q);
      std::cout << (as_json ? class_json(cls.get()) : class_text(cls.get())) << "\n";
    } else if (chi->parsed() || chic->parsed()) {
      auto f = load_poly(po);
      qe_gwclass* q = nullptr;
      char* s = nullptr;
      check(chi->parsed() ? qe_chi(f.get(), &q, &s) : qe_chi_c_cone(f.get(), &q, &s));
      GWPtr cls(q);
      const json r = json::parse(take(s));
      if (as_json) {
        std::cout << (report ? r.dump() : class_json(cls.get())) << "\n";
      } else {
        std::cout << class_text(cls.get()) << "\n";
        long rank = 0;
        check(qe_gw_rank(cls.get(), &rank));
        if (report) {
          std::cout << "rank " << rank << ", dim " << r.at("dim") << ", Hodge rank oracle " << r.at("hodge_rank_oracle") << "\n";
          for (const auto& p : r.at("primitive")) std::cout << "  dim J_" << p.at("degree") << " = " << p.at("dim") << "\n";
        }
        for (const auto& w : r.at("warnings")) std::cout << "warning: " << w.get<std::string>() << "\n";
      }
    } else if (cond->parsed()) {
      if (!corpus.empty()) {
        char* s = nullptr;
        int all = 0;
        check(qe_conductor_corpus(corpus.c_str(), threads, &s, &all));
        std::stringstream in(take(s));
        std::size_t total = 0, passed = 0;
        for (std::string line; std::getline(in, line);) {
          if (line.empty()) continue;
          const json r = json::parse(line);
          ++total;
          const bool ok = r.contains("equal") && r.at("equal").get<bool>();
          passed += ok ? 1 : 0;
          if (as_json) {
            std::cout << strip_timing(r, timing).dump() << "\n";
          } else if (r.contains("error")) {
            std::cout << "ERROR " << r.at("error_kind").get<std::string>() << ": " << r.at("error").get<std::string>() << "\n";
          } else {
            std::cout << (ok ? "equal  " : "UNEQUAL") << " rank " << r.at("rank") << "  " << r.at("poly").get<std::string>() << " (weights "
                      << join(r.at("weights")) << ", " << r.at("field").get<std::string>() << ")\n";
          }
        }
        if (!as_json) std::cout << passed << "/" << total << " families equal\n";
      } else {
        if (po.vars.empty() || po.poly.empty()) throw CLI::ValidationError("conductor", "needs --vars and --poly, or --corpus");
        auto f = load_poly(po);
        char* s = nullptr;
        int equal = 0;
        check(qe_conductor(f.get(), &s, &equal));
        const json r = json::parse(take(s));
        if (as_json) {
          std::cout << strip_timing(r, timing).dump() << "\n";
        } else {
          print_conductor_text(r);
        }
      }
    } else if (dim0->parsed()) {
      qe_gwclass* q = nullptr;
      check(qe_trace_dim0(e, a.c_str(), &q));
      GWPtr trace(q);
      char* s = nullptr;
      int equal = 0;
      check(qe_delta_dim0(e, a.c_str(), &s, &equal));
      const json r = json::parse(take(s));
      if (as_json) {
        std::cout << r.dump() << "\n";
      } else {
        std::cout << "trace form = " << class_text(trace.get()) << "\n";
        std::cout << "lhs = " << r.at("lhs").at("text").get<std::string>() << "\n";
        std::cout << "rhs = " << r.at("rhs").at("text").get<std::string>() << "\n";
        std::cout << "equal = " << (equal ? "true" : "false") << "\n";
      }
    } else if (diag->parsed()) {
      qe_gwclass* q = nullptr;
      char* s = nullptr;
      check(qe_gw_diagonalize(gfield.c_str(), matrix.c_str(), &q, &s));
      GWPtr cls(q);
      const json r = json::parse(take(s));
      if (as_json) {
        std::cout << r.dump() << "\n";
      } else {
        std::cout << "D = diag(" << join(r.at("diagonal")) << ")\n";
        std::cout << "P =\n";
        for (const auto& row : r.at("transform")) std::cout << "  [" << join(row) << "]\n";
        std::cout << "class = " << class_text(cls.get()) << "\n";
      }
    } else if (eq->parsed()) {
      auto x = load_class(gfield, lhs);
      auto y = load_class(gfield, rhs);
      int equal = 0;
      char* s = nullptr;
      check(qe_gw_equal(x.get(), y.get(), &equal, &s));
      const json r = json::parse(take(s));
      if (as_json) {
        std::cout << r.dump() << "\n";
      } else {
        print_checks(r, (class_text(x.get()) + " vs " + class_text(y.get())).c_str());
      }
    } else if (sp->parsed()) {
      char* s = nullptr;
      check(qe_gw_specialize_entries(gfield.c_str(), entries.c_str(), &s));
      const std::string text = take(s);
      if (as_json) {
        json arr = json::array();
        std::stringstream in(text);
        for (std::string item; std::getline(in, item, ',');) arr.push_back(item.substr(item.find_first_not_of(' ')));
        std::cout << arr.dump() << "\n";
      } else {
        std::cout << text << "\n";
      }
    } else if (inv->parsed()) {
      auto q = load_class(gfield, entries);
      char* s = nullptr;
      check(qe_gw_invariants(q.get(), &s));
      const json r = json::parse(take(s));
      if (as_json) {
        std::cout << r.dump() << "\n";
      } else {
        std::cout << "class = " << r.at("class").get<std::string>() << "\n";
        std::cout << "rank = " << r.at("rank") << "\n";
        if (!r.at("signature").is_null()) std::cout << "signature = " << r.at("signature") << "\n";
        if (!r.at("discriminant").is_null()) std::cout << "discriminant = " << r.at("discriminant").get<std::string>() << "\n";
        for (const char* key : {"hasse", "hasse_positive_part", "hasse_negative_part"}) {
          if (!r.contains(key)) continue;
          std::cout << key << ":";
          for (const auto& [p, v] : r.at(key).items()) std::cout << " " << p << ":" << v;
          std::cout << "\n";
        }
      }
    }
  } catch (const Failure& f) {
    std::cerr << "error [" << qe_last_error_kind() << "]: " << qe_last_error() << "\n";
    return static_cast<int>(f.status);
  } catch (const CLI::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 3;
  }
  return 0;
}
