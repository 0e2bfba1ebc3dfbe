#pragma once

// Conductor identities for cone degenerations F - t X^e and for the totally
// ramified extensions s^e = a t in relative dimension 0.

#include <optional>
#include <string>
#include <vector>

#include "gw.hpp"
#include "hyper.hpp"

namespace qe {

// F_t = F - t * X_{n+1}^e over k(t), the new coordinate of weight 1.
Poly cone_generic_fiber(const Poly& f);

// sp_t chi(X_t) - chi_c(cone over {F = 0}).
GWClass delta_lhs(const Poly& f);
// <e prod a> - <1> + (-<e>)^n q_{J(F)} with q the full form on J(F).
GWClass delta_rhs(const Poly& f);

struct ConductorReport {
  std::string field;
  std::vector<std::string> vars;
  std::vector<int> weights;
  std::string poly;
  int n = 0;
  int e = 0;
  GWClass lhs;
  GWClass rhs;
  EqualityCertificate forward;   // lhs vs rhs
  EqualityCertificate backward;  // rhs vs lhs
  long milnor = 0;               // dim J(F)
  long expected_rank = 0;        // (-1)^n dim J(F)
  bool rank_identity = false;
  bool equal = false;
  bool partial_evidence = false;  // F_p base: rank and discriminant only
  double lhs_ms = 0;
  double rhs_ms = 0;
  std::vector<std::string> warnings;
};

ConductorReport conductor_check(const Poly& f);
std::string conductor_json(const ConductorReport& r);

struct CorpusOutcome {
  std::optional<ConductorReport> report;
  std::string error_kind;
  std::string error;
  std::string source;  // the input line
};
// One JSON object per line: {"field", "vars", "weights", "poly"}.
std::vector<CorpusOutcome> run_corpus(const std::string& path, unsigned threads);
std::string corpus_outcome_json(const CorpusOutcome& c);

// Reads a corpus line into a polynomial.
Poly corpus_poly(const std::string& json_line);

// Relative dimension 0: K[s]/(s^e - a t) over K = k(t).
GWClass trace_form_dim0(int e, const Rational& a);
// <e> + ((e-1)/2) H (e odd), <e> + <e a t> + ((e-2)/2) H (e even), over Q(t).
GWClass trace_form_closed(int e, const Rational& a);

struct Dim0Result {
  GWClass trace;
  GWClass lhs;
  GWClass rhs;
  EqualityCertificate cert;
};
Dim0Result delta_dim0(int e, const Rational& a);
std::string dim0_json(int e, const Rational& a, const Dim0Result& r);

struct TensorCheck {
  GWClass generic;    // sp_t of the full form on J(F_t)
  GWClass predicted;  // <-e> q_{J(F)} + L H (e even), L H (e odd)
  long l = 0;
  EqualityCertificate cert;
};
TensorCheck tensor_decomposition_check(const Poly& f);

}  // namespace qe
