#include "poly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "error.hpp"

namespace qe {

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] + other.exp[i]);
  return r;
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] < other.exp[i]) return false;
  }
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.exp) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

// --- WeightedRing -----------------------------------------------------------

WeightedRing::WeightedRing(FieldId field, std::vector<std::string> names, std::vector<int> weights)
    : field_(field), names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.empty()) fail(ErrorKind::InvalidArgument, "a polynomial ring needs at least one variable");
  if (static_cast<int>(names_.size()) > kMaxVars) {
    fail(ErrorKind::InvalidArgument, "at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  if (weights_.size() != names_.size()) {
    fail(ErrorKind::WeightsInvalid, "expected " + std::to_string(names_.size()) + " weights, got " + std::to_string(weights_.size()));
  }
  for (int w : weights_) {
    if (w < 1) fail(ErrorKind::WeightsInvalid, "weights must be positive integers");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == "t") fail(ErrorKind::InvalidArgument, "'t' is reserved for the function field variable");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) fail(ErrorKind::InvalidArgument, "duplicate variable name '" + names_[i] + "'");
    }
  }
}

int WeightedRing::weight_sum() const { return std::accumulate(weights_.begin(), weights_.end(), 0); }

bool WeightedRing::unweighted() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

std::optional<int> WeightedRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

int WeightedRing::degree(const Monomial& m) const {
  int d = 0;
  for (int i = 0; i < num_vars(); ++i) d += weight(i) * m[i];
  return d;
}

RingPtr WeightedRing::with_field(FieldId field) const {
  return make_ring(field, names_, weights_);
}

RingPtr WeightedRing::with_weights(std::vector<int> weights) const {
  return make_ring(field_, names_, std::move(weights));
}

RingPtr make_ring(FieldId field, std::vector<std::string> names, std::vector<int> weights) {
  return std::make_shared<const WeightedRing>(field, std::move(names), std::move(weights));
}

std::vector<Monomial> monomials_of_degree(const WeightedRing& ring, int m) {
  std::vector<Monomial> out;
  if (m < 0) return out;
  const int n = ring.num_vars();
  Monomial cur;
  const std::function<void(int, int)> rec = [&](int var, int remaining) {
    const int w = ring.weight(var);
    if (var == n - 1) {
      if (remaining % w == 0) {
        cur[var] = static_cast<std::uint16_t>(remaining / w);
        out.push_back(cur);
      }
      return;
    }
    for (int e = remaining / w; e >= 0; --e) {
      cur[var] = static_cast<std::uint16_t>(e);
      rec(var + 1, remaining - e * w);
    }
    cur[var] = 0;
  };
  rec(0, m);
  return out;
}

// --- Poly -------------------------------------------------------------------

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {}

Poly::Poly(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

Poly Poly::constant(RingPtr ring, const Scalar& c) {
  Poly p(std::move(ring));
  p.add_term(Monomial{}, c);
  return p;
}

Poly Poly::variable(RingPtr ring, int index) {
  Monomial m;
  m[index] = 1;
  const FieldId f = ring->field();
  return monomial(std::move(ring), m, Scalar::one(f));
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
  Poly p(std::move(ring));
  p.add_term(m, c);
  return p;
}

Scalar Poly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field()) : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

namespace {
void require_same_ring(const Poly& a, const Poly& b) {
  if (a.ring_ptr() != b.ring_ptr() && !(a.ring() == b.ring())) {
    fail(ErrorKind::MixedFields, "polynomials belong to different rings");
  }
}
}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  Poly r(a.ring_);
  for (const auto& [m1, c1] : a.terms_) {
    for (const auto& [m2, c2] : b.terms_) r.add_term(m1 * m2, c1 * c2);
  }
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
  return r;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(ring_, Scalar::one(field()));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.ring() == b.ring() && a.terms_.size() == b.terms_.size() &&
         std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

std::vector<std::pair<Monomial, Scalar>> Poly::sorted_terms() const {
  std::vector<std::pair<Monomial, Scalar>> out(terms_.begin(), terms_.end());
  std::stable_sort(out.begin(), out.end(), [this](const auto& x, const auto& y) {
    return ring_->degree(x.first) > ring_->degree(y.first);
  });
  return out;
}

std::string monomial_to_string(const WeightedRing& ring, const Monomial& m) {
  std::string out;
  for (int i = 0; i < ring.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.names()[static_cast<std::size_t>(i)];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

struct CoefText {
  bool negative = false;
  std::string magnitude;
};

CoefText coefficient_text(const Scalar& c) {
  const FieldId f = c.field();
  if (f.kind == FieldId::Kind::Rationals) {
    const bool neg = sgn(c.rational()) < 0;
    return {neg, neg ? Rational(-c.rational()).get_str() : c.rational().get_str()};
  }
  if (f.kind == FieldId::Kind::PrimeField) return {false, c.to_string()};
  const RatFunc& r = c.ratfunc();
  const bool monic_den = r.den.size() == 1;
  std::size_t nonzero = 0;
  for (const auto& x : r.num) nonzero += x.is_zero() ? 0 : 1;
  if (monic_den && nonzero == 1) {
    const Scalar& lead = r.num.back();
    if (lead.field().kind == FieldId::Kind::Rationals && sgn(lead.rational()) < 0) {
      return {true, (-c).to_string()};
    }
    return {false, c.to_string()};
  }
  return {false, "(" + c.to_string() + ")"};
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : sorted_terms()) {
    const CoefText ct = coefficient_text(c);
    const std::string mono = monomial_to_string(*ring_, m);
    std::string term;
    if (mono == "1") term = ct.magnitude;
    else if (ct.magnitude == "1") term = mono;
    else term = ct.magnitude + "*" + mono;
    if (out.empty()) out = ct.negative ? "-" + term : term;
    else out += (ct.negative ? " - " : " + ") + term;
  }
  return out;
}

// --- operations -------------------------------------------------------------

Poly partial_derivative(const Poly& f, int i) {
  if (i < 0 || i >= f.ring().num_vars()) fail(ErrorKind::InvalidArgument, "variable index out of range");
  Poly r(f.ring_ptr());
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] = static_cast<std::uint16_t>(d[i] - 1);
    r.add_term(d, c * Scalar::from_int(f.field(), m[i]));
  }
  return r;
}

int weighted_degree(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "the zero polynomial has no degree");
  const int d = f.ring().degree(f.terms().begin()->first);
  for (const auto& [m, c] : f.terms()) {
    if (f.ring().degree(m) != d) fail(ErrorKind::NotHomogeneous, "polynomial is not weighted-homogeneous: " + f.to_string());
  }
  return d;
}

bool is_homogeneous(const Poly& f) {
  if (f.is_zero()) return true;
  const int d = f.ring().degree(f.terms().begin()->first);
  return std::all_of(f.terms().begin(), f.terms().end(), [&](const auto& kv) { return f.ring().degree(kv.first) == d; });
}

Poly substitute_powers(const Poly& f) {
  const auto& ring = f.ring();
  RingPtr flat = ring.with_weights(std::vector<int>(static_cast<std::size_t>(ring.num_vars()), 1));
  Poly r(flat);
  for (const auto& [m, c] : f.terms()) {
    Monomial s;
    for (int i = 0; i < ring.num_vars(); ++i) {
      const int e = m[i] * ring.weight(i);
      if (e > 0xFFFF) fail(ErrorKind::InvalidArgument, "exponent overflow in power substitution");
      s[i] = static_cast<std::uint16_t>(e);
    }
    r.add_term(s, c);
  }
  return r;
}

Poly poly_determinant(const std::vector<std::vector<Poly>>& m, const RingPtr& ring) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Poly::constant(ring, Scalar::one(ring->field()));
  if (n > 16) fail(ErrorKind::InvalidArgument, "determinant too large");
  // minors[mask]: determinant of rows 0..popcount(mask)-1, columns in mask.
  std::vector<std::optional<Poly>> minors(std::size_t{1} << n);
  minors[0] = Poly::constant(ring, Scalar::one(ring->field()));
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    const int k = std::popcount(mask);
    const int row = k - 1;
    Poly acc(ring);
    int j = 0;
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1U << c))) continue;
      const Poly& entry = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
      const Poly& sub = *minors[mask & ~(1U << c)];
      if (!entry.is_zero() && !sub.is_zero()) {
        Poly term = entry * sub;
        acc = ((row + j) % 2 == 0) ? acc + term : acc - term;
      }
      ++j;
    }
    minors[mask] = std::move(acc);
  }
  return *minors[(1U << n) - 1];
}

Poly hessian_det(const Poly& f) {
  const int n = f.ring().num_vars();
  std::vector<Poly> first;
  for (int i = 0; i < n; ++i) first.push_back(partial_derivative(f, i));
  std::vector<std::vector<Poly>> h(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) h[static_cast<std::size_t>(i)].push_back(partial_derivative(first[static_cast<std::size_t>(i)], j));
  }
  return poly_determinant(h, f.ring_ptr());
}

Poly euler_defect(const Poly& f) {
  if (f.is_zero()) return f;
  const int d = f.ring().degree(f.sorted_terms().front().first);
  Poly r = f.scaled(Scalar::from_int(f.field(), d));
  for (int i = 0; i < f.ring().num_vars(); ++i) {
    Poly xi = Poly::variable(f.ring_ptr(), i);
    r = r - (xi * partial_derivative(f, i)).scaled(Scalar::from_int(f.field(), f.ring().weight(i)));
  }
  return r;
}

Scalar convert_scalar(const Scalar& c, FieldId field) {
  const FieldId from = c.field();
  if (from == field) return c;
  if (from.kind == FieldId::Kind::Rationals) return Scalar::from_rational(field, c.rational());
  if (from.kind == FieldId::Kind::PrimeField && field.is_function_field() && field.p == from.p) {
    if (c.is_zero()) return Scalar::zero(field);
    return make_ratfunc(field.base(), UPoly{c}, UPoly{Scalar::one(field.base())});
  }
  fail(ErrorKind::MixedFields, "cannot map an element of " + from.name() + " into " + field.name());
}

Poly change_field(const Poly& f, FieldId field) {
  Poly r(f.ring().with_field(field));
  for (const auto& [m, c] : f.terms()) r.add_term(m, convert_scalar(c, field));
  return r;
}

}  // namespace qe
