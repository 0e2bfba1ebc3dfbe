#include "gw.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include <json.hpp>

#include "error.hpp"
#include "parse.hpp"

namespace qe {

namespace {

void require_same_field(FieldId a, FieldId b) {
  if (!(a == b)) fail(ErrorKind::MixedFields, "GW classes over " + a.name() + " and " + b.name());
}

long mod2(long x) { return ((x % 2) + 2) % 2; }

// Genuine parts of a virtual class: q = P - N.
std::pair<GWClass, GWClass> split_parts(const GWClass& q) {
  GWClass pos(q.field());
  GWClass neg(q.field());
  for (const auto& [u, m] : q.entries()) {
    if (m > 0) pos.add(u, m);
    else neg.add(u, -m);
  }
  if (q.hyperbolic_count() > 0) pos.add_hyperbolic(q.hyperbolic_count());
  else neg.add_hyperbolic(-q.hyperbolic_count());
  return {pos, neg};
}

}  // namespace

GWClass GWClass::rank_one(const Scalar& u) {
  GWClass q(u.field());
  q.add(u, 1);
  return q;
}

GWClass GWClass::hyperbolic(FieldId field, long count) {
  GWClass q(field);
  q.hyperbolic_ = count;
  return q;
}

long GWClass::rank() const {
  long r = 2 * hyperbolic_;
  for (const auto& [u, m] : entries_) r += m;
  return r;
}

bool GWClass::is_virtual() const {
  return hyperbolic_ < 0 || std::any_of(entries_.begin(), entries_.end(), [](const auto& kv) { return kv.second < 0; });
}

void GWClass::add(const Scalar& u, long mult) {
  if (u.is_zero()) fail(ErrorKind::ZeroEntry, "a rank-one form needs a nonzero entry");
  require_same_field(field_, u.field());
  if (mult == 0) return;
  const Scalar key = square_class(u);
  entries_[key] += mult;
  fold(key);
}

void GWClass::fold(const Scalar& key) {
  auto it = entries_.find(key);
  if (it == entries_.end()) return;
  if (it->second == 0) {
    entries_.erase(it);
    return;
  }
  const Scalar neg = square_class(-key);
  if (neg == key) {
    // <u> + <u> = <u> + <-u> = H when -1 is a square.
    const long k = it->second / 2;
    hyperbolic_ += k;
    it->second -= 2 * k;
    if (it->second == 0) entries_.erase(it);
    return;
  }
  auto jt = entries_.find(neg);
  if (jt == entries_.end()) return;
  const long m = it->second;
  const long m2 = jt->second;
  if ((m > 0) != (m2 > 0)) return;
  const long k = m > 0 ? std::min(m, m2) : std::max(m, m2);
  hyperbolic_ += k;
  it->second -= k;
  jt->second -= k;
  if (it->second == 0) entries_.erase(it);
  if (jt->second == 0) entries_.erase(jt);
}

GWClass GWClass::operator-() const {
  GWClass r(field_);
  for (const auto& [u, m] : entries_) r.entries_.emplace(u, -m);
  r.hyperbolic_ = -hyperbolic_;
  return r;
}

GWClass operator+(const GWClass& a, const GWClass& b) {
  require_same_field(a.field_, b.field_);
  GWClass r = a;
  for (const auto& [u, m] : b.entries_) r.add(u, m);
  r.hyperbolic_ += b.hyperbolic_;
  return r;
}

GWClass operator-(const GWClass& a, const GWClass& b) { return a + (-b); }

GWClass operator*(const GWClass& a, const GWClass& b) {
  require_same_field(a.field_, b.field_);
  GWClass r(a.field_);
  long rank_a = 0;
  long rank_b = 0;
  for (const auto& [u, m] : a.entries_) {
    rank_a += m;
    for (const auto& [v, n] : b.entries_) r.add(u * v, m * n);
  }
  for (const auto& [v, n] : b.entries_) rank_b += n;
  // (A + hH)(B + h'H) = AB + (h' rank A + h rank B + 2 h h') H
  r.hyperbolic_ += b.hyperbolic_ * rank_a + a.hyperbolic_ * rank_b + 2 * a.hyperbolic_ * b.hyperbolic_;
  return r;
}

GWClass GWClass::scaled(const Scalar& u) const {
  if (u.is_zero()) fail(ErrorKind::ZeroScalar, "scaling a form by zero");
  require_same_field(field_, u.field());
  GWClass r(field_);
  for (const auto& [v, m] : entries_) r.add(u * v, m);
  r.hyperbolic_ += hyperbolic_;
  return r;
}

GWClass GWClass::times(long k) const {
  GWClass r(field_);
  if (k == 0) return r;
  for (const auto& [u, m] : entries_) r.entries_.emplace(u, m * k);
  r.hyperbolic_ = hyperbolic_ * k;
  return r;
}

bool operator==(const GWClass& a, const GWClass& b) {
  if (!(a.field_ == b.field_) || a.hyperbolic_ != b.hyperbolic_ || a.entries_.size() != b.entries_.size()) return false;
  auto it = b.entries_.begin();
  for (const auto& [u, m] : a.entries_) {
    if (!(u == it->first) || m != it->second) return false;
    ++it;
  }
  return true;
}

std::string GWClass::to_string() const {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [u, m] : entries_) {
    const long k = m < 0 ? -m : m;
    parts.emplace_back(m < 0, (k == 1 ? "" : std::to_string(k)) + "<" + u.to_string() + ">");
  }
  if (hyperbolic_ != 0) {
    const long k = hyperbolic_ < 0 ? -hyperbolic_ : hyperbolic_;
    parts.emplace_back(hyperbolic_ < 0, (k == 1 ? "" : std::to_string(k)) + "H");
  }
  if (parts.empty()) return "0";
  std::string out = parts[0].first ? "-" + parts[0].second : parts[0].second;
  for (std::size_t i = 1; i < parts.size(); ++i) out += (parts[i].first ? " - " : " + ") + parts[i].second;
  return out;
}

GWClass sign_power(const Scalar& e, int n, const GWClass& q) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "negative exponent in (-<e>)^n");
  if (n % 2 == 0) {
    if (e.is_zero()) fail(ErrorKind::ZeroScalar, "(-<0>)^n is undefined");
    return q;
  }
  return -q.scaled(e);
}

// --- Hilbert symbols ----------------------------------------------------------

int hilbert_symbol(const Rational& a, const Rational& b, const Integer& place) {
  if (sgn(a) == 0 || sgn(b) == 0) fail(ErrorKind::ZeroInput, "Hilbert symbol of zero");
  if (place == 0) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  const Integer& p = place;
  // a = num/den lies in the class of num*den.
  Integer u = a.get_num() * a.get_den();
  Integer v = b.get_num() * b.get_den();
  const auto strip = [&p](Integer& x) {
    long k = 0;
    while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
      x /= p;
      ++k;
    }
    return k;
  };
  const long alpha = strip(u);
  const long beta = strip(v);
  if (p == 2) {
    const auto r8 = [](const Integer& x) { return mpz_fdiv_ui(x.get_mpz_t(), 8); };
    const unsigned long ru = r8(u);
    const unsigned long rv = r8(v);
    const long eps_u = (ru == 3 || ru == 7) ? 1 : 0;
    const long eps_v = (rv == 3 || rv == 7) ? 1 : 0;
    const long om_u = (ru == 3 || ru == 5) ? 1 : 0;
    const long om_v = (rv == 3 || rv == 5) ? 1 : 0;
    return mod2(eps_u * eps_v + alpha * om_v + beta * om_u) ? -1 : 1;
  }
  const long eps_p = mpz_fdiv_ui(p.get_mpz_t(), 4) == 3 ? 1 : 0;
  int s = mod2(alpha * beta * eps_p) ? -1 : 1;
  if (mod2(beta)) s *= mpz_jacobi(u.get_mpz_t(), p.get_mpz_t());
  if (mod2(alpha)) s *= mpz_jacobi(v.get_mpz_t(), p.get_mpz_t());
  return s;
}

// --- invariants ---------------------------------------------------------------

Scalar determinant_class(const GWClass& q) {
  Scalar d = Scalar::one(q.field());
  for (const auto& [u, m] : q.entries()) {
    if (mod2(m)) d *= u;
  }
  if (mod2(q.hyperbolic_count())) d = -d;
  return square_class(d);
}

int hasse_invariant(const GWClass& q, const Integer& p) {
  if (q.field().kind != FieldId::Kind::Rationals) fail(ErrorKind::UnsupportedField, "Hasse invariants are computed over Q only");
  if (q.is_virtual()) fail(ErrorKind::InvalidArgument, "Hasse invariant of a virtual class");
  // Running determinant kept square-free: d * x / gcd(d, x)^2.
  Integer d = 1;
  int s = 1;
  const auto push = [&](const Integer& x) {
    s *= hilbert_symbol(Rational(d), Rational(x), p);
    Integer g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), x.get_mpz_t());
    d = (d / g) * (x / g);
  };
  for (const auto& [u, m] : q.entries()) {
    const Integer x = u.rational().get_num();
    for (long i = 0; i < m; ++i) push(x);
  }
  for (long i = 0; i < q.hyperbolic_count(); ++i) {
    push(Integer(1));
    push(Integer(-1));
  }
  return s;
}

std::vector<Integer> relevant_primes(const GWClass& q) {
  std::set<Integer> ps{Integer(2)};
  for (const auto& [u, m] : q.entries()) {
    for (const auto& p : prime_divisors(u.rational().get_num())) ps.insert(p);
  }
  return {ps.begin(), ps.end()};
}

namespace {

HasseData hasse_data(const GWClass& q) {
  HasseData h;
  for (const auto& p : relevant_primes(q)) h.at.emplace(p, hasse_invariant(q, p));
  return h;
}

Scalar signed_discriminant(const GWClass& q) {
  const long r = q.rank();
  Scalar d = determinant_class(q);
  if (mod2(r * (r - 1) / 2)) d = square_class(-d);
  return d;
}

long signature_of(const GWClass& q) {
  long s = 0;
  for (const auto& [u, m] : q.entries()) s += sgn(u.rational()) > 0 ? m : -m;
  return s;
}

}  // namespace

GWInvariants invariants(const GWClass& q) {
  GWInvariants inv;
  inv.rank = q.rank();
  inv.disc = signed_discriminant(q);
  if (q.field().kind == FieldId::Kind::Rationals) {
    inv.signature = signature_of(q);
    if (!q.is_virtual()) {
      inv.hasse = hasse_data(q);
    } else {
      const auto [pos, neg] = split_parts(q);
      inv.hasse_pos = hasse_data(pos);
      inv.hasse_neg = hasse_data(neg);
    }
  }
  return inv;
}

EqualityCertificate gw_equal(const GWClass& q1, const GWClass& q2) {
  require_same_field(q1.field(), q2.field());
  const FieldId f = q1.field();
  if (f.is_function_field()) fail(ErrorKind::UnsupportedField, "GW equality over " + f.name() + " is not decided");
  EqualityCertificate cert;
  const auto check = [&cert](std::string name, std::string lhs, std::string rhs) {
    const bool ok = lhs == rhs;
    cert.checks.push_back({std::move(name), std::move(lhs), std::move(rhs), ok});
  };
  check("rank", std::to_string(q1.rank()), std::to_string(q2.rank()));
  check("disc", signed_discriminant(q1).to_string(), signed_discriminant(q2).to_string());
  if (f.kind == FieldId::Kind::Rationals) {
    check("signature", std::to_string(signature_of(q1)), std::to_string(signature_of(q2)));
    // q1 - q2 = P - N with P, N genuine; q1 = q2 iff P and N are isometric.
    const auto [pos, neg] = split_parts(q1 - q2);
    check("rank(P) vs rank(N)", std::to_string(pos.rank()), std::to_string(neg.rank()));
    std::set<Integer> primes;
    for (const auto& p : relevant_primes(pos)) primes.insert(p);
    for (const auto& p : relevant_primes(neg)) primes.insert(p);
    for (const auto& p : primes) {
      check("hasse_" + p.get_str() + "(P) vs hasse_" + p.get_str() + "(N)",
            std::to_string(hasse_invariant(pos, p)), std::to_string(hasse_invariant(neg, p)));
    }
  }
  cert.equal = std::all_of(cert.checks.begin(), cert.checks.end(), [](const auto& c) { return c.ok; });
  return cert;
}

// --- diagonalization ----------------------------------------------------------

Diagonalization diagonalize(const Matrix& gram) {
  const std::size_t n = gram.size();
  for (const auto& r : gram) {
    if (r.size() != n) fail(ErrorKind::InvalidArgument, "Gram matrix must be square");
  }
  if (!is_symmetric(gram)) fail(ErrorKind::InvalidArgument, "Gram matrix must be symmetric");
  const FieldId field = n == 0 ? FieldId::rationals() : gram[0][0].field();
  if (field.characteristic() == 2) fail(ErrorKind::CharacteristicTwo, "characteristic 2");
  Matrix g = gram;
  Matrix p = identity_matrix(field, n);
  const auto swap_index = [&](std::size_t a, std::size_t b) {
    std::swap(g[a], g[b]);
    for (auto& row : g) std::swap(row[a], row[b]);
    for (auto& row : p) std::swap(row[a], row[b]);
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (g[k][k].is_zero()) {
      std::size_t j = k + 1;
      while (j < n && g[j][j].is_zero()) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && g[k][j].is_zero()) ++j;
        if (j == n) fail(ErrorKind::DegenerateForm, "the bilinear form is degenerate");
        // Basis change e_k -> e_k + e_j; the new diagonal entry is 2 g[k][j].
        for (std::size_t l = 0; l < n; ++l) g[k][l] += g[j][l];
        for (std::size_t l = 0; l < n; ++l) g[l][k] += g[l][j];
        for (auto& row : p) row[k] += row[j];
      }
    }
    const Scalar d = g[k][k];
    const Scalar inv = d.inv();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (g[i][k].is_zero()) continue;
      const Scalar c = g[i][k] * inv;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!g[k][j].is_zero()) g[i][j] -= c * g[k][j];
      }
      for (auto& row : p) {
        if (!row[k].is_zero()) row[i] -= c * row[k];
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      g[i][k] = Scalar::zero(field);
      g[k][i] = Scalar::zero(field);
    }
  }
  Diagonalization out{std::move(p), Row{}, GWClass(field)};
  for (std::size_t k = 0; k < n; ++k) {
    out.diagonal.push_back(g[k][k]);
    out.form.add(g[k][k], 1);
  }
  return out;
}

// --- specialization -----------------------------------------------------------

GWClass specialize(const GWClass& q) {
  if (!q.field().is_function_field()) fail(ErrorKind::InvalidArgument, "specialization needs a class over a function field");
  GWClass out(q.field().base());
  for (const auto& [u, m] : q.entries()) out.add(t_order_and_unit(u).unit_value, m);
  out.add_hyperbolic(q.hyperbolic_count());
  return out;
}

std::vector<Scalar> specialize_entries(const std::vector<Scalar>& entries) {
  std::vector<Scalar> out;
  for (const auto& c : entries) {
    if (c.is_zero()) fail(ErrorKind::ZeroEntry, "cannot specialize the zero entry");
    if (!c.field().is_function_field()) fail(ErrorKind::InvalidArgument, "specialization needs entries over a function field");
    out.push_back(square_class(t_order_and_unit(c).unit_value));
  }
  return out;
}

// --- text and JSON ------------------------------------------------------------

GWClass gw_from_entries(std::string_view src, FieldId field) {
  static const std::regex kHyperbolic(R"(^(-?\d*)\s*\*?\s*H$)");
  GWClass q(field);
  for (const auto& item : split_list(src)) {
    std::smatch m;
    if (std::regex_match(item, m, kHyperbolic)) {
      const std::string k = m[1].str();
      q.add_hyperbolic(k.empty() ? 1 : (k == "-" ? -1 : std::stol(k)));
      continue;
    }
    if (!item.empty() && item[0] == '~') {
      q.add(parse_scalar(std::string_view(item).substr(1), field), -1);
    } else {
      if (item.empty()) fail(ErrorKind::InvalidArgument, "empty entry in list");
      q.add(parse_scalar(item, field), 1);
    }
  }
  return q;
}

namespace {

nlohmann::ordered_json hasse_json(const HasseData& h) {
  nlohmann::ordered_json o = nlohmann::ordered_json::object();
  for (const auto& [p, s] : h.at) o[p.get_str()] = s;
  return o;
}

}  // namespace

std::string gw_to_json(const GWClass& q) {
  nlohmann::ordered_json out;
  out["field"] = q.field().name();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [u, m] : q.entries()) entries.push_back({{"class", u.to_string()}, {"mult", m}});
  out["entries"] = entries;
  out["hyperbolic"] = q.hyperbolic_count();
  const GWInvariants inv = invariants(q);
  out["rank"] = inv.rank;
  if (inv.signature) out["signature"] = *inv.signature;
  if (inv.disc) out["disc"] = inv.disc->to_string();
  if (inv.hasse) out["hasse"] = hasse_json(*inv.hasse);
  if (inv.hasse_pos) out["hasse_pos"] = hasse_json(*inv.hasse_pos);
  if (inv.hasse_neg) out["hasse_neg"] = hasse_json(*inv.hasse_neg);
  out["text"] = q.to_string();
  return out.dump();
}

GWClass gw_from_json(std::string_view src) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(src);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::InvalidArgument, std::string("bad GW class JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("field")) fail(ErrorKind::InvalidArgument, "GW class JSON needs a \"field\"");
  const FieldId field = parse_field(j.at("field").get<std::string>());
  GWClass q(field);
  if (j.contains("entries")) {
    for (const auto& e : j.at("entries")) {
      q.add(parse_scalar(e.at("class").get<std::string>(), field), e.value("mult", 1L));
    }
  }
  q.add_hyperbolic(j.value("hyperbolic", 0L));
  return q;
}

}  // namespace qe
