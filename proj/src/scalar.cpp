#include "scalar.hpp"

#include <algorithm>
#include <cstdlib>

#include "error.hpp"

namespace qe {

namespace {

std::uint32_t powmod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t reduce_mod(const Integer& n, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(n.get_mpz_t(), p));
}

void require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field())) {
    fail(ErrorKind::MixedFields, "operands live in different fields (" +
                                     a.field().name() + " vs " +
                                     b.field().name() + ")");
  }
}

bool is_unit_poly(const UPoly& f) { return f.size() == 1 && f[0].is_one(); }

void trim(UPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

}  // namespace

// --- FieldId ----------------------------------------------------------------

FieldId FieldId::prime(std::uint32_t p) {
  if (p == 2) fail(ErrorKind::CharacteristicTwo, "characteristic 2 is not supported");
  if (p >= (1U << 31U) || !is_prime_u32(p)) {
    fail(ErrorKind::InvalidArgument, "F_p requires an odd prime p < 2^31, got " + std::to_string(p));
  }
  return FieldId{Kind::PrimeField, p};
}

FieldId FieldId::rational_functions(std::uint32_t base_p) {
  if (base_p != 0) (void)prime(base_p);
  return FieldId{Kind::RationalFunctions, base_p};
}

FieldId FieldId::base() const {
  if (kind != Kind::RationalFunctions) return *this;
  return p == 0 ? FieldId{} : FieldId{Kind::PrimeField, p};
}

std::string FieldId::name() const {
  switch (kind) {
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "Fp:" + std::to_string(p);
    case Kind::RationalFunctions: return p == 0 ? "Qt" : "Fpt:" + std::to_string(p);
  }
  return "?";
}

// --- Scalar -----------------------------------------------------------------

Scalar::Scalar(Rational q) : v_(std::move(q)) { std::get<Rational>(v_).canonicalize(); }
Scalar::Scalar(ModP m) : v_(m) {}
Scalar::Scalar(std::shared_ptr<const RatFunc> f) : v_(std::move(f)) {}

Scalar Scalar::zero(FieldId field) { return from_int(field, 0); }
Scalar Scalar::one(FieldId field) { return from_int(field, 1); }

Scalar Scalar::from_int(FieldId field, long long n) {
  return from_integer(field, Integer(std::to_string(n)));
}

Scalar Scalar::from_integer(FieldId field, const Integer& n) {
  return from_rational(field, Rational(n));
}

Scalar Scalar::from_rational(FieldId field, const Rational& q) {
  switch (field.kind) {
    case FieldId::Kind::Rationals:
      return Scalar(q);
    case FieldId::Kind::PrimeField: {
      const std::uint32_t den = reduce_mod(q.get_den(), field.p);
      if (den == 0) fail(ErrorKind::DivisionByZero, "denominator " + q.get_den().get_str() + " vanishes mod " + std::to_string(field.p));
      const std::uint32_t num = reduce_mod(q.get_num(), field.p);
      const std::uint64_t v = static_cast<std::uint64_t>(num) * powmod(den, field.p - 2, field.p) % field.p;
      return Scalar(ModP{static_cast<std::uint32_t>(v), field.p});
    }
    case FieldId::Kind::RationalFunctions: {
      const FieldId base = field.base();
      UPoly num;
      if (q != 0) num.push_back(from_rational(base, q));
      return Scalar(std::make_shared<const RatFunc>(RatFunc{base, std::move(num), UPoly{one(base)}}));
    }
  }
  fail(ErrorKind::Internal, "unknown field kind");
}

Scalar Scalar::variable_t(FieldId field) {
  if (!field.is_function_field()) fail(ErrorKind::UnknownVariable, "t is only available over a rational function field");
  const FieldId base = field.base();
  return Scalar(std::make_shared<const RatFunc>(RatFunc{base, UPoly{zero(base), one(base)}, UPoly{one(base)}}));
}

FieldId Scalar::field() const {
  if (std::holds_alternative<Rational>(v_)) return FieldId::rationals();
  if (const auto* m = std::get_if<ModP>(&v_)) return FieldId{FieldId::Kind::PrimeField, m->p};
  return FieldId{FieldId::Kind::RationalFunctions, std::get<2>(v_)->base.p};
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return sgn(*q) == 0;
  if (const auto* m = std::get_if<ModP>(&v_)) return m->value == 0;
  return std::get<2>(v_)->num.empty();
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return *q == 1;
  if (const auto* m = std::get_if<ModP>(&v_)) return m->value == 1;
  const auto& f = *std::get<2>(v_);
  return is_unit_poly(f.num) && is_unit_poly(f.den);
}

bool Scalar::is_constant() const {
  if (const auto* f = std::get_if<2>(&v_)) {
    return (*f)->num.size() <= 1 && is_unit_poly((*f)->den);
  }
  return true;
}

Scalar Scalar::constant_value() const {
  if (const auto* f = std::get_if<2>(&v_)) {
    if (!is_constant()) fail(ErrorKind::InvalidArgument, "not a constant: " + to_string());
    return (*f)->num.empty() ? zero((*f)->base) : (*f)->num[0];
  }
  return *this;
}

const Rational& Scalar::rational() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return *q;
  fail(ErrorKind::MixedFields, "expected a rational number, got an element of " + field().name());
}

ModP Scalar::modp() const {
  if (const auto* m = std::get_if<ModP>(&v_)) return *m;
  fail(ErrorKind::MixedFields, "expected an element of F_p, got an element of " + field().name());
}

const RatFunc& Scalar::ratfunc() const {
  if (const auto* f = std::get_if<2>(&v_)) return **f;
  fail(ErrorKind::MixedFields, "expected a rational function, got an element of " + field().name());
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return Scalar(Rational(-*q));
  if (const auto* m = std::get_if<ModP>(&v_)) return Scalar(ModP{m->value == 0 ? 0 : m->p - m->value, m->p});
  const auto& f = *std::get<2>(v_);
  UPoly num = f.num;
  for (auto& c : num) c = -c;
  return Scalar(std::make_shared<const RatFunc>(RatFunc{f.base, std::move(num), f.den}));
}

Scalar Scalar::inv() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  if (const auto* q = std::get_if<Rational>(&v_)) return Scalar(Rational(1 / *q));
  if (const auto* m = std::get_if<ModP>(&v_)) return Scalar(ModP{powmod(m->value, m->p - 2, m->p), m->p});
  const auto& f = *std::get<2>(v_);
  return make_ratfunc(f.base, f.den, f.num);
}

Scalar Scalar::pow(long long exponent) const {
  Scalar base = exponent < 0 ? inv() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent) : static_cast<unsigned long long>(exponent);
  Scalar result = one(field());
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    e >>= 1ULL;
    if (e > 0) base = base * base;
  }
  return result;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (const auto* q = std::get_if<Rational>(&a.v_)) return Scalar(Rational(*q + std::get<Rational>(b.v_)));
  if (const auto* m = std::get_if<ModP>(&a.v_)) {
    const auto n = std::get<ModP>(b.v_);
    return Scalar(ModP{static_cast<std::uint32_t>((static_cast<std::uint64_t>(m->value) + n.value) % m->p), m->p});
  }
  const auto& f = *std::get<2>(a.v_);
  const auto& g = *std::get<2>(b.v_);
  if (is_unit_poly(f.den) && is_unit_poly(g.den)) {
    UPoly num = upoly::add(f.num, g.num);
    return Scalar(std::make_shared<const RatFunc>(RatFunc{f.base, std::move(num), f.den}));
  }
  if (f.den == g.den) return make_ratfunc(f.base, upoly::add(f.num, g.num), f.den);
  return make_ratfunc(f.base, upoly::add(upoly::mul(f.num, g.den), upoly::mul(g.num, f.den)), upoly::mul(f.den, g.den));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (const auto* q = std::get_if<Rational>(&a.v_)) return Scalar(Rational(*q * std::get<Rational>(b.v_)));
  if (const auto* m = std::get_if<ModP>(&a.v_)) {
    const auto n = std::get<ModP>(b.v_);
    return Scalar(ModP{static_cast<std::uint32_t>(static_cast<std::uint64_t>(m->value) * n.value % m->p), m->p});
  }
  const auto& f = *std::get<2>(a.v_);
  const auto& g = *std::get<2>(b.v_);
  if (is_unit_poly(f.den) && is_unit_poly(g.den)) {
    UPoly num = upoly::mul(f.num, g.num);
    return Scalar(std::make_shared<const RatFunc>(RatFunc{f.base, std::move(num), f.den}));
  }
  return make_ratfunc(f.base, upoly::mul(f.num, g.num), upoly::mul(f.den, g.den));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  return a * b.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field())) return false;
  if (const auto* q = std::get_if<Rational>(&a.v_)) return *q == std::get<Rational>(b.v_);
  if (const auto* m = std::get_if<ModP>(&a.v_)) return m->value == std::get<ModP>(b.v_).value;
  const auto& f = *std::get<2>(a.v_);
  const auto& g = *std::get<2>(b.v_);
  return f.num == g.num && f.den == g.den;
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return q->get_str();
  if (const auto* m = std::get_if<ModP>(&v_)) return std::to_string(m->value);
  const auto& f = *std::get<2>(v_);
  std::string num = upoly::to_string(f.num);
  if (is_unit_poly(f.den)) return num;
  const auto terms = [](const UPoly& p) {
    return std::count_if(p.begin(), p.end(), [](const Scalar& c) { return !c.is_zero(); });
  };
  if (terms(f.num) > 1) num = "(" + num + ")";
  std::string den = upoly::to_string(f.den);
  if (terms(f.den) > 1) den = "(" + den + ")";
  return num + "/" + den;
}

int canonical_compare(const Scalar& a, const Scalar& b) {
  const FieldId fa = a.field();
  const FieldId fb = b.field();
  if (!(fa == fb)) return static_cast<int>(fa.kind) < static_cast<int>(fb.kind) ? -1 : 1;
  switch (fa.kind) {
    case FieldId::Kind::Rationals: {
      const int c = cmp(a.rational(), b.rational());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case FieldId::Kind::PrimeField: {
      const auto x = a.modp().value;
      const auto y = b.modp().value;
      return x < y ? -1 : (x > y ? 1 : 0);
    }
    case FieldId::Kind::RationalFunctions: {
      const auto cmp_poly = [](const UPoly& f, const UPoly& g) {
        if (f.size() != g.size()) return f.size() < g.size() ? -1 : 1;
        for (std::size_t i = f.size(); i-- > 0;) {
          const int c = canonical_compare(f[i], g[i]);
          if (c != 0) return c;
        }
        return 0;
      };
      const int c = cmp_poly(a.ratfunc().num, b.ratfunc().num);
      return c != 0 ? c : cmp_poly(a.ratfunc().den, b.ratfunc().den);
    }
  }
  return 0;
}

// --- univariate polynomials -------------------------------------------------

namespace upoly {

int degree(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size() && i < b.size()) r[i] = a[i] + b[i];
    else r[i] = i < a.size() ? a[i] : b[i];
  }
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly nb = b;
  for (auto& c : nb) c = -c;
  return add(a, nb);
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Scalar::zero(a[0].field()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly scale(const UPoly& a, const Scalar& c) {
  if (c.is_zero()) return {};
  UPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.empty()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  UPoly rem = a;
  if (rem.size() < b.size()) return {UPoly{}, rem};
  UPoly quot(rem.size() - b.size() + 1, Scalar::zero(b[0].field()));
  const Scalar lead_inv = b.back().inv();
  while (!rem.empty() && rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    const Scalar c = rem.back() * lead_inv;
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
    rem.pop_back();
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

UPoly make_monic(const UPoly& f) {
  if (f.empty() || f.back().is_one()) return f;
  return scale(f, f.back().inv());
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.empty()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

UPoly derivative(const UPoly& f) {
  if (f.size() <= 1) return {};
  UPoly r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * Scalar::from_int(f[i].field(), static_cast<long long>(i));
  trim(r);
  return r;
}

int valuation(const UPoly& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i].is_zero()) return static_cast<int>(i);
  }
  fail(ErrorKind::ZeroInput, "valuation of the zero polynomial");
}

std::string to_string(const UPoly& f) {
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    const Scalar& c = f[i];
    if (c.is_zero()) continue;
    std::string mag;
    bool negative = false;
    if (c.field().kind == FieldId::Kind::Rationals) {
      negative = sgn(c.rational()) < 0;
      mag = negative ? Rational(-c.rational()).get_str() : c.rational().get_str();
    } else {
      mag = c.to_string();
    }
    std::string term;
    if (i == 0) {
      term = mag;
    } else {
      const std::string power = i == 1 ? "t" : "t^" + std::to_string(i);
      term = mag == "1" ? power : mag + "*" + power;
    }
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace upoly

Scalar make_ratfunc(FieldId base, UPoly num, UPoly den) {
  trim(num);
  trim(den);
  if (den.empty()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
  const Scalar one = Scalar::one(base);
  if (num.empty()) return Scalar(std::make_shared<const RatFunc>(RatFunc{base, {}, UPoly{one}}));
  if (den.size() > 1) {
    const UPoly g = upoly::gcd(num, den);
    if (g.size() > 1) {
      num = upoly::divmod(num, g).first;
      den = upoly::divmod(den, g).first;
    }
  }
  if (!den.back().is_one()) {
    const Scalar lc_inv = den.back().inv();
    num = upoly::scale(num, lc_inv);
    den = upoly::scale(den, lc_inv);
  }
  return Scalar(std::make_shared<const RatFunc>(RatFunc{base, std::move(num), std::move(den)}));
}

// --- square classes ---------------------------------------------------------

namespace {

struct Factorization {
  Integer squarefree = 1;       // product of primes with odd exponent
  std::vector<Integer> primes;  // distinct primes
};

Factorization factor_with_bound(const Integer& n_in) {
  if (n_in == 0) fail(ErrorKind::ZeroInput, "cannot factor zero");
  Integer n = abs(n_in);
  Factorization out;
  const auto take = [&](const Integer& p) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e > 0) {
      out.primes.push_back(p);
      if (e % 2 == 1) out.squarefree *= p;
    }
  };
  take(Integer(2));
  for (unsigned long d = 3; d <= kTrialDivisionBound; d += 2) {
    if (n == 1) break;
    if (Integer(d) * d > n) {
      take(Integer(n));  // remaining cofactor is prime
      break;
    }
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) take(Integer(d));
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
      take(Integer(n));
    } else if (mpz_perfect_square_p(n.get_mpz_t())) {
      Integer root;
      mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
      if (mpz_probab_prime_p(root.get_mpz_t(), 40) == 0) {
        fail(ErrorKind::FactorizationBoundExceeded, "cannot extract the square-free part of " + n_in.get_str());
      }
      out.primes.push_back(root);
    } else {
      fail(ErrorKind::FactorizationBoundExceeded, "cannot extract the square-free part of " + n_in.get_str());
    }
  }
  std::sort(out.primes.begin(), out.primes.end());
  return out;
}

}  // namespace

Integer squarefree_part(const Integer& n) {
  Integer sf = factor_with_bound(n).squarefree;
  return sgn(n) < 0 ? Integer(-sf) : sf;
}

std::vector<Integer> prime_divisors(const Integer& n) { return factor_with_bound(n).primes; }

bool is_square_mod_p(std::uint32_t value, std::uint32_t p) {
  value %= p;
  if (value == 0) return true;
  return powmod(value, (p - 1) / 2, p) == 1;
}

std::uint32_t least_nonresidue(std::uint32_t p) {
  for (std::uint32_t a = 2; a < p; ++a) {
    if (!is_square_mod_p(a, p)) return a;
  }
  fail(ErrorKind::Internal, "no quadratic non-residue mod " + std::to_string(p));
}

namespace {

Scalar constant_square_class(const Scalar& c) {
  switch (c.field().kind) {
    case FieldId::Kind::Rationals: {
      const Rational& q = c.rational();
      const Integer a = squarefree_part(q.get_num());
      const Integer b = squarefree_part(q.get_den());
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return Scalar(Rational(Integer(a * b / (g * g))));
    }
    case FieldId::Kind::PrimeField: {
      const ModP m = c.modp();
      const std::uint32_t rep = is_square_mod_p(m.value, m.p) ? 1 : least_nonresidue(m.p);
      return Scalar(ModP{rep, m.p});
    }
    default:
      fail(ErrorKind::Internal, "constant_square_class on a function field element");
  }
}

// Product of the odd-multiplicity square-free factors of a monic polynomial
// (characteristic zero), via repeated gcd against the derivative.
UPoly odd_part(const UPoly& f) {
  if (f.size() <= 1) return f;
  UPoly c = upoly::gcd(f, upoly::derivative(f));
  UPoly w = upoly::divmod(f, c).first;
  UPoly result{Scalar::one(f[0].field())};
  for (int mult = 1; w.size() > 1; ++mult) {
    UPoly y = upoly::gcd(w, c);
    UPoly z = upoly::divmod(w, y).first;
    if (mult % 2 == 1) result = upoly::mul(result, z);
    c = upoly::divmod(c, y).first;
    w = std::move(y);
  }
  return result;
}

}  // namespace

Scalar square_class(const Scalar& a) {
  if (a.is_zero()) fail(ErrorKind::ZeroInput, "square class of zero");
  if (!a.field().is_function_field()) return constant_square_class(a);
  const RatFunc& f = a.ratfunc();
  const Scalar lc = f.num.back();
  UPoly prod = upoly::mul(upoly::make_monic(f.num), f.den);
  if (f.base.p == 0) prod = odd_part(prod);
  const Scalar cls = constant_square_class(lc);
  return make_ratfunc(f.base, upoly::scale(prod, cls), UPoly{Scalar::one(f.base)});
}

TOrder t_order_and_unit(const Scalar& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroInput, "t-adic order of zero");
  if (!f.field().is_function_field()) return TOrder{0, f};
  const RatFunc& r = f.ratfunc();
  const int vn = upoly::valuation(r.num);
  const int vd = upoly::valuation(r.den);
  return TOrder{static_cast<long>(vn - vd), r.num[vn] / r.den[vd]};
}

}  // namespace qe
