#include "linalg.hpp"

#include <cstdint>
#include <optional>

#include "error.hpp"

namespace qe {

Matrix identity_matrix(FieldId field, std::size_t n) {
  Matrix m = zero_matrix(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar::one(field);
  return m;
}

Matrix zero_matrix(FieldId field, std::size_t rows, std::size_t cols) {
  return Matrix(rows, Row(cols, Scalar::zero(field)));
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a[0].size(), Row(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) fail(ErrorKind::InvalidArgument, "matrix dimensions do not match");
  const FieldId f = a[0][0].field();
  Matrix c = zero_matrix(f, a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) {
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

bool is_symmetric(const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!(a[i][j] == a[j][i])) return false;
    }
  }
  return true;
}

bool matrices_equal(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (!(a[i][j] == b[i][j])) return false;
    }
  }
  return true;
}

namespace {

// Row-reduces in place; returns the rank and accumulates the determinant of
// the leading square block when requested.
std::size_t eliminate(Matrix& a, Scalar* det) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) {
      if (det) *det = Scalar::zero(det->field());
      continue;
    }
    if (piv != r) {
      std::swap(a[piv], a[r]);
      if (det) *det = -*det;
    }
    if (det) *det *= a[r][c];
    const Scalar inv = a[r][c].inv();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      const Scalar f = a[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) {
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
      }
    }
    ++r;
  }
  if (det && r < rows) *det = Scalar::zero(det->field());
  return r;
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint32_t e, std::uint32_t p) {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

constexpr std::uint32_t kCheckPrime = 2147483647U;  // 2^31 - 1

// Rank of the image mod p, or -1 if some denominator vanishes mod p.
long rank_mod_p(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& q = a[i][j].rational();
      const std::uint32_t den = static_cast<std::uint32_t>(mpz_fdiv_ui(q.get_den_mpz_t(), kCheckPrime));
      if (den == 0) return -1;
      const std::uint32_t num = static_cast<std::uint32_t>(mpz_fdiv_ui(q.get_num_mpz_t(), kCheckPrime));
      m[i][j] = mulmod(num, powmod(den, kCheckPrime - 2, kCheckPrime), kCheckPrime);
    }
  }
  long r = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(r)]);
    auto& pr = m[static_cast<std::size_t>(r)];
    const std::uint32_t inv = powmod(pr[c], kCheckPrime - 2, kCheckPrime);
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const std::uint32_t f = mulmod(m[i][c], inv, kCheckPrime);
      for (std::size_t j = c; j < n; ++j) {
        m[i][j] = static_cast<std::uint32_t>((m[i][j] + kCheckPrime - mulmod(f, pr[j], kCheckPrime)) % kCheckPrime);
      }
    }
    ++r;
  }
  return r;
}

// Evaluates a rational function at t = x; nullopt if the denominator vanishes.
std::optional<Scalar> evaluate_at(const Scalar& f, const Scalar& x) {
  const RatFunc& r = f.ratfunc();
  const auto horner = [&](const UPoly& p) {
    Scalar acc = Scalar::zero(r.base);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
  };
  const Scalar d = horner(r.den);
  if (d.is_zero()) return std::nullopt;
  return horner(r.num) / d;
}

}  // namespace

std::size_t rank(Matrix a) { return eliminate(a, nullptr); }

Scalar determinant(Matrix a) {
  if (a.empty()) return Scalar::one(FieldId::rationals());
  if (a.size() != a[0].size()) fail(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  Scalar det = Scalar::one(a[0][0].field());
  eliminate(a, &det);
  return det;
}

bool is_nonsingular(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return true;
  const FieldId f = a[0][0].field();
  if (f.kind == FieldId::Kind::Rationals) {
    if (rank_mod_p(a) == static_cast<long>(n)) return true;
  } else if (f.is_function_field()) {
    // A few sample points; a full-rank specialization certifies full rank.
    for (long x : {3L, -5L, 7L}) {
      const Scalar pt = Scalar::from_int(f.base(), x);
      Matrix s(n, Row(n));
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = 0; j < n && ok; ++j) {
          auto v = evaluate_at(a[i][j], pt);
          if (!v) ok = false;
          else s[i][j] = *v;
        }
      }
      if (ok && is_nonsingular(s)) return true;
    }
  }
  return rank(a) == n;
}

}  // namespace qe
