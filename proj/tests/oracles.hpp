#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's number theory or linear algebra.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

// Coefficients of prod_i (1 - T^{e - a_i}) / (1 - T^{a_i}) as a polynomial.
inline std::vector<long> hilbert_series(int e, const std::vector<int>& weights) {
  std::vector<long> num{1};
  for (int a : weights) {
    // (1 - T^{e-a}) / (1 - T^a) = 1 + T^a + ... + T^{e-2a} when a | e.
    std::vector<long> factor(static_cast<std::size_t>(e - 2 * a + 1), 0);
    for (int k = 0; k <= e - 2 * a; k += a) factor[static_cast<std::size_t>(k)] = 1;
    std::vector<long> out(num.size() + factor.size() - 1, 0);
    for (std::size_t i = 0; i < num.size(); ++i)
      for (std::size_t j = 0; j < factor.size(); ++j) out[i + j] += num[i] * factor[j];
    num = out;
  }
  return num;
}

inline long ipow(long b, int n) {
  long r = 1;
  while (n-- > 0) r *= b;
  return r;
}

// Square-free part by trial division, sign kept.
inline long squarefree(long n) {
  long sign = n < 0 ? -1 : 1;
  n = std::labs(n);
  long out = 1;
  for (long p = 2; p * p <= n; ++p) {
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k % 2 == 1) out *= p;
  }
  return sign * out * n;
}

inline std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  for (long p = 2; p <= n; ++p) {
    bool prime = true;
    for (long q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
    if (prime) out.push_back(p);
  }
  return out;
}

inline long mod(long a, long m) { return ((a % m) + m) % m; }

// Hilbert symbol (a, b)_p for a prime p by searching primitive solutions of
// z^2 = a x^2 + b y^2 modulo p^3 (2^5 for p = 2). a and b must be nonzero
// square-free integers, so any primitive solution at that precision lifts.
inline int hilbert_symbol_bruteforce(long a, long b, long p) {
  const long m = p == 2 ? 32 : p * p * p;
  std::vector<char> squares(static_cast<std::size_t>(m), 0);
  for (long z = 0; z < m; ++z) squares[static_cast<std::size_t>(z * z % m)] = 1;
  for (long x = 0; x < m; ++x) {
    for (long y = 0; y < m; ++y) {
      if (x % p == 0 && y % p == 0) continue;  // such a solution forces p | z
      if (squares[static_cast<std::size_t>(mod(a * x * x + b * y * y, m))]) return 1;
    }
  }
  // Solutions with p | x and p | y are not primitive, so none exist.
  return -1;
}

inline int hilbert_symbol_real(long a, long b) { return (a < 0 && b < 0) ? -1 : 1; }

// <u1> + ... + <uk> ~ <v1> + ... + <vk> witnessed by a rational matrix with
// entries in {0, +-1/2, +-1, +-3/2, +-2}: P^T diag(u) P = diag(v).
inline bool isometry_search_2x2(long u1, long u2, long v1, long v2) {
  const std::vector<long> halves{-4, -3, -2, -1, 0, 1, 2, 3, 4};  // numerators over 2
  for (long p11 : halves)
    for (long p21 : halves) {
      // column 1 must have length v1 * 4
      if (u1 * p11 * p11 + u2 * p21 * p21 != 4 * v1) continue;
      for (long p12 : halves)
        for (long p22 : halves) {
          if (u1 * p12 * p12 + u2 * p22 * p22 != 4 * v2) continue;
          if (u1 * p11 * p12 + u2 * p21 * p22 != 0) continue;
          return true;
        }
    }
  return false;
}

}  // namespace oracle
