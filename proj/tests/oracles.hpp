// Independent reference implementations used to freeze expected values.
// Everything here is deliberately naive and kept apart from the library's
// own computation paths.
#ifndef POLYPROD_TESTS_ORACLES_HPP
#define POLYPROD_TESTS_ORACLES_HPP

#include <map>
#include <vector>

#include "polyprod/bigint.hpp"
#include "polyprod/poly.hpp"

namespace oracles {

using polyprod::BigInt;
using polyprod::IntPolynomial;
using polyprod::u64;

inline std::vector<u64> naive_primes(u64 limit) {
  std::vector<char> sieve(limit + 1, 1);
  std::vector<u64> out;
  for (u64 i = 2; i <= limit; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (u64 j = 2 * i; j <= limit; j += i) sieve[j] = 0;
  }
  return out;
}

inline bool naive_is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Legendre symbol by Euler's criterion with naive modular exponentiation.
inline int naive_legendre(BigInt a, u64 p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  BigInt r = 1, base = a;
  u64 e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : (r == p - 1 ? -1 : 0);
}

inline std::vector<u64> naive_roots(const IntPolynomial& f, u64 p) {
  std::vector<u64> out;
  for (u64 r = 0; r < p; ++r) {
    BigInt v = f.eval(r) % p;
    if (v == 0) out.push_back(r);
  }
  return out;
}

inline std::vector<u64> naive_roots_mod(const IntPolynomial& f, u64 m) {
  std::vector<u64> out;
  for (u64 r = 0; r < m; ++r) {
    BigInt v = f.eval(r) % m;
    if (v == 0) out.push_back(r);
  }
  return out;
}

// Exponent of p in |n| by repeated division.
inline polyprod::i64 valuation(BigInt n, u64 p) {
  if (n == 0) return -1;
  n = abs(n);
  polyprod::i64 v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Exact factorization of |n| by trial division only.
inline std::map<u64, int> naive_factor(BigInt n) {
  std::map<u64, int> out;
  n = abs(n);
  for (u64 p = 2; BigInt(p) * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) out[n.convert_to<u64>()] += 1;
  return out;
}

}  // namespace oracles

#endif
