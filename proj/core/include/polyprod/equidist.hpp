#ifndef POLYPROD_EQUIDIST_HPP
#define POLYPROD_EQUIDIST_HPP

#include <optional>
#include <utility>
#include <vector>

#include "polyprod/bigint.hpp"
#include "polyprod/poly.hpp"
#include "polyprod/sieve.hpp"

namespace polyprod {

/// A root v of f modulo p together with the normalized ratio v/p.
struct RootPair {
  u64 p = 0;
  u64 v = 0;
  double ratio = 0;
};

/// All pairs (p, v) with p <= x prime, f(v) == 0 (mod p), and
/// alpha <= v/p < beta (half-open window; ties at beta excluded).
std::vector<RootPair> dfit_pairs(const IntPolynomial& f, const PrimeSieve& sieve,
                                 u64 x, double alpha, double beta);

struct DfitResult {
  u64 count = 0;
  u64 pi_x = 0;
  double expected = 0;  // (beta - alpha) * pi(x)
  double ratio = 0;     // count / expected
};

DfitResult dfit_count(const IntPolynomial& f, const PrimeSieve& sieve, u64 x,
                      double alpha, double beta);

struct ExactOnceResult {
  u64 once_count = 0;        // primes in the window dividing N_x exactly once
  u64 window_prime_count = 0;
  double epsilon = 0;        // derived from delta with 10% slack
  double threshold = 0;      // (1/2 - eps)(pi(2x) - pi((2-delta)x))
  u64 window_lo = 0;         // exclusive
  u64 window_hi = 0;         // inclusive
};

/// Counts primes p in ((2-delta)x, 2x] dividing prod_{n<=x} f(n) exactly
/// once, by root counting; requires ((2-delta)x)^2 > f(x) so that root
/// multiplicity equals divisor multiplicity (XTooSmall otherwise).
ExactOnceResult exact_once_primes(const IntPolynomial& f,
                                  const PrimeSieve& sieve, u64 x, double delta);

/// First prime in (a*x, b*x) dividing some f(n) with n <= x, together with
/// the witness n; nullopt when the window holds none (a reportable outcome).
std::optional<std::pair<u64, u64>> prime_in_window(const IntPolynomial& f,
                                                   const PrimeSieve& sieve,
                                                   u64 x, double a, double b);

struct CommonPrimeBound {
  u64 max_common_prime = 0;  // 0 when the ledgers share no prime
  double bound = 0;          // (2|a1 d| + 2|a2 D1| + 1) x
  bool holds = false;
};

/// Largest prime dividing both prod f1(n) and prod f2(n) for n <= x, checked
/// against the factorization-identity bound; requires D1 D2 to be a perfect
/// square and f1 != f2.
CommonPrimeBound common_prime_bound(const IntPolynomial& f1,
                                    const IntPolynomial& f2, u64 x);

struct PrimeSquareBound {
  u64 max_prime = 0;  // largest p with p^2 | prod f(n), 0 when none
  double bound = 0;   // (2 + |b| + |c|) x
  bool holds = false;
};

/// For monic quadratic f = n^2 + bn + c.
PrimeSquareBound p_square_bound(const IntPolynomial& f, u64 x);

}  // namespace polyprod

#endif
