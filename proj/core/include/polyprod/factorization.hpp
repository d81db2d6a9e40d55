#ifndef POLYPROD_FACTORIZATION_HPP
#define POLYPROD_FACTORIZATION_HPP

#include <utility>
#include <vector>

#include "polyprod/bigint.hpp"
#include "polyprod/poly.hpp"

namespace polyprod {

/// Prime factorization support: trial division by sieved primes up to 10^6,
/// then Brent-cycle Pollard rho with Miller-Rabin primality on the
/// cofactors.  The Miller-Rabin base set is deterministic below 3.3e24,
/// which covers every value accepted here.

struct FactorizationLimits {
  static constexpr u64 kTrialDivisionBound = 1000000;
};

/// (prime, multiplicity) pairs, primes ascending.
std::vector<std::pair<u64, int>> factorize_u64(u64 n);

/// Values up to 128 bits wide; every prime factor must fit 64 bits
/// (ValueTooWide otherwise).
std::vector<std::pair<u64, int>> factorize_u128(u128 n);

/// Exact factorization of |n| with the sign returned separately.
struct SignedFactorization {
  int sign = 1;  // -1, 0, +1
  std::vector<std::pair<u64, int>> factors;
};
SignedFactorization factorize(const BigInt& n);

/// Per-n factorization record for a factored polynomial: the exact exponent
/// vector of F(n) with multiplicities applied, sign included.
struct ValueFactorization {
  BigInt n;
  Rational value;
  int sign = 1;
  std::vector<std::pair<u64, i64>> prime_powers;  // exponents may be negative
                                                  // for scale denominators
};
ValueFactorization factorize_value(const FactoredPolynomial& f, const BigInt& n);

bool is_prime_u128(u128 n);

}  // namespace polyprod

#endif
