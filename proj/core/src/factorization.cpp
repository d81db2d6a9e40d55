#include "polyprod/factorization.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "polyprod/errors.hpp"
#include "polyprod/modular.hpp"
#include "polyprod/sieve.hpp"

namespace polyprod {

namespace {

const PrimeSieve& trial_sieve() {
  static const PrimeSieve sieve(FactorizationLimits::kTrialDivisionBound);
  return sieve;
}

u128 mulmod_u128(u128 a, u128 b, u128 m) {
  // Peasant multiplication; only used on the rare >64-bit path.
  u128 r = 0;
  a %= m;
  while (b) {
    if (b & 1) {
      r += a;
      if (r >= m) r -= m;
    }
    a <<= 1;
    if (a >= m) a -= m;
    b >>= 1;
  }
  return r;
}

u128 powmod_u128(u128 base, u128 exp, u128 m) {
  u128 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u128(r, base, m);
    base = mulmod_u128(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Largest width with a deterministic Miller-Rabin certificate for the first
// thirteen prime bases: 3317044064679887385961981 (about 3.3e24).
const u128 kMillerRabinBound =
    static_cast<u128>(3317044064679887385ull) * 1000000ull + 961981ull;

u128 gcd_u128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 pollard_rho_u64(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    u64 x = 2, y = 2, d = 1;
    do {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    } while (d == 1);
    if (d != n) return d;
  }
}

u128 pollard_rho_u128(u128 n) {
  if (n % 2 == 0) return 2;
  for (u128 c = 1;; ++c) {
    auto f = [&](u128 v) { return (mulmod_u128(v, v, n) + c) % n; };
    u128 x = 2, y = 2, d = 1;
    do {
      x = f(x);
      y = f(f(y));
      d = gcd_u128(x > y ? x - y : y - x, n);
    } while (d == 1);
    if (d != n) return d;
  }
}

void factor_rec_u64(u64 n, std::map<u64, int>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_rho_u64(n);
  factor_rec_u64(d, out);
  factor_rec_u64(n / d, out);
}

void factor_rec_u128(u128 n, std::map<u64, int>& out) {
  if (n == 1) return;
  if (n <= std::numeric_limits<u64>::max()) {
    factor_rec_u64(static_cast<u64>(n), out);
    return;
  }
  if (is_prime_u128(n)) {
    fail(ErrorCode::ValueTooWide,
         "prime factor wider than 64 bits: " + u128_to_string(n));
  }
  u128 d = pollard_rho_u128(n);
  factor_rec_u128(d, out);
  factor_rec_u128(n / d, out);
}

}  // namespace

bool is_prime_u128(u128 n) {
  if (n <= std::numeric_limits<u64>::max()) return is_prime_u64(static_cast<u64>(n));
  require(n < kMillerRabinBound, ErrorCode::ValueTooWide,
          "primality is deterministic only below 3.3e24");
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull, 41ull}) {
    u128 x = powmod_u128(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u128(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::pair<u64, int>> factorize_u64(u64 n) {
  std::map<u64, int> acc;
  if (n <= 1) return {};
  for (u64 p : trial_sieve().primes()) {
    if (p * p > n) break;
    while (n % p == 0) {
      ++acc[p];
      n /= p;
    }
  }
  if (n > 1) factor_rec_u64(n, acc);
  return {acc.begin(), acc.end()};
}

std::vector<std::pair<u64, int>> factorize_u128(u128 n) {
  if (n <= std::numeric_limits<u64>::max())
    return factorize_u64(static_cast<u64>(n));
  require(n < kMillerRabinBound, ErrorCode::ValueTooWide,
          "values must stay below 3.3e24 for exact factorization");
  std::map<u64, int> acc;
  for (u64 p : trial_sieve().primes()) {
    while (n % p == 0) {
      ++acc[p];
      n /= p;
    }
  }
  if (n > 1) factor_rec_u128(n, acc);
  return {acc.begin(), acc.end()};
}

SignedFactorization factorize(const BigInt& n) {
  SignedFactorization out;
  out.sign = n.sign();
  if (out.sign == 0) return out;
  auto wide = to_u128_abs(n);
  require(wide.has_value(), ErrorCode::ValueTooWide,
          "value exceeds 128 bits: " + to_decimal(n));
  out.factors = factorize_u128(*wide);
  return out;
}

ValueFactorization factorize_value(const FactoredPolynomial& f, const BigInt& n) {
  ValueFactorization out;
  out.n = n;
  std::map<u64, i64> acc;
  int sign = 1;
  Rational value = f.scale();

  auto absorb = [&](const BigInt& v, i64 mult) {
    SignedFactorization sf = factorize(v);
    if (sf.sign == 0) {
      sign = 0;
      return;
    }
    if (sf.sign < 0 && mult % 2 != 0) sign = -sign;
    for (auto [p, e] : sf.factors) acc[p] += mult * e;
  };

  absorb(numerator(f.scale()), 1);
  if (sign != 0) absorb(denominator(f.scale()), -1);
  for (const auto& factor : f.factors()) {
    BigInt v = factor.poly.eval(n);
    for (unsigned i = 0; i < factor.multiplicity; ++i) value *= Rational(v);
    if (sign == 0) continue;
    absorb(v, static_cast<i64>(factor.multiplicity));
  }
  out.value = value;
  out.sign = sign;
  if (sign != 0) {
    for (auto& [p, e] : acc)
      if (e != 0) out.prime_powers.emplace_back(p, e);
  }
  return out;
}

}  // namespace polyprod
