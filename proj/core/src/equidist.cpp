#include "polyprod/equidist.hpp"

#include <cmath>

#include "polyprod/errors.hpp"
#include "polyprod/ledger.hpp"
#include "polyprod/modular.hpp"

namespace polyprod {

namespace {

void check_window(double alpha, double beta) {
  require(alpha >= 0 && alpha < beta && beta <= 1, ErrorCode::InvalidInput,
          "need 0 <= alpha < beta <= 1");
}

void check_irreducible_quadratic(const IntPolynomial& f) {
  require(f.degree() == 2, ErrorCode::InvalidInput, "f must be quadratic");
  require(is_irreducible(f), ErrorCode::InvalidInput,
          "f = " + f.to_string() + " is reducible");
}

}  // namespace

std::vector<RootPair> dfit_pairs(const IntPolynomial& f, const PrimeSieve& sieve,
                                 u64 x, double alpha, double beta) {
  check_window(alpha, beta);
  check_irreducible_quadratic(f);
  std::vector<RootPair> out;
  for (u64 p : sieve.primes_in(1, x)) {
    for (u64 v : roots_mod_p(f, p)) {
      double ratio = static_cast<double>(v) / static_cast<double>(p);
      if (ratio >= alpha && ratio < beta)
        out.push_back(RootPair{p, v, ratio});
    }
  }
  return out;
}

DfitResult dfit_count(const IntPolynomial& f, const PrimeSieve& sieve, u64 x,
                      double alpha, double beta) {
  DfitResult r;
  r.count = dfit_pairs(f, sieve, x, alpha, beta).size();
  r.pi_x = sieve.count_primes(1, x);
  r.expected = (beta - alpha) * static_cast<double>(r.pi_x);
  r.ratio = r.expected > 0 ? static_cast<double>(r.count) / r.expected : 0;
  return r;
}

ExactOnceResult exact_once_primes(const IntPolynomial& f,
                                  const PrimeSieve& sieve, u64 x, double delta) {
  require(f.degree() == 2 && f.leading_coeff() == 1, ErrorCode::InvalidInput,
          "f must be a monic quadratic");
  require(delta > 0 && delta < 1, ErrorCode::InvalidInput,
          "delta must lie in (0,1)");
  double lo_real = (2.0 - delta) * static_cast<double>(x);
  BigInt lo_sq = BigInt(static_cast<u64>(lo_real));
  require(lo_sq * lo_sq > f.eval(x), ErrorCode::XTooSmall,
          "((2-delta)x)^2 > f(x) fails; increase x");

  ExactOnceResult out;
  out.window_lo = static_cast<u64>(lo_real);
  out.window_hi = 2 * x;
  out.epsilon = 1.1 * delta / (2.0 - delta);
  auto window = sieve.primes_in(out.window_lo + 1, out.window_hi);
  out.window_prime_count = window.size();
  for (u64 p : window) {
    int hits = 0;
    for (u64 v : roots_mod_p(f, p))
      if (v >= 1 && v <= x) ++hits;
    if (hits == 1) ++out.once_count;
  }
  out.threshold = (0.5 - out.epsilon) * static_cast<double>(out.window_prime_count);
  return out;
}

std::optional<std::pair<u64, u64>> prime_in_window(const IntPolynomial& f,
                                                   const PrimeSieve& sieve,
                                                   u64 x, double a, double b) {
  check_irreducible_quadratic(f);
  require(f.leading_coeff() == 1, ErrorCode::InvalidInput, "f must be monic");
  require(2 < a && a < b, ErrorCode::InvalidInput, "need 2 < a < b");
  u64 lo = static_cast<u64>(a * static_cast<double>(x));
  u64 hi = static_cast<u64>(b * static_cast<double>(x));
  if (static_cast<double>(hi) == b * static_cast<double>(x) && hi > 0)
    --hi;  // open upper end
  for (u64 p : sieve.primes_in(lo + 1, hi)) {
    for (u64 v : roots_mod_p(f, p)) {
      if (v >= 1 && v <= x) return std::make_pair(p, v);
    }
  }
  return std::nullopt;
}

CommonPrimeBound common_prime_bound(const IntPolynomial& f1,
                                    const IntPolynomial& f2, u64 x) {
  check_irreducible_quadratic(f1);
  check_irreducible_quadratic(f2);
  // proportional polynomials share every large prime, so distinctness is
  // judged on the primitive parts
  require(!(f1.primitive_part() == f2.primitive_part()), ErrorCode::InvalidInput,
          "f1 and f2 must be distinct up to scaling");
  BigInt d1 = discriminant_quadratic(f1);
  BigInt d2 = discriminant_quadratic(f2);
  require(is_perfect_square(d1 * d2), ErrorCode::InvalidInput,
          "D1 D2 must be a perfect square");
  BigInt d = isqrt(d1 * d2);

  FactorLedger l1(FactoredPolynomial::from_polynomial(f1));
  FactorLedger l2(FactoredPolynomial::from_polynomial(f2));
  l1.extend(x);
  l2.extend(x);

  CommonPrimeBound out;
  for (const auto& [p, e] : l1.exponents())
    if (l2.exponents().count(p)) out.max_common_prime = p;

  BigInt coeff = 2 * abs(f1.coeff(2) * d) + 2 * abs(f2.coeff(2) * d1) + 1;
  out.bound = coeff.convert_to<double>() * static_cast<double>(x);
  out.holds = static_cast<double>(out.max_common_prime) <= out.bound;
  return out;
}

PrimeSquareBound p_square_bound(const IntPolynomial& f, u64 x) {
  require(f.degree() == 2 && f.leading_coeff() == 1, ErrorCode::InvalidInput,
          "f must be a monic quadratic");
  FactorLedger ledger(FactoredPolynomial::from_polynomial(f));
  ledger.extend(x);
  PrimeSquareBound out;
  for (const auto& [p, e] : ledger.exponents())
    if (e >= 2) out.max_prime = p;
  double b = std::fabs(f.coeff(1).convert_to<double>());
  double c = std::fabs(f.coeff(0).convert_to<double>());
  out.bound = (2.0 + b + c) * static_cast<double>(x);
  out.holds = static_cast<double>(out.max_prime) <= out.bound;
  return out;
}

}  // namespace polyprod
