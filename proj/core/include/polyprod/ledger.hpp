#ifndef POLYPROD_LEDGER_HPP
#define POLYPROD_LEDGER_HPP

#include <map>
#include <optional>
#include <string>

#include "polyprod/bigint.hpp"
#include "polyprod/factorization.hpp"
#include "polyprod/poly.hpp"

namespace polyprod {

/// Exact prime-exponent accounting of N_x = prod_{n<=x} F(n), extended
/// incrementally by factoring each value.  Sign is tallied separately; a
/// zero value poisons every power query (the product is no longer the
/// object the queries are about) but leaves the exponent map readable.
class FactorLedger {
 public:
  explicit FactorLedger(FactoredPolynomial f);

  const FactoredPolynomial& polynomial() const { return poly_; }
  u64 cursor() const { return cursor_; }
  const std::map<u64, i64>& exponents() const { return exponents_; }
  u64 negative_count() const { return negative_count_; }
  bool zero_seen() const { return zero_at_.has_value(); }
  std::optional<u64> zero_at() const { return zero_at_; }

  /// Extends the ledger through to_x (inclusive).  Internally parallel over
  /// disjoint n-subranges; results are independent of the thread count.
  void extend(u64 to_x, unsigned threads = 1);

  /// Applies a precomputed block covering cursor+1 .. cursor+block.size(),
  /// in order; the n fields must match exactly.
  void ingest(const std::vector<ValueFactorization>& block);

  /// Exponent of p in |N_x|, 0 when absent.
  i64 alpha(u64 p) const;

  /// (-1)^negative_count, or 0 once a zero value was hit.
  int sign() const;
  bool is_unit() const { return exponents_.empty(); }

  /// True iff every stored exponent is >= 2, judged on |N_x|; vacuously true
  /// for the unit product.  Throws UndefinedProduct when zero_seen.
  bool is_squarefull() const;

  /// gcd of all exponents; 0 is the "unit" sentinel for |N_x| = 1.
  u64 perfect_power_exponent() const;

  /// p | gcd of exponents (units qualify); even p additionally requires
  /// N_x > 0.
  bool is_perfect_pth(u64 p) const;

  /// Largest prime dividing N_x; requires |N_x| > 1.
  u64 largest_prime() const;

  /// log |N_x| as sum alpha_p log p.
  double log_abs() const;

  /// |N_x| as an exact integer; intended for small-x cross-checks.
  BigInt reconstruct_abs() const;

  /// Incremental helpers for batch scans: number of primes with exponent
  /// exactly 1, and number with exponent not divisible by the watched power.
  u64 count_exponent_one() const { return count_exponent_one_; }
  void watch_power(u64 p);
  std::optional<u64> watched_power() const { return watched_power_; }
  u64 watched_bad_count() const { return watched_bad_count_; }

  std::string snapshot_json() const;
  static FactorLedger from_snapshot_json(const std::string& text);

 private:
  void apply_value(const ValueFactorization& vf);
  void bump(u64 p, i64 delta);
  void check_defined() const;

  FactoredPolynomial poly_;
  u64 cursor_ = 0;
  std::map<u64, i64> exponents_;
  u64 negative_count_ = 0;
  std::optional<u64> zero_at_;
  u64 count_exponent_one_ = 0;
  std::optional<u64> watched_power_;
  u64 watched_bad_count_ = 0;
};

struct InequalityCheck {
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};

/// log N_x >= 2x log x - 2x for F = n^2 + D, D >= 1; lhs summed from the
/// exact values.
InequalityCheck log_lower_bound_check(const FactorLedger& ledger);

struct AlphaBoundCheck {
  u64 p = 0;
  i64 alpha = 0;
  double bound = 0;
  bool p_divides_d = false;
  int e0 = 0;
  bool holds = false;
};

/// alpha_p <= 2x/(p-1) + 2 log(x^2+D)/log p for p not dividing D, and the
/// p^{e0}-scaled variant when p | D (e0 = v_p(D)); F must be n^2 + D.
AlphaBoundCheck alpha_bound_check(const FactorLedger& ledger, u64 p);

/// (sum over odd alpha_p of log p) / (sum of alpha_p log p); 0 for the unit
/// product.  Reported only, never asserted against any conjecture.
double squarefree_part_statistic(const FactorLedger& ledger);

/// The D of F = n^2 + D; throws InvalidInput when F is not of that shape.
BigInt monic_shift_constant(const FactoredPolynomial& f);

}  // namespace polyprod

#endif
