#ifndef POLYPROD_SIEVE_HPP
#define POLYPROD_SIEVE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "polyprod/bigint.hpp"

namespace polyprod {

/// Eratosthenes sieve up to a fixed limit; build once, read from anywhere.
class PrimeSieve {
 public:
  explicit PrimeSieve(u64 limit);

  u64 limit() const { return limit_; }
  bool is_prime(u64 n) const;
  const std::vector<u64>& primes() const { return primes_; }

  /// Primes in [lo, hi], optionally restricted to p == a (mod q).
  /// Throws SieveTooSmall when hi exceeds the limit.
  std::vector<u64> primes_in(u64 lo, u64 hi,
                             std::optional<std::pair<u64, u64>> klass = {}) const;

  /// pi(hi) - pi(lo-1) without materializing the list.
  u64 count_primes(u64 lo, u64 hi) const;

  /// Precomputes the per-residue prime lists for modulus q; later
  /// primes_in(..., {q, a}) calls slice the index instead of filtering.
  /// Build once before sharing across threads.
  void index_classes(u64 q);

  const std::vector<u64>& raw_bits() const { return bits_; }
  /// Rebuilds from cached bits; returns nullopt if the payload is inconsistent.
  static std::optional<PrimeSieve> from_bits(u64 limit, std::vector<u64> bits);

 private:
  PrimeSieve() = default;
  void collect_primes();
  void check_range(u64 hi) const;

  u64 limit_ = 0;
  std::vector<u64> bits_;  // bit i set <=> i prime, i <= limit
  std::vector<u64> primes_;
  u64 indexed_q_ = 0;
  std::vector<std::vector<u64>> class_index_;  // residue -> sorted primes
};

}  // namespace polyprod

#endif
