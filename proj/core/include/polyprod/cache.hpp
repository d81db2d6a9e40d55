#ifndef POLYPROD_CACHE_HPP
#define POLYPROD_CACHE_HPP

#include <optional>
#include <string>
#include <vector>

#include "polyprod/bigint.hpp"
#include "polyprod/factorization.hpp"
#include "polyprod/ledger.hpp"
#include "polyprod/sieve.hpp"

namespace polyprod {

/// On-disk cache for sieve bitsets and per-(poly, n-range) factorization
/// blocks.  Files are content-addressed by an FNV hash of their key and
/// carry a payload checksum; a mismatch discards the entry and the caller
/// rebuilds it.
class Cache {
 public:
  Cache() = default;  // disabled
  explicit Cache(std::string dir);

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  std::optional<PrimeSieve> load_sieve(u64 limit) const;
  void store_sieve(const PrimeSieve& sieve) const;

  std::optional<std::vector<ValueFactorization>> load_block(
      const std::string& poly_key, u64 lo, u64 hi) const;
  void store_block(const std::string& poly_key, u64 lo, u64 hi,
                   const std::vector<ValueFactorization>& block) const;

 private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
};

/// Builds a sieve, reusing a cached bitset when available.
PrimeSieve make_sieve(u64 limit, const Cache& cache);

/// Ledger extension through cached factorization blocks (block size 4096).
void extend_with_cache(FactorLedger& ledger, u64 to_x, const Cache& cache,
                       unsigned threads = 1);

}  // namespace polyprod

#endif
