#include "polyprod/sieve.hpp"

#include <algorithm>
#include <cmath>

#include "polyprod/errors.hpp"

namespace polyprod {

PrimeSieve::PrimeSieve(u64 limit) : limit_(limit) {
  bits_.assign(limit / 64 + 1, ~0ull);
  auto clear = [&](u64 i) { bits_[i >> 6] &= ~(1ull << (i & 63)); };
  clear(0);
  if (limit >= 1) clear(1);
  for (u64 i = 2; i * i <= limit; ++i) {
    if (!is_prime(i)) continue;
    for (u64 j = i * i; j <= limit; j += i) clear(j);
  }
  collect_primes();
}

void PrimeSieve::collect_primes() {
  if (limit_ >= 10) {
    double dn = static_cast<double>(limit_);
    primes_.reserve(static_cast<std::size_t>(dn / std::log(dn) * 1.15));
  }
  for (u64 i = 2; i <= limit_; ++i)
    if (is_prime(i)) primes_.push_back(i);
}

bool PrimeSieve::is_prime(u64 n) const {
  check_range(n);
  return (bits_[n >> 6] >> (n & 63)) & 1;
}

void PrimeSieve::check_range(u64 hi) const {
  require(hi <= limit_, ErrorCode::SieveTooSmall,
          "sieve limit " + std::to_string(limit_) + " < requested " +
              std::to_string(hi));
}

std::vector<u64> PrimeSieve::primes_in(
    u64 lo, u64 hi, std::optional<std::pair<u64, u64>> klass) const {
  check_range(hi);
  std::vector<u64> out;
  if (lo > hi) return out;
  if (klass) {
    auto [q, a] = *klass;
    require(q >= 1, ErrorCode::DomainError, "modulus must be positive");
    if (q == indexed_q_) {
      const auto& list = class_index_[a % q];
      auto begin = std::lower_bound(list.begin(), list.end(), lo);
      auto end = std::upper_bound(list.begin(), list.end(), hi);
      return {begin, end};
    }
    auto begin = std::lower_bound(primes_.begin(), primes_.end(), lo);
    auto end = std::upper_bound(primes_.begin(), primes_.end(), hi);
    for (auto it = begin; it != end; ++it)
      if (*it % q == a % q) out.push_back(*it);
    return out;
  }
  auto begin = std::lower_bound(primes_.begin(), primes_.end(), lo);
  auto end = std::upper_bound(primes_.begin(), primes_.end(), hi);
  out.assign(begin, end);
  return out;
}

void PrimeSieve::index_classes(u64 q) {
  require(q >= 1, ErrorCode::DomainError, "modulus must be positive");
  if (q == indexed_q_) return;
  class_index_.assign(q, {});
  for (u64 p : primes_) class_index_[p % q].push_back(p);
  indexed_q_ = q;
}

u64 PrimeSieve::count_primes(u64 lo, u64 hi) const {
  check_range(hi);
  if (lo > hi) return 0;
  auto begin = std::lower_bound(primes_.begin(), primes_.end(), lo);
  auto end = std::upper_bound(primes_.begin(), primes_.end(), hi);
  return static_cast<u64>(end - begin);
}

std::optional<PrimeSieve> PrimeSieve::from_bits(u64 limit,
                                                std::vector<u64> bits) {
  if (bits.size() != limit / 64 + 1) return std::nullopt;
  PrimeSieve s;
  s.limit_ = limit;
  s.bits_ = std::move(bits);
  // spot validation against a small fresh sieve
  u64 probe = std::min<u64>(limit, 997);
  PrimeSieve fresh(probe);
  for (u64 i = 0; i <= probe; ++i)
    if (s.is_prime(i) != fresh.is_prime(i)) return std::nullopt;
  s.collect_primes();
  return s;
}

}  // namespace polyprod
