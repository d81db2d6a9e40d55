#include "polyprod/bigint.hpp"

#include <cmath>
#include <limits>

namespace polyprod {

BigInt isqrt(const BigInt& n) {
  if (n <= 0) return 0;
  return boost::multiprecision::sqrt(n);
}

u64 isqrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt r = isqrt(n);
  return r * r == n;
}

std::string to_decimal(const BigInt& n) { return n.str(); }

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

std::optional<u64> to_u64(const BigInt& n) {
  if (n < 0 || n > std::numeric_limits<u64>::max()) return std::nullopt;
  return n.convert_to<u64>();
}

std::optional<u128> to_u128_abs(const BigInt& n) {
  BigInt a = abs(n);
  static const BigInt kMax = (BigInt(1) << 128) - 1;
  if (a > kMax) return std::nullopt;
  BigInt lo64 = a & BigInt(std::numeric_limits<u64>::max());
  BigInt hi64 = a >> 64;
  return (static_cast<u128>(hi64.convert_to<u64>()) << 64) |
         static_cast<u128>(lo64.convert_to<u64>());
}

}  // namespace polyprod
