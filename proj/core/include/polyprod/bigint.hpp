#ifndef POLYPROD_BIGINT_HPP
#define POLYPROD_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace polyprod {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Floor of the nonnegative square root.
BigInt isqrt(const BigInt& n);
u64 isqrt_u64(u64 n);

/// Perfect-square test; negative numbers are never squares.
bool is_perfect_square(const BigInt& n);

inline int sign_of(const BigInt& n) { return n.sign(); }

std::string to_decimal(const BigInt& n);
std::string u128_to_string(u128 v);

/// Checked narrowing; nullopt when out of range.
std::optional<u64> to_u64(const BigInt& n);
std::optional<u128> to_u128_abs(const BigInt& n);

}  // namespace polyprod

#endif
