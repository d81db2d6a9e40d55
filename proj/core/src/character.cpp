#include "polyprod/character.hpp"

#include <cmath>

#include "polyprod/errors.hpp"
#include "polyprod/modular.hpp"

namespace polyprod {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<u64> prime_factors_u64(u64 n) {
  std::vector<u64> fs;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}
}  // namespace

u64 least_primitive_root(u64 q) {
  require(is_prime_u64(q), ErrorCode::DomainError,
          std::to_string(q) + " is not prime");
  if (q == 2) return 1;
  auto fs = prime_factors_u64(q - 1);
  for (u64 g = 2; g < q; ++g) {
    bool ok = true;
    for (u64 f : fs)
      if (powmod(g, (q - 1) / f, q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  fail(ErrorCode::InternalInconsistency, "no primitive root found");
}

CharacterTable CharacterTable::build(u64 q, u64 p) {
  require(is_prime_u64(q), ErrorCode::DomainError,
          std::to_string(q) + " is not prime");
  require(is_prime_u64(p), ErrorCode::DomainError,
          "character order " + std::to_string(p) + " is not prime");
  require((q - 1) % p == 0, ErrorCode::NoSuchCharacter,
          "no order-" + std::to_string(p) + " character mod " +
              std::to_string(q));
  CharacterTable t;
  t.q_ = q;
  t.p_ = p;
  t.g_ = least_primitive_root(q);
  t.classes_.assign(q, -1);
  u64 pow = 1;
  for (u64 k = 0; k < q - 1; ++k) {
    t.classes_[pow] = static_cast<int>(k % p);
    pow = mulmod(pow, t.g_, q);
  }
  return t;
}

std::complex<double> CharacterTable::value(u64 residue) const {
  int cls = classes_[residue % q_];
  if (cls < 0) return {0.0, 0.0};
  double ang = kTwoPi * cls / static_cast<double>(p_);
  return {std::cos(ang), std::sin(ang)};
}

double root_of_unity_sum_magnitude(const std::vector<i64>& counts) {
  long double re = 0, im = 0;
  std::size_t p = counts.size();
  for (std::size_t j = 0; j < p; ++j) {
    long double ang = static_cast<long double>(kTwoPi) * j / p;
    re += counts[j] * std::cos(ang);
    im += counts[j] * std::sin(ang);
  }
  return static_cast<double>(std::sqrt(re * re + im * im));
}

}  // namespace polyprod
