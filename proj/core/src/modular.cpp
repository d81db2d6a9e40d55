#include "polyprod/modular.hpp"

#include <algorithm>
#include <limits>

#include "polyprod/errors.hpp"

namespace polyprod {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 m) {
  require(m >= 1 && m <= static_cast<u64>(std::numeric_limits<i64>::max()),
          ErrorCode::DomainError, "modulus out of range");
  i64 t = 0, nt = 1;
  i64 r = static_cast<i64>(m), nr = static_cast<i64>(a % m);
  while (nr != 0) {
    i64 qq = r / nr;
    i64 tmp = t - qq * nt;
    t = nt;
    nt = tmp;
    tmp = r - qq * nr;
    r = nr;
    nr = tmp;
  }
  require(r == 1, ErrorCode::DomainError,
          std::to_string(a) + " not invertible mod " + std::to_string(m));
  return static_cast<u64>(t < 0 ? t + static_cast<i64>(m) : t);
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic base set for the full 64-bit range.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

int jacobi(const BigInt& a_in, const BigInt& n_in) {
  require(n_in > 0 && n_in % 2 == 1, ErrorCode::DomainError,
          "jacobi denominator must be odd and positive");
  BigInt a = a_in % n_in;
  if (a < 0) a += n_in;
  BigInt n = n_in;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      BigInt r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::vector<u64> sqrt_mod_p(const BigInt& a_in, u64 p) {
  require(is_prime_u64(p), ErrorCode::DomainError,
          std::to_string(p) + " is not prime");
  require(p % 2 == 1, ErrorCode::DomainError, "p must be an odd prime");
  BigInt am = a_in % p;
  if (am < 0) am += p;
  u64 a = am.convert_to<u64>();
  if (a == 0) return {0};
  if (powmod(a, (p - 1) / 2, p) != 1) return {};
  u64 r;
  if (p % 4 == 3) {
    r = powmod(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks.
    u64 qq = p - 1;
    int s = 0;
    while ((qq & 1) == 0) {
      qq >>= 1;
      ++s;
    }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = static_cast<u64>(s);
    u64 c = powmod(z, qq, p);
    u64 t = powmod(a, qq, p);
    r = powmod(a, (qq + 1) / 2, p);
    while (t != 1) {
      u64 t2 = t;
      u64 i = 0;
      while (t2 != 1) {
        t2 = mulmod(t2, t2, p);
        ++i;
      }
      u64 b = powmod(c, 1ull << (m - i - 1), p);
      m = i;
      c = mulmod(b, b, p);
      t = mulmod(t, c, p);
      r = mulmod(r, b, p);
    }
  }
  u64 other = p - r;
  if (r > other) std::swap(r, other);
  return {r, other};
}

std::vector<u64> poly_mod_p(const IntPolynomial& poly, u64 p) {
  std::vector<u64> out;
  out.reserve(poly.coeffs().size());
  for (const auto& c : poly.coeffs()) {
    BigInt r = c % p;
    if (r < 0) r += p;
    out.push_back(r.convert_to<u64>());
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

u64 eval_poly_mod(const std::vector<u64>& coeffs, u64 n, u64 p) {
  u64 acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = (mulmod(acc, n, p) + *it) % p;
  return acc;
}

std::vector<u64> roots_mod_p(const IntPolynomial& poly, u64 p,
                             u64 enumeration_cap) {
  require(is_prime_u64(p), ErrorCode::DomainError,
          std::to_string(p) + " is not prime");
  std::vector<u64> c = poly_mod_p(poly, p);
  require(!c.empty(), ErrorCode::DomainError,
          "polynomial vanishes identically mod " + std::to_string(p));
  int d = static_cast<int>(c.size()) - 1;
  std::vector<u64> roots;
  if (d == 0) return roots;
  if (p == 2 || (d >= 3)) {
    if (d >= 3)
      require(p <= enumeration_cap, ErrorCode::CapExceeded,
              "degree >= 3 root enumeration capped at p <= " +
                  std::to_string(enumeration_cap));
    for (u64 r = 0; r < p; ++r)
      if (eval_poly_mod(c, r, p) == 0) roots.push_back(r);
    return roots;
  }
  if (d == 1) {
    roots.push_back(mulmod(p - c[0] % p, invmod(c[1], p), p) % p);
    return roots;
  }
  // Quadratic over odd p: complete the square.
  u64 a = c[2], b = c[1], c0 = c[0];
  BigInt disc = BigInt(b) * BigInt(b) - BigInt(4) * BigInt(a) * BigInt(c0);
  auto sq = sqrt_mod_p(disc, p);
  u64 inv2a = invmod(mulmod(2 % p, a, p), p);
  for (u64 s : sq) {
    u64 r = mulmod((p - b % p + s) % p, inv2a, p);
    roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<u64> lift_roots(const IntPolynomial& poly, u64 p, unsigned j,
                            u64 enumeration_cap) {
  require(j >= 1, ErrorCode::DomainError, "level must be >= 1");
  // p^j must fit the 64-bit arithmetic used here.
  u64 mod = 1;
  for (unsigned i = 0; i < j; ++i) {
    require(mod <= std::numeric_limits<u64>::max() / p / p,
            ErrorCode::CapExceeded, "p^j too large for lifting");
    mod *= p;
  }
  std::vector<u64> cur = roots_mod_p(poly, p, enumeration_cap);

  IntPolynomial deriv = poly.derivative();
  u64 level_mod = p;
  for (unsigned level = 1; level < j; ++level) {
    u64 next_mod = level_mod * p;
    std::vector<u64> cmod = poly_mod_p(poly, next_mod);
    std::vector<u64> dmod = poly_mod_p(deriv, p);
    std::vector<u64> next;
    for (u64 r : cur) {
      u64 fpr = dmod.empty() ? 0 : eval_poly_mod(dmod, r % p, p);
      if (fpr != 0) {
        // Hensel step: unique lift.
        u64 fr = cmod.empty() ? 0 : eval_poly_mod(cmod, r, next_mod);
        u64 k = (fr / level_mod) % p;  // f(r) = k * p^level (mod p^{level+1})
        u64 t = mulmod((p - k) % p, invmod(fpr, p), p);
        next.push_back(r + t * level_mod);
      } else {
        for (u64 t = 0; t < p; ++t) {
          u64 cand = r + t * level_mod;
          if (cmod.empty() || eval_poly_mod(cmod, cand, next_mod) == 0)
            next.push_back(cand);
        }
      }
    }
    cur = std::move(next);
    level_mod = next_mod;
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

namespace {

using Fq = std::vector<u64>;  // ascending, trailing zeros trimmed

void trim(Fq& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Fq make_monic(Fq f, u64 q) {
  trim(f);
  if (f.empty()) return f;
  u64 inv = invmod(f.back(), q);
  for (auto& c : f) c = mulmod(c, inv, q);
  return f;
}

// Remainder of a by b (b nonzero), in place arithmetic mod q.
Fq poly_rem(Fq a, const Fq& b, u64 q) {
  trim(a);
  u64 invlb = invmod(b.back(), q);
  while (a.size() >= b.size() && !a.empty()) {
    u64 factor = mulmod(a.back(), invlb, q);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      u64 sub = mulmod(factor, b[i], q);
      a[shift + i] = (a[shift + i] + q - sub) % q;
    }
    trim(a);
  }
  return a;
}

Fq poly_div_exact(const Fq& a_in, const Fq& b, u64 q) {
  Fq a = a_in;
  trim(a);
  if (a.empty()) return {};
  Fq quot(a.size() - b.size() + 1, 0);
  u64 invlb = invmod(b.back(), q);
  while (a.size() >= b.size() && !a.empty()) {
    u64 factor = mulmod(a.back(), invlb, q);
    std::size_t shift = a.size() - b.size();
    quot[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) {
      u64 sub = mulmod(factor, b[i], q);
      a[shift + i] = (a[shift + i] + q - sub) % q;
    }
    trim(a);
  }
  require(a.empty(), ErrorCode::InternalInconsistency,
          "inexact polynomial division");
  trim(quot);
  return quot;
}

Fq poly_gcd(Fq a, Fq b, u64 q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Fq r = poly_rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, q);
}

Fq poly_deriv(const Fq& f, u64 q) {
  if (f.size() <= 1) return {};
  Fq d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i)
    d[i - 1] = mulmod(f[i], i % q, q);
  trim(d);
  return d;
}

void sff(const Fq& f_in, u64 q, unsigned mult,
         std::vector<std::pair<Fq, unsigned>>& out) {
  Fq f = make_monic(f_in, q);
  if (f.size() <= 1) return;
  Fq fp = poly_deriv(f, q);
  if (!fp.empty()) {
    Fq c = poly_gcd(f, fp, q);
    Fq w = poly_div_exact(f, c, q);
    unsigned i = 1;
    while (w.size() > 1) {
      Fq y = poly_gcd(w, c, q);
      Fq z = poly_div_exact(w, y, q);
      if (z.size() > 1) out.emplace_back(z, i * mult);
      ++i;
      w = std::move(y);
      c = poly_div_exact(c, w, q);
    }
    if (c.size() > 1) {
      // c is a q-th power.
      Fq root((c.size() - 1) / q + 1);
      for (std::size_t k = 0; k < root.size(); ++k) root[k] = c[k * q];
      sff(root, q, mult * static_cast<unsigned>(q), out);
    }
  } else {
    Fq root((f.size() - 1) / q + 1);
    for (std::size_t k = 0; k < root.size(); ++k) root[k] = f[k * q];
    sff(root, q, mult * static_cast<unsigned>(q), out);
  }
}

}  // namespace

std::vector<u64> poly_gcd_mod_q(const IntPolynomial& p1, const IntPolynomial& p2,
                                u64 q) {
  require(is_prime_u64(q), ErrorCode::DomainError,
          std::to_string(q) + " is not prime");
  Fq a = poly_mod_p(p1, q), b = poly_mod_p(p2, q);
  require(!(a.empty() && b.empty()), ErrorCode::DomainError,
          "both polynomials vanish mod " + std::to_string(q));
  if (a.empty()) return make_monic(b, q);
  if (b.empty()) return make_monic(a, q);
  return poly_gcd(a, b, q);
}

std::vector<std::pair<std::vector<u64>, unsigned>> squarefree_decomposition_mod_q(
    std::vector<u64> coeffs, u64 q) {
  require(is_prime_u64(q), ErrorCode::DomainError,
          std::to_string(q) + " is not prime");
  for (auto& c : coeffs) c %= q;
  trim(coeffs);
  require(coeffs.size() > 1, ErrorCode::DomainError,
          "squarefree decomposition needs a nonconstant polynomial");
  std::vector<std::pair<Fq, unsigned>> out;
  sff(coeffs, q, 1, out);
  return out;
}

}  // namespace polyprod
