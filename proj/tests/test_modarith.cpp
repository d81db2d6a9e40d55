#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "polyprod/character.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/modular.hpp"
#include "polyprod/sieve.hpp"

using namespace polyprod;

TEST_SUITE_BEGIN("modarith");

TEST_CASE("sieve matches the naive sieve") {
  PrimeSieve sieve(100000);
  auto expect = oracles::naive_primes(100000);
  CHECK(sieve.primes() == expect);
  CHECK(sieve.primes().size() == 9592);
}

TEST_CASE("primes_in with and without residue classes") {
  PrimeSieve sieve(2000);
  CHECK(sieve.primes_in(1, 10) == std::vector<u64>{2, 3, 5, 7});
  CHECK(sieve.primes_in(8, 8).empty());
  auto mod4 = sieve.primes_in(1, 100, {{4, 1}});
  CHECK(mod4 == std::vector<u64>{5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97});
  CHECK(mod4.size() == 11);
  CHECK_THROWS_AS(sieve.primes_in(1, 5000), Error);
  // the class index must slice to the same lists
  sieve.index_classes(4);
  CHECK(sieve.primes_in(1, 100, {{4, 1}}) == mod4);
  CHECK(sieve.primes_in(50, 1500, {{4, 3}}) ==
        PrimeSieve(1500).primes_in(50, 1500, {{4, 3}}));
}

TEST_CASE("deterministic Miller-Rabin") {
  for (u64 n = 0; n <= 5000; ++n) CHECK(is_prime_u64(n) == oracles::naive_is_prime(n));
  CHECK(is_prime_u64(1000000007ull));
  CHECK(is_prime_u64(18446744073709551557ull));  // largest 64-bit prime
  CHECK_FALSE(is_prime_u64(3215031751ull));      // strong pseudoprime to 2,3,5,7
}

TEST_CASE("jacobi symbol") {
  CHECK(jacobi(-1, 5) == 1);
  CHECK(jacobi(2, 13) == -1);
  CHECK(jacobi(15, 15) == 0);
  CHECK(jacobi(0, 1) == 1);  // empty product convention
  CHECK_THROWS_AS(jacobi(3, 4), Error);

  // against Euler's criterion for primes
  PrimeSieve sieve(500);
  for (u64 p : sieve.primes()) {
    if (p == 2) continue;
    for (i64 a = -20; a <= 20; ++a)
      CHECK(jacobi(a, p) == oracles::naive_legendre(a, p));
  }
  // multiplicativity in the numerator for composite odd denominators
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<i64> dist(-100, 100);
  for (int i = 0; i < 200; ++i) {
    i64 a = dist(rng), b = dist(rng);
    u64 n = 2 * std::uniform_int_distribution<u64>(1, 100)(rng) + 1;
    CHECK(jacobi(BigInt(a) * b, n) == jacobi(a, n) * jacobi(b, n));
  }
}

TEST_CASE("jacobi is 4|D|-periodic in the odd denominator") {
  // the residue-class machinery rests on this periodicity
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> dd(-40, 40);
  int done = 0;
  while (done < 300) {
    i64 d = dd(rng);
    if (d == 0) continue;
    u64 period = 4 * static_cast<u64>(d < 0 ? -d : d);
    for (u64 n = 1; n <= 2 * period + 1; n += 2)
      CHECK(jacobi(d, n) == jacobi(d, n + period));
    ++done;
  }
}

TEST_CASE("sqrt_mod_p") {
  CHECK(sqrt_mod_p(-1, 13) == std::vector<u64>{5, 8});
  CHECK(sqrt_mod_p(2, 13).empty());
  CHECK(sqrt_mod_p(0, 7) == std::vector<u64>{0});
  CHECK_THROWS_AS(sqrt_mod_p(3, 15), Error);
  CHECK_THROWS_AS(sqrt_mod_p(3, 2), Error);

  // exhaustive against squaring, both 1 mod 4 and 3 mod 4 branches
  PrimeSieve sieve(300);
  for (u64 p : sieve.primes()) {
    if (p == 2) continue;
    for (u64 a = 0; a < p; ++a) {
      auto roots = sqrt_mod_p(a, p);
      std::vector<u64> expect;
      for (u64 r = 0; r < p; ++r)
        if (r * r % p == a) expect.push_back(r);
      if (!expect.empty() && expect[0] == 0) expect = {0};
      CHECK(roots == expect);
    }
  }
}

TEST_CASE("roots_mod_p formula path vs enumeration") {
  IntPolynomial f({1, 0, 1});
  CHECK(roots_mod_p(f, 5) == std::vector<u64>{2, 3});
  CHECK(roots_mod_p(f, 7).empty());
  CHECK(roots_mod_p(f, 2) == std::vector<u64>{1});

  PrimeSieve sieve(1000);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<i64> coeff(-30, 30);
  for (int i = 0; i < 60; ++i) {
    IntPolynomial g({coeff(rng), coeff(rng), coeff(rng)});
    if (g.is_zero()) continue;
    for (u64 p : sieve.primes()) {
      if (g.content() % p == 0) continue;
      CHECK(roots_mod_p(g, p) == oracles::naive_roots(g, p));
    }
  }
  // degree >= 3 goes through enumeration, with a cap
  IntPolynomial cubic({1, 0, 0, 1});
  CHECK(roots_mod_p(cubic, 7) == oracles::naive_roots(cubic, 7));
  CHECK_THROWS_AS(roots_mod_p(cubic, 1000003, 1000), Error);
}

TEST_CASE("lift_roots: Hensel and singular paths") {
  IntPolynomial f({1, 0, 1});
  CHECK(lift_roots(f, 5, 2) == std::vector<u64>{7, 18});
  CHECK(lift_roots(f, 7, 3).empty());
  IntPolynomial nsq({0, 0, 1});
  CHECK(lift_roots(nsq, 3, 2) == std::vector<u64>{0, 3, 6});

  // against naive enumeration mod p^j
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<i64> coeff(-20, 20);
  for (int i = 0; i < 40; ++i) {
    IntPolynomial g({coeff(rng), coeff(rng), coeff(rng)});
    if (g.is_zero()) continue;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull}) {
      if (g.content() % p == 0) continue;
      for (unsigned j = 1; j <= 3; ++j) {
        u64 m = 1;
        for (unsigned t = 0; t < j; ++t) m *= p;
        CHECK(lift_roots(g, p, j) == oracles::naive_roots_mod(g, m));
      }
    }
  }
}

TEST_CASE("Hensel stability: root counts stay equal off sdisc") {
  // off the discriminant, counts mod p^j match the count mod p
  PrimeSieve sieve(200);
  for (const char* text : {"1,0,1", "3,1,1", "-2,0,1"}) {
    IntPolynomial f = IntPolynomial::parse(text);
    BigInt disc = discriminant_quadratic(f);
    for (u64 p : sieve.primes()) {
      bool good = disc % p != 0 && f.leading_coeff() % p != 0;
      std::size_t base = roots_mod_p(f, p).size();
      for (unsigned j = 2; j <= 3; ++j) {
        auto lifted = lift_roots(f, p, j);
        if (good) CHECK(lifted.size() == base);
        // reductions land in the level below
        u64 mod_prev = 1;
        for (unsigned t = 0; t + 1 < j; ++t) mod_prev *= p;
        auto prev = lift_roots(f, p, j - 1);
        for (u64 r : lifted) {
          bool found = std::find(prev.begin(), prev.end(), r % mod_prev) != prev.end();
          CHECK(found);
        }
      }
    }
  }
}

TEST_CASE("poly_gcd_mod_q") {
  IntPolynomial a({-1, 0, 1}), b({-1, 1});
  CHECK(poly_gcd_mod_q(a, b, 5) == std::vector<u64>{4, 1});  // n - 1 = n + 4
  CHECK(poly_gcd_mod_q(IntPolynomial({1, 0, 1}), IntPolynomial({2, 0, 1}), 5) ==
        std::vector<u64>{1});
  IntPolynomial p({3, 2, 1});
  auto self = poly_gcd_mod_q(p, p, 7);
  CHECK(self == std::vector<u64>{3, 2, 1});  // already monic mod 7
  CHECK_THROWS_AS(poly_gcd_mod_q(IntPolynomial({7, 7}), IntPolynomial({7}), 7),
                  Error);
}

TEST_CASE("poly gcd nontrivial exactly when the resultant vanishes mod q") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<i64> coeff(-10, 10);
  PrimeSieve sieve(60);
  int done = 0;
  while (done < 150) {
    IntPolynomial a({coeff(rng), coeff(rng), coeff(rng)});
    IntPolynomial b({coeff(rng), coeff(rng)});
    if (a.degree() != 2 || b.degree() != 1) continue;
    BigInt res = resultant(a, b);
    for (u64 q : sieve.primes()) {
      if (a.leading_coeff() % q == 0 || b.leading_coeff() % q == 0) continue;
      auto g = poly_gcd_mod_q(a, b, q);
      bool nontrivial = g.size() > 1;
      bool res_vanishes = res % q == 0;
      CHECK(nontrivial == res_vanishes);
    }
    ++done;
  }
}

TEST_CASE("squarefree decomposition over F_q") {
  // (n^2+1)^2 (n+3) mod 13
  IntPolynomial f = IntPolynomial({1, 0, 1}) * IntPolynomial({1, 0, 1}) *
                    IntPolynomial({3, 1});
  auto parts = squarefree_decomposition_mod_q(poly_mod_p(f, 13), 13);
  u64 deg_by_mult[6] = {0, 0, 0, 0, 0, 0};
  for (const auto& [poly, mult] : parts) {
    REQUIRE(mult <= 5);
    deg_by_mult[mult] += poly.size() - 1;
  }
  CHECK(deg_by_mult[1] == 1);
  CHECK(deg_by_mult[2] == 2);
}

TEST_CASE("character tables") {
  auto chi = CharacterTable::build(7, 3);
  CHECK(chi.generator() == 3);
  CHECK(chi.exponent_class(1) == 0);
  CHECK(chi.exponent_class(0) == -1);
  // cubes mod 7 are {1, 6}
  for (u64 r = 1; r < 7; ++r) {
    bool is_cube = (r == 1 || r == 6);
    CHECK((chi.exponent_class(r) == 0) == is_cube);
  }
  // order 2 character equals the Legendre symbol
  auto leg = CharacterTable::build(7, 2);
  for (u64 r = 1; r < 7; ++r) {
    int cls = leg.exponent_class(r);
    CHECK((cls == 0 ? 1 : -1) == jacobi(r, 7));
  }
  CHECK_THROWS_AS(CharacterTable::build(7, 5), Error);   // 5 does not divide 6
  CHECK_THROWS_AS(CharacterTable::build(15, 2), Error);  // composite modulus
}

TEST_CASE("character orthogonality and multiplicativity, exhaustive") {
  PrimeSieve sieve(100);
  for (u64 q : sieve.primes()) {
    for (u64 p : {2ull, 3ull, 5ull}) {
      if ((q - 1) % p != 0) continue;
      auto chi = CharacterTable::build(q, p);
      // sum over all residues vanishes
      std::vector<i64> counts(p, 0);
      for (u64 r = 0; r < q; ++r) {
        int cls = chi.exponent_class(r);
        if (cls >= 0) ++counts[cls];
      }
      CHECK(root_of_unity_sum_magnitude(counts) < 1e-9);
      // complete multiplicativity via index addition
      for (u64 x = 1; x < q; ++x)
        for (u64 y = 1; y < q; ++y) {
          int lhs = chi.exponent_class(x * y % q);
          int rhs = static_cast<int>((chi.exponent_class(x) + chi.exponent_class(y)) % p);
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_SUITE_END();
