#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/powersieve.hpp"

using namespace polyprod;

namespace {

const PrimeSieve& sieve20k() {
  static const PrimeSieve s(20001);
  return s;
}

// Brute-force order-p character sum of F_k, built from scratch: discrete
// logs by exhaustive powering of the smallest primitive root.
double naive_char_sum_magnitude(const FactoredPolynomial& f, unsigned k, u64 q,
                                u64 p) {
  u64 g = 2;
  for (;; ++g) {
    u64 pow = g % q, order = 1;
    while (pow != 1) {
      pow = pow * g % q;
      ++order;
    }
    if (order == q - 1) break;
  }
  std::vector<u64> ind(q, 0);
  u64 pow = 1;
  for (u64 e = 0; e < q - 1; ++e) {
    ind[pow] = e;
    pow = pow * g % q;
  }
  IntPolynomial fk = shifted_product(f, k).expand();
  std::complex<double> sum = 0;
  for (u64 a = 0; a < q; ++a) {
    BigInt v = fk.eval(a) % q;
    if (v < 0) v += q;
    u64 r = v.convert_to<u64>();
    if (r == 0) continue;
    double ang = 2 * M_PI * static_cast<double>(ind[r] % p) / static_cast<double>(p);
    sum += std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return std::abs(sum);
}

}  // namespace

TEST_SUITE_BEGIN("powersieve");

TEST_CASE("galois profile estimation") {
  auto f = FactoredPolynomial::parse("1,0,1");
  GaloisProfile prof = estimate_galois_profile(f, sieve20k(), 10000);
  CHECK(prof.d_f == 2);
  CHECK(prof.g_f == 2);
  CHECK(prof.histogram.count(0) == 1);
  CHECK(prof.histogram.count(2) == 1);
  CHECK(prof.histogram.size() == 2);
  CHECK(prof.density_d_f == doctest::Approx(0.5).epsilon(0.05));

  auto f2 = FactoredPolynomial::parse("1,0,1;2,0,1");
  GaloisProfile prof2 = estimate_galois_profile(f2, sieve20k(), 10000);
  CHECK(prof2.d_f == 2);
  for (const auto& [roots, freq] : prof2.histogram)
    CHECK((roots == 0 || roots == 2 || roots == 4));

  auto lin = FactoredPolynomial::parse("0,1");
  GaloisProfile prof_lin = estimate_galois_profile(lin, sieve20k(), 10000);
  CHECK(prof_lin.d_f == 1);
  CHECK(prof_lin.g_f == 1);

  CHECK_THROWS_AS(estimate_galois_profile(f, sieve20k(), 10), Error);
}

TEST_CASE("prime sequence construction") {
  auto f = FactoredPolynomial::parse("1,0,1");
  GaloisProfile prof = estimate_galois_profile(f, sieve20k(), 10000);

  PrimeSeq seq = build_prime_seq(f, sieve20k(), 5, 101, 3, prof);
  CHECK(seq.step == 3);
  CHECK(seq.complete);
  CHECK(seq.primes == std::vector<u64>{101, 293, 877});
  REQUIRE(seq.windows.size() == 2);
  CHECK(seq.windows[0].lo == 276);
  CHECK(seq.windows[0].hi == 303);

  // post hoc: window membership and the d_F-root condition for every element
  for (std::size_t i = 1; i < seq.primes.size(); ++i) {
    CHECK(seq.primes[i] >= seq.windows[i - 1].lo);
    CHECK(seq.primes[i] <= seq.windows[i - 1].hi);
  }
  IntPolynomial distinct = f.distinct_product();
  for (u64 q : seq.primes)
    CHECK(oracles::naive_roots(distinct, q).size() == 2);

  CHECK(build_prime_seq(f, sieve20k(), 5, 101, 1, prof).primes ==
        std::vector<u64>{101});
  CHECK_THROWS_AS(build_prime_seq(f, sieve20k(), 2, 101, 3, prof), Error);
  CHECK_THROWS_AS(build_prime_seq(f, sieve20k(), 5, 103, 3, prof), Error);
}

TEST_CASE("character sums pinned and against brute force") {
  auto f = FactoredPolynomial::parse("1,0,1");
  auto r13 = char_sum(f, 0, 13, 2);
  CHECK(r13.magnitude == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r13.bound == doctest::Approx(std::sqrt(13.0)));
  CHECK(r13.within);
  CHECK(r13.zeros == 2);  // a = 5, 8

  auto r7 = char_sum(f, 0, 7, 3);
  CHECK(r7.within);
  CHECK(r7.bound == doctest::Approx(std::sqrt(7.0)));

  for (u64 q : {7ull, 13ull, 19ull, 31ull, 37ull, 43ull}) {
    for (u64 p : {2ull, 3ull}) {
      if ((q - 1) % p != 0) continue;
      for (unsigned k = 0; k <= 1; ++k) {
        auto r = char_sum(f, k, q, p);
        CHECK(r.magnitude ==
              doctest::Approx(naive_char_sum_magnitude(f, k, q, p)).epsilon(1e-9));
      }
    }
  }
  CHECK_THROWS_AS(char_sum(f, 0, 11, 3), Error);  // 3 does not divide 10
  CHECK_THROWS_AS(char_sum(f, 4, 7, 2), Error);   // q <= deg(F) k
}

TEST_CASE("p-th residue value counts") {
  auto f = FactoredPolynomial::parse("1,0,1");
  auto r7 = count_pth_residue_values(f, 0, 7, 3);
  CHECK(r7.s_k == 1);  // only a = 0 gives a cube (value 1)
  CHECK(r7.lhs == doctest::Approx(4.0));
  CHECK(r7.bound == doctest::Approx(2 * std::sqrt(7.0)));
  CHECK(r7.zeros == 0);
  CHECK(r7.within);

  auto r13 = count_pth_residue_values(f, 0, 13, 2);
  CHECK(r13.s_k == 7);  // {0,3,4,5,8,9,10}
  CHECK(r13.zeros == 2);
  CHECK(r13.within);

  // negative control: a square polynomial makes every value a square, and
  // the op's precondition lives upstream in the census, so count directly
  auto sq = FactoredPolynomial::parse("1,0,1^2");
  auto rs = count_pth_residue_values(sq, 0, 13, 2);
  CHECK(rs.s_k == 13);
}

TEST_CASE("Weil grid, exact, unit-test slice") {
  auto f = FactoredPolynomial::parse("1,0,1");
  PrimeSieve sieve(199);
  for (u64 q : sieve.primes()) {
    for (u64 p : {2ull, 3ull}) {
      if ((q - 1) % p != 0) continue;
      for (unsigned k = 0; k <= 1; ++k) {
        if (q <= 2 * k) continue;
        if (sdisc(shifted_product(f, k)) % q == 0) continue;
        if (sdisc(f) % q == 0) continue;
        auto cs = char_sum(f, k, q, p);
        CHECK(cs.magnitude <= cs.bound + 1e-6);
        auto rc = count_pth_residue_values(f, k, q, p);
        CHECK(rc.lhs <= rc.bound_with_zeros + 1e-6);
      }
    }
  }
}

TEST_CASE("F_k non-power checks") {
  auto f = FactoredPolynomial::parse("1,0,1");
  CHECK(fk_not_power_check(f, 1, 13, 2));
  CHECK(fk_not_power_check(f, 0, 5, 2));
  CHECK(fk_not_power_check(f, 2, 17, 3));
  auto sq = FactoredPolynomial::parse("1,0,1^2");
  CHECK_THROWS_AS(fk_not_power_check(sq, 0, 13, 2), Error);
}

TEST_CASE("turan experiment") {
  auto f = FactoredPolynomial::parse("1,0,1");
  auto r = turan_experiment(f, 0, 2, 10000, 100, sieve20k());
  CHECK(r.prime_count == 21);  // all odd primes in (100, 200]
  CHECK(r.u == doctest::Approx(10.5));
  CHECK(r.within);
  CHECK(static_cast<double>(r.survivors) <= r.bound);

  // brute-force survivors on a small instance
  auto small = turan_experiment(f, 0, 2, 200, 20, sieve20k());
  std::vector<u64> qs;
  for (u64 q : sieve20k().primes_in(21, 40))
    if (q % 2 == 1 && BigInt(-4) % q != 0) qs.push_back(q);
  u64 expect = 0;
  for (u64 n = 1; n <= 200; ++n) {
    bool ok = true;
    for (u64 q : qs) {
      BigInt v = (BigInt(n) * n + 1) % q;
      if (v != 0 && oracles::naive_legendre(v, q) == -1) ok = false;
    }
    if (ok) ++expect;
  }
  CHECK(small.survivors == expect);
  CHECK(small.within);

  auto two = turan_experiment(FactoredPolynomial::parse("1,0,1;2,0,1"), 1, 2,
                              10000, 200, sieve20k());
  CHECK(two.within);

  CHECK_THROWS_AS(turan_experiment(f, 0, 997, 10, 10, sieve20k()), Error);
}

TEST_CASE("gap structure and the gap check") {
  auto gaps = gap_structure({1, 2, 3, 4, 5, 6}, 10);
  CHECK(gaps == std::map<u64, u64>{{1, 5}});

  auto check = gap_lemma_check({1, 2, 3, 4, 5, 6}, 10, 2);
  CHECK(check.holds);
  CHECK(check.witness_k == 1);
  CHECK(check.witness_count == 5);
  CHECK(check.threshold == doctest::Approx(2.5));

  // every-other-integer set sits exactly at |S| = X/K: not applicable
  std::vector<u64> alt;
  for (u64 n = 1; n <= 100; n += 2) alt.push_back(n);
  CHECK_THROWS_AS(gap_lemma_check(alt, 100, 2), Error);

  // sum over gap classes is |S| - 1
  std::mt19937_64 rng(53);
  for (int i = 0; i < 50; ++i) {
    std::vector<u64> s;
    for (u64 n = 1; n <= 300; ++n)
      if (std::uniform_real_distribution<double>(0, 1)(rng) < 0.3) s.push_back(n);
    if (s.size() < 2) continue;
    u64 total = 0;
    for (const auto& [k, c] : gap_structure(s, 300)) total += c;
    CHECK(total == s.size() - 1);
  }
}

TEST_CASE("gap lemma holds on the provable regime (K >= 6)") {
  std::mt19937_64 rng(59);
  int done = 0;
  while (done < 2000) {
    u64 x = std::uniform_int_distribution<u64>(50, 500)(rng);
    u64 k = std::uniform_int_distribution<u64>(6, 10)(rng);
    double density =
        std::uniform_real_distribution<double>(1.0 / static_cast<double>(k), 1.0)(rng);
    std::vector<u64> s;
    for (u64 n = 1; n <= x; ++n)
      if (std::uniform_real_distribution<double>(0, 1)(rng) < density)
        s.push_back(n);
    if (s.size() * k <= x) continue;
    CHECK(gap_lemma_check(s, x, k).holds);
    ++done;
  }
}

TEST_CASE("gap lemma explicit threshold is tight: documented counterexample") {
  // X = 504, K = 2: 125 gap-1 pairs, 125 gap-2 pairs, remaining gaps of 3;
  // |S| = 293 > 252 = X/K yet both classes sit below 2X/K^3 = 126.
  std::vector<u64> s{1};
  for (int i = 0; i < 125; ++i) s.push_back(s.back() + 1);
  for (int i = 0; i < 125; ++i) s.push_back(s.back() + 2);
  while (s.back() + 3 <= 504) s.push_back(s.back() + 3);
  REQUIRE(s.size() == 293);
  REQUIRE(s.size() * 2 > 504);
  auto check = gap_lemma_check(s, 504, 2);
  CHECK_FALSE(check.holds);
  auto gaps = gap_structure(s, 504);
  CHECK(gaps[1] == 125);
  CHECK(gaps[2] == 125);
}

TEST_CASE("pth power census") {
  auto f = FactoredPolynomial::parse("1,0,1");
  GaloisProfile prof = estimate_galois_profile(f, sieve20k(), 10000);
  auto r = pth_power_census(f, 2, 300, &prof);
  CHECK(r.hits == std::vector<u64>{3});
  CHECK(r.unit_x.empty());
  CHECK(r.bound_24_25 == doctest::Approx(std::pow(300.0, 0.96)));
  CHECK_FALSE(r.bound_galois.has_value());  // ceil(2/2) = 1 degenerates

  auto r5 = pth_power_census(f, 5, 100, &prof);
  CHECK(r5.hits.empty());
  REQUIRE(r5.bound_galois.has_value());
  CHECK(*r5.bound_galois ==
        doctest::Approx(std::pow(100.0, std::log(3.0) / std::log(3.0))));

  auto fang1 = pth_power_census(FactoredPolynomial::parse("1,0,4"), 2, 300);
  CHECK(fang1.hits.empty());
  auto fang2 = pth_power_census(FactoredPolynomial::parse("1,-2,2"), 2, 300);
  CHECK(fang2.hits.empty());
  CHECK(fang2.unit_x == std::vector<u64>{1});

  CHECK_THROWS_AS(pth_power_census(FactoredPolynomial::parse("1,0,1^2"), 2, 50),
                  Error);
  CHECK_THROWS_AS(pth_power_census(f, 4, 50), Error);  // composite power

  // zero value stops the sweep
  auto zr = pth_power_census(FactoredPolynomial::parse("-5,1"), 2, 50);
  CHECK(zr.zero_at == 5);

  // census counts here are nonincreasing in p for these polynomials
  for (const char* text : {"1,0,1", "1,0,4", "1,-2,2"}) {
    auto poly = FactoredPolynomial::parse(text);
    std::size_t prev = 1000;
    for (u64 p : {2ull, 3ull, 5ull}) {
      auto c = pth_power_census(poly, p, 200);
      CHECK(c.hits.size() <= prev);
      prev = c.hits.size();
    }
  }
}

TEST_CASE("squarefull scan") {
  auto f = FactoredPolynomial::parse("1,0,1");
  auto r = squarefull_scan(f, 1, 10);
  CHECK(r.hits == std::vector<u64>{3});

  auto cubic = FactoredPolynomial::parse("1,0,0,1");
  auto rc = squarefull_scan(cubic, 2, 200);
  CHECK(rc.hits.empty());
}

TEST_SUITE_END();
