#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "polyprod/analytic.hpp"
#include "polyprod/errors.hpp"

using namespace polyprod;

namespace {
const PrimeSieve& sieve100k() {
  static const PrimeSieve s(100000);
  return s;
}
}  // namespace

TEST_SUITE_BEGIN("analytic");

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(30) == 8);
  CHECK(euler_phi(97) == 96);
}

TEST_CASE("s_deviation pinned values") {
  // q = 1, z = 10: |log2/2 + log3/3 + log5/5 + log7/7 - log 10|
  double dev = s_deviation(sieve100k(), 10, 1, 1);
  CHECK(dev == doctest::Approx(0.98994).epsilon(1e-4));

  // q = 4, a = 1, z = 100: 11 primes, direct arithmetic oracle
  double expect = 0;
  for (u64 p : {5ull, 13ull, 17ull, 29ull, 37ull, 41ull, 53ull, 61ull, 73ull,
                89ull, 97ull})
    expect += std::log(static_cast<double>(p)) / static_cast<double>(p);
  expect = std::fabs(expect - std::log(100.0) / 2);
  double dev4 = s_deviation(sieve100k(), 100, 4, 1);
  CHECK(dev4 == doctest::Approx(expect).epsilon(1e-12));
  CHECK(dev4 <= 6);

  // below the first class prime the sum is empty
  double empty = s_deviation(sieve100k(), 5, 12, 1);
  CHECK(empty == doctest::Approx(std::log(5.0) / 4));

  CHECK_THROWS_AS(s_deviation(sieve100k(), 10, 4, 2), Error);   // gcd != 1
  CHECK_THROWS_AS(s_deviation(sieve100k(), 1e7, 4, 1), Error);  // sieve too small
}

TEST_CASE("s_deviation moves only via log z between class primes") {
  // 101 and 103 are consecutive 1 (mod 4) primes beyond 97
  double phi = 2.0;
  double d1 = s_deviation(sieve100k(), 101.5, 4, 1);
  double d2 = s_deviation(sieve100k(), 102.5, 4, 1);
  CHECK(std::fabs(d2 - d1) ==
        doctest::Approx(std::log(102.5 / 101.5) / phi).epsilon(1e-9));
}

TEST_CASE("ap sum table") {
  APSumTable table = build_ap_sum_table(sieve100k(), 4, 1, 1000);
  REQUIRE(!table.rows.empty());
  // columns nondecreasing in z, theta <= pi * log z
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    CHECK(table.rows[i].theta >= table.rows[i - 1].theta);
    CHECK(table.rows[i].pi >= table.rows[i - 1].pi);
    CHECK(table.rows[i].sum_logp_over_p >= table.rows[i - 1].sum_logp_over_p);
    CHECK(table.rows[i].sum_logp_over_pm1 >=
          table.rows[i - 1].sum_logp_over_pm1);
  }
  for (const auto& row : table.rows)
    CHECK(row.theta <= static_cast<double>(row.pi) * std::log(row.z) + 1e-9);
  // prime crossings are grid points for q <= 12
  bool has_13 = false;
  for (const auto& row : table.rows)
    if (row.z == 13.0) has_13 = true;
  CHECK(has_13);
}

TEST_CASE("theta over classes sums to theta minus primes dividing q") {
  for (u64 q = 2; q <= 30; ++q) {
    double total = 0;
    for (u64 a = 1; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      auto table = build_ap_sum_table(sieve100k(), q, a, 100000);
      total += table.rows.back().theta;
    }
    double theta_all = 0;
    for (u64 p : sieve100k().primes()) {
      if (q % p == 0) continue;
      theta_all += std::log(static_cast<double>(p));
    }
    CHECK(total == doctest::Approx(theta_all).epsilon(1e-9));
  }
}

TEST_CASE("estimate_c0") {
  // Q = 1, Z = 10: the sup sits at the crossing z = 3
  double c0 = estimate_c0(sieve100k(), 1, 10);
  CHECK(c0 == doctest::Approx(std::log(2.0) + std::log(3.0) / 2 - std::log(3.0))
                  .epsilon(1e-9));
  // floor engages on tiny ranges
  CHECK(estimate_c0(sieve100k(), 12, 1.5) == doctest::Approx(0.1));
  // monotone under doubling Z
  double a = estimate_c0(sieve100k(), 12, 50000);
  double b = estimate_c0(sieve100k(), 12, 100000);
  CHECK(b >= a);
  // stable under doubling at this scale (< 1%)
  CHECK(std::fabs(b - a) / a < 0.01);
}

TEST_CASE("brun-titchmarsh single checks") {
  auto c = brun_titchmarsh_check(sieve100k(), 100, 4, 1);
  CHECK(c.pi == 11);
  CHECK(c.bound == doctest::Approx(200.0 / (2 * std::log(25.0))));
  CHECK(c.holds);
  auto tight = brun_titchmarsh_check(sieve100k(), 5, 4, 1);
  CHECK(tight.holds);  // bound enormous just above q
  CHECK_THROWS_AS(brun_titchmarsh_check(sieve100k(), 4, 4, 1), Error);
}

TEST_CASE("brun-titchmarsh sweep over q <= 30") {
  for (u64 q = 1; q <= 30; ++q)
    for (u64 a = 1; a <= q; ++a) {
      if (q > 1 && std::gcd(a, q) != 1) continue;
      CHECK(brun_titchmarsh_holds_on_range(sieve100k(), q, a, 100000));
    }
}

TEST_CASE("theta(z;q,a) <= 8z/phi(q) for z > exp(sqrt(q))") {
  for (u64 q = 2; q <= 30; ++q) {
    double start = std::exp(std::sqrt(static_cast<double>(q)));
    if (start >= 100000) continue;
    for (u64 a = 1; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      auto table = build_ap_sum_table(sieve100k(), q, a, 100000);
      for (const auto& row : table.rows) {
        if (row.z <= start) continue;
        CHECK(row.theta <= 8.0 * row.z / static_cast<double>(euler_phi(q)) + 1e-9);
      }
    }
  }
}

TEST_CASE("chebyshev checks") {
  auto r10 = chebyshev_checks(sieve100k(), 10);
  CHECK(r10.theta == doctest::Approx(std::log(210.0)));
  CHECK(r10.theta_bound == doctest::Approx(20 * std::log(2.0)));
  CHECK(r10.pi == 4);
  CHECK(r10.theta_ok);
  CHECK(r10.pi_ok);
  auto r3 = chebyshev_checks(sieve100k(), 3);
  CHECK(r3.theta == doctest::Approx(std::log(6.0)));
  CHECK(r3.theta_ok);
  CHECK(r3.pi_ok);
  auto big = chebyshev_checks(sieve100k(), 100000);
  CHECK(big.theta_ok);
  CHECK(big.pi_ok);
}

TEST_CASE("first prime remark") {
  auto r = first_prime_remark(sieve100k(), 1000, 4, 1);
  CHECK(r.first_prime == 5);
  CHECK(r.leading_term == doctest::Approx(std::log(5.0) / 5));
  auto r3 = first_prime_remark(sieve100k(), 1000, 10, 3);
  CHECK(r3.first_prime == 3);
  CHECK(r3.q_pow == doctest::Approx(std::pow(10.0, -1.0 / 3.0)));

  // the reported triple for a sparser class
  auto r12 = first_prime_remark(sieve100k(), 100000, 12, 11);
  CHECK(r12.first_prime == 11);
  CHECK(r12.leading_term == doctest::Approx(std::log(11.0) / 11));
  CHECK(r12.refined_deviation ==
        doctest::Approx(s_deviation(sieve100k(), 100000, 12, 11) -
                        std::log(11.0) / 11));
}

TEST_CASE("sup_s_deviation regression shape") {
  double sup = sup_s_deviation(sieve100k(), 12, 100000);
  CHECK(sup > 0);
  CHECK(sup < 6);
  CHECK(sup >= s_deviation(sieve100k(), 100000, 4, 1));
}

TEST_SUITE_END();
