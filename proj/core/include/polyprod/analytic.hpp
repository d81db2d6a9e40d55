#ifndef POLYPROD_ANALYTIC_HPP
#define POLYPROD_ANALYTIC_HPP

#include <vector>

#include "polyprod/bigint.hpp"
#include "polyprod/sieve.hpp"

namespace polyprod {

u64 euler_phi(u64 n);

struct APSumRow {
  double z = 0;
  double theta = 0;            // sum of log p over p <= z in the class
  u64 pi = 0;                  // count of those primes
  double sum_logp_over_p = 0;
  double sum_logp_over_pm1 = 0;  // log p / (p-1)
  double deviation = 0;          // |sum_logp_over_p - log z / phi(q)|
};

/// Prime sums over the progression p == a (mod q), tabulated on a geometric
/// z-grid (ratio 1.1) refined with every prime crossing for q <= 12.
struct APSumTable {
  u64 q = 1, a = 1;
  std::vector<APSumRow> rows;
};

APSumTable build_ap_sum_table(const PrimeSieve& sieve, u64 q, u64 a,
                              double zmax);

/// |sum_{p<=z, p==a(q)} log p / p - log z / phi(q)|; terms accumulated in
/// descending magnitude.
double s_deviation(const PrimeSieve& sieve, double z, u64 q, u64 a);

/// sup over q <= qmax, units a, prime crossings z <= zmax of
/// (sum log p/(p-1) - log z/phi(q)), floored at 0.1; the working C0 for the
/// explicit squarefull bounds.
double estimate_c0(const PrimeSieve& sieve, u64 qmax, double zmax);

/// Largest S(z;q,a) over q <= qmax, units a, and z <= zmax; report-only
/// regression quantity.
double sup_s_deviation(const PrimeSieve& sieve, u64 qmax, double zmax);

struct BrunTitchmarshCheck {
  u64 pi = 0;
  double bound = 0;
  bool holds = false;
};

/// pi(z;q,a) <= 2z / (phi(q) log(z/q)) for z > q.
BrunTitchmarshCheck brun_titchmarsh_check(const PrimeSieve& sieve, double z,
                                          u64 q, u64 a);

/// Sweeps every prime interval of the class up to zmax, testing the bound at
/// the interval endpoints and the interior minimum of the bound curve.
bool brun_titchmarsh_holds_on_range(const PrimeSieve& sieve, u64 q, u64 a,
                                    double zmax);

struct ChebyshevReport {
  double theta = 0;
  double theta_bound = 0;   // 2 z log 2
  bool theta_ok = false;
  u64 pi = 0;
  double pi_bound = 0;      // 2 z / log z
  bool pi_ok = false;
};

ChebyshevReport chebyshev_checks(const PrimeSieve& sieve, double z);

struct FirstPrimeRemark {
  u64 first_prime = 0;        // p(q;a)
  double leading_term = 0;    // log p / p
  double refined_deviation = 0;  // S(z;q,a) - log p / p
  double q_pow = 0;              // q^{-1/3}, the remark's error scale
};

FirstPrimeRemark first_prime_remark(const PrimeSieve& sieve, double z, u64 q,
                                    u64 a);

}  // namespace polyprod

#endif
