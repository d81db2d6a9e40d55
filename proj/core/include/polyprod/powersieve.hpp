#ifndef POLYPROD_POWERSIEVE_HPP
#define POLYPROD_POWERSIEVE_HPP

#include <map>
#include <optional>
#include <vector>

#include "polyprod/bigint.hpp"
#include "polyprod/poly.hpp"
#include "polyprod/sieve.hpp"

namespace polyprod {

/// Root-count statistics of F over sampled good primes (p not dividing the
/// leading coefficient or sdisc).  d_F is the least root count that occurs;
/// g_F is estimated as the reciprocal of the observed density of that count
/// and is overridable by the caller.
struct GaloisProfile {
  std::map<int, u64> histogram;  // #roots -> #good primes
  u64 primes_scanned = 0;
  int d_f = 0;
  double density_d_f = 0;
  int g_f = 0;
};

GaloisProfile estimate_galois_profile(const FactoredPolynomial& f,
                                      const PrimeSieve& sieve, u64 prime_budget);

struct SeqWindow {
  u64 lo = 0, hi = 0;  // inclusive
};

/// q_1 < q_2 < ... with each q_{i+1} the largest prime in
/// [ceil(p/d_F) q_i (1 - g_F log q_i / q_i), ceil(p/d_F) q_i] where F has
/// exactly d_F roots; stops early (complete = false) when a window holds no
/// qualifying prime.
struct PrimeSeq {
  u64 power = 0;
  u64 step = 0;  // ceil(p / d_F)
  std::vector<u64> primes;
  std::vector<SeqWindow> windows;  // windows[i] produced primes[i+1]
  bool complete = false;
};

PrimeSeq build_prime_seq(const FactoredPolynomial& f, const PrimeSieve& sieve,
                         u64 p, u64 q1, unsigned count,
                         const GaloisProfile& profile);

struct CharSumResult {
  double magnitude = 0;
  double bound = 0;  // (deg F_k - 1) sqrt(q)
  bool within = false;
  u64 zeros = 0;  // #a with F_k(a) == 0 (mod q); chi(0) = 0 contributes nothing
  int deg_f_k = 0;
};

/// |sum_{a mod q} chi_p(F_k(a))| against the Weil bound; requires q == 1
/// (mod p), q not dividing sdisc(F), q > deg(F) k.
CharSumResult char_sum(const FactoredPolynomial& f, unsigned k, u64 q, u64 p);

struct PthResidueCount {
  u64 s_k = 0;        // #a mod q with F_k(a) a p-th power residue (0 included)
  double lhs = 0;     // |p S_k - q|
  double bound = 0;   // (p-1)(deg F_k - 1) sqrt(q)
  double bound_with_zeros = 0;  // + p * zeros, the chi(0)=0 correction
  u64 zeros = 0;
  bool within = false;  // lhs <= bound_with_zeros
};

PthResidueCount count_pth_residue_values(const FactoredPolynomial& f, unsigned k,
                                         u64 q, u64 p);

/// True iff some irreducible factor of F_k mod q has multiplicity not
/// divisible by p (via squarefree decomposition); expected always true under
/// the preconditions (q good, q > deg(F) k, F itself not s G^p).
bool fk_not_power_check(const FactoredPolynomial& f, unsigned k, u64 q, u64 p);

struct TuranReport {
  u64 x = 0;
  u64 z = 0;
  u64 p = 0;
  unsigned k = 0;
  std::size_t prime_count = 0;  // |P|, primes in (z, 2z], q == 1 (mod p), good
  double u = 0;                 // U(z) = |P| (p-1)/p
  double sum_r = 0;             // sum over P of |R_q|
  double sum_rr = 0;            // sum over ordered pairs of |R_{q1,q2}|
  u64 survivors = 0;            // #{n <= X : F_k(n) p-th residue mod all q}
  double bound = 0;             // X/U + 2 sum_r/U + sum_rr/U^2
  bool within = false;
};

TuranReport turan_experiment(const FactoredPolynomial& f, unsigned k, u64 p,
                             u64 x, u64 z, const PrimeSieve& sieve);

/// Gap census of a subset of [1, X]: k -> #{consecutive pairs at distance k}.
std::map<u64, u64> gap_structure(std::vector<u64> s, u64 x);

struct GapLemmaCheck {
  bool holds = false;
  u64 witness_k = 0;      // smallest k <= K with the large gap class
  u64 witness_count = 0;  // |S(X)_k| there
  double threshold = 0;   // 2X / K^3
};

/// Checks that some k <= K has |S(X)_k| >= 2X/K^3; requires |S| > X/K
/// strictly (NotApplicable otherwise) and K < X.
GapLemmaCheck gap_lemma_check(const std::vector<u64>& s, u64 x, u64 k_max);

struct CensusReport {
  u64 power = 0;
  u64 x_max = 0;
  std::vector<u64> hits;    // x with N_x a perfect p-th power, |N_x| > 1
  std::vector<u64> unit_x;  // x with |N_x| = 1, reported separately
  std::optional<u64> zero_at;  // sweep stops here when F hits a zero
  double bound_24_25 = 0;      // X^{24/25}
  std::optional<double> bound_galois;  // X^{log(d_F+1)/log ceil(p/d_F)};
                                       // absent when ceil(p/d_F) = 1
  int d_f = 0;
};

/// Exact census of perfect p-th powers among N_1..N_X via one incremental
/// ledger sweep.  Requires F != s G^p (TheoremInapplicable otherwise).  The
/// Galois profile feeds the density-bound report; without one only the
/// X^{24/25} bound is filled in.
CensusReport pth_power_census(const FactoredPolynomial& f, u64 p, u64 x_max,
                              const GaloisProfile* profile = nullptr);

struct SquarefullScanReport {
  u64 x_min = 0;
  u64 x_max = 0;
  std::vector<u64> hits;    // x with N_x squarefull and |N_x| > 1
  std::vector<u64> unit_x;
  std::optional<u64> zero_at;
};

SquarefullScanReport squarefull_scan(const FactoredPolynomial& f, u64 x_min,
                                     u64 x_max);

}  // namespace polyprod

#endif
