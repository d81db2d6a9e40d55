#ifndef POLYPROD_CRITERIA_HPP
#define POLYPROD_CRITERIA_HPP

#include <string>
#include <vector>

#include "polyprod/bigint.hpp"
#include "polyprod/poly.hpp"

namespace polyprod {

/// The multiset {D_i} of quadratic discriminants, D_1 first (the
/// distinguished index).  Every entry must be nonzero and not a perfect
/// square, else the source quadratic was reducible.
class DiscriminantProfile {
 public:
  explicit DiscriminantProfile(std::vector<BigInt> discs);
  static DiscriminantProfile from_quadratics(
      const std::vector<IntPolynomial>& fs);

  const std::vector<BigInt>& discs() const { return discs_; }
  std::size_t size() const { return discs_.size(); }

 private:
  std::vector<BigInt> discs_;
};

/// 1 + sum over nonempty J subset {1..I} with square prod_{j in J} D_j of
/// (-1)^{|J \ {1}|}.
i64 j_f(const DiscriminantProfile& profile);

/// 1 + sum over the same subsets of (-1)^{|J|}.
i64 j_f_prime(const DiscriminantProfile& profile);

/// A modulus M and the unit classes a mod M whose primes realize a
/// prescribed Legendre pattern.
struct ResidueCriterion {
  BigInt modulus;
  std::vector<BigInt> classes;  // sorted units
};

/// Classes a mod M = 4 prod |D_i| with (D_1|p) = +1 and (D_i|p) = -1 for
/// i > 1 for every prime p in the class; requires J_f > 0 and is nonempty
/// then (InternalInconsistency otherwise).
ResidueCriterion legendre_pattern_classes(const DiscriminantProfile& profile,
                                          u64 enumeration_cap = 100000000);

struct TheoremCheck {
  std::string theorem;
  bool applies = false;
  std::string reason;
};

struct ApplicabilityReport {
  i64 jf = 0;
  i64 jf_prime = 0;
  std::vector<TheoremCheck> checks;
  std::string matched = "none";     // first applicable theorem
  std::string conclusion;           // what the matched theorem yields
};

/// Mechanical hypothesis evaluation for the squarefull / perfect-square
/// theorems over a set of quadratics fs and linears gs, in routing order:
///   all-pairs-square         every D_1 D_i square, all monic, no linears
///   distinguished-class      f_1 monic, J_f > 0, linears absent or monic
///   coprime-linear-leaders   J_f > 0 plus the linear-coefficient conditions
///   signed-subset-count      J'_f != 0 plus the leader-ordering conditions
ApplicabilityReport check_applicability(const std::vector<IntPolynomial>& fs,
                                        const std::vector<IntPolynomial>& gs);

/// exp(8((4 C0 + 8) D + 2) / 5): the largest x that needs checking before
/// N_x = prod (n^2+D) can no longer be squarefull.
double explicit_bound(i64 d, double c0);

/// exp((8/5)(2 - C_f + 4 C0 D + 8 D)) for a general monic quadratic written
/// (n - alpha)^2 + D.
double monic_variant_bound(double cf, double d, double c0);

/// A valid strict lower bound C_f < 0 for log |f(n)/n^2| over integers
/// n >= 1, for monic irreducible quadratic f; direct scan plus a tail bound.
double minimize_cf(const IntPolynomial& f);

}  // namespace polyprod

#endif
