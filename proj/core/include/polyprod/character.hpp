#ifndef POLYPROD_CHARACTER_HPP
#define POLYPROD_CHARACTER_HPP

#include <complex>
#include <vector>

#include "polyprod/bigint.hpp"

namespace polyprod {

/// One fixed nontrivial multiplicative character of prime order p modulo a
/// prime q with p | q-1, built from the least primitive root g of q.
/// chi(r) = exp(2*pi*i * (ind_g(r) mod p) / p) for r != 0, chi(0) = 0.
class CharacterTable {
 public:
  static CharacterTable build(u64 q, u64 p);

  u64 modulus() const { return q_; }
  u64 order() const { return p_; }
  u64 generator() const { return g_; }

  /// Exponent class in {0,...,p-1} for nonzero residues, -1 for 0.
  int exponent_class(u64 residue) const { return classes_[residue % q_]; }
  /// Zero counts as a p-th power here (0 = 0^p).
  bool is_pth_power_residue(u64 residue) const {
    return classes_[residue % q_] <= 0;
  }
  std::complex<double> value(u64 residue) const;

 private:
  u64 q_ = 0, p_ = 0, g_ = 0;
  std::vector<int> classes_;
};

u64 least_primitive_root(u64 q);

/// |sum_j counts[j] * exp(2*pi*i*j/p)|, accumulated in rectangular
/// coordinates.
double root_of_unity_sum_magnitude(const std::vector<i64>& counts);

}  // namespace polyprod

#endif
