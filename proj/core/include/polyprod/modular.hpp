#ifndef POLYPROD_MODULAR_HPP
#define POLYPROD_MODULAR_HPP

#include <optional>
#include <vector>

#include "polyprod/bigint.hpp"
#include "polyprod/poly.hpp"

namespace polyprod {

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
u64 invmod(u64 a, u64 m);  // throws DomainError when not invertible

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(u64 n);

/// Jacobi symbol (a|n) for odd positive n; 0 on a shared factor.
int jacobi(const BigInt& a, const BigInt& n);

/// Square roots of a modulo an odd prime p: both roots {r, p-r} when a is a
/// nonzero residue, {0} when p | a, empty when a is a nonresidue.
/// Tonelli-Shanks on the nontrivial path.
std::vector<u64> sqrt_mod_p(const BigInt& a, u64 p);

/// Reduction of an integer polynomial modulo p, ascending coefficients with
/// trailing zeros trimmed.
std::vector<u64> poly_mod_p(const IntPolynomial& poly, u64 p);

u64 eval_poly_mod(const std::vector<u64>& coeffs, u64 n, u64 p);

/// All r in [0, p) with P(r) == 0 (mod p), without multiplicity, sorted.
/// Degrees 1 and 2 are solved by formula; higher degrees by enumeration,
/// capped (CapExceeded beyond the cap).
std::vector<u64> roots_mod_p(const IntPolynomial& poly, u64 p,
                             u64 enumeration_cap = 1000000);

/// Roots of P modulo p^j.  Nonsingular roots lift by Hensel iteration;
/// singular ones by exhaustive per-level lifting.
std::vector<u64> lift_roots(const IntPolynomial& poly, u64 p, unsigned j,
                            u64 enumeration_cap = 1000000);

/// Monic gcd over F_q, ascending coefficients; {1} when coprime.
std::vector<u64> poly_gcd_mod_q(const IntPolynomial& p1, const IntPolynomial& p2,
                                u64 q);

/// Squarefree decomposition over F_q: returns (A_m, m) pairs with P ~ prod
/// A_m^m up to a scalar, each A_m squarefree nonconstant.  Handles the
/// char-q q-th-power degeneration.
std::vector<std::pair<std::vector<u64>, unsigned>> squarefree_decomposition_mod_q(
    std::vector<u64> coeffs, u64 q);

}  // namespace polyprod

#endif
