#ifndef POLYPROD_POLY_HPP
#define POLYPROD_POLY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "polyprod/bigint.hpp"

namespace polyprod {

/// Integer-coefficient polynomial in one variable, exact arithmetic.
/// Coefficients are stored in ascending degree order (c0..cd) with a nonzero
/// leading coefficient unless the polynomial is identically zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<i64> coeffs);

  /// Parses the ascending comma-separated coefficient format, e.g. "1,0,1"
  /// for n^2 + 1.
  static IntPolynomial parse(const std::string& text);
  std::string to_string() const;

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading_coeff() const;
  const BigInt& coeff(std::size_t i) const;  // zero beyond the degree

  BigInt eval(const BigInt& n) const;
  BigInt operator()(const BigInt& n) const { return eval(n); }

  IntPolynomial derivative() const;
  /// Substitutes n -> n + shift, exactly.
  IntPolynomial shifted(const BigInt& shift) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator-() const;

  BigInt content() const;  // gcd of coefficients, 0 for the zero polynomial
  /// Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;
  bool is_primitive() const;

  bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const IntPolynomial& rhs) const { return !(*this == rhs); }
  bool operator<(const IntPolynomial& rhs) const;  // canonical order

 private:
  std::vector<BigInt> coeffs_;
  void normalize();
};

/// b^2 - 4ac of a degree-2 polynomial.  Throws DegreeError otherwise.
BigInt discriminant_quadratic(const IntPolynomial& p);

/// Irreducibility over the rationals for degree 1 and 2 only; degree-2
/// polynomials are irreducible iff the discriminant is not a perfect square
/// (zero and positive square discriminants are reducible).  Throws
/// UnsupportedDegree beyond degree 2.
bool is_irreducible(const IntPolynomial& p);

/// Resultant of two nonzero polynomials, exact (Sylvester matrix with
/// fraction-free Bareiss elimination).
BigInt resultant(const IntPolynomial& p, const IntPolynomial& q);

/// Discriminant of a nonconstant polynomial via the resultant with the
/// derivative; degree-1 polynomials have discriminant 1 by convention.
BigInt discriminant(const IntPolynomial& p);

struct PolyFactor {
  IntPolynomial poly;  // primitive, positive leading coefficient
  unsigned multiplicity = 1;
  /// Degree >= 3 factors are accepted only with this flag; there is no
  /// integer factorization here beyond rational-root extraction.
  bool asserted_irreducible = false;

  bool operator==(const PolyFactor& rhs) const {
    return poly == rhs.poly && multiplicity == rhs.multiplicity;
  }
};

/// A polynomial presented as s * f1^e1 * ... * fk^ek with a reduced rational
/// scale and pairwise-distinct primitive factors.
class FactoredPolynomial {
 public:
  FactoredPolynomial() = default;
  FactoredPolynomial(Rational scale, std::vector<PolyFactor> factors);

  /// Builds a factored form from a plain polynomial: extracts the content,
  /// splits off rational roots, and splits reducible quadratics.  Remaining
  /// factors of degree >= 3 are rejected unless `assert_irreducible`.
  static FactoredPolynomial from_polynomial(const IntPolynomial& p,
                                            bool assert_irreducible = false);

  /// Parses the factored text format: semicolon-separated "coeffs^mult"
  /// terms with an optional leading "s=num/den" term, e.g.
  /// "s=2;1,0,1^2;2,0,1".  A bare coefficient list (no ';', no "s=", no '^')
  /// is routed through from_polynomial.
  static FactoredPolynomial parse(const std::string& text,
                                  bool assert_irreducible = false);
  std::string to_string() const;

  const Rational& scale() const { return scale_; }
  const std::vector<PolyFactor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  int degree() const;
  /// The represented polynomial sum, exact.  Throws InvalidFactorization if
  /// the scale does not clear the denominators.
  IntPolynomial expand() const;
  /// Product of the distinct factors, each taken once.
  IntPolynomial distinct_product() const;

  Rational eval(const BigInt& n) const;

  /// All factors irreducible: degree <= 2 checked, degree >= 3 must carry the
  /// asserted flag.
  bool all_irreducible() const;

  bool operator==(const FactoredPolynomial& rhs) const;

 private:
  Rational scale_ = 1;
  std::vector<PolyFactor> factors_;
  void canonicalize();
};

/// Discriminant of the product of the distinct factors (multiplicities
/// ignored).  Throws InvalidFactorization on duplicate factors.
BigInt sdisc(const FactoredPolynomial& f);

/// F_k(n) = F(n + offset) F(n + offset + 1) ... F(n + offset + k) in factored
/// form; colliding shifted factors merge multiplicities.
FactoredPolynomial shifted_product(const FactoredPolynomial& f, unsigned k,
                                   i64 offset = 0);

/// True iff every multiplicity is divisible by p, i.e. F = s * G(n)^p.
bool is_scaled_pth_power(const FactoredPolynomial& f, u64 p);

}  // namespace polyprod

#endif
