#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/poly.hpp"

using namespace polyprod;

namespace {

// Independent resultant: Sylvester matrix eliminated over the rationals.
BigInt rational_sylvester_resultant(const IntPolynomial& p,
                                    const IntPolynomial& q) {
  int m = p.degree(), n = q.degree();
  int size = m + n;
  std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size, 0));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) a[r][r + j] = Rational(p.coeff(m - j));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) a[n + r][r + j] = Rational(q.coeff(n - j));
  Rational det = 1;
  for (int k = 0; k < size; ++k) {
    int piv = -1;
    for (int r = k; r < size; ++r)
      if (a[r][k] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (int r = k + 1; r < size; ++r) {
      Rational f = a[r][k] / a[k][k];
      for (int c = k; c < size; ++c) a[r][c] -= f * a[k][c];
    }
  }
  CHECK(denominator(det) == 1);
  return numerator(det);
}

}  // namespace

TEST_SUITE_BEGIN("polycore");

TEST_CASE("eval is exact") {
  IntPolynomial f({1, 0, 1});  // n^2 + 1
  CHECK(f.eval(0) == 1);
  CHECK(f.eval(10) == 101);
  IntPolynomial g({1, -2, 2});  // 2n^2 - 2n + 1
  CHECK(g.eval(3) == 13);
  // big-input exactness
  BigInt big("123456789123456789");
  CHECK(f.eval(big) == big * big + 1);
}

TEST_CASE("parse and to_string round trip") {
  IntPolynomial f = IntPolynomial::parse("1,0,1");
  CHECK(f.degree() == 2);
  CHECK(f.to_string() == "1,0,1");
  CHECK(IntPolynomial::parse("-7, 3 ,0, 2").coeff(0) == -7);
  CHECK_THROWS_AS(IntPolynomial::parse("1,,2"), Error);
  CHECK_THROWS_AS(IntPolynomial::parse("1,x"), Error);
}

TEST_CASE("discriminant_quadratic") {
  CHECK(discriminant_quadratic(IntPolynomial({1, 0, 1})) == -4);
  CHECK(discriminant_quadratic(IntPolynomial({2, 0, 1})) == -8);
  CHECK(discriminant_quadratic(IntPolynomial({1, 0, 4})) == -16);
  CHECK_THROWS_AS(discriminant_quadratic(IntPolynomial({1, 1})), Error);

  // regression against the direct formula on random quadratics
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<i64> coeff(-50, 50);
  for (int i = 0; i < 200; ++i) {
    i64 a = coeff(rng), b = coeff(rng), c = coeff(rng);
    if (a == 0) continue;
    CHECK(discriminant_quadratic(IntPolynomial({c, b, a})) ==
          BigInt(b) * b - BigInt(4) * a * c);
  }
}

TEST_CASE("is_irreducible on degree 1 and 2") {
  CHECK(is_irreducible(IntPolynomial({0, 1})));
  CHECK(is_irreducible(IntPolynomial({1, 0, 1})));
  CHECK_FALSE(is_irreducible(IntPolynomial({-1, 0, 1})));  // disc 4
  CHECK_FALSE(is_irreducible(IntPolynomial({4, 4, 1})));   // disc 0
  CHECK_THROWS_AS(is_irreducible(IntPolynomial({1, 0, 0, 1})), Error);
}

TEST_CASE("resultant and discriminant, exact routes") {
  IntPolynomial f({1, 0, 1});
  CHECK(discriminant(f) == -4);
  IntPolynomial prod = f * IntPolynomial({2, 0, 1});
  CHECK(prod.to_string() == "2,0,3,0,1");  // n^4 + 3n^2 + 2
  // D1 * D2 * Res(f1,f2)^2 = (-4)(-8)(1)^2 = 32
  CHECK(discriminant(prod) == 32);

  // independent oracle route on a batch of products
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<i64> coeff(-6, 6);
  for (int i = 0; i < 50; ++i) {
    IntPolynomial a({coeff(rng), coeff(rng), coeff(rng)});
    IntPolynomial b({coeff(rng), coeff(rng)});
    if (a.degree() < 1 || b.degree() < 1) continue;
    CHECK(resultant(a, b) == rational_sylvester_resultant(a, b));
  }
}

TEST_CASE("sdisc ignores multiplicities and order") {
  auto f1 = FactoredPolynomial::parse("1,0,1");
  CHECK(sdisc(f1) == -4);
  auto f3 = FactoredPolynomial::parse("1,0,1^3");
  CHECK(sdisc(f3) == -4);
  auto prod = FactoredPolynomial::parse("1,0,1;2,0,1");
  CHECK(sdisc(prod) == 32);
  auto prod_rev = FactoredPolynomial::parse("2,0,1;1,0,1^4");
  CHECK(sdisc(prod_rev) == 32);
}

TEST_CASE("factored parse, expand, canonical form") {
  auto f = FactoredPolynomial::parse("s=3;1,0,1^2;2,0,1");
  CHECK(f.scale() == 3);
  CHECK(f.factors().size() == 2);
  CHECK(f.degree() == 6);
  // expansion: 3 (n^2+1)^2 (n^2+2)
  IntPolynomial expect =
      IntPolynomial({1, 0, 1}) * IntPolynomial({1, 0, 1}) * IntPolynomial({2, 0, 1});
  std::vector<BigInt> scaled(expect.coeffs());
  for (auto& c : scaled) c *= 3;
  CHECK(f.expand() == IntPolynomial(scaled));

  // content moves into the scale, factors stay primitive
  auto g = FactoredPolynomial::parse("2,0,2;0,3");  // 2(n^2+1) * 3n
  CHECK(g.scale() == 6);
  for (const auto& factor : g.factors()) CHECK(factor.poly.is_primitive());

  // duplicate factors merge
  auto h = FactoredPolynomial::parse("1,0,1;1,0,1");
  CHECK(h.factors().size() == 1);
  CHECK(h.factors()[0].multiplicity == 2);
}

TEST_CASE("from_polynomial splits rational roots and quadratics") {
  // n^3 + 1 = (n+1)(n^2-n+1)
  auto f = FactoredPolynomial::from_polynomial(IntPolynomial({1, 0, 0, 1}));
  REQUIRE(f.factors().size() == 2);
  CHECK(f.expand() == IntPolynomial({1, 0, 0, 1}));
  // n^2 - 1
  auto g = FactoredPolynomial::from_polynomial(IntPolynomial({-1, 0, 1}));
  CHECK(g.factors().size() == 2);
  CHECK(g.expand() == IntPolynomial({-1, 0, 1}));
  // 6n^2 + 5n + 1 = (2n+1)(3n+1)
  auto h = FactoredPolynomial::from_polynomial(IntPolynomial({1, 5, 6}));
  REQUIRE(h.factors().size() == 2);
  CHECK(h.expand() == IntPolynomial({1, 5, 6}));
  CHECK(h.scale() == 1);
  // (n-1)^2 merges
  auto sq = FactoredPolynomial::from_polynomial(IntPolynomial({1, -2, 1}));
  REQUIRE(sq.factors().size() == 1);
  CHECK(sq.factors()[0].multiplicity == 2);
  // irreducible cubic needs the assertion flag
  CHECK_THROWS_AS(FactoredPolynomial::from_polynomial(IntPolynomial({2, 0, 0, 1})),
                  Error);
  auto cubic =
      FactoredPolynomial::from_polynomial(IntPolynomial({2, 0, 0, 1}), true);
  CHECK(cubic.factors().size() == 1);
  // negative leading coefficient goes into the scale
  auto neg = FactoredPolynomial::from_polynomial(IntPolynomial({-1, 0, -1}));
  CHECK(neg.scale() == -1);
  CHECK(neg.expand() == IntPolynomial({-1, 0, -1}));
}

TEST_CASE("shifted_product") {
  auto f = FactoredPolynomial::parse("1,0,1");
  auto f0 = shifted_product(f, 0);
  CHECK(f0 == f);
  auto f1 = shifted_product(f, 1);
  REQUIRE(f1.factors().size() == 2);
  CHECK(f1.factors()[1].poly == IntPolynomial({2, 2, 1}));  // (n+1)^2+1

  auto lin = FactoredPolynomial::parse("0,1");  // n
  auto lin1 = shifted_product(lin, 1);
  CHECK(lin1.degree() == 2);

  // colliding shifts merge: n(n+1) shifted by one overlaps at (n+1)
  auto nn1 = FactoredPolynomial::parse("0,1;1,1");
  auto merged = shifted_product(nn1, 1);
  bool saw_mult2 = false;
  for (const auto& factor : merged.factors())
    if (factor.poly == IntPolynomial({1, 1}) && factor.multiplicity == 2)
      saw_mult2 = true;
  CHECK(saw_mult2);

  // start-offset variant: F(n+1)...F(n+k)
  auto off = shifted_product(f, 1, 1);
  CHECK(off.factors()[0].poly == IntPolynomial({2, 2, 1}));
}

TEST_CASE("shifted_product evaluation identity, exhaustive") {
  for (const char* text : {"1,0,1", "1,-2,2", "0,1;1,1"}) {
    auto f = FactoredPolynomial::parse(text);
    for (unsigned k = 0; k <= 4; ++k) {
      auto fk = shifted_product(f, k);
      for (i64 n = -50; n <= 50; ++n) {
        Rational expect = 1;
        for (unsigned j = 0; j <= k; ++j) expect *= f.eval(BigInt(n) + j);
        CHECK(fk.eval(n) == expect);
      }
    }
  }
}

TEST_CASE("is_scaled_pth_power") {
  CHECK(is_scaled_pth_power(FactoredPolynomial::parse("1,0,1^2"), 2));
  CHECK_FALSE(is_scaled_pth_power(FactoredPolynomial::parse("1,0,1;2,0,1"), 2));
  CHECK(is_scaled_pth_power(FactoredPolynomial::parse("1,0,1^2;2,0,1^4"), 2));
  CHECK_FALSE(is_scaled_pth_power(FactoredPolynomial::parse("1,0,1^2;2,0,1^4"), 3));
}

TEST_CASE("from_polynomial round trips rational-root-splittable products") {
  // the splitter handles linears (any multiplicity) plus at most one
  // irreducible quadratic; anything beyond that needs factored input
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<i64> small(-6, 6);
  std::uniform_int_distribution<int> nlin(1, 3), mult(1, 2), with_quad(0, 1);
  int done = 0;
  while (done < 150) {
    i64 content = small(rng);
    if (content == 0) continue;
    IntPolynomial prod(std::vector<BigInt>{BigInt(content)});
    bool usable = true;
    int count = nlin(rng);
    for (int i = 0; i < count; ++i) {
      IntPolynomial factor({small(rng), small(rng)});
      if (factor.degree() != 1) {
        usable = false;
        break;
      }
      for (int m = mult(rng); m > 0; --m) prod = prod * factor;
    }
    if (!usable) continue;
    if (with_quad(rng)) {
      i64 b = small(rng), c = small(rng);
      while (is_perfect_square(BigInt(b) * b - 4 * c)) c -= 3;
      prod = prod * IntPolynomial({c, b, 1});
    }
    auto f = FactoredPolynomial::from_polynomial(prod);
    CHECK(f.expand() == prod);
    for (const auto& factor : f.factors()) {
      CHECK(factor.poly.is_primitive());
      if (factor.poly.degree() == 2) CHECK(is_irreducible(factor.poly));
    }
    ++done;
  }
}

TEST_CASE("validation errors") {
  // reducible quadratic given explicitly as a factor
  CHECK_THROWS_AS(FactoredPolynomial::parse("4,4,1^1"), Error);
  // but the same input as a plain polynomial splits cleanly
  CHECK(FactoredPolynomial::parse("4,4,1").factors()[0].multiplicity == 2);
  CHECK_THROWS_AS(FactoredPolynomial::parse("1,0,0,1;"), Error);  // unasserted cubic factor
  CHECK_THROWS_AS(FactoredPolynomial::parse("s=0;1,0,1"), Error);
  CHECK_THROWS_AS(FactoredPolynomial::parse("1,0,1^0"), Error);
}

TEST_SUITE_END();
