#include "polyprod/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "polyprod/errors.hpp"

namespace polyprod {

namespace {

BigInt gcd_big(BigInt a, BigInt b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

BigInt parse_bigint(const std::string& text) {
  std::string t = strip(text);
  require(!t.empty(), ErrorCode::ParseError, "empty integer");
  std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  require(i < t.size(), ErrorCode::ParseError, "bad integer '" + text + "'");
  for (; i < t.size(); ++i)
    require(t[i] >= '0' && t[i] <= '9', ErrorCode::ParseError,
            "bad integer '" + text + "'");
  return BigInt(t);
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<i64> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (i64 c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
  std::vector<BigInt> cs;
  for (const auto& part : split(text, ','))
    cs.push_back(parse_bigint(part));
  return IntPolynomial(std::move(cs));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i].str();
  }
  return os.str();
}

const BigInt& IntPolynomial::leading_coeff() const {
  static const BigInt kZero = 0;
  return coeffs_.empty() ? kZero : coeffs_.back();
}

const BigInt& IntPolynomial::coeff(std::size_t i) const {
  static const BigInt kZero = 0;
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

BigInt IntPolynomial::eval(const BigInt& n) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * n + *it;
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return IntPolynomial();
  std::vector<BigInt> cs(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    cs[i - 1] = coeffs_[i] * BigInt(i);
  return IntPolynomial(std::move(cs));
}

IntPolynomial IntPolynomial::shifted(const BigInt& shift) const {
  // Synthetic substitution n -> n + shift, one Horner pass per coefficient.
  std::vector<BigInt> out(coeffs_.size(), BigInt(0));
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    for (std::size_t j = out.size(); j-- > 1;)
      out[j] = out[j] * shift + out[j - 1];
    if (!out.empty()) out[0] = out[0] * shift + *it;
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPolynomial();
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> cs(coeffs_);
  for (auto& c : cs) c = -c;
  return IntPolynomial(std::move(cs));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = gcd_big(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (leading_coeff() < 0) g = -g;
  std::vector<BigInt> cs(coeffs_);
  for (auto& c : cs) c /= g;
  return IntPolynomial(std::move(cs));
}

bool IntPolynomial::is_primitive() const {
  return !is_zero() && content() == 1 && leading_coeff() > 0;
}

bool IntPolynomial::operator<(const IntPolynomial& rhs) const {
  if (coeffs_.size() != rhs.coeffs_.size())
    return coeffs_.size() < rhs.coeffs_.size();
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    if (coeffs_[i] != rhs.coeffs_[i]) return coeffs_[i] < rhs.coeffs_[i];
  return false;
}

BigInt discriminant_quadratic(const IntPolynomial& p) {
  require(p.degree() == 2, ErrorCode::DegreeError,
          "discriminant_quadratic needs degree 2, got degree " +
              std::to_string(p.degree()));
  return p.coeff(1) * p.coeff(1) - 4 * p.coeff(2) * p.coeff(0);
}

bool is_irreducible(const IntPolynomial& p) {
  int d = p.degree();
  require(d >= 1 && d <= 2, ErrorCode::UnsupportedDegree,
          "irreducibility decided for degree 1 and 2 only");
  if (d == 1) return true;
  return !is_perfect_square(discriminant_quadratic(p));
}

BigInt resultant(const IntPolynomial& p, const IntPolynomial& q) {
  require(!p.is_zero() && !q.is_zero(), ErrorCode::DomainError,
          "resultant of the zero polynomial");
  int m = p.degree(), n = q.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) return boost::multiprecision::pow(p.coeff(0), n);
  if (n == 0) return boost::multiprecision::pow(q.coeff(0), m);

  // Sylvester matrix, (m+n) x (m+n).
  int size = m + n;
  std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size, BigInt(0)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) a[r][r + j] = p.coeff(m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) a[n + r][r + j] = q.coeff(n - j);

  // Fraction-free Bareiss elimination; determinant ends up in a[size-1][size-1].
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < size; ++r)
        if (a[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int r = k + 1; r < size; ++r) {
      for (int c = k + 1; c < size; ++c) {
        a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
      }
      a[r][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[size - 1][size - 1] : -a[size - 1][size - 1];
}

BigInt discriminant(const IntPolynomial& p) {
  int d = p.degree();
  require(d >= 1, ErrorCode::DegreeError, "discriminant needs degree >= 1");
  if (d == 1) return 1;
  BigInt res = resultant(p, p.derivative());
  BigInt disc = res / p.leading_coeff();
  if ((static_cast<i64>(d) * (d - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

FactoredPolynomial::FactoredPolynomial(Rational scale,
                                       std::vector<PolyFactor> factors)
    : scale_(std::move(scale)), factors_(std::move(factors)) {
  canonicalize();
}

void FactoredPolynomial::canonicalize() {
  require(scale_ != 0, ErrorCode::InvalidFactorization, "zero scale");
  std::vector<PolyFactor> merged;
  for (auto& f : factors_) {
    require(!f.poly.is_zero(), ErrorCode::InvalidFactorization, "zero factor");
    require(f.poly.degree() >= 1, ErrorCode::InvalidFactorization,
            "constant factor; fold constants into the scale");
    require(f.multiplicity >= 1, ErrorCode::InvalidFactorization,
            "multiplicity must be >= 1");
    // Move content and sign into the scale so factors are primitive.
    IntPolynomial prim = f.poly.primitive_part();
    BigInt cont = f.poly.content();
    if (f.poly.leading_coeff() < 0) cont = -cont;
    for (unsigned i = 0; i < f.multiplicity; ++i) scale_ *= Rational(cont);
    bool found = false;
    for (auto& g : merged) {
      if (g.poly == prim) {
        g.multiplicity += f.multiplicity;
        g.asserted_irreducible = g.asserted_irreducible || f.asserted_irreducible;
        found = true;
        break;
      }
    }
    if (!found)
      merged.push_back(PolyFactor{prim, f.multiplicity, f.asserted_irreducible});
  }
  std::sort(merged.begin(), merged.end(),
            [](const PolyFactor& a, const PolyFactor& b) { return a.poly < b.poly; });
  factors_ = std::move(merged);
  for (const auto& f : factors_) {
    if (f.poly.degree() <= 2) {
      require(is_irreducible(f.poly), ErrorCode::InvalidFactorization,
              "reducible factor " + f.poly.to_string() +
                  "; split it before building the factored form");
    } else {
      require(f.asserted_irreducible, ErrorCode::UnsupportedDegree,
              "degree >= 3 factor " + f.poly.to_string() +
                  " requires an irreducibility assertion");
    }
  }
}

namespace {

// Divisor enumeration cap for rational-root extraction; beyond it the
// polynomial is left unsplit (degree >= 3 remainders then need the factored
// input form).
const i64 kRootSearchCap = 100000;

// Splits primitive `p` into primitive pieces by rational-root extraction.
// Degree >= 2 remainders with no rational root are returned unsplit.
void split_primitive(const IntPolynomial& p, std::vector<IntPolynomial>& out) {
  IntPolynomial cur = p;
  bool progress = true;
  while (cur.degree() >= 2 && progress) {
    progress = false;
    BigInt c0 = cur.coeff(0);
    if (c0 == 0) {
      out.push_back(IntPolynomial({0, 1}));
      std::vector<BigInt> cs(cur.coeffs().begin() + 1, cur.coeffs().end());
      cur = IntPolynomial(std::move(cs));
      progress = true;
      continue;
    }
    BigInt cd = abs(cur.leading_coeff());
    BigInt c0a = abs(c0);
    std::vector<BigInt> dens, nums;
    for (BigInt d = 1; d <= cd && d <= kRootSearchCap; ++d)
      if (cd % d == 0) dens.push_back(d);
    if (cd > kRootSearchCap) dens.push_back(cd);
    for (BigInt m = 1; m <= c0a && m <= kRootSearchCap; ++m)
      if (c0a % m == 0) nums.push_back(m);
    if (c0a > kRootSearchCap) nums.push_back(c0a);
    for (const BigInt& den : dens) {
      for (const BigInt& num : nums) {
        if (gcd_big(num, den) != 1) continue;  // lowest terms only
        for (int s : {1, -1}) {
          BigInt rn = s * num;
          // cur(rn/den) == 0, homogenized to avoid rationals.
          BigInt acc = 0;
          std::size_t sz = cur.coeffs().size();
          for (std::size_t i = sz; i-- > 0;)
            acc = acc * rn +
                  cur.coeff(i) * boost::multiprecision::pow(den, sz - 1 - i);
          if (acc != 0) continue;
          // Exact deflation by the primitive linear factor (den*n - rn).
          std::vector<BigInt> q(sz - 1);
          BigInt carry = 0;
          for (std::size_t i = sz; i-- > 1;) {
            q[i - 1] = (cur.coeff(i) + carry) / den;
            carry = q[i - 1] * rn;
          }
          out.push_back(IntPolynomial(std::vector<BigInt>{-rn, den}));
          cur = IntPolynomial(std::move(q));
          progress = true;
          break;
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  if (cur.degree() >= 1) out.push_back(cur);
}

}  // namespace

FactoredPolynomial FactoredPolynomial::from_polynomial(const IntPolynomial& p,
                                                       bool assert_irreducible) {
  require(!p.is_zero(), ErrorCode::InvalidInput, "zero polynomial");
  require(p.degree() >= 1, ErrorCode::InvalidInput, "constant polynomial");
  IntPolynomial prim = p.primitive_part();

  std::vector<IntPolynomial> pieces;
  split_primitive(prim, pieces);

  Rational scale = 1;
  std::vector<PolyFactor> factors;
  for (auto& piece : pieces) {
    if (piece.degree() == 2 && !is_irreducible(piece)) {
      // Square discriminant but no rational root found: only possible when
      // the root search hit its cap.
      fail(ErrorCode::CapExceeded,
           "reducible quadratic " + piece.to_string() +
               " exceeds the rational-root search cap; supply the factored form");
    }
    require(piece.degree() <= 2 || assert_irreducible,
            ErrorCode::UnsupportedDegree,
            "cannot factor degree >= 3 remainder " + piece.to_string() +
                "; supply the factored form or assert irreducibility");
    factors.push_back(
        PolyFactor{piece, 1, piece.degree() >= 3 && assert_irreducible});
  }
  BigInt cont = p.content();
  if (p.leading_coeff() < 0) cont = -cont;
  FactoredPolynomial out(scale * Rational(cont), std::move(factors));
  require(out.expand() == p, ErrorCode::InternalInconsistency,
          "factorization does not expand back to the input");
  return out;
}

FactoredPolynomial FactoredPolynomial::parse(const std::string& text,
                                             bool assert_irreducible) {
  if (text.find(';') == std::string::npos &&
      text.find('^') == std::string::npos &&
      text.find("s=") == std::string::npos) {
    return from_polynomial(IntPolynomial::parse(text), assert_irreducible);
  }
  Rational scale = 1;
  std::vector<PolyFactor> factors;
  for (const auto& raw : split(text, ';')) {
    std::string term = strip(raw);
    if (term.empty()) continue;
    if (term.rfind("s=", 0) == 0) {
      std::string val = term.substr(2);
      auto slash = val.find('/');
      if (slash == std::string::npos) {
        scale = Rational(parse_bigint(val));
      } else {
        BigInt den = parse_bigint(val.substr(slash + 1));
        require(den != 0, ErrorCode::ParseError, "zero denominator in scale");
        scale = Rational(parse_bigint(val.substr(0, slash)), den);
      }
      continue;
    }
    unsigned mult = 1;
    std::string coeffs = term;
    auto caret = term.find('^');
    if (caret != std::string::npos) {
      coeffs = term.substr(0, caret);
      BigInt m = parse_bigint(term.substr(caret + 1));
      require(m >= 1 && m <= 1'000'000, ErrorCode::ParseError,
              "multiplicity out of range");
      mult = m.convert_to<unsigned>();
    }
    factors.push_back(PolyFactor{IntPolynomial::parse(coeffs), mult,
                                 assert_irreducible});
  }
  require(!factors.empty(), ErrorCode::ParseError, "no factors in '" + text + "'");
  return FactoredPolynomial(scale, std::move(factors));
}

std::string FactoredPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (scale_ != 1) {
    os << "s=" << numerator(scale_).str();
    if (denominator(scale_) != 1) os << '/' << denominator(scale_).str();
    first = false;
  }
  for (const auto& f : factors_) {
    if (!first) os << ';';
    first = false;
    os << f.poly.to_string();
    if (f.multiplicity > 1) os << '^' << f.multiplicity;
  }
  return os.str();
}

int FactoredPolynomial::degree() const {
  int d = 0;
  for (const auto& f : factors_)
    d += f.poly.degree() * static_cast<int>(f.multiplicity);
  return d;
}

IntPolynomial FactoredPolynomial::expand() const {
  IntPolynomial prod({1});
  for (const auto& f : factors_)
    for (unsigned i = 0; i < f.multiplicity; ++i) prod = prod * f.poly;
  BigInt num = numerator(scale_), den = denominator(scale_);
  std::vector<BigInt> cs(prod.coeffs());
  for (auto& c : cs) {
    BigInt v = c * num;
    require(v % den == 0, ErrorCode::InvalidFactorization,
            "scale denominator does not divide the expansion");
    c = v / den;
  }
  return IntPolynomial(std::move(cs));
}

IntPolynomial FactoredPolynomial::distinct_product() const {
  IntPolynomial prod({1});
  for (const auto& f : factors_) prod = prod * f.poly;
  return prod;
}

Rational FactoredPolynomial::eval(const BigInt& n) const {
  Rational v = scale_;
  for (const auto& f : factors_) {
    BigInt t = f.poly.eval(n);
    for (unsigned i = 0; i < f.multiplicity; ++i) v *= Rational(t);
  }
  return v;
}

bool FactoredPolynomial::all_irreducible() const {
  for (const auto& f : factors_) {
    if (f.poly.degree() <= 2) {
      if (!is_irreducible(f.poly)) return false;
    } else if (!f.asserted_irreducible) {
      return false;
    }
  }
  return true;
}

bool FactoredPolynomial::operator==(const FactoredPolynomial& rhs) const {
  return scale_ == rhs.scale_ && factors_ == rhs.factors_;
}

BigInt sdisc(const FactoredPolynomial& f) {
  require(!f.empty(), ErrorCode::InvalidFactorization, "no factors");
  for (std::size_t i = 0; i < f.factors().size(); ++i)
    for (std::size_t j = i + 1; j < f.factors().size(); ++j)
      require(!(f.factors()[i].poly == f.factors()[j].poly),
              ErrorCode::InvalidFactorization, "duplicate factors");
  return discriminant(f.distinct_product());
}

FactoredPolynomial shifted_product(const FactoredPolynomial& f, unsigned k,
                                   i64 offset) {
  std::vector<PolyFactor> factors;
  for (i64 j = offset; j <= offset + static_cast<i64>(k); ++j) {
    for (const auto& g : f.factors())
      factors.push_back(PolyFactor{g.poly.shifted(BigInt(j)), g.multiplicity,
                                   g.asserted_irreducible});
  }
  Rational scale = 1;
  for (unsigned j = 0; j <= k; ++j) scale *= f.scale();
  return FactoredPolynomial(scale, std::move(factors));
}

bool is_scaled_pth_power(const FactoredPolynomial& f, u64 p) {
  require(p >= 2, ErrorCode::DomainError, "power must be >= 2");
  for (const auto& g : f.factors())
    if (g.multiplicity % p != 0) return false;
  return true;
}

}  // namespace polyprod
