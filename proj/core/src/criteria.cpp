#include "polyprod/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "polyprod/errors.hpp"
#include "polyprod/modular.hpp"

namespace polyprod {

namespace {
constexpr std::size_t kMaxProfileSize = 20;  // 2^I subset enumeration

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
}  // namespace

DiscriminantProfile::DiscriminantProfile(std::vector<BigInt> discs)
    : discs_(std::move(discs)) {
  require(!discs_.empty(), ErrorCode::InvalidInput, "empty profile");
  for (const auto& d : discs_) {
    require(d != 0, ErrorCode::InvalidInput, "zero discriminant");
    require(!is_perfect_square(d), ErrorCode::InvalidInput,
            "square discriminant " + to_decimal(d) +
                " comes from a reducible quadratic");
  }
}

DiscriminantProfile DiscriminantProfile::from_quadratics(
    const std::vector<IntPolynomial>& fs) {
  std::vector<BigInt> ds;
  ds.reserve(fs.size());
  for (const auto& f : fs) ds.push_back(discriminant_quadratic(f));
  return DiscriminantProfile(std::move(ds));
}

namespace {

// Walks nonempty subsets with square products and accumulates the signed
// count; `weight` maps (|J|, 1 in J?) to the summand.
template <typename Weight>
i64 signed_square_subset_sum(const DiscriminantProfile& profile, Weight weight) {
  std::size_t n = profile.size();
  require(n <= kMaxProfileSize, ErrorCode::CapExceeded,
          "profile too large for subset enumeration");
  i64 total = 1;
  for (u64 mask = 1; mask < (1ull << n); ++mask) {
    BigInt prod = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) prod *= profile.discs()[i];
    if (!is_perfect_square(prod)) continue;
    int size = __builtin_popcountll(mask);
    bool has_first = mask & 1;
    total += weight(size, has_first);
  }
  return total;
}

}  // namespace

i64 j_f(const DiscriminantProfile& profile) {
  return signed_square_subset_sum(profile, [](int size, bool has_first) {
    int exp = size - (has_first ? 1 : 0);
    return exp % 2 == 0 ? 1 : -1;
  });
}

i64 j_f_prime(const DiscriminantProfile& profile) {
  return signed_square_subset_sum(profile, [](int size, bool) {
    return size % 2 == 0 ? 1 : -1;
  });
}

ResidueCriterion legendre_pattern_classes(const DiscriminantProfile& profile,
                                          u64 enumeration_cap) {
  require(j_f(profile) > 0, ErrorCode::DomainError,
          "legendre_pattern_classes requires J_f > 0");
  BigInt m = 4;
  for (const auto& d : profile.discs()) m *= abs(d);
  require(m <= enumeration_cap, ErrorCode::CapExceeded,
          "modulus " + to_decimal(m) + " exceeds the enumeration cap");
  u64 mm = m.convert_to<u64>();
  ResidueCriterion out;
  out.modulus = m;
  // The Jacobi symbol (D|n) is periodic in odd n with period dividing 4|D|,
  // so evaluating it at the class representative decides the pattern for
  // every prime in the class.
  for (u64 a = 1; a < mm; a += 2) {
    if (std::gcd(a, mm) != 1) continue;
    if (jacobi(profile.discs()[0], a) != 1) continue;
    bool ok = true;
    for (std::size_t i = 1; i < profile.size() && ok; ++i)
      ok = jacobi(profile.discs()[i], a) == -1;
    if (ok) out.classes.emplace_back(a);
  }
  require(!out.classes.empty(), ErrorCode::InternalInconsistency,
          "J_f > 0 but no residue class realizes the pattern");
  return out;
}

namespace {

struct Linear {
  BigInt a, b;
};

std::string poly_list(const std::vector<IntPolynomial>& ps) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) os << " ";
    os << ps[i].to_string();
  }
  return os.str();
}

bool all_monic(const std::vector<IntPolynomial>& fs) {
  return std::all_of(fs.begin(), fs.end(),
                     [](const IntPolynomial& f) { return f.leading_coeff() == 1; });
}

bool all_distinct(const std::vector<IntPolynomial>& fs) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (fs[i] == fs[j]) return false;
  return true;
}

}  // namespace

ApplicabilityReport check_applicability(const std::vector<IntPolynomial>& fs,
                                        const std::vector<IntPolynomial>& gs) {
  require(!fs.empty(), ErrorCode::InvalidInput, "need at least one quadratic");
  for (const auto& f : fs) {
    require(f.degree() == 2, ErrorCode::InvalidInput,
            "expected a quadratic, got " + f.to_string());
    require(is_irreducible(f), ErrorCode::InvalidInput,
            "reducible quadratic " + f.to_string());
  }
  std::vector<Linear> lin;
  for (const auto& g : gs) {
    require(g.degree() == 1, ErrorCode::InvalidInput,
            "expected a linear term, got " + g.to_string());
    Linear l{g.coeff(1), g.coeff(0)};
    // must not vanish at any n >= 1
    if (l.b % l.a == 0) {
      BigInt root = -l.b / l.a;
      require(root < 1, ErrorCode::InvalidInput,
              g.to_string() + " vanishes at n = " + to_decimal(root));
    }
    lin.push_back(l);
  }

  DiscriminantProfile profile = DiscriminantProfile::from_quadratics(fs);
  ApplicabilityReport report;
  report.jf = j_f(profile);
  report.jf_prime = j_f_prime(profile);

  BigInt disc_prod_abs = 1;
  for (const auto& d : profile.discs()) disc_prod_abs *= abs(d);

  auto add_check = [&](const std::string& name, bool applies,
                       const std::string& reason, const std::string& conclusion) {
    report.checks.push_back(TheoremCheck{name, applies, reason});
    if (applies && report.matched == "none") {
      report.matched = name;
      report.conclusion = conclusion;
    }
  };

  // 1. all-pairs-square: every D_1 D_i a perfect square, all monic, no
  //    linear terms.
  {
    bool applies = gs.empty();
    std::string reason;
    if (!applies) reason = "linear terms present";
    if (applies && !all_monic(fs)) {
      applies = false;
      reason = "not all quadratics are monic";
    }
    if (applies) {
      for (std::size_t i = 1; i < profile.size(); ++i) {
        if (!is_perfect_square(profile.discs()[0] * profile.discs()[i])) {
          applies = false;
          reason = "D_1 D_" + std::to_string(i + 1) + " is not a perfect square";
          break;
        }
      }
    }
    if (applies) reason = "all D_1 D_i are perfect squares";
    add_check("all-pairs-square", applies, reason,
              "N_x is squarefull for at most finitely many x");
  }

  // 2. distinguished-class: f_1 monic, distinct quadratics, J_f > 0, linear
  //    terms absent or all monic and distinct.
  {
    bool applies = true;
    std::string reason = "f_1 monic and J_f = " + std::to_string(report.jf) + " > 0";
    if (fs[0].leading_coeff() != 1) {
      applies = false;
      reason = "f_1 is not monic";
    } else if (!all_distinct(fs)) {
      applies = false;
      reason = "quadratics are not distinct: " + poly_list(fs);
    } else if (report.jf <= 0) {
      applies = false;
      reason = "J_f = " + std::to_string(report.jf) + " is not positive";
    } else if (!gs.empty()) {
      bool monic_gs = std::all_of(lin.begin(), lin.end(),
                                  [](const Linear& l) { return l.a == 1; });
      if (!monic_gs) {
        applies = false;
        reason = "non-monic linear terms need the coprime-linear-leaders route";
      } else if (!all_distinct(gs)) {
        applies = false;
        reason = "linear terms are not distinct";
      } else {
        reason += ", monic linear terms only shift finitely many primes";
      }
    }
    add_check("distinguished-class", applies, reason,
              "N_x is squarefull for at most finitely many x");
  }

  // 3. coprime-linear-leaders: J_f > 0 with leading coefficients >= 2
  //    coprime to the discriminants and pairwise; equal leaders only as a
  //    prime twin pair with b != -b' (mod a); monic terms pass through.
  {
    bool applies = !gs.empty();
    std::string reason = applies ? "" : "no linear terms";
    if (applies && fs[0].leading_coeff() != 1) {
      applies = false;
      reason = "f_1 is not monic";
    }
    if (applies && (!all_distinct(fs) || !all_distinct(gs))) {
      applies = false;
      reason = "terms are not distinct";
    }
    if (applies && report.jf <= 0) {
      applies = false;
      reason = "J_f = " + std::to_string(report.jf) + " is not positive";
    }
    if (applies) {
      std::map<BigInt, std::vector<BigInt>> by_leader;  // a_k >= 2 -> b's
      for (const auto& l : lin) {
        if (l.a == 1) continue;  // monic terms handled as in the simple route
        if (l.a <= 0) {
          applies = false;
          reason = "leading coefficient " + to_decimal(l.a) +
                   " <= 0 is outside this route";
          break;
        }
        by_leader[l.a].push_back(l.b);
      }
      if (applies) {
        for (auto it = by_leader.begin(); it != by_leader.end() && applies; ++it) {
          const auto& [a, bs] = *it;
          if (gcd_big(a, disc_prod_abs) != 1) {
            applies = false;
            reason = "gcd(" + to_decimal(a) + ", prod |D_i|) = " +
                     to_decimal(gcd_big(a, disc_prod_abs)) + " != 1";
            break;
          }
          for (auto jt = std::next(it); jt != by_leader.end(); ++jt) {
            if (gcd_big(a, jt->first) != 1) {
              applies = false;
              reason = "leading coefficients " + to_decimal(a) + " and " +
                       to_decimal(jt->first) + " share a factor";
              break;
            }
          }
          if (!applies) break;
          if (bs.size() == 2) {
            if (!is_prime_u64(a.convert_to<u64>())) {
              applies = false;
              reason = "twin linear terms need a prime leading coefficient";
            } else {
              BigInt s = (bs[0] + bs[1]) % a;
              if (s < 0) s += a;
              if (s == 0) {
                applies = false;
                reason = "twin linear terms with b = -b' (mod a)";
              }
            }
          } else if (bs.size() > 2) {
            applies = false;
            reason = "more than two linear terms share leading coefficient " +
                     to_decimal(a);
          }
        }
      }
      if (applies)
        reason = "J_f = " + std::to_string(report.jf) +
                 " > 0 and the leading coefficients satisfy the coprimality "
                 "conditions";
    }
    add_check("coprime-linear-leaders", applies, reason,
              "N_x is squarefull for at most finitely many x");
  }

  // 4. signed-subset-count: J'_f != 0, g_1 has the largest positive leader
  //    coprime to prod D_i, and equal-leader terms differ from b_1 mod a_1.
  {
    bool applies = !gs.empty();
    std::string reason = applies ? "" : "no linear terms";
    if (applies && (!all_distinct(fs) || !all_distinct(gs))) {
      applies = false;
      reason = "terms are not distinct";
    }
    if (applies) {
      for (const auto& l : lin) {
        if (l.a == 0 || gcd_big(l.a, l.b) != 1) {
          applies = false;
          reason = "linear coefficients must be nonzero and relatively prime";
          break;
        }
      }
    }
    if (applies && report.jf_prime == 0) {
      applies = false;
      reason = "J'_f = 0";
    }
    if (applies) {
      const Linear& g1 = lin[0];
      if (g1.a <= 0) {
        applies = false;
        reason = "a_1 must be positive";
      } else if (gcd_big(g1.a, disc_prod_abs) != 1) {
        applies = false;
        reason = "a_1 shares a factor with prod D_i";
      } else {
        for (std::size_t k = 1; k < lin.size(); ++k) {
          if (abs(lin[k].a) > g1.a) {
            applies = false;
            reason = "a_1 is not the largest |a_k|";
            break;
          }
          if (abs(lin[k].a) == g1.a) {
            BigInt diff = (g1.b - lin[k].b) % g1.a;
            if (diff == 0) {
              applies = false;
              reason = "b_1 = b_" + std::to_string(k + 1) + " (mod a_1)";
              break;
            }
          }
        }
      }
    }
    if (applies)
      reason = "J'_f = " + std::to_string(report.jf_prime) +
               " != 0 and g_1 dominates the linear terms";
    add_check("signed-subset-count", applies, reason,
              "N_x is a perfect square for at most finitely many x");
  }

  return report;
}

double explicit_bound(i64 d, double c0) {
  require(d >= 1, ErrorCode::InvalidInput, "D must be >= 1");
  require(c0 > 0, ErrorCode::InvalidInput, "C0 must be positive");
  return std::exp(8.0 * ((4.0 * c0 + 8.0) * static_cast<double>(d) + 2.0) / 5.0);
}

double monic_variant_bound(double cf, double d, double c0) {
  require(c0 > 0, ErrorCode::InvalidInput, "C0 must be positive");
  return std::exp(8.0 / 5.0 * (2.0 - cf + 4.0 * c0 * d + 8.0 * d));
}

double minimize_cf(const IntPolynomial& f) {
  require(f.degree() == 2 && f.leading_coeff() == 1, ErrorCode::InvalidInput,
          "f must be a monic quadratic");
  require(is_irreducible(f), ErrorCode::InvalidInput,
          "f must be irreducible");
  double b = f.coeff(1).convert_to<double>();
  double c = f.coeff(0).convert_to<double>();
  // Beyond n0 the relative deviation |b/n + c/n^2| stays below 1/4, so
  // log|f(n)/n^2| >= log(1-t) >= -2t >= tail_lb there.
  u64 n0 = static_cast<u64>(std::max(20.0, 4.0 * (std::fabs(b) + std::fabs(c))));
  double worst = 0;
  for (u64 n = 1; n <= n0; ++n) {
    BigInt v = f.eval(n);
    require(v != 0, ErrorCode::InvalidInput,
            "integer root at n = " + std::to_string(n) +
                " contradicts irreducibility");
    double dn = static_cast<double>(n);
    double val = std::log(std::fabs(v.convert_to<double>()) / (dn * dn));
    worst = std::min(worst, val);
  }
  double tail_lb = (b >= 0 && c >= 0)
                       ? 0.0
                       : -2.0 * (std::fabs(b) + std::fabs(c)) / static_cast<double>(n0);
  worst = std::min(worst, tail_lb);
  // Strictness margin; also keeps the bound negative when the scan minimum
  // is nonnegative.
  return std::min(worst, 0.0) - 1e-9 * (1.0 + std::fabs(worst));
}

}  // namespace polyprod
