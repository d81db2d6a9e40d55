#include "polyprod/powersieve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polyprod/character.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/ledger.hpp"
#include "polyprod/modular.hpp"

namespace polyprod {

namespace {

// Good primes avoid the leading coefficient and sdisc of the distinct
// product, so the root count mod p reflects the generic splitting.
bool good_prime(u64 p, const BigInt& lead, const BigInt& sdisc_f) {
  return lead % p != 0 && sdisc_f % p != 0;
}

int root_count(const IntPolynomial& distinct, u64 p, u64 cap = 2000000) {
  return static_cast<int>(roots_mod_p(distinct, p, cap).size());
}

}  // namespace

GaloisProfile estimate_galois_profile(const FactoredPolynomial& f,
                                      const PrimeSieve& sieve,
                                      u64 prime_budget) {
  require(prime_budget >= 1000, ErrorCode::InvalidInput,
          "prime budget must be at least 1000");
  require(prime_budget <= sieve.limit(), ErrorCode::SieveTooSmall,
          "prime budget exceeds the sieve limit");
  IntPolynomial distinct = f.distinct_product();
  BigInt sd = sdisc(f);
  BigInt lead = distinct.leading_coeff();
  GaloisProfile out;
  for (u64 p : sieve.primes()) {
    if (p > prime_budget) break;
    if (!good_prime(p, lead, sd)) continue;
    ++out.histogram[root_count(distinct, p)];
    ++out.primes_scanned;
  }
  require(out.primes_scanned > 0, ErrorCode::DomainError,
          "no good primes within the budget");
  out.d_f = -1;
  for (const auto& [count, freq] : out.histogram) {
    if (count >= 1) {
      out.d_f = count;
      break;
    }
  }
  require(out.d_f >= 1, ErrorCode::DomainError,
          "no prime with a root of F within the budget");
  out.density_d_f = static_cast<double>(out.histogram[out.d_f]) /
                    static_cast<double>(out.primes_scanned);
  out.g_f = static_cast<int>(std::lround(1.0 / out.density_d_f));
  return out;
}

PrimeSeq build_prime_seq(const FactoredPolynomial& f, const PrimeSieve& sieve,
                         u64 p, u64 q1, unsigned count,
                         const GaloisProfile& profile) {
  require(count >= 1, ErrorCode::InvalidInput, "count must be >= 1");
  require(is_prime_u64(p), ErrorCode::DomainError,
          std::to_string(p) + " is not prime");
  u64 d = static_cast<u64>(profile.d_f);
  u64 step = (p + d - 1) / d;
  require(step >= 2, ErrorCode::DomainError,
          "ceil(p/d_F) = 1 degenerates the windows (p <= d_F)");

  IntPolynomial distinct = f.distinct_product();
  BigInt sd = sdisc(f);
  BigInt lead = distinct.leading_coeff();
  auto qualifies = [&](u64 q) {
    return good_prime(q, lead, sd) &&
           root_count(distinct, q) == profile.d_f;
  };
  require(is_prime_u64(q1) && qualifies(q1), ErrorCode::InvalidSeed,
          "q1 must be a prime where F has exactly d_F roots");

  PrimeSeq seq;
  seq.power = p;
  seq.step = step;
  seq.primes.push_back(q1);
  double g = static_cast<double>(profile.g_f);
  while (seq.primes.size() < count) {
    u64 qi = seq.primes.back();
    double qd = static_cast<double>(qi);
    double lo_real =
        static_cast<double>(step) * qd * (1.0 - g * std::log(qd) / qd);
    u64 hi = step * qi;
    u64 lo = lo_real <= 2 ? 2 : static_cast<u64>(std::ceil(lo_real));
    seq.windows.push_back(SeqWindow{lo, hi});
    u64 found = 0;
    auto candidates = sieve.primes_in(lo, hi);
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
      if (qualifies(*it)) {
        found = *it;
        break;
      }
    }
    if (found == 0) {
      seq.complete = false;  // WindowEmpty: admissible only for large q1
      return seq;
    }
    seq.primes.push_back(found);
  }
  seq.complete = true;
  return seq;
}

namespace {

struct FkModQ {
  std::vector<u64> coeffs;
  u64 q;
  u64 operator()(u64 a) const { return eval_poly_mod(coeffs, a, q); }
};

FkModQ reduce_fk(const FactoredPolynomial& f, unsigned k, u64 q) {
  FactoredPolynomial fk = shifted_product(f, k);
  IntPolynomial expanded = fk.expand();
  return FkModQ{poly_mod_p(expanded, q), q};
}

void check_char_preconditions(const FactoredPolynomial& f, unsigned k, u64 q,
                              u64 p) {
  require(is_prime_u64(q), ErrorCode::DomainError,
          std::to_string(q) + " is not prime");
  require(is_prime_u64(p), ErrorCode::DomainError,
          std::to_string(p) + " is not prime");
  require((q - 1) % p == 0, ErrorCode::NoSuchCharacter,
          "q = " + std::to_string(q) + " admits no order-" + std::to_string(p) +
              " character");
  require(sdisc(f) % q != 0, ErrorCode::DomainError,
          "q divides sdisc(F)");
  require(q > static_cast<u64>(f.degree()) * k, ErrorCode::DomainError,
          "need q > deg(F) * k");
}

}  // namespace

CharSumResult char_sum(const FactoredPolynomial& f, unsigned k, u64 q, u64 p) {
  check_char_preconditions(f, k, q, p);
  CharacterTable chi = CharacterTable::build(q, p);
  FkModQ fk = reduce_fk(f, k, q);
  CharSumResult out;
  out.deg_f_k = f.degree() * static_cast<int>(k + 1);
  std::vector<i64> counts(p, 0);
  for (u64 a = 0; a < q; ++a) {
    int cls = chi.exponent_class(fk(a));
    if (cls < 0) {
      ++out.zeros;
    } else {
      ++counts[cls];
    }
  }
  out.magnitude = root_of_unity_sum_magnitude(counts);
  out.bound = (out.deg_f_k - 1) * std::sqrt(static_cast<double>(q));
  out.within = out.magnitude <= out.bound + 1e-6;
  return out;
}

PthResidueCount count_pth_residue_values(const FactoredPolynomial& f, unsigned k,
                                         u64 q, u64 p) {
  check_char_preconditions(f, k, q, p);
  CharacterTable chi = CharacterTable::build(q, p);
  FkModQ fk = reduce_fk(f, k, q);
  PthResidueCount out;
  int deg_f_k = f.degree() * static_cast<int>(k + 1);
  for (u64 a = 0; a < q; ++a) {
    int cls = chi.exponent_class(fk(a));
    if (cls < 0) ++out.zeros;
    if (cls <= 0) ++out.s_k;
  }
  out.lhs = std::fabs(static_cast<double>(p) * static_cast<double>(out.s_k) -
                      static_cast<double>(q));
  out.bound = static_cast<double>(p - 1) * (deg_f_k - 1) *
              std::sqrt(static_cast<double>(q));
  out.bound_with_zeros = out.bound + static_cast<double>(p * out.zeros);
  out.within = out.lhs <= out.bound_with_zeros + 1e-6;
  return out;
}

bool fk_not_power_check(const FactoredPolynomial& f, unsigned k, u64 q, u64 p) {
  require(is_prime_u64(q), ErrorCode::DomainError,
          std::to_string(q) + " is not prime");
  require(is_prime_u64(p), ErrorCode::DomainError,
          std::to_string(p) + " is not prime");
  require(sdisc(f) % q != 0, ErrorCode::DomainError, "q divides sdisc(F)");
  require(q > static_cast<u64>(f.degree()) * k, ErrorCode::DomainError,
          "need q > deg(F) * k");
  require(!is_scaled_pth_power(f, p), ErrorCode::DomainError,
          "F is itself a scaled p-th power");
  FkModQ fk = reduce_fk(f, k, q);
  auto parts = squarefree_decomposition_mod_q(fk.coeffs, q);
  for (const auto& [poly, mult] : parts) {
    if (poly.size() > 1 && mult % p != 0) return true;
  }
  return false;
}

TuranReport turan_experiment(const FactoredPolynomial& f, unsigned k, u64 p,
                             u64 x, u64 z, const PrimeSieve& sieve) {
  require(is_prime_u64(p), ErrorCode::DomainError,
          std::to_string(p) + " is not prime");
  require(x >= 1 && z >= 2, ErrorCode::InvalidInput, "need x >= 1 and z >= 2");
  FactoredPolynomial fk_poly = shifted_product(f, k);
  BigInt sd = sdisc(fk_poly);

  std::vector<u64> sieve_primes;
  for (u64 q : sieve.primes_in(z + 1, 2 * z)) {
    if ((q - 1) % p == 0 && sd % q != 0) sieve_primes.push_back(q);
  }
  require(!sieve_primes.empty(), ErrorCode::EmptyPrimeSet,
          "no usable primes in (z, 2z]");

  TuranReport out;
  out.x = x;
  out.z = z;
  out.p = p;
  out.k = k;
  out.prime_count = sieve_primes.size();
  double delta = static_cast<double>(p - 1) / static_cast<double>(p);
  out.u = delta * static_cast<double>(sieve_primes.size());

  // Membership bitsets over n = 1..x for A_q = {n : F_k(n) not a p-th power
  // residue mod q}.
  std::size_t words = x / 64 + 1;
  std::vector<std::vector<u64>> members;
  members.reserve(sieve_primes.size());
  std::vector<u64> counts;
  IntPolynomial expanded = fk_poly.expand();
  for (u64 q : sieve_primes) {
    CharacterTable chi = CharacterTable::build(q, p);
    std::vector<u64> coeffs = poly_mod_p(expanded, q);
    std::vector<char> bad(q);
    for (u64 a = 0; a < q; ++a)
      bad[a] = !chi.is_pth_power_residue(eval_poly_mod(coeffs, a, q));
    std::vector<u64> bits(words, 0);
    u64 count = 0;
    for (u64 n = 1; n <= x; ++n) {
      if (bad[n % q]) {
        bits[n >> 6] |= 1ull << (n & 63);
        ++count;
      }
    }
    members.push_back(std::move(bits));
    counts.push_back(count);
  }

  double dx = static_cast<double>(x);
  for (u64 c : counts)
    out.sum_r += std::fabs(static_cast<double>(c) - delta * dx);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      u64 inter = 0;
      for (std::size_t w = 0; w < words; ++w)
        inter += static_cast<u64>(__builtin_popcountll(members[i][w] & members[j][w]));
      out.sum_rr += std::fabs(static_cast<double>(inter) - delta * delta * dx);
    }
  }

  std::vector<u64> any(words, 0);
  for (const auto& bits : members)
    for (std::size_t w = 0; w < words; ++w) any[w] |= bits[w];
  u64 covered = 0;
  for (std::size_t w = 0; w < words; ++w)
    covered += static_cast<u64>(__builtin_popcountll(any[w]));
  out.survivors = x - covered;

  out.bound = dx / out.u + 2.0 * out.sum_r / out.u + out.sum_rr / (out.u * out.u);
  out.within = static_cast<double>(out.survivors) <= out.bound + 1e-6;
  return out;
}

std::map<u64, u64> gap_structure(std::vector<u64> s, u64 x) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  require(s.empty() || (s.front() >= 1 && s.back() <= x),
          ErrorCode::InvalidInput, "set elements must lie in [1, X]");
  std::map<u64, u64> gaps;
  for (std::size_t i = 1; i < s.size(); ++i) ++gaps[s[i] - s[i - 1]];
  return gaps;
}

GapLemmaCheck gap_lemma_check(const std::vector<u64>& s, u64 x, u64 k_max) {
  require(k_max >= 1 && k_max < x, ErrorCode::InvalidInput,
          "need 1 <= K < X");
  std::vector<u64> sorted(s);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // |S| > X/K, strictly.
  require(sorted.size() * k_max > x, ErrorCode::NotApplicable,
          "|S| <= X/K; the lemma says nothing here");
  auto gaps = gap_structure(sorted, x);
  GapLemmaCheck out;
  out.threshold = 2.0 * static_cast<double>(x) /
                  (static_cast<double>(k_max) * static_cast<double>(k_max) *
                   static_cast<double>(k_max));
  for (u64 k = 1; k <= k_max; ++k) {
    auto it = gaps.find(k);
    u64 count = it == gaps.end() ? 0 : it->second;
    if (static_cast<double>(count) >= out.threshold) {
      out.holds = true;
      out.witness_k = k;
      out.witness_count = count;
      break;
    }
  }
  return out;
}

CensusReport pth_power_census(const FactoredPolynomial& f, u64 p, u64 x_max,
                              const GaloisProfile* profile) {
  require(is_prime_u64(p), ErrorCode::DomainError,
          "the power must be prime (composite exponents reduce to primes)");
  require(!is_scaled_pth_power(f, p), ErrorCode::TheoremInapplicable,
          "F = s G^p makes every N_x a trivial p-th power");
  require(x_max >= 1, ErrorCode::InvalidInput, "X must be >= 1");

  CensusReport out;
  out.power = p;
  out.x_max = x_max;
  out.d_f = profile ? profile->d_f : 0;

  FactorLedger ledger(f);
  ledger.watch_power(p);
  for (u64 x = 1; x <= x_max; ++x) {
    ledger.extend(x);
    if (ledger.zero_seen()) {
      out.zero_at = ledger.zero_at();
      break;
    }
    if (ledger.is_unit()) {
      out.unit_x.push_back(x);
      continue;
    }
    bool exponents_ok = ledger.watched_bad_count() == 0;
    bool sign_ok = p % 2 == 1 || ledger.sign() > 0;
    if (exponents_ok && sign_ok) out.hits.push_back(x);
  }

  double dx = static_cast<double>(x_max);
  out.bound_24_25 = std::pow(dx, 24.0 / 25.0);
  if (profile) {
    u64 d = static_cast<u64>(profile->d_f);
    u64 step = (p + d - 1) / d;
    if (step >= 2)
      out.bound_galois = std::pow(
          dx, std::log(static_cast<double>(profile->d_f + 1)) /
                  std::log(static_cast<double>(step)));
  }
  return out;
}

SquarefullScanReport squarefull_scan(const FactoredPolynomial& f, u64 x_min,
                                     u64 x_max) {
  require(x_min >= 1 && x_min <= x_max, ErrorCode::InvalidInput,
          "need 1 <= xmin <= xmax");
  SquarefullScanReport out;
  out.x_min = x_min;
  out.x_max = x_max;
  FactorLedger ledger(f);
  ledger.extend(x_min - 1);
  for (u64 x = x_min; x <= x_max; ++x) {
    ledger.extend(x);
    if (ledger.zero_seen()) {
      out.zero_at = ledger.zero_at();
      break;
    }
    if (ledger.is_unit()) {
      out.unit_x.push_back(x);
      continue;
    }
    if (ledger.count_exponent_one() == 0) out.hits.push_back(x);
  }
  return out;
}

}  // namespace polyprod
