#include "polyprod/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyprod/errors.hpp"

namespace polyprod {

using nlohmann::json;

FactorLedger::FactorLedger(FactoredPolynomial f) : poly_(std::move(f)) {
  require(!poly_.empty(), ErrorCode::InvalidInput, "empty polynomial");
}

void FactorLedger::bump(u64 p, i64 delta) {
  if (delta == 0) return;
  auto it = exponents_.find(p);
  i64 before = it == exponents_.end() ? 0 : it->second;
  i64 after = before + delta;
  require(after >= 0, ErrorCode::InternalInconsistency,
          "negative exponent for prime " + std::to_string(p));
  if (before == 1) --count_exponent_one_;
  if (after == 1) ++count_exponent_one_;
  if (watched_power_) {
    bool was_bad = before != 0 && before % static_cast<i64>(*watched_power_) != 0;
    bool is_bad = after != 0 && after % static_cast<i64>(*watched_power_) != 0;
    if (was_bad && !is_bad) --watched_bad_count_;
    if (!was_bad && is_bad) ++watched_bad_count_;
  }
  if (after == 0) {
    exponents_.erase(it);
  } else if (it == exponents_.end()) {
    exponents_.emplace(p, after);
  } else {
    it->second = after;
  }
}

void FactorLedger::apply_value(const ValueFactorization& vf) {
  if (vf.sign == 0) {
    if (!zero_at_) zero_at_ = vf.n.convert_to<u64>();
    return;
  }
  if (vf.sign < 0) ++negative_count_;
  for (auto [p, e] : vf.prime_powers) bump(p, e);
}

void FactorLedger::extend(u64 to_x, unsigned threads) {
  require(to_x >= cursor_, ErrorCode::InvalidInput,
          "ledger cursor already past requested x");
  if (to_x == cursor_) return;
  u64 lo = cursor_ + 1, hi = to_x;
  u64 span = hi - lo + 1;
  if (threads <= 1 || span < 64) {
    for (u64 n = lo; n <= hi; ++n) apply_value(factorize_value(poly_, n));
  } else {
    unsigned workers = std::min<unsigned>(threads, 64);
    u64 chunk = (span + workers - 1) / workers;
    std::vector<std::vector<ValueFactorization>> parts(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      u64 a = lo + w * chunk;
      if (a > hi) break;
      u64 b = std::min(hi, a + chunk - 1);
      pool.emplace_back([this, &parts, w, a, b] {
        auto& out = parts[w];
        out.reserve(b - a + 1);
        for (u64 n = a; n <= b; ++n)
          out.push_back(factorize_value(poly_, n));
      });
    }
    for (auto& t : pool) t.join();
    for (auto& part : parts)
      for (auto& vf : part) apply_value(vf);
  }
  cursor_ = to_x;
}

void FactorLedger::ingest(const std::vector<ValueFactorization>& block) {
  for (std::size_t i = 0; i < block.size(); ++i) {
    require(block[i].n == cursor_ + 1 + i, ErrorCode::InvalidInput,
            "block does not continue the ledger cursor");
    apply_value(block[i]);
  }
  cursor_ += block.size();
}

i64 FactorLedger::alpha(u64 p) const {
  auto it = exponents_.find(p);
  return it == exponents_.end() ? 0 : it->second;
}

int FactorLedger::sign() const {
  if (zero_at_) return 0;
  return negative_count_ % 2 == 0 ? 1 : -1;
}

void FactorLedger::check_defined() const {
  require(!zero_at_, ErrorCode::UndefinedProduct,
          "F(" + std::to_string(*zero_at_) + ") = 0 poisons the product");
}

bool FactorLedger::is_squarefull() const {
  check_defined();
  return count_exponent_one_ == 0 &&
         std::all_of(exponents_.begin(), exponents_.end(),
                     [](const auto& kv) { return kv.second >= 2; });
}

u64 FactorLedger::perfect_power_exponent() const {
  check_defined();
  u64 g = 0;
  for (const auto& [p, e] : exponents_)
    g = std::gcd(g, static_cast<u64>(e));
  return g;  // 0 means unit
}

bool FactorLedger::is_perfect_pth(u64 p) const {
  require(p >= 2, ErrorCode::DomainError, "power must be >= 2");
  check_defined();
  u64 g = perfect_power_exponent();
  bool exponents_ok = g == 0 || g % p == 0;
  if (p % 2 == 0) return exponents_ok && sign() > 0;
  return exponents_ok;
}

u64 FactorLedger::largest_prime() const {
  check_defined();
  require(!exponents_.empty(), ErrorCode::NoPrimes, "|N_x| = 1 has no primes");
  return exponents_.rbegin()->first;
}

double FactorLedger::log_abs() const {
  double s = 0;
  for (const auto& [p, e] : exponents_)
    s += static_cast<double>(e) * std::log(static_cast<double>(p));
  return s;
}

BigInt FactorLedger::reconstruct_abs() const {
  BigInt acc = 1;
  for (const auto& [p, e] : exponents_)
    acc *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
  return acc;
}

void FactorLedger::watch_power(u64 p) {
  require(p >= 2, ErrorCode::DomainError, "power must be >= 2");
  watched_power_ = p;
  watched_bad_count_ = 0;
  for (const auto& [prime, e] : exponents_)
    if (e % static_cast<i64>(p) != 0) ++watched_bad_count_;
}

std::string FactorLedger::snapshot_json() const {
  json doc;
  doc["schema"] = "ledger/1";
  doc["poly"] = poly_.to_string();
  doc["x"] = cursor_;
  doc["sign"] = sign();
  doc["negative_count"] = negative_count_;
  if (zero_at_) doc["zero_at"] = *zero_at_;
  json exps = json::array();
  for (const auto& [p, e] : exponents_) exps.push_back({p, e});
  doc["exponents"] = std::move(exps);
  return doc.dump();
}

FactorLedger FactorLedger::from_snapshot_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  require(!doc.is_discarded() && doc.contains("poly") && doc.contains("x") &&
              doc.contains("exponents"),
          ErrorCode::ParseError, "malformed ledger snapshot");
  FactorLedger ledger(FactoredPolynomial::parse(doc["poly"].get<std::string>(),
                                                /*assert_irreducible=*/true));
  ledger.cursor_ = doc["x"].get<u64>();
  ledger.negative_count_ = doc.value("negative_count", 0ull);
  if (doc.contains("zero_at")) ledger.zero_at_ = doc["zero_at"].get<u64>();
  for (const auto& pe : doc["exponents"]) {
    require(pe.is_array() && pe.size() == 2, ErrorCode::ParseError,
            "bad exponent entry");
    u64 p = pe[0].get<u64>();
    i64 e = pe[1].get<i64>();
    require(e >= 1, ErrorCode::ParseError, "exponents must be >= 1");
    ledger.bump(p, e);
  }
  return ledger;
}

BigInt monic_shift_constant(const FactoredPolynomial& f) {
  require(f.scale() == 1 && f.factors().size() == 1 &&
              f.factors()[0].multiplicity == 1,
          ErrorCode::InvalidInput, "F must be a single monic quadratic n^2+D");
  const IntPolynomial& p = f.factors()[0].poly;
  require(p.degree() == 2 && p.coeff(2) == 1 && p.coeff(1) == 0,
          ErrorCode::InvalidInput, "F must be n^2 + D");
  return p.coeff(0);
}

InequalityCheck log_lower_bound_check(const FactorLedger& ledger) {
  BigInt d = monic_shift_constant(ledger.polynomial());
  require(d >= 1, ErrorCode::InvalidInput, "D must be >= 1");
  u64 x = ledger.cursor();
  require(x >= 1, ErrorCode::InvalidInput, "x must be >= 1");
  InequalityCheck out;
  const IntPolynomial& p = ledger.polynomial().factors()[0].poly;
  for (u64 n = 1; n <= x; ++n)
    out.lhs += std::log(p.eval(n).convert_to<double>());
  double dx = static_cast<double>(x);
  out.rhs = 2 * dx * std::log(dx) - 2 * dx;
  out.holds = out.lhs >= out.rhs;
  return out;
}

AlphaBoundCheck alpha_bound_check(const FactorLedger& ledger, u64 p) {
  BigInt d = monic_shift_constant(ledger.polynomial());
  require(d >= 1, ErrorCode::InvalidInput, "D must be >= 1");
  AlphaBoundCheck out;
  out.p = p;
  out.alpha = ledger.alpha(p);
  u64 x = ledger.cursor();
  double logx2d =
      std::log((BigInt(x) * x + d).convert_to<double>());
  double logp = std::log(static_cast<double>(p));
  out.p_divides_d = d % p == 0;
  double scale = 1;
  if (out.p_divides_d) {
    BigInt dd = d;
    while (dd % p == 0) {
      dd /= p;
      ++out.e0;
    }
    scale = std::pow(static_cast<double>(p), out.e0);
  }
  out.bound = scale * (2.0 * static_cast<double>(x) / (static_cast<double>(p) - 1) +
                       2.0 * logx2d / logp);
  out.holds = static_cast<double>(out.alpha) <= out.bound;
  return out;
}

double squarefree_part_statistic(const FactorLedger& ledger) {
  require(!ledger.zero_seen(), ErrorCode::UndefinedProduct,
          "zero value poisons the product");
  double total = ledger.log_abs();
  if (total == 0) return 0;
  double odd = 0;
  for (const auto& [p, e] : ledger.exponents())
    if (e % 2 != 0) odd += std::log(static_cast<double>(p));
  return odd / total;
}

}  // namespace polyprod
