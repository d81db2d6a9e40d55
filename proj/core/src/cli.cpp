#include "polyprod/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polyprod/analytic.hpp"
#include "polyprod/cache.hpp"
#include "polyprod/criteria.hpp"
#include "polyprod/equidist.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/ledger.hpp"
#include "polyprod/powersieve.hpp"
#include "polyprod/report.hpp"

namespace polyprod::cli {

using nlohmann::json;

namespace {

struct CommonOpts {
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  unsigned threads = 1;
  u64 sieve_limit = 0;  // 0: chosen per subcommand
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--cache-dir", opts.cache_dir,
                  "Cache directory (default: $POLYPROD_CACHE)");
  cmd->add_flag("--no-cache", opts.no_cache, "Disable on-disk caching");
  cmd->add_option("--threads", opts.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u));
  cmd->add_option("--sieve-limit", opts.sieve_limit,
                  "Override the prime sieve limit");
}

Cache open_cache(const CommonOpts& opts) {
  if (opts.no_cache) return Cache();
  if (!opts.cache_dir.empty()) return Cache(opts.cache_dir);
  if (const char* env = std::getenv("POLYPROD_CACHE"); env && *env)
    return Cache(env);
  return Cache();
}

u64 pick_limit(const CommonOpts& opts, u64 needed) {
  return opts.sieve_limit ? opts.sieve_limit : needed;
}

json jfloat(double v) { return json(pin_float(v)); }

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

json ledger_json(const FactorLedger& ledger) {
  json doc;
  doc["poly"] = ledger.polynomial().to_string();
  doc["x"] = ledger.cursor();
  doc["sign"] = ledger.sign();
  doc["negative_count"] = ledger.negative_count();
  if (ledger.zero_at()) doc["zero_at"] = *ledger.zero_at();
  json exps = json::array();
  for (const auto& [p, e] : ledger.exponents()) exps.push_back({p, e});
  doc["exponents"] = std::move(exps);
  return doc;
}

json check_json(const TheoremCheck& check) {
  return json{{"theorem", check.theorem},
              {"applies", check.applies},
              {"reason", check.reason}};
}

std::vector<u64> parse_u64_list(const std::string& text) {
  std::vector<u64> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    require(!item.empty(), ErrorCode::ParseError, "empty entry in list");
    out.push_back(std::stoull(item));
  }
  return out;
}

// ---- subcommand bodies ----------------------------------------------------

int cmd_analyze(const std::string& poly, u64 x, bool assert_irred,
                const CommonOpts& opts, std::ostream& out) {
  FactoredPolynomial f = FactoredPolynomial::parse(poly, assert_irred);
  FactorLedger ledger(f);
  Cache cache = open_cache(opts);
  extend_with_cache(ledger, x, cache, opts.threads);

  json doc;
  doc["schema"] = "analyze/1";
  doc.update(ledger_json(ledger));
  if (!ledger.zero_seen()) {
    doc["is_squarefull"] = ledger.is_squarefull();
    doc["perfect_power_gcd"] = ledger.perfect_power_exponent();
    doc["is_perfect_square"] = ledger.is_perfect_pth(2);
    if (!ledger.is_unit()) doc["largest_prime"] = ledger.largest_prime();
    doc["log_abs"] = jfloat(ledger.log_abs());
    doc["squarefree_part_ratio"] = jfloat(squarefree_part_statistic(ledger));
    if (x >= 1 && f.scale() == 1 && f.factors().size() == 1 &&
        f.factors()[0].multiplicity == 1) {
      const IntPolynomial& p = f.factors()[0].poly;
      if (p.degree() == 2 && p.coeff(2) == 1 && p.coeff(1) == 0 &&
          p.coeff(0) >= 1) {
        auto check = log_lower_bound_check(ledger);
        doc["log_lower_bound"] = {{"lhs", jfloat(check.lhs)},
                                  {"rhs", jfloat(check.rhs)},
                                  {"holds", check.holds}};
      }
    }
  }
  if (opts.format == "csv") {
    out << "p,e\n";
    for (const auto& [p, e] : ledger.exponents()) out << p << ',' << e << '\n';
    return 0;
  }
  emit(out, doc);
  return 0;
}

int cmd_power_scan(const std::string& poly, u64 power, u64 xmax,
                   bool assert_irred, std::ostream& out) {
  FactoredPolynomial f = FactoredPolynomial::parse(poly, assert_irred);
  CensusReport report = pth_power_census(f, power, xmax, nullptr);
  json doc;
  doc["schema"] = "power-scan/1";
  doc["poly"] = f.to_string();
  doc["power"] = power;
  doc["xmax"] = xmax;
  doc["hits"] = report.hits;
  doc["unit_x"] = report.unit_x;
  doc["count"] = report.hits.size();
  if (report.zero_at) doc["zero_at"] = *report.zero_at;
  emit(out, doc);
  return 0;
}

int cmd_squarefull_scan(const std::string& poly, u64 xmin, u64 xmax,
                        bool assert_irred, std::ostream& out) {
  FactoredPolynomial f = FactoredPolynomial::parse(poly, assert_irred);
  SquarefullScanReport report = squarefull_scan(f, xmin, xmax);
  json doc;
  doc["schema"] = "squarefull-scan/1";
  doc["poly"] = f.to_string();
  doc["xmin"] = xmin;
  doc["xmax"] = xmax;
  doc["hits"] = report.hits;
  doc["unit_x"] = report.unit_x;
  doc["count"] = report.hits.size();
  if (report.zero_at) doc["zero_at"] = *report.zero_at;
  emit(out, doc);
  return 0;
}

int cmd_dfit(const std::string& poly, u64 x, double alpha, double beta,
             const CommonOpts& opts, std::ostream& out) {
  IntPolynomial f = IntPolynomial::parse(poly);
  Cache cache = open_cache(opts);
  PrimeSieve sieve = make_sieve(pick_limit(opts, x), cache);
  if (opts.format == "csv") {
    out << "p,v,ratio\n";
    for (const auto& pair : dfit_pairs(f, sieve, x, alpha, beta))
      out << pair.p << ',' << pair.v << ',' << format_float(pair.ratio) << '\n';
    return 0;
  }
  DfitResult r = dfit_count(f, sieve, x, alpha, beta);
  json doc;
  doc["schema"] = "dfit/1";
  doc["poly"] = f.to_string();
  doc["x"] = x;
  doc["alpha"] = jfloat(alpha);
  doc["beta"] = jfloat(beta);
  doc["count"] = r.count;
  doc["pi_x"] = r.pi_x;
  doc["expected"] = jfloat(r.expected);
  doc["ratio"] = jfloat(r.ratio);
  emit(out, doc);
  return 0;
}

int cmd_exact_once(const std::string& poly, u64 x, double delta,
                   const CommonOpts& opts, std::ostream& out) {
  IntPolynomial f = IntPolynomial::parse(poly);
  Cache cache = open_cache(opts);
  PrimeSieve sieve = make_sieve(pick_limit(opts, 2 * x + 1), cache);
  ExactOnceResult r = exact_once_primes(f, sieve, x, delta);
  json doc;
  doc["schema"] = "exact-once/1";
  doc["poly"] = f.to_string();
  doc["x"] = x;
  doc["delta"] = jfloat(delta);
  doc["epsilon"] = jfloat(r.epsilon);
  doc["window"] = {r.window_lo, r.window_hi};
  doc["window_primes"] = r.window_prime_count;
  doc["once_count"] = r.once_count;
  doc["threshold"] = jfloat(r.threshold);
  doc["meets_threshold"] = static_cast<double>(r.once_count) >= r.threshold;
  emit(out, doc);
  return 0;
}

int cmd_window_prime(const std::string& poly, u64 x, double a, double b,
                     const CommonOpts& opts, std::ostream& out) {
  IntPolynomial f = IntPolynomial::parse(poly);
  Cache cache = open_cache(opts);
  u64 needed = static_cast<u64>(b * static_cast<double>(x)) + 1;
  PrimeSieve sieve = make_sieve(pick_limit(opts, needed), cache);
  auto hit = prime_in_window(f, sieve, x, a, b);
  json doc;
  doc["schema"] = "window-prime/1";
  doc["poly"] = f.to_string();
  doc["x"] = x;
  doc["a"] = jfloat(a);
  doc["b"] = jfloat(b);
  doc["found"] = hit.has_value();
  if (hit) {
    doc["prime"] = hit->first;
    doc["witness_n"] = hit->second;
  }
  emit(out, doc);
  return 0;
}

int cmd_criteria(const std::vector<std::string>& polys,
                 const std::vector<std::string>& linears, bool with_classes,
                 std::ostream& out) {
  std::vector<IntPolynomial> fs, gs;
  for (const auto& s : polys) fs.push_back(IntPolynomial::parse(s));
  for (const auto& s : linears) gs.push_back(IntPolynomial::parse(s));
  ApplicabilityReport report = check_applicability(fs, gs);
  json doc;
  doc["schema"] = "criteria/1";
  json fs_json = json::array(), ds_json = json::array();
  for (const auto& f : fs) fs_json.push_back(f.to_string());
  DiscriminantProfile profile = DiscriminantProfile::from_quadratics(fs);
  for (const auto& d : profile.discs()) ds_json.push_back(to_decimal(d));
  doc["quadratics"] = std::move(fs_json);
  doc["discriminants"] = std::move(ds_json);
  if (!gs.empty()) {
    json gs_json = json::array();
    for (const auto& g : gs) gs_json.push_back(g.to_string());
    doc["linears"] = std::move(gs_json);
  }
  doc["j_f"] = report.jf;
  doc["j_f_prime"] = report.jf_prime;
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back(check_json(c));
  doc["checks"] = std::move(checks);
  doc["matched"] = report.matched;
  if (report.matched != "none") doc["conclusion"] = report.conclusion;
  if (with_classes && report.jf > 0) {
    ResidueCriterion rc = legendre_pattern_classes(profile);
    json classes = json::array();
    for (const auto& c : rc.classes) classes.push_back(to_decimal(c));
    doc["residue_criterion"] = {{"modulus", to_decimal(rc.modulus)},
                                {"classes", std::move(classes)}};
  }
  emit(out, doc);
  return 0;
}

int cmd_ap_sums(u64 q, u64 a, double zmax, const CommonOpts& opts,
                std::ostream& out) {
  Cache cache = open_cache(opts);
  PrimeSieve sieve =
      make_sieve(pick_limit(opts, static_cast<u64>(zmax) + 1), cache);
  APSumTable table = build_ap_sum_table(sieve, q, a, zmax);
  if (opts.format == "csv") {
    out << "z,q,a,theta,pi,sum_logp_over_p,deviation\n";
    for (const auto& row : table.rows) {
      out << format_float(row.z) << ',' << table.q << ',' << table.a << ','
          << format_float(row.theta) << ',' << row.pi << ','
          << format_float(row.sum_logp_over_p) << ','
          << format_float(row.deviation) << '\n';
    }
    return 0;
  }
  json doc;
  doc["schema"] = "ap-sums/1";
  doc["q"] = table.q;
  doc["a"] = table.a;
  json rows = json::array();
  for (const auto& row : table.rows) {
    rows.push_back({{"z", jfloat(row.z)},
                    {"theta", jfloat(row.theta)},
                    {"pi", row.pi},
                    {"sum_logp_over_p", jfloat(row.sum_logp_over_p)},
                    {"sum_logp_over_pm1", jfloat(row.sum_logp_over_pm1)},
                    {"deviation", jfloat(row.deviation)}});
  }
  doc["rows"] = std::move(rows);
  emit(out, doc);
  return 0;
}

int cmd_estimate_c0(u64 qmax, double zmax, const CommonOpts& opts,
                    std::ostream& out) {
  Cache cache = open_cache(opts);
  PrimeSieve sieve =
      make_sieve(pick_limit(opts, static_cast<u64>(zmax) + 1), cache);
  double c0 = estimate_c0(sieve, qmax, zmax);
  json doc;
  doc["schema"] = "estimate-c0/1";
  doc["qmax"] = qmax;
  doc["zmax"] = jfloat(zmax);
  doc["c0"] = jfloat(c0);
  doc["floor"] = jfloat(0.1);
  doc["sup_s_deviation"] = jfloat(sup_s_deviation(sieve, qmax, zmax));
  emit(out, doc);
  return 0;
}

int cmd_charsum(const std::string& poly, unsigned k, u64 power, u64 q_single,
                u64 qmax, bool assert_irred, const CommonOpts& opts,
                std::ostream& out) {
  FactoredPolynomial f = FactoredPolynomial::parse(poly, assert_irred);
  require(q_single != 0 || qmax != 0, ErrorCode::InvalidInput,
          "provide --q or --qmax");
  std::vector<u64> qs;
  if (q_single != 0) {
    qs.push_back(q_single);
  } else {
    PrimeSieve sieve(qmax);
    BigInt sd = sdisc(f);
    for (u64 q : sieve.primes()) {
      if (q <= static_cast<u64>(f.degree()) * k) continue;
      if ((q - 1) % power != 0 || sd % q == 0) continue;
      qs.push_back(q);
    }
  }
  if (opts.format == "csv") {
    out << "q,magnitude,bound\n";
    for (u64 q : qs) {
      CharSumResult r = char_sum(f, k, q, power);
      out << q << ',' << format_float(r.magnitude) << ','
          << format_float(r.bound) << '\n';
    }
    return 0;
  }
  json rows = json::array();
  for (u64 q : qs) {
    CharSumResult r = char_sum(f, k, q, power);
    PthResidueCount s = count_pth_residue_values(f, k, q, power);
    rows.push_back({{"q", q},
                    {"magnitude", jfloat(r.magnitude)},
                    {"bound", jfloat(r.bound)},
                    {"within", r.within},
                    {"zeros", r.zeros},
                    {"s_k", s.s_k},
                    {"residue_lhs", jfloat(s.lhs)},
                    {"residue_bound_with_zeros", jfloat(s.bound_with_zeros)},
                    {"residue_within", s.within}});
  }
  json doc;
  doc["schema"] = "charsum/1";
  doc["poly"] = f.to_string();
  doc["k"] = k;
  doc["power"] = power;
  doc["deg_f_k"] = f.degree() * static_cast<int>(k + 1);
  doc["rows"] = std::move(rows);
  emit(out, doc);
  return 0;
}

int cmd_turan(const std::string& poly, unsigned k, u64 power, u64 xmax, u64 z,
              bool assert_irred, const CommonOpts& opts, std::ostream& out) {
  FactoredPolynomial f = FactoredPolynomial::parse(poly, assert_irred);
  Cache cache = open_cache(opts);
  PrimeSieve sieve = make_sieve(pick_limit(opts, 2 * z + 1), cache);
  TuranReport r = turan_experiment(f, k, power, xmax, z, sieve);
  json doc;
  doc["schema"] = "turan/1";
  doc["poly"] = f.to_string();
  doc["k"] = r.k;
  doc["power"] = r.p;
  doc["x"] = r.x;
  doc["z"] = r.z;
  doc["prime_count"] = r.prime_count;
  doc["u"] = jfloat(r.u);
  doc["sum_r"] = jfloat(r.sum_r);
  doc["sum_rr"] = jfloat(r.sum_rr);
  doc["survivors"] = r.survivors;
  doc["bound"] = jfloat(r.bound);
  doc["within"] = r.within;
  emit(out, doc);
  return 0;
}

int cmd_primeseq(const std::string& poly, u64 power, u64 q1, unsigned count,
                 u64 budget, int gf_override, bool assert_irred,
                 const CommonOpts& opts, std::ostream& out) {
  FactoredPolynomial f = FactoredPolynomial::parse(poly, assert_irred);
  Cache cache = open_cache(opts);
  u64 needed = q1;
  for (unsigned i = 1; i < count; ++i) {
    require(needed < (1ull << 62), ErrorCode::CapExceeded, "window overflow");
    needed *= (power + 1);  // generous cover for ceil(p/d_F) q_i growth
  }
  PrimeSieve sieve =
      make_sieve(pick_limit(opts, std::max(needed + 1, budget + 1)), cache);
  GaloisProfile profile = estimate_galois_profile(f, sieve, budget);
  if (gf_override > 0) profile.g_f = gf_override;
  PrimeSeq seq = build_prime_seq(f, sieve, power, q1, count, profile);
  json doc;
  doc["schema"] = "primeseq/1";
  doc["poly"] = f.to_string();
  doc["power"] = power;
  doc["step"] = seq.step;
  doc["d_f"] = profile.d_f;
  doc["g_f"] = profile.g_f;
  doc["primes"] = seq.primes;
  json windows = json::array();
  for (const auto& w : seq.windows) windows.push_back({w.lo, w.hi});
  doc["windows"] = std::move(windows);
  doc["complete"] = seq.complete;
  emit(out, doc);
  return 0;
}

int cmd_gaplemma(const std::string& set, u64 xmax, u64 kmax, u64 random_count,
                 u64 seed, std::ostream& out) {
  json doc;
  doc["schema"] = "gaplemma/1";
  if (!set.empty()) {
    std::vector<u64> s = parse_u64_list(set);
    GapLemmaCheck check = gap_lemma_check(s, xmax, kmax);
    doc["x"] = xmax;
    doc["k_max"] = kmax;
    doc["set_size"] = s.size();
    doc["threshold"] = jfloat(check.threshold);
    doc["holds"] = check.holds;
    if (check.holds) {
      doc["witness_k"] = check.witness_k;
      doc["witness_count"] = check.witness_count;
    }
    json gaps = json::array();
    for (const auto& [k, c] : gap_structure(s, xmax)) gaps.push_back({k, c});
    doc["gap_structure"] = std::move(gaps);
    emit(out, doc);
    return 0;
  }
  require(random_count > 0, ErrorCode::InvalidInput,
          "provide --set or --random");
  std::mt19937_64 rng(seed);
  u64 failures = 0;
  json failure_examples = json::array();
  for (u64 i = 0; i < random_count; ++i) {
    std::uniform_int_distribution<u64> xd(20, xmax);
    u64 x = xd(rng);
    std::uniform_int_distribution<u64> kd(2, kmax);
    u64 k = kd(rng);
    std::uniform_real_distribution<double> dd(1.0 / static_cast<double>(k), 1.0);
    double density = dd(rng);
    std::vector<u64> s;
    for (u64 n = 1; n <= x; ++n)
      if (std::uniform_real_distribution<double>(0, 1)(rng) < density)
        s.push_back(n);
    if (s.size() * k <= x) {
      --i;  // resample; the lemma needs |S| > X/K
      continue;
    }
    GapLemmaCheck check = gap_lemma_check(s, x, k);
    if (!check.holds) {
      ++failures;
      if (failure_examples.size() < 5)
        failure_examples.push_back({{"x", x}, {"k", k}, {"size", s.size()}});
    }
  }
  doc["instances"] = random_count;
  doc["xmax"] = xmax;
  doc["kmax"] = kmax;
  doc["seed"] = seed;
  doc["failures"] = failures;
  doc["all_hold"] = failures == 0;
  if (!failure_examples.empty()) doc["failure_examples"] = failure_examples;
  emit(out, doc);
  return 0;
}

int cmd_census(const std::string& poly, u64 power, u64 xmax, u64 budget,
               bool assert_irred, const CommonOpts& opts, std::ostream& out) {
  FactoredPolynomial f = FactoredPolynomial::parse(poly, assert_irred);
  Cache cache = open_cache(opts);
  PrimeSieve sieve = make_sieve(pick_limit(opts, std::max<u64>(budget + 1, 1000)),
                                cache);
  GaloisProfile profile = estimate_galois_profile(f, sieve, budget);
  CensusReport report = pth_power_census(f, power, xmax, &profile);
  json doc;
  doc["schema"] = "census/1";
  doc["poly"] = f.to_string();
  doc["power"] = power;
  doc["xmax"] = xmax;
  doc["hits"] = report.hits;
  doc["unit_x"] = report.unit_x;
  doc["count"] = report.hits.size();
  if (report.zero_at) doc["zero_at"] = *report.zero_at;
  doc["bound_24_25"] = jfloat(report.bound_24_25);
  if (report.bound_galois) {
    doc["bound_galois"] = jfloat(*report.bound_galois);
  } else {
    doc["bound_galois"] = nullptr;
  }
  doc["d_f"] = report.d_f;
  doc["g_f"] = profile.g_f;
  json hist = json::array();
  for (const auto& [roots, freq] : profile.histogram)
    hist.push_back({roots, freq});
  doc["root_histogram"] = std::move(hist);
  emit(out, doc);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"polyprod: prime ledgers and power statistics of polynomial "
               "value products"};
  app.require_subcommand(1);

  CommonOpts opts;

  // analyze
  std::string a_poly;
  u64 a_x = 0;
  bool a_assert = false;
  auto* analyze = app.add_subcommand(
      "analyze", "Factor N_x = prod F(n) and report its exponent ledger");
  analyze->add_option("--poly,--factored", a_poly,
                      "Polynomial (ascending coefficients or factored form)")
      ->required();
  analyze->add_option("--x", a_x, "Upper end of the product")->required();
  analyze->add_flag("--assert-irreducible", a_assert,
                    "Accept degree >= 3 factors as irreducible");
  add_common(analyze, opts);

  // power-scan
  std::string ps_poly;
  u64 ps_power = 2, ps_xmax = 0;
  bool ps_assert = false;
  auto* power_scan = app.add_subcommand(
      "power-scan", "List x <= xmax with N_x a perfect p-th power");
  power_scan->add_option("--poly,--factored", ps_poly, "Polynomial")->required();
  power_scan->add_option("--power", ps_power, "Prime power p")->required();
  power_scan->add_option("--xmax", ps_xmax, "Scan bound")->required();
  power_scan->add_flag("--assert-irreducible", ps_assert, "");
  add_common(power_scan, opts);

  // squarefull-scan
  std::string sf_poly;
  u64 sf_xmin = 1, sf_xmax = 0;
  bool sf_assert = false;
  auto* sf_scan = app.add_subcommand("squarefull-scan",
                                     "List x in [xmin, xmax] with N_x squarefull");
  sf_scan->add_option("--poly,--factored", sf_poly, "Polynomial")->required();
  sf_scan->add_option("--xmin", sf_xmin, "Scan start");
  sf_scan->add_option("--xmax", sf_xmax, "Scan bound")->required();
  sf_scan->add_flag("--assert-irreducible", sf_assert, "");
  add_common(sf_scan, opts);

  // dfit
  std::string df_poly;
  u64 df_x = 0;
  double df_alpha = 0, df_beta = 1;
  auto* dfit = app.add_subcommand(
      "dfit", "Count root pairs (p, v) with alpha <= v/p < beta");
  dfit->add_option("--poly", df_poly, "Irreducible quadratic")->required();
  dfit->add_option("--x", df_x, "Prime bound")->required();
  dfit->add_option("--alpha", df_alpha, "Window start");
  dfit->add_option("--beta", df_beta, "Window end");
  add_common(dfit, opts);

  // exact-once
  std::string eo_poly;
  u64 eo_x = 0;
  double eo_delta = 0.1;
  auto* exact_once = app.add_subcommand(
      "exact-once", "Primes in ((2-delta)x, 2x] dividing N_x exactly once");
  exact_once->add_option("--poly", eo_poly, "Monic quadratic")->required();
  exact_once->add_option("--x", eo_x, "Product bound")->required();
  exact_once->add_option("--delta", eo_delta, "Window width parameter");
  add_common(exact_once, opts);

  // window-prime
  std::string wp_poly;
  u64 wp_x = 0;
  double wp_a = 3, wp_b = 4;
  auto* window_prime = app.add_subcommand(
      "window-prime", "Find a prime in (a x, b x) dividing prod f(n)");
  window_prime->add_option("--poly", wp_poly, "Monic irreducible quadratic")
      ->required();
  window_prime->add_option("--x", wp_x, "Product bound")->required();
  window_prime->add_option("--a", wp_a, "Window start multiplier");
  window_prime->add_option("--b", wp_b, "Window end multiplier");
  add_common(window_prime, opts);

  // criteria
  std::vector<std::string> cr_polys, cr_linears;
  bool cr_classes = false;
  auto* criteria = app.add_subcommand(
      "criteria", "Evaluate the squarefull/perfect-square theorem hypotheses");
  criteria->add_option("--poly", cr_polys, "Quadratic (repeatable)")
      ->required()
      ->take_all();
  criteria->add_option("--linear", cr_linears, "Linear term (repeatable)")
      ->take_all();
  criteria->add_flag("--classes", cr_classes,
                     "Include the Legendre-pattern residue classes");
  add_common(criteria, opts);

  // ap-sums
  u64 ap_q = 1, ap_a = 1;
  double ap_zmax = 1000;
  auto* ap_sums = app.add_subcommand(
      "ap-sums", "Prime sums over the progression p == a (mod q)");
  ap_sums->add_option("--q", ap_q, "Modulus")->required();
  ap_sums->add_option("--a", ap_a, "Residue")->required();
  ap_sums->add_option("--zmax", ap_zmax, "Upper end of the z grid")->required();
  add_common(ap_sums, opts);

  // estimate-c0
  u64 c0_qmax = 12;
  double c0_zmax = 1000000;
  auto* est_c0 = app.add_subcommand(
      "estimate-c0", "Empirical C0 for the progression log-sum bound");
  est_c0->add_option("--qmax", c0_qmax, "Largest modulus");
  est_c0->add_option("--zmax", c0_zmax, "Upper end of the z sweep");
  add_common(est_c0, opts);

  // charsum
  std::string cs_poly;
  unsigned cs_k = 0;
  u64 cs_power = 2, cs_q = 0, cs_qmax = 0;
  bool cs_assert = false;
  auto* charsum = app.add_subcommand(
      "charsum", "Order-p character sums of F_k against the Weil bound");
  charsum->add_option("--poly,--factored", cs_poly, "Polynomial")->required();
  charsum->add_option("--k", cs_k, "Shift count (F_k = F(n)...F(n+k))");
  charsum->add_option("--power", cs_power, "Character order p")->required();
  charsum->add_option("--q", cs_q, "Single modulus q");
  charsum->add_option("--qmax", cs_qmax, "Sweep all admissible q <= qmax");
  charsum->add_flag("--assert-irreducible", cs_assert, "");
  add_common(charsum, opts);

  // turan
  std::string tu_poly;
  unsigned tu_k = 0;
  u64 tu_power = 2, tu_xmax = 0, tu_z = 0;
  bool tu_assert = false;
  auto* turan = app.add_subcommand(
      "turan", "Turan sieve bound vs true survivors for p-th residue values");
  turan->add_option("--poly,--factored", tu_poly, "Polynomial")->required();
  turan->add_option("--k", tu_k, "Shift count");
  turan->add_option("--power", tu_power, "Power p")->required();
  turan->add_option("--xmax", tu_xmax, "Set size X")->required();
  turan->add_option("--z", tu_z, "Sieve level; primes from (z, 2z]")->required();
  turan->add_flag("--assert-irreducible", tu_assert, "");
  add_common(turan, opts);

  // primeseq
  std::string sq_poly;
  u64 sq_power = 0, sq_q1 = 0, sq_budget = 10000;
  unsigned sq_count = 5;
  int sq_gf = 0;
  bool sq_assert = false;
  auto* primeseq = app.add_subcommand(
      "primeseq", "Greedy prime sequence with d_F roots in nested windows");
  primeseq->add_option("--poly,--factored", sq_poly, "Polynomial")->required();
  primeseq->add_option("--power", sq_power, "Power p")->required();
  primeseq->add_option("--q1", sq_q1, "Seed prime")->required();
  primeseq->add_option("--count", sq_count, "Sequence length");
  primeseq->add_option("--budget", sq_budget, "Prime budget for the profile");
  primeseq->add_option("--gf", sq_gf, "Override the g_F estimate");
  primeseq->add_flag("--assert-irreducible", sq_assert, "");
  add_common(primeseq, opts);

  // gaplemma
  std::string gl_set;
  u64 gl_xmax = 500, gl_kmax = 10, gl_random = 0, gl_seed = 1;
  auto* gaplemma = app.add_subcommand(
      "gaplemma", "Gap-class lower bound check on dense subsets");
  gaplemma->add_option("--set", gl_set, "Explicit comma-separated subset");
  gaplemma->add_option("--xmax", gl_xmax, "X (or its bound for random runs)");
  gaplemma->add_option("--kmax", gl_kmax, "K (or its bound for random runs)");
  gaplemma->add_option("--random", gl_random, "Number of random instances");
  gaplemma->add_option("--seed", gl_seed, "RNG seed for random instances");
  add_common(gaplemma, opts);

  // census
  std::string ce_poly;
  u64 ce_power = 2, ce_xmax = 0, ce_budget = 10000;
  bool ce_assert = false;
  auto* census = app.add_subcommand(
      "census", "Perfect p-th power census with the density bounds");
  census->add_option("--poly,--factored", ce_poly, "Polynomial")->required();
  census->add_option("--power", ce_power, "Prime power p")->required();
  census->add_option("--xmax", ce_xmax, "Scan bound")->required();
  census->add_option("--budget", ce_budget, "Prime budget for the profile");
  census->add_flag("--assert-irreducible", ce_assert, "");
  add_common(census, opts);

  std::vector<std::string> mutable_args(args);
  try {
    std::vector<const char*> argv;
    argv.push_back("polyprod");
    for (const auto& s : mutable_args) argv.push_back(s.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help() << std::flush;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(a_poly, a_x, a_assert, opts, out);
    if (power_scan->parsed())
      return cmd_power_scan(ps_poly, ps_power, ps_xmax, ps_assert, out);
    if (sf_scan->parsed())
      return cmd_squarefull_scan(sf_poly, sf_xmin, sf_xmax, sf_assert, out);
    if (dfit->parsed())
      return cmd_dfit(df_poly, df_x, df_alpha, df_beta, opts, out);
    if (exact_once->parsed())
      return cmd_exact_once(eo_poly, eo_x, eo_delta, opts, out);
    if (window_prime->parsed())
      return cmd_window_prime(wp_poly, wp_x, wp_a, wp_b, opts, out);
    if (criteria->parsed())
      return cmd_criteria(cr_polys, cr_linears, cr_classes, out);
    if (ap_sums->parsed()) return cmd_ap_sums(ap_q, ap_a, ap_zmax, opts, out);
    if (est_c0->parsed()) return cmd_estimate_c0(c0_qmax, c0_zmax, opts, out);
    if (charsum->parsed())
      return cmd_charsum(cs_poly, cs_k, cs_power, cs_q, cs_qmax, cs_assert,
                         opts, out);
    if (turan->parsed())
      return cmd_turan(tu_poly, tu_k, tu_power, tu_xmax, tu_z, tu_assert, opts,
                       out);
    if (primeseq->parsed())
      return cmd_primeseq(sq_poly, sq_power, sq_q1, sq_count, sq_budget, sq_gf,
                          sq_assert, opts, out);
    if (gaplemma->parsed())
      return cmd_gaplemma(gl_set, gl_xmax, gl_kmax, gl_random, gl_seed, out);
    if (census->parsed())
      return cmd_census(ce_poly, ce_power, ce_xmax, ce_budget, ce_assert, opts,
                        out);
  } catch (const Error& e) {
    err << e.what() << std::endl;
    return is_limit_error(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << std::endl;
    return 2;
  }
  err << "no subcommand executed" << std::endl;
  return 2;
}

}  // namespace polyprod::cli
