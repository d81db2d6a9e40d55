#include <benchmark/benchmark.h>

#include "polyprod/equidist.hpp"
#include "polyprod/factorization.hpp"
#include "polyprod/ledger.hpp"
#include "polyprod/modular.hpp"
#include "polyprod/powersieve.hpp"
#include "polyprod/sieve.hpp"

using namespace polyprod;

namespace {

// touch the shared trial-division sieve before timing starts
const bool warmed = [] { return !factorize_u64(1000003).empty(); }();

void BM_sieve(benchmark::State& state) {
  u64 limit = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    PrimeSieve sieve(limit);
    benchmark::DoNotOptimize(sieve.primes().size());
  }
}
BENCHMARK(BM_sieve)->Arg(100000)->Arg(1000000);

void BM_factorize_values(benchmark::State& state) {
  // quadratic values around the given n
  u64 base = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    for (u64 n = base; n < base + 64; ++n)
      benchmark::DoNotOptimize(factorize_u64(n * n + 1));
  }
}
BENCHMARK(BM_factorize_values)->Arg(1000)->Arg(100000)->Arg(10000000);

void BM_ledger_extend(benchmark::State& state) {
  u64 x = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    FactorLedger ledger(FactoredPolynomial::parse("1,0,1"));
    ledger.extend(x);
    benchmark::DoNotOptimize(ledger.exponents().size());
  }
}
BENCHMARK(BM_ledger_extend)->Arg(500)->Arg(2000);

void BM_tonelli_roots(benchmark::State& state) {
  PrimeSieve sieve(static_cast<u64>(state.range(0)));
  IntPolynomial f({1, 0, 1});
  for (auto _ : state) {
    u64 total = 0;
    for (u64 p : sieve.primes()) total += roots_mod_p(f, p).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_tonelli_roots)->Arg(10000)->Arg(100000);

void BM_dfit(benchmark::State& state) {
  PrimeSieve sieve(static_cast<u64>(state.range(0)));
  IntPolynomial f({1, 0, 1});
  for (auto _ : state) {
    auto r = dfit_count(f, sieve, sieve.limit(), 0, 1);
    benchmark::DoNotOptimize(r.count);
  }
}
BENCHMARK(BM_dfit)->Arg(10000)->Arg(100000);

void BM_char_sum(benchmark::State& state) {
  auto f = FactoredPolynomial::parse("1,0,1");
  u64 q = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    auto r = char_sum(f, 2, q, 2);
    benchmark::DoNotOptimize(r.magnitude);
  }
}
BENCHMARK(BM_char_sum)->Arg(499)->Arg(4999);

}  // namespace

BENCHMARK_MAIN();
