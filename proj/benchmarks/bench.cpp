#include <benchmark/benchmark.h>

#include <random>

#include "binomlab/carlitz.hpp"
#include "binomlab/mahler.hpp"
#include "binomlab/measure.hpp"
#include "binomlab/padic.hpp"

using namespace binomlab;

static void BM_LucasKernel(benchmark::State& state) {
  unsigned p = static_cast<unsigned>(state.range(0));
  unsigned long n = 0, k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lucas_binomial_mod_p(n, k, p));
    k = (k + 17) % 4096;
    n = k + ((n + 31) % 4096);
  }
}
BENCHMARK(BM_LucasKernel)->Arg(2)->Arg(7);

static void BM_ExactBinomial(benchmark::State& state) {
  long n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(binomial(ExactInt(n), ExactInt(n / 2)));
}
BENCHMARK(BM_ExactBinomial)->Arg(100)->Arg(1500);

static void BM_BuildBasis(benchmark::State& state) {
  auto f = FqField::make(2, 1);
  unsigned K = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_basis(f, K));
}
BENCHMARK(BM_BuildBasis)->Arg(2)->Arg(4);

static void BM_OpMul(benchmark::State& state) {
  auto f = FqField::make(2, 1);
  auto ring = QuotientRing::make(f, FqPoly::t(f), 3);
  std::mt19937_64 rng(1);
  std::size_t J = static_cast<std::size_t>(state.range(0));
  std::vector<FqPoly> ca, cb;
  for (std::size_t j = 0; j <= J; ++j) {
    ca.push_back(random_poly(f, 2, rng));
    cb.push_back(random_poly(f, 2, rng));
  }
  DividedOperator a(ring, ca), b(ring, cb);
  for (auto _ : state) benchmark::DoNotOptimize(op_mul(a, b));
}
BENCHMARK(BM_OpMul)->Arg(8)->Arg(32);

static void BM_OneUnitPower(benchmark::State& state) {
  auto f = FqField::make(2, 1);
  std::size_t L = static_cast<std::size_t>(state.range(0));
  PAdicTrunc y = PAdicTrunc::embed(-1, PrimePower(2, 1), 12);
  for (auto _ : state) benchmark::DoNotOptimize(one_unit_power(y, L, f));
}
BENCHMARK(BM_OneUnitPower)->Arg(64)->Arg(1024);

BENCHMARK_MAIN();
