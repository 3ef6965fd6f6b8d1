#include <benchmark/benchmark.h>

#include "grassmor/exactness.hpp"
#include "grassmor/fillings.hpp"
#include "grassmor/sweep.hpp"
#include "grassmor/transversality.hpp"

using namespace grassmor;

namespace {

SplittingPair pair_for(int n, int e) {
  // A spread-out pair on G((n + 1) / 2, n) of degree e.
  const int r = (n + 1) / 2;
  std::vector<int> a(static_cast<std::size_t>(r), 0);
  std::vector<int> b(static_cast<std::size_t>(n - r), 0);
  for (int k = 0; k < e; ++k) {
    a[static_cast<std::size_t>(k % r)] += 1;
    b[static_cast<std::size_t>((k * 2) % (n - r))] += 1;
  }
  return SplittingPair::make(n, r, SplittingType(a), SplittingType(b));
}

void BM_Build(benchmark::State& state) {
  const SplittingPair p = pair_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(build(p));
}
BENCHMARK(BM_Build)->Args({4, 6})->Args({8, 6})->Args({8, 12});

void BM_Verify(benchmark::State& state) {
  const ExactSequence seq =
      build(pair_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(verify(seq));
}
BENCHMARK(BM_Verify)->Args({4, 6})->Args({8, 6})->Args({8, 12});

void BM_DPhiRank(benchmark::State& state) {
  const ExactSequence seq =
      build(pair_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(is_surjective(seq));
}
BENCHMARK(BM_DPhiRank)->Args({4, 6})->Args({8, 6})->Args({8, 12});

void BM_Witness(benchmark::State& state) {
  const ExactSequence seq =
      build(pair_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(witness_spans(seq));
}
BENCHMARK(BM_Witness)->Args({4, 6})->Args({8, 6});

void BM_EnumerateFillings(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  std::vector<int> c;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n - r; ++j) c.push_back(i + 2 * j);
  }
  const TangentSplitting t(r, n, c);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_fillings(t));
}
BENCHMARK(BM_EnumerateFillings)->Args({2, 4})->Args({3, 6})->Args({4, 8});

void BM_Sweep(benchmark::State& state) {
  SweepOptions o;
  o.max_n = static_cast<int>(state.range(0));
  o.max_e = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(o));
}
BENCHMARK(BM_Sweep)->Args({6, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
