#include <benchmark/benchmark.h>

#include "nilorb/bk.hpp"
#include "nilorb/katsylo.hpp"
#include "nilorb/partition.hpp"
#include "nilorb/poly.hpp"
#include "nilorb/walgebra.hpp"

namespace {

using namespace nilorb;

void BM_MaximalMultisets(benchmark::State& state) {
  auto lambda = EpsPartition::validate({2, 4, 6, 8, 10}, -1);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_admissible_multisets(lambda));
}
BENCHMARK(BM_MaximalMultisets);

void BM_SheetScan(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long sheets = 0;
    for (int eps : {1, -1})
      for (const auto& lambda : enumerate_eps_partitions(N, eps))
        sheets += static_cast<long>(maximal_admissible_multisets(lambda).size());
    benchmark::DoNotOptimize(sheets);
  }
}
BENCHMARK(BM_SheetScan)->Arg(10)->Arg(14);

void BM_KatsyloComponents(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<int> parts;
  for (int i = 1; i <= n; ++i) parts.push_back(2 * i);
  auto pres = katsylo_presentation(EpsPartition::validate(parts, -1));
  for (auto _ : state) benchmark::DoNotOptimize(katsylo_components(pres));
}
BENCHMARK(BM_KatsyloComponents)->Arg(4)->Arg(6)->Arg(8);

void BM_BKInvariant(benchmark::State& state) {
  auto model = LieModel::build(EpsPartition::validate({2, 4}, -1));
  for (auto _ : state) {
    BKCache cache(model);
    benchmark::DoNotOptimize(cache.invariant({1, 1, 0, 5}));
  }
}
BENCHMARK(BM_BKInvariant);

void BM_PoissonBracket(benchmark::State& state) {
  auto model = LieModel::build(EpsPartition::validate({2, 4}, -1));
  BKCache cache(model);
  const auto& a = cache.invariant({1, 2, 1, 3});
  const auto& b = cache.invariant({2, 1, 1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(poisson_bracket(a, b, model));
}
BENCHMARK(BM_PoissonBracket);

} // namespace

BENCHMARK_MAIN();
