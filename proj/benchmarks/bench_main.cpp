#include "extrainv/exact_linalg.hpp"
#include "extrainv/fibered.hpp"
#include "extrainv/subgroup.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <string>

using namespace extrainv;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
  return a;
}

void BM_Snf(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix a = random_matrix(rng, n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(snf(a));
}
BENCHMARK(BM_Snf)->DenseRange(2, 8, 2);

void BM_Canonicalize(benchmark::State& state) {
  SubgroupSpec spec;
  spec.dim = 3;
  spec.discrete = {{Rational(1, 2), 0, 0}, {0, Rational(1, 3), 0}};
  spec.continuous = {{0, 0, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(ClosedSubgroup::canonicalize(spec));
}
BENCHMARK(BM_Canonicalize);

std::vector<Tile> square_window(int half) {
  std::vector<Tile> w;
  for (int i = -half; i < half; ++i)
    for (int j = -half; j < half; ++j) w.push_back({i, j});
  return w;
}

void BM_RankTest(benchmark::State& state) {
  SubgroupSpec spec;
  spec.dim = 2;
  spec.discrete = {{Rational(1, 3), 0}};
  spec.continuous = {{-1, 1}};
  const ClosedSubgroup m = ClosedSubgroup::canonicalize(spec);
  const auto grid = static_cast<std::size_t>(state.range(0));
  const FiberedGenerator e = exact_invariant_generator(m, square_window(4), {grid, grid});
  const GeneratorSet phi({e});
  for (auto _ : state) benchmark::DoNotOptimize(test_invariance_rank(phi, m));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid * grid));
}
BENCHMARK(BM_RankTest)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
