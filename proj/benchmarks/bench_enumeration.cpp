#include <benchmark/benchmark.h>

#include "bettikit/bettikit.hpp"

using namespace bettikit;

namespace {

Graph stacked_skeleton(int n) { return one_skeleton(stacked_boundary(3, n, 1)); }

void BM_BVectorSweep(benchmark::State& state) {
  const auto g = stacked_skeleton(static_cast<int>(state.range(0)));
  EnumerationOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(b_vector_bruteforce(g, opts));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_BVectorSweep)->ArgsProduct({{12, 16, 20}, {1, 0}})->Unit(benchmark::kMillisecond);

void BM_BVectorPerK(benchmark::State& state) {
  const auto g = stacked_skeleton(static_cast<int>(state.range(0)));
  EnumerationOptions opts;
  opts.backend = Backend::per_k;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(b_vector_bruteforce(g, opts));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_BVectorPerK)->ArgsProduct({{12, 16, 20}, {1, 0}})->Unit(benchmark::kMillisecond);

// A single middle-layer b_k: per-k only visits C(n, k) subsets.
void BM_SingleK(benchmark::State& state) {
  const auto g = stacked_skeleton(20);
  EnumerationOptions opts;
  opts.backend = state.range(0) ? Backend::per_k : Backend::sweep;
  for (auto _ : state) benchmark::DoNotOptimize(b_bruteforce(g, 10, opts));
}
BENCHMARK(BM_SingleK)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CountComponents(benchmark::State& state) {
  Rng rng(3);
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, rng);
  std::vector<std::uint64_t> rows;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) rows.push_back(g.neighbour_mask(i));
  std::uint64_t mask = 0x5555555555555555ULL & ((std::uint64_t{1} << g.num_vertices()) - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_components(rows, mask));
    mask = (mask * 6364136223846793005ULL + 1442695040888963407ULL) & ((std::uint64_t{1} << g.num_vertices()) - 1);
  }
}
BENCHMARK(BM_CountComponents)->Arg(16)->Arg(32)->Arg(60);

void BM_BettiTable(benchmark::State& state) {
  const auto c = stacked_boundary(static_cast<int>(state.range(1)), static_cast<int>(state.range(0)), 1);
  HomologyOptions opts;
  opts.cache = state.range(2) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(c, opts));
}
BENCHMARK(BM_BettiTable)->Args({9, 3, 1})->Args({9, 3, 0})->Args({11, 4, 1})->Args({11, 4, 0})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
