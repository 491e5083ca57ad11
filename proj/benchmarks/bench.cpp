#include <benchmark/benchmark.h>

#include "graphframes/eigen.hpp"
#include "graphframes/graph.hpp"
#include "graphframes/graph_frame.hpp"
#include "graphframes/rng.hpp"
#include "graphframes/survey.hpp"

namespace {

using namespace graphframes;

SymmetricMatrix random_symmetric(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  SymmetricMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      a.set(i, j, rng.next_in(-5.0, 5.0));
    }
  }
  return a;
}

void BM_Eigh(benchmark::State& state) {
  const SymmetricMatrix a = random_symmetric(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigh(a));
  }
}
BENCHMARK(BM_Eigh)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_LgFrame(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lg_frame(g));
  }
}
BENCHMARK(BM_LgFrame)->Arg(8)->Arg(16)->Arg(32);

void BM_Survey(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(survey(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Survey)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
