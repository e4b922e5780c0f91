// serial vs OpenMP counting on paths, bounded-degree trees and sparse graphs
#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "meccount/counting.hpp"

using namespace meccount;
using namespace meccount::testing;

namespace {

UndirectedGraph make(int family, int n) {
  Rng rng(100 + n);
  switch (family) {
    case 0: return path_graph(n);
    case 1: return random_tree(n, 3, rng);
    default: return random_connected_graph(n, 4, rng, 0.05);
  }
}

void run(benchmark::State& st, Execution ex) {
  UndirectedGraph g = make(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  CountOptions opts{.execution = ex};
  Count c;
  for (auto _ : st) {
    c = count_mecs(g, CountMethod::Fpt, opts);
    benchmark::DoNotOptimize(c);
  }
  st.counters["edges"] = static_cast<double>(g.num_edges());
  st.SetLabel(c.str().size() > 18 ? c.str().substr(0, 18) + "..." : c.str());
}

void BM_Serial(benchmark::State& st) { run(st, Execution::Serial); }
void BM_Parallel(benchmark::State& st) { run(st, Execution::Parallel); }

void sizes(benchmark::internal::Benchmark* b) {
  for (int family : {0, 1})
    for (int n : {10, 20, 40}) b->Args({family, n});
  // boundary graphs grow fast with cycles; n = 20 here runs out of memory
  for (int n : {8, 10}) b->Args({2, n});
  b->ArgNames({"family", "n"})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_Serial)->Apply(sizes);
BENCHMARK(BM_Parallel)->Apply(sizes);

BENCHMARK_MAIN();
