#include <benchmark/benchmark.h>

#include "bench_util.hpp"
#include "dynmatch/dynamic_graph.hpp"

using namespace dynmatch;

static void BM_InsertDeleteCycle(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto sg = bench::random_gnm(n, 4 * n, 1);
  DynamicGraph g(n);
  for (const auto& [u, v] : sg.edges) g.insert_edge(u, v);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto [u, v] = sg.edges[i % sg.edges.size()];
    g.delete_edge(u, v);
    g.insert_edge(u, v);
    ++i;
  }
  state.SetItemsProcessed(2 * state.iterations());
}
BENCHMARK(BM_InsertDeleteCycle)->Range(1 << 10, 1 << 16);

static void BM_RandomNeighbor(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto sg = bench::random_gnm(n, 8 * n, 2);
  DynamicGraph g(n);
  for (const auto& [u, v] : sg.edges) g.insert_edge(u, v);
  Rng rng(3);
  VertexId v = 0;
  for (auto _ : state) {
    const auto w = g.random_neighbor(v, rng);
    v = w.value_or((v + 1) % n);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RandomNeighbor)->Range(1 << 10, 1 << 16);
