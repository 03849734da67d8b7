#include <benchmark/benchmark.h>

#include "bench_util.hpp"
#include "dynmatch/bench.hpp"
#include "dynmatch/blossom.hpp"
#include "dynmatch/matcher.hpp"

using namespace dynmatch;

namespace {

MatcherConfig config_for(int id) {
  MatcherConfig cfg;
  switch (id) {
    case 0: cfg.algorithm = Algorithm::kGreedy; break;
    case 1:
      cfg.algorithm = Algorithm::kRandomWalk;
      cfg.epsilon = 0.25;
      cfg.settling = true;
      break;
    case 2:
      cfg.algorithm = Algorithm::kDynBlossom;
      cfg.safe = false;
      cfg.lazy = true;
      cfg.epsilon = 0.25;
      break;
    case 3: cfg.algorithm = Algorithm::kBgs; break;
    default: cfg.algorithm = Algorithm::kNeimanSolomon; break;
  }
  return cfg;
}

void run_updates(benchmark::State& state, int algo_id) {
  const std::size_t n = state.range(0);
  const auto sg = bench::random_gnm(n, 3 * n, 7);
  const auto seq = undo_suffix(random_insertion_sequence(sg, 11), 25);
  MatcherConfig cfg = config_for(algo_id);
  cfg.repetitions = 1;
  for (auto _ : state) {
    DynamicGraph g(seq.n);
    auto matcher = make_matcher(g, cfg);
    for (const UpdateOp& op : seq.ops) {
      if (op.kind == UpdateKind::kInsert) {
        g.insert_edge(op.u, op.v);
        matcher->on_insert(op.u, op.v);
      } else {
        g.delete_edge(op.u, op.v);
        matcher->on_delete(op.u, op.v);
      }
    }
    benchmark::DoNotOptimize(matcher->matching().size());
  }
  state.SetItemsProcessed(state.iterations() * seq.ops.size());
}

}  // namespace

static void BM_Greedy(benchmark::State& s) { run_updates(s, 0); }
static void BM_RandomWalkSettling(benchmark::State& s) { run_updates(s, 1); }
static void BM_DynBlossomUnsafeLazy(benchmark::State& s) { run_updates(s, 2); }
static void BM_Bgs(benchmark::State& s) { run_updates(s, 3); }
static void BM_NeimanSolomon(benchmark::State& s) { run_updates(s, 4); }

BENCHMARK(BM_Greedy)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomWalkSettling)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DynBlossomUnsafeLazy)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Bgs)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NeimanSolomon)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);

static void BM_StaticMaxMatching(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto sg = bench::random_gnm(n, 3 * n, 13);
  DynamicGraph g(n);
  for (const auto& [u, v] : sg.edges) g.insert_edge(u, v);
  for (auto _ : state) {
    benchmark::DoNotOptimize(static_max_matching(g).size());
  }
}
BENCHMARK(BM_StaticMaxMatching)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);
