#include <cmath>

#include "doctest.h"
#include "dynmatch/neiman_solomon.hpp"
#include "dynmatch/blossom.hpp"
#include "dynmatch/oracles.hpp"
#include "helpers.hpp"

using namespace dynmatch;
using namespace dynmatch::testing;

namespace {

void apply(DynamicGraph& g, Matcher& m, const UpdateOp& op) {
  if (op.kind == UpdateKind::kInsert) {
    REQUIRE(g.insert_edge(op.u, op.v));
    m.on_insert(op.u, op.v);
  } else {
    REQUIRE(g.delete_edge(op.u, op.v));
    m.on_delete(op.u, op.v);
  }
}

}  // namespace

TEST_CASE("insert: both endpoints free") {
  DynamicGraph g(2);
  NeimanSolomonMatcher m(g);
  g.insert_edge(0, 1);
  m.on_insert(0, 1);
  CHECK(m.matching().mate(0) == 1);
  m.audit();
}

TEST_CASE("insert augments the length-3 path through the mate") {
  DynamicGraph g(4);
  NeimanSolomonMatcher m(g);
  for (const auto& [u, v] : {std::pair{1u, 2u}, {2u, 3u}}) {
    g.insert_edge(u, v);
    m.on_insert(u, v);
  }
  REQUIRE(m.matching().mate(1) == 2);
  g.insert_edge(0, 1);
  m.on_insert(0, 1);  // path 0-1-2-3
  CHECK(m.matching().size() == 2);
  CHECK(m.matching().mate(0) == 1);
  CHECK(m.matching().mate(2) == 3);
  CHECK(m.matching().size() == brute_force_max_matching_size(g));
  m.audit();
}

TEST_CASE("insert with both endpoints matched changes nothing") {
  Rng rng(100);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 6 + rng.next_below(7);  // up to 12
    const auto sg = gnm_graph(n, rng.next_below(2 * n), rng.next_u64());
    DynamicGraph g(sg.n);
    NeimanSolomonMatcher m(g);
    for (const auto& [u, v] : sg.edges) {
      g.insert_edge(u, v);
      m.on_insert(u, v);
      m.audit();  // NS-I1 is checked exhaustively inside
    }
  }
}

TEST_CASE("delete: P4 loses its matched end edge") {
  DynamicGraph g(4);
  NeimanSolomonMatcher m(g);
  for (const auto& [u, v] : {std::pair{0u, 1u}, {1u, 2u}, {2u, 3u}}) {
    g.insert_edge(u, v);
    m.on_insert(u, v);
  }
  REQUIRE(m.matching().mate(0) == 1);
  REQUIRE(m.matching().mate(2) == 3);
  g.delete_edge(0, 1);
  m.on_delete(0, 1);
  CHECK(m.matching().size() == 1);
  CHECK(m.matching().is_free(0));
  m.audit();
}

TEST_CASE("delete: C4 re-augments through the length-3 path") {
  DynamicGraph g(4);
  NeimanSolomonMatcher m(g);
  for (const auto& [u, v] :
       {std::pair{0u, 1u}, {1u, 2u}, {2u, 3u}, {3u, 0u}}) {
    g.insert_edge(u, v);
    m.on_insert(u, v);
  }
  REQUIRE(m.matching().size() == 2);
  const VertexId mate0 = m.matching().mate(0);
  g.delete_edge(0, mate0);
  m.on_delete(0, mate0);
  CHECK(m.matching().size() == 2);  // the remaining P4 is perfectly matched
  m.audit();
}

TEST_CASE("deleting an unmatched edge is bookkeeping only") {
  DynamicGraph g(4);
  NeimanSolomonMatcher m(g);
  for (const auto& [u, v] : {std::pair{0u, 1u}, {2u, 3u}, {1u, 2u}}) {
    g.insert_edge(u, v);
    m.on_insert(u, v);
  }
  const MatchingState before = m.matching();
  g.delete_edge(1, 2);
  m.on_delete(1, 2);
  CHECK(m.matching() == before);
  m.audit();
}

TEST_CASE("surrogate swap keeps free degrees bounded") {
  // Star center 0 with leaves 1..12, each leaf matched outward to a degree-1
  // partner, and the center matched to an extra vertex 25. Deleting (0,25)
  // frees the center with degree 12 > sqrt(2n+2m), forcing a surrogate.
  const std::size_t leaves = 12;
  const std::size_t n = 2 + 2 * leaves;  // 0, partner vertices, extra mate
  DynamicGraph g(n);
  NeimanSolomonMatcher m(g);
  const VertexId extra = static_cast<VertexId>(n - 1);
  g.insert_edge(0, extra);
  m.on_insert(0, extra);
  for (std::size_t i = 0; i < leaves; ++i) {
    const VertexId leaf = static_cast<VertexId>(1 + i);
    const VertexId partner = static_cast<VertexId>(1 + leaves + i);
    g.insert_edge(leaf, partner);
    m.on_insert(leaf, partner);
    g.insert_edge(0, leaf);
    m.on_insert(0, leaf);
  }
  REQUIRE(m.matching().mate(0) == extra);
  const double bound = m.degree_bound();
  REQUIRE(static_cast<double>(g.degree(0)) > bound - 1);  // the gate is near
  g.delete_edge(0, extra);
  m.on_delete(0, extra);
  CHECK(m.matching().is_matched(0));  // re-matched through a surrogate leaf
  m.audit();
  // the freed surrogate has low degree
  for (VertexId v = 0; v < n; ++v) {
    if (m.matching().is_free(v)) {
      CHECK(static_cast<double>(g.degree(v)) <= m.degree_bound());
    }
  }
}

TEST_CASE("invariants and the two-thirds bound on random dynamics") {
  for (const std::uint64_t seed : {5ull, 6ull}) {
    const auto seq = random_dynamic_sequence(30, 1500, 0.6, seed);
    DynamicGraph g(seq.n);
    NeimanSolomonMatcher m(g);
    std::size_t step = 0;
    for (const UpdateOp& op : seq.ops) {
      apply(g, m, op);
      if (++step % 8 == 0) {
        m.audit();
        const std::size_t opt = static_max_matching(g).size();
        CHECK(3 * m.matching().size() >= 2 * opt);
      }
    }
    m.audit();
  }
}

TEST_CASE("free neighbor sets track status flips eagerly") {
  DynamicGraph g(6);
  NeimanSolomonMatcher m(g);
  g.insert_edge(0, 1);
  m.on_insert(0, 1);  // matches: no free neighbors around 0 or 1
  g.insert_edge(1, 2);
  m.on_insert(1, 2);
  CHECK(m.free_neighbors(1).contains(2));
  CHECK_FALSE(m.free_neighbors(2).contains(1));
  g.insert_edge(2, 3);
  m.on_insert(2, 3);  // both free -> matched; 1 loses 2 as free neighbor
  CHECK_FALSE(m.free_neighbors(1).contains(2));
  m.audit();
}
