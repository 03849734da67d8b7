#include <cmath>

#include "doctest.h"
#include "dynmatch/bgs.hpp"
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

TEST_CASE("free level-0 endpoints are matched on insertion") {
  DynamicGraph g(4);
  BgsMatcher m(g, 1.0, 7);
  g.insert_edge(0, 1);
  m.on_insert(0, 1);
  CHECK(m.matching().mate(0) == 1);
  CHECK(m.level(0) == 0);
  m.audit();
}

TEST_CASE("threshold crossing repairs the heavier owner") {
  // n=4 gives threshold 2: vertex 0's second owned edge triggers the repair.
  DynamicGraph g(4);
  BgsMatcher m(g, 1.0, 3);
  g.insert_edge(0, 1);
  m.on_insert(0, 1);
  g.insert_edge(0, 2);
  m.on_insert(0, 2);
  CHECK(m.level(0) == 1);
  CHECK(m.matching().is_matched(0));
  const VertexId partner = m.matching().mate(0);
  CHECK(m.level(partner) == 1);
  m.audit();
}

TEST_CASE("insertion at a level-1 endpoint only records ownership") {
  DynamicGraph g(4);
  BgsMatcher m(g, 1.0, 3);
  g.insert_edge(0, 1);
  m.on_insert(0, 1);
  g.insert_edge(0, 2);
  m.on_insert(0, 2);
  REQUIRE(m.level(0) == 1);
  const MatchingState before = m.matching();
  const std::size_t owned_before = m.owned(0).size();
  g.insert_edge(0, 3);
  m.on_insert(0, 3);
  CHECK(m.matching() == before);
  CHECK(m.owned(0).size() == owned_before + 1);
  CHECK(m.owned(0).contains(3));
  CHECK_FALSE(m.owned(3).contains(0));
  m.audit();
}

TEST_CASE("random_settle contract") {
  SUBCASE("forced choice on a single owned edge") {
    DynamicGraph g(9);  // threshold 3 keeps level 0 roomy
    BgsMatcher m(g, 1.0, 5);
    g.insert_edge(0, 1);
    m.on_insert(0, 1);
    REQUIRE(m.matching().mate(0) == 1);
    // settle vertex 0 by hand: it owns exactly (0,1)
    const VertexId freed = m.random_settle(0);
    CHECK(freed == kNoVertex);  // its pick was its own mate
    CHECK(m.level(0) == 1);
    CHECK(m.level(1) == 1);
    CHECK(m.matching().mate(0) == 1);
  }
  SUBCASE("settling onto a matched neighbor frees and returns the old mate") {
    DynamicGraph g(16);  // threshold 4
    BgsMatcher m(g, 1.0, 5);
    for (const auto& [u, v] : {std::pair{1u, 2u}, {0u, 1u}}) {
      g.insert_edge(u, v);
      m.on_insert(u, v);
    }
    REQUIRE(m.matching().mate(1) == 2);
    const VertexId freed = m.random_settle(0);  // 0 owns only (0,1)
    CHECK(freed == 2);
    CHECK(m.matching().mate(0) == 1);
    CHECK(m.matching().is_free(2));
  }
  SUBCASE("empty owned set is a contract error") {
    DynamicGraph g(4);
    BgsMatcher m(g, 1.0, 5);
    CHECK_THROWS_AS(m.random_settle(0), std::logic_error);
  }
}

TEST_CASE("random_settle picks uniformly") {
  const std::size_t trials = 10000;
  std::size_t picked_a = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    DynamicGraph g(16);
    BgsMatcher m(g, 1.0, 1000 + t);
    g.insert_edge(0, 1);
    m.on_insert(0, 1);
    g.insert_edge(0, 2);
    m.on_insert(0, 2);
    m.random_settle(0);
    picked_a += m.matching().mate(0) == 1;
  }
  const double sigma = std::sqrt(trials * 0.25);
  CHECK(std::abs(static_cast<double>(picked_a) - trials * 0.5) <= 3 * sigma);
}

TEST_CASE("deleting an unmatched level-0 edge only drops ownership") {
  DynamicGraph g(9);
  BgsMatcher m(g, 1.0, 2);
  for (const auto& [u, v] : {std::pair{0u, 1u}, {1u, 2u}}) {
    g.insert_edge(u, v);
    m.on_insert(u, v);
  }
  const MatchingState before = m.matching();
  g.delete_edge(1, 2);
  m.on_delete(1, 2);
  CHECK(m.matching() == before);
  CHECK_FALSE(m.owned(1).contains(2));
  CHECK_FALSE(m.owned(2).contains(1));
  m.audit();
}

TEST_CASE("deleting the matched edge of an isolated pair frees both") {
  DynamicGraph g(4);
  BgsMatcher m(g, 1.0, 2);
  g.insert_edge(0, 1);
  m.on_insert(0, 1);
  g.delete_edge(0, 1);
  m.on_delete(0, 1);
  CHECK(m.matching().size() == 0);
  CHECK(m.level(0) == 0);
  CHECK(m.level(1) == 0);
  m.audit();
}

TEST_CASE("star center keeps level 1 through a matched-edge deletion") {
  // n=4, threshold 2. Building the star promotes the center; deleting its
  // matched edge leaves it owning two level-0 edges, so it re-settles.
  DynamicGraph g(4);
  BgsMatcher m(g, 1.0, 42);
  for (const auto& [u, v] : {std::pair{0u, 1u}, {0u, 2u}, {0u, 3u}}) {
    g.insert_edge(u, v);
    m.on_insert(u, v);
  }
  REQUIRE(m.level(0) == 1);
  const VertexId mate = m.matching().mate(0);
  g.delete_edge(0, mate);
  m.on_delete(0, mate);
  CHECK(m.level(0) == 1);
  CHECK(m.matching().is_matched(0));
  m.audit();
}

TEST_CASE("invariants hold after every operation on random dynamics") {
  for (const std::size_t n : {16, 64}) {
    CAPTURE(n);
    const auto seq = random_dynamic_sequence(n, 5000, 0.6, 9000 + n);
    DynamicGraph g(seq.n);
    BgsMatcher m(g, 1.0, 31);
    for (const UpdateOp& op : seq.ops) {
      apply(g, m, op);
      m.audit();
    }
  }
}

TEST_CASE("threshold factor scales the level boundary") {
  const auto seq = random_dynamic_sequence(25, 2500, 0.7, 5);
  for (const double c : {0.5, 2.0}) {
    CAPTURE(c);
    DynamicGraph g(seq.n);
    BgsMatcher m(g, c, 77);
    CHECK(m.threshold() == doctest::Approx(c * std::sqrt(25.0)));
    std::size_t step = 0;
    for (const UpdateOp& op : seq.ops) {
      apply(g, m, op);
      if (++step % 10 == 0) m.audit();
    }
    m.audit();
  }
}

TEST_CASE("identical seeds give identical final states") {
  const auto seq = random_dynamic_sequence(32, 3000, 0.6, 321);
  auto run = [&](std::uint64_t seed) {
    DynamicGraph g(seq.n);
    BgsMatcher m(g, 1.0, seed);
    for (const UpdateOp& op : seq.ops) apply(g, m, op);
    std::vector<int> levels;
    std::vector<VertexId> mates;
    std::vector<std::vector<VertexId>> owned;
    for (VertexId v = 0; v < seq.n; ++v) {
      levels.push_back(m.level(v));
      mates.push_back(m.matching().mate(v));
      owned.emplace_back(m.owned(v).items().begin(), m.owned(v).items().end());
    }
    return std::tuple{levels, mates, owned};
  };
  CHECK(run(12345) == run(12345));
}

TEST_CASE("matching stays within the half-optimal band") {
  const auto seq = random_dynamic_sequence(20, 800, 0.65, 2718);
  DynamicGraph g(seq.n);
  BgsMatcher m(g, 1.0, 3);
  for (const UpdateOp& op : seq.ops) {
    apply(g, m, op);
    const std::size_t opt = static_max_matching(g).size();
    CHECK(m.matching().size() <= opt);
    CHECK(2 * m.matching().size() >= opt);
  }
}
