#include <set>

#include "doctest.h"
#include "dynmatch/errors.hpp"
#include "dynmatch/workload.hpp"
#include "helpers.hpp"

using namespace dynmatch;
using namespace dynmatch::testing;

TEST_CASE("metis parsing") {
  SUBCASE("three-vertex path") {
    const auto r = parse_metis("3 2\n2\n1 3\n2\n");
    CHECK(r.graph.n == 3);
    CHECK(r.graph.edges == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}});
    CHECK(r.dropped_self_loops == 0);
    CHECK(r.dropped_parallel == 0);
  }
  SUBCASE("header-only empty graph") {
    const auto r = parse_metis("4 0\n\n\n\n\n");
    CHECK(r.graph.n == 4);
    CHECK(r.graph.edges.empty());
  }
  SUBCASE("comments are skipped") {
    const auto r = parse_metis("% a comment\n2 1\n2\n1\n");
    CHECK(r.graph.edges.size() == 1);
  }
  SUBCASE("asymmetric listing is an error") {
    CHECK_THROWS_AS(parse_metis("3 2\n2\n3\n2\n"), ParseError);
  }
  SUBCASE("self-loops and duplicates are dropped with counts") {
    const auto r = parse_metis("2 1\n1 2 2\n1 1\n");
    CHECK(r.graph.edges.size() == 1);
    CHECK(r.dropped_self_loops == 1);
    CHECK(r.dropped_parallel == 2);
  }
  SUBCASE("malformed input") {
    CHECK_THROWS_AS(parse_metis("3\n"), ParseError);
    CHECK_THROWS_AS(parse_metis("3 2\n2\nx 3\n2\n"), ParseError);
    CHECK_THROWS_AS(parse_metis("3 2\n2\n1 3\n"), ParseError);   // missing line
    CHECK_THROWS_AS(parse_metis("3 9\n2\n1 3\n2\n"), ParseError);  // wrong m
    CHECK_THROWS_AS(parse_metis("2 1\n5\n1\n"), ParseError);     // id out of range
  }
}

TEST_CASE("edge stream parsing") {
  SUBCASE("plain insertions") {
    const auto r = parse_edge_stream("1 2\n2 3\n");
    CHECK(r.sequence.n == 3);
    REQUIRE(r.sequence.ops.size() == 2);
    CHECK(r.sequence.ops[0] == UpdateOp{UpdateKind::kInsert, 0, 1});
    CHECK(r.sequence.ops[1] == UpdateOp{UpdateKind::kInsert, 1, 2});
  }
  SUBCASE("signed insert and delete of the same edge") {
    const auto r = parse_edge_stream("1 2 +1\n1 2 -1\n");
    REQUIRE(r.sequence.ops.size() == 2);
    CHECK(r.sequence.ops[0].kind == UpdateKind::kInsert);
    CHECK(r.sequence.ops[1].kind == UpdateKind::kDelete);
  }
  SUBCASE("phantom delete is dropped with a count") {
    const auto r = parse_edge_stream("1 2 -1\n");
    CHECK(r.sequence.ops.empty());
    CHECK(r.dropped_phantom_deletes == 1);
  }
  SUBCASE("duplicate insert is dropped") {
    const auto r = parse_edge_stream("1 2\n2 1\n");
    CHECK(r.sequence.ops.size() == 1);
    CHECK(r.dropped_duplicate_inserts == 1);
  }
  SUBCASE("timestamps order events stably") {
    const auto r = parse_edge_stream("5 6 1 100\n1 2 1 50\n5 7 1 50\n");
    REQUIRE(r.sequence.ops.size() == 3);
    // events at t=50 keep file order; the t=100 event goes last
    CHECK(r.original_ids[r.sequence.ops[0].u] == 1);
    CHECK(r.original_ids[r.sequence.ops[2].u] == 5);
    CHECK(r.original_ids[r.sequence.ops[2].v] == 6);
  }
  SUBCASE("self-loops are dropped") {
    const auto r = parse_edge_stream("3 3\n1 2\n");
    CHECK(r.sequence.ops.size() == 1);
    CHECK(r.dropped_self_loops == 1);
  }
  SUBCASE("non-numeric tokens fail") {
    CHECK_THROWS_AS(parse_edge_stream("a b\n"), ParseError);
  }
}

TEST_CASE("random insertion sequences") {
  const auto sg = gnm_graph(30, 60, 5);
  SUBCASE("same seed, same order") {
    CHECK(random_insertion_sequence(sg, 9).ops == random_insertion_sequence(sg, 9).ops);
  }
  SUBCASE("permutation covers every edge once and replays to the input graph") {
    const auto seq = random_insertion_sequence(sg, 10);
    CHECK(seq.ops.size() == sg.edges.size());
    const DynamicGraph g = replay(seq);
    CHECK(g.num_edges() == sg.edges.size());
    for (const auto& [u, v] : sg.edges) CHECK(g.has_edge(u, v));
  }
  SUBCASE("empty graph gives an empty sequence") {
    StaticGraph empty;
    empty.n = 4;
    CHECK(random_insertion_sequence(empty, 1).ops.empty());
  }
}

TEST_CASE("undo suffix") {
  UpdateSequence seq;
  seq.n = 3;
  seq.ops = {{UpdateKind::kInsert, 0, 1}, {UpdateKind::kInsert, 1, 2}};
  SUBCASE("zero percent is the identity") {
    CHECK(undo_suffix(seq, 0) == seq);
  }
  SUBCASE("fifty percent of two ops undoes the last one") {
    const auto out = undo_suffix(seq, 50);
    REQUIRE(out.ops.size() == 3);
    CHECK(out.ops[2] == UpdateOp{UpdateKind::kDelete, 1, 2});
  }
  SUBCASE("one hundred percent replays back to the empty graph") {
    const auto sg = gnm_graph(20, 40, 3);
    const auto full = undo_suffix(random_insertion_sequence(sg, 4), 100);
    const DynamicGraph g = replay(full);
    CHECK(g.num_edges() == 0);
  }
  SUBCASE("out of range percentage") {
    CHECK_THROWS_AS(undo_suffix(seq, -1), InputError);
    CHECK_THROWS_AS(undo_suffix(seq, 101), InputError);
  }
}

TEST_CASE("native sequence format round-trips bit-exactly") {
  const auto sg = gnm_graph(12, 20, 8);
  const auto seq = undo_suffix(random_insertion_sequence(sg, 2), 25);
  const std::string text = write_sequence(seq);
  const auto parsed = parse_sequence(text);
  CHECK(parsed == seq);
  CHECK(write_sequence(parsed) == text);

  CHECK_THROWS_AS(parse_sequence("bogus"), ParseError);
  CHECK_THROWS_AS(parse_sequence("n 2 ops 2\nI 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_sequence("n 2 ops 1\nI 0 0\n"), ParseError);
}

TEST_CASE("validation and cleaning") {
  UpdateSequence seq;
  seq.n = 4;
  seq.ops = {{UpdateKind::kInsert, 0, 1}, {UpdateKind::kInsert, 0, 1},
             {UpdateKind::kDelete, 2, 3}, {UpdateKind::kInsert, 2, 3}};
  const auto report = validate_sequence(seq);
  CHECK(report.duplicate_inserts == 1);
  CHECK(report.phantom_deletes == 1);
  CHECK_FALSE(report.clean());

  const auto [cleaned, r2] = clean_sequence(seq);
  CHECK(r2.duplicate_inserts == 1);
  CHECK(validate_sequence(cleaned).clean());
  CHECK(cleaned.ops.size() == 2);
}

TEST_CASE("generated sequences always replay cleanly") {
  Rng rng(606);
  for (int trial = 0; trial < 50; ++trial) {
    const auto seq =
        random_dynamic_sequence(10 + rng.next_below(40), 500, 0.5 + 0.4 * rng.next_unit(),
                                rng.next_u64());
    CHECK(validate_sequence(seq).clean());
    const auto undone = undo_suffix(seq, 50);
    CHECK(validate_sequence(undone).clean());
  }
}
