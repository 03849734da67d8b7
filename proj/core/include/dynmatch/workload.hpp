#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dynmatch/dynamic_graph.hpp"

namespace dynmatch {

enum class UpdateKind : std::uint8_t { kInsert, kDelete };

struct UpdateOp {
  UpdateKind kind;
  VertexId u, v;
  bool operator==(const UpdateOp&) const = default;
};

/// Ordered update stream over a fixed vertex universe. A valid sequence
/// inserts only absent edges and deletes only present ones.
struct UpdateSequence {
  std::size_t n = 0;
  std::vector<UpdateOp> ops;
  bool operator==(const UpdateSequence&) const = default;
};

struct StaticGraph {
  std::size_t n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

struct MetisParseResult {
  StaticGraph graph;
  std::size_t dropped_self_loops = 0;
  std::size_t dropped_parallel = 0;
};

/// METIS format: header "n m [fmt]", then line i (1-indexed) lists the
/// neighbors of vertex i. Requires a symmetric listing; self-loops and
/// parallel entries are dropped and counted.
MetisParseResult parse_metis(std::string_view text);

struct StreamParseResult {
  UpdateSequence sequence;
  std::vector<std::uint64_t> original_ids;  // dense id -> id in the input
  std::size_t dropped_duplicate_inserts = 0;
  std::size_t dropped_phantom_deletes = 0;
  std::size_t dropped_self_loops = 0;
};

/// Temporal edge stream: lines "u v [sign [timestamp]]" where a negative
/// sign marks a deletion. Events are stably ordered by timestamp, ids are
/// remapped onto a dense [0, n) universe in first-appearance order, and
/// replay-invalid operations are dropped with counts.
StreamParseResult parse_edge_stream(std::string_view text);

struct ValidationReport {
  std::size_t duplicate_inserts = 0;
  std::size_t phantom_deletes = 0;
  std::size_t self_loops = 0;
  bool clean() const {
    return duplicate_inserts == 0 && phantom_deletes == 0 && self_loops == 0;
  }
};

/// Checks replay validity without modifying the sequence.
ValidationReport validate_sequence(const UpdateSequence& seq);

/// Drops replay-invalid operations; the returned sequence always validates
/// clean.
std::pair<UpdateSequence, ValidationReport> clean_sequence(const UpdateSequence& seq);

/// Seeded Fisher-Yates permutation of the static graph's edges as an
/// insertion-only sequence covering every edge exactly once.
UpdateSequence random_insertion_sequence(const StaticGraph& g, std::uint64_t seed);

/// Insertions in the order the edge list is stored.
UpdateSequence file_order_sequence(const StaticGraph& g);

/// Appends the last floor(percent/100 * |ops|) operations in reverse order
/// with inverted kinds. percent must lie in [0, 100].
UpdateSequence undo_suffix(const UpdateSequence& seq, double percent);

/// Native sequence text format: header "n <n> ops <k>", then one line
/// "I u v" or "D u v" per operation. Round-trips bit-exactly.
std::string write_sequence(const UpdateSequence& seq);
UpdateSequence parse_sequence(std::string_view text);

/// Replays the sequence into a fresh graph (throws on invalid operations).
DynamicGraph replay(const UpdateSequence& seq);

}  // namespace dynmatch
