#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dynmatch/dynamic_graph.hpp"

namespace dynmatch {

class MatchingState;

/// Reversible log of match/unmatch mutations. Replaying the log in reverse
/// restores the exact prior MatchingState.
class UndoLog {
 public:
  std::size_t mark() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  void clear() { entries_.clear(); }

 private:
  friend class MatchingState;
  struct Entry {
    bool was_match;
    VertexId u, v;
  };
  std::vector<Entry> entries_;
};

/// Symmetric partial mate assignment over the vertex universe of one graph.
/// Mutations check their contracts: violating them is a program bug, not an
/// input error, and raises std::logic_error.
class MatchingState {
 public:
  explicit MatchingState(std::size_t n) : mate_(n, kNoVertex) {}

  std::size_t num_vertices() const { return mate_.size(); }
  std::size_t size() const { return size_; }
  VertexId mate(VertexId v) const { return mate_[v]; }
  bool is_free(VertexId v) const { return mate_[v] == kNoVertex; }
  bool is_matched(VertexId v) const { return mate_[v] != kNoVertex; }

  // Requires u != v and both endpoints free.
  void match(VertexId u, VertexId v, UndoLog* log = nullptr);

  // Requires mate(u) == v.
  void unmatch(VertexId u, VertexId v, UndoLog* log = nullptr);

  // Undoes every mutation recorded after the given mark, most recent first.
  void rollback(UndoLog& log, std::size_t mark = 0);

  void clear();

  bool operator==(const MatchingState& other) const = default;

 private:
  std::vector<VertexId> mate_;
  std::size_t size_ = 0;
};

/// Flips a valid augmenting path v0..vk (odd number of edges, free endpoints,
/// alternating unmatched/matched, pairwise distinct vertices), growing the
/// matching by exactly one. An invalid path raises std::logic_error.
void apply_augmenting_path(MatchingState& m, std::span<const VertexId> path);

/// Checks all MatchingState invariants against its companion graph.
bool verify_matching(const DynamicGraph& g, const MatchingState& m);

/// True iff no edge of g has both endpoints free.
bool is_maximal(const DynamicGraph& g, const MatchingState& m);

}  // namespace dynmatch
