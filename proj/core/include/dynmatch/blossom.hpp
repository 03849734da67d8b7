#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/matching.hpp"

namespace dynmatch {

inline constexpr std::size_t kUnboundedDepth = static_cast<std::size_t>(-1);

struct SearchOutcome {
  bool success = false;
  VertexId found_free = kNoVertex;
  std::size_t touched_vertices = 0;
  std::size_t touched_edges = 0;
};

/// Reusable per-matcher search state. Allocation happens once; each search
/// touches only the vertices and edges it actually reaches, and everything it
/// wrote becomes invisible again when the search ends (stamped entries keyed
/// by a search epoch). A full audit can confirm that no state is visible.
class SearchScratch {
 public:
  explicit SearchScratch(std::size_t n);

  std::size_t num_vertices() const { return stamp_.size(); }

  // True iff no label, parent, base or distance from any past search is
  // still visible.
  bool all_clear() const;

  // Vertices touched by the most recent search, valid until the next one.
  const std::vector<VertexId>& last_touched() const { return touched_; }

 private:
  friend class BlossomSearcher;

  std::vector<std::uint64_t> stamp_;
  std::vector<char> even_;          // enqueued as an even (outer) vertex
  std::vector<VertexId> parent_;    // odd discoverer / rewired blossom pointer
  std::vector<VertexId> base_;      // blossom base
  std::vector<std::uint32_t> dist_; // alternating-tree depth in edges
  std::vector<std::uint64_t> lca_stamp_;
  std::vector<std::uint64_t> blossom_stamp_;
  std::vector<VertexId> queue_;
  std::vector<VertexId> touched_;
  std::uint64_t epoch_ = 0;
  std::uint64_t lca_epoch_ = 0;
  std::uint64_t blossom_epoch_ = 0;
};

/// Alternating-BFS augmenting path search with blossom shrinking, starting
/// from a free root. If a path is found it is applied to m and true is
/// returned; otherwise m is unchanged. Search state is restored either way.
///
/// Without a depth bound the search is complete: it succeeds iff some
/// augmenting path from the root exists. With a bound, only paths the
/// bounded tree expansion can see are found (a found path is always valid;
/// rare shrink configurations may hide some bounded-length paths).
bool augment_from(const DynamicGraph& g, MatchingState& m, VertexId root,
                  SearchScratch& scratch, std::size_t depth_bound = kUnboundedDepth,
                  SearchOutcome* out = nullptr);

/// Locates a free vertex whose alternating path enters `root` through the
/// root's matched edge - the form any augmenting path running through the
/// root must take. Returns root itself when it is free. The matching is
/// never modified.
std::optional<VertexId> find_free_reachable(const DynamicGraph& g,
                                            const MatchingState& m, VertexId root,
                                            SearchScratch& scratch,
                                            SearchOutcome* out = nullptr);

/// Maximum cardinality matching: greedy initialization, then one complete
/// augmenting path search per remaining free vertex.
MatchingState static_max_matching(const DynamicGraph& g);

/// Same, reusing caller-owned state across calls.
void static_max_matching_into(const DynamicGraph& g, MatchingState& m,
                              SearchScratch& scratch);

}  // namespace dynmatch
