#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "dynmatch/rng.hpp"

namespace dynmatch {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Fully dynamic undirected simple graph over the fixed vertex set [0, n).
///
/// Each vertex keeps a vector of neighbors plus a hash table mapping a
/// neighbor to its position in that vector. Deletion swaps the removed entry
/// with the last one and fixes the displaced index, so insert, delete,
/// membership and uniform random neighbor selection all run in expected
/// constant time.
class DynamicGraph {
 public:
  explicit DynamicGraph(std::size_t n);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return m_; }

  // Returns false (leaving the graph unchanged) if the edge already exists.
  // Self-loops and out-of-range endpoints are rejected with InputError.
  bool insert_edge(VertexId u, VertexId v);

  // Returns false if the edge is absent.
  bool delete_edge(VertexId u, VertexId v);

  bool has_edge(VertexId u, VertexId v) const;
  std::size_t degree(VertexId v) const;

  // Iteration order is the internal array order: deterministic between
  // mutations but otherwise unspecified.
  std::span<const VertexId> neighbors(VertexId v) const;

  // Uniform over the current neighbors of v; empty iff degree(v) == 0.
  std::optional<VertexId> random_neighbor(VertexId v, Rng& rng) const;

  // Full-structure audit: symmetry, position-index consistency, edge count.
  // Throws AuditError on any violation.
  void check_consistency() const;

 private:
  void require_valid(VertexId u, VertexId v) const;
  void require_vertex(VertexId v) const;

  std::size_t n_;
  std::size_t m_ = 0;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::unordered_map<VertexId, std::uint32_t>> pos_;
};

}  // namespace dynmatch
