#pragma once

#include <vector>

#include "dynmatch/indexed_set.hpp"
#include "dynmatch/matcher.hpp"

namespace dynmatch {

/// Deterministic Neiman-Solomon matcher. Maintains
///   NS-I1: no augmenting path of length <= 3 (hence a 3/2-approximation),
///   NS-I2: every free vertex has degree at most sqrt(2n + 2m),
/// using per-vertex sets of currently free neighbors for O(1) "has a free
/// neighbor" queries. High-degree free vertices are re-matched through a
/// low-degree surrogate: some neighbor's mate of degree at most sqrt(2m),
/// which the counting argument guarantees to exist.
class NeimanSolomonMatcher : public Matcher {
 public:
  explicit NeimanSolomonMatcher(DynamicGraph& g)
      : Matcher(g), free_neighbors_(g.num_vertices()) {}

  void on_insert(VertexId u, VertexId v) override;
  void on_delete(VertexId u, VertexId v) override;
  void audit() const override;
  double quality_floor() const override { return 2.0 / 3.0; }

  double degree_bound() const;  // sqrt(2n + 2m), follows the current m
  const IndexedSet& free_neighbors(VertexId v) const { return free_neighbors_[v]; }

 private:
  void do_match(VertexId u, VertexId v);
  void do_unmatch(VertexId u, VertexId v);

  // Re-establishes the invariants around a just-freed vertex: match a free
  // neighbor if any, else augment a length-3 path, else keep it free and
  // apply the surrogate step when its degree exceeds the bound.
  void stabilize(VertexId x);
  void find_surrogate(VertexId x);

  std::vector<IndexedSet> free_neighbors_;
  std::vector<VertexId> pending_;
};

}  // namespace dynmatch
