#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dynmatch/blossom.hpp"
#include "dynmatch/matcher.hpp"

namespace dynmatch {

/// Depth bound derived from epsilon: ceil(2/epsilon) - 1 edges.
std::size_t depth_from_epsilon(double epsilon);

struct BlossomConfig {
  bool safe = true;
  bool lazy = false;
  std::optional<double> epsilon;  // absent = unbounded search depth

  std::size_t depth_bound() const {
    return epsilon ? depth_from_epsilon(*epsilon) : kUnboundedDepth;
  }
};

/// Per-vertex gate for the lazy augmenting path search: a search from a root
/// is allowed once at least half of its previous search's touched-edge count
/// in update operations has elapsed (or it was never searched).
class LazyState {
 public:
  explicit LazyState(std::size_t n)
      : last_tick_(n, 0), last_cost_(n, 0), searched_(n, 0) {}

  void tick() { ++tick_; }
  std::uint64_t current_tick() const { return tick_; }

  bool gate(VertexId root) const {
    if (!searched_[root]) return true;
    return 2 * (tick_ - last_tick_[root]) >= last_cost_[root];
  }

  void record(VertexId root, std::size_t touched_edges) {
    searched_[root] = 1;
    last_tick_[root] = tick_;
    last_cost_[root] = touched_edges;
  }

 private:
  std::vector<std::uint64_t> last_tick_;
  std::vector<std::uint64_t> last_cost_;
  std::vector<char> searched_;
  std::uint64_t tick_ = 0;
};

/// Dynamic matcher built on the blossom search. Safe mode restores a maximum
/// matching after every update (when unbounded and non-lazy); the unsafe
/// mode skips the expensive search when both endpoints of an inserted edge
/// are matched. Optional depth bounding and lazy gating trade quality for
/// time.
class DynBlossomMatcher : public Matcher {
 public:
  DynBlossomMatcher(DynamicGraph& g, const BlossomConfig& cfg)
      : Matcher(g), cfg_(cfg), scratch_(g.num_vertices()),
        lazy_(g.num_vertices()) {}

  void on_insert(VertexId u, VertexId v) override;
  void on_delete(VertexId u, VertexId v) override;
  void audit() const override;
  double quality_floor() const override;

  const LazyState& lazy_state() const { return lazy_; }
  std::uint64_t total_touched_edges() const { return total_touched_edges_; }

 private:
  // Bounded search from a free root; records cost for the lazy gate.
  bool gated_search(VertexId root, std::size_t bound);

  BlossomConfig cfg_;
  SearchScratch scratch_;
  LazyState lazy_;
  std::uint64_t total_touched_edges_ = 0;
};

}  // namespace dynmatch
