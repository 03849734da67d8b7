#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "dynmatch/indexed_set.hpp"
#include "dynmatch/matcher.hpp"
#include "dynmatch/rng.hpp"

namespace dynmatch {

/// Two-level Baswana-Gupta-Sen matcher with edge ownership and Random-Settle.
///
/// Every edge is owned by at least one endpoint: a level-0/level-0 edge by
/// both, a mixed edge by its level-1 endpoint, a level-1/level-1 edge by
/// exactly one. A level-0 vertex whose owned set reaches the threshold
/// (factor * sqrt(n)) is repaired by Random-Settle: it matches a uniformly
/// random owned neighbor and both move to level 1. The audit checks after
/// every operation that
///   I1: every level-1 vertex is matched,
///   I2: every free level-0 vertex has only matched neighbors,
///   I3: every level-0 vertex owns fewer than threshold edges,
///   I4: matched edges join vertices of equal level,
/// plus the ownership partition itself.
class BgsMatcher : public Matcher {
 public:
  BgsMatcher(DynamicGraph& g, double threshold_factor, std::uint64_t seed);

  void on_insert(VertexId u, VertexId v) override;
  void on_delete(VertexId u, VertexId v) override;
  void audit() const override;

  int level(VertexId v) const { return level_[v]; }
  double threshold() const { return threshold_; }
  const IndexedSet& owned(VertexId v) const { return owned_[v]; }

  // Matches `u` to a uniform random owned neighbor, promoting both to level
  // 1 and taking exclusive ownership of their level-0 edges. Returns the
  // neighbor's previous mate (now free), if any. Requires a non-empty owned
  // set.
  VertexId random_settle(VertexId u);

 private:
  struct Task {
    enum Kind { kFixFree, kRepair } kind;
    VertexId v;
  };

  void enqueue(Task::Kind kind, VertexId v) { queue_.push_back({kind, v}); }
  void drain();
  void fix_free(VertexId z);
  void repair(VertexId w);
  bool settle_by_scan(VertexId z);
  void take_exclusive_ownership(VertexId x);

  std::vector<std::uint8_t> level_;
  std::vector<IndexedSet> owned_;
  double threshold_;
  Rng rng_;
  std::deque<Task> queue_;
};

}  // namespace dynmatch
