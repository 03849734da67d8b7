#pragma once

#include <cstdint>

#include "dynmatch/matcher.hpp"
#include "dynmatch/rng.hpp"

namespace dynmatch {

/// Knobs of the random alternating walk. The walk takes at most
/// ceil(2/epsilon) - 1 edge traversals; the ceiling keeps the approximation
/// guarantee for non-integer 2/epsilon. epsilon = 2 allows no movement at
/// all, which degenerates to the greedy matcher.
struct WalkConfig {
  double epsilon = 0.5;
  bool settling = false;
  std::uint64_t repetitions = 1;

  std::size_t max_steps() const;
};

/// One random alternating walk from a free vertex. At a free vertex x a
/// uniform random neighbor w is drawn; a free w is matched (success), a
/// matched w has its mate freed and (x,w) matched, and the walk continues
/// from the old mate. On failure without settling every change is rolled
/// back. With settling, each visited vertex first scans its neighborhood for
/// a free partner, and on exhaustion the last freed vertex scans instead of
/// undoing. Returns true iff the matching grew by one; it never shrinks.
///
/// Successful (and settling) mutations stay recorded in `log`; the caller
/// owns the mark discipline.
bool random_augmenting_walk(const DynamicGraph& g, MatchingState& m, VertexId start,
                            const WalkConfig& cfg, Rng& rng, UndoLog& log);

class RandomWalkMatcher : public Matcher {
 public:
  RandomWalkMatcher(DynamicGraph& g, const WalkConfig& cfg, std::uint64_t seed)
      : Matcher(g), cfg_(cfg), rng_(seed) {}

  void on_insert(VertexId u, VertexId v) override;
  void on_delete(VertexId u, VertexId v) override;
  void audit() const override;

 private:
  // Retries the walk from `start` until success or the configured
  // repetition count is exhausted.
  bool walk_with_repetitions(VertexId start);

  WalkConfig cfg_;
  Rng rng_;
  UndoLog log_;
};

}  // namespace dynmatch
