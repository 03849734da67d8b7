#pragma once

#include "dynmatch/blossom.hpp"
#include "dynmatch/matcher.hpp"

namespace dynmatch {

/// Trivial maximal matcher: matches a new edge when both endpoints are free;
/// on deletion of a matched edge re-matches each endpoint to the first free
/// neighbor in adjacency order.
class GreedyMatcher : public Matcher {
 public:
  explicit GreedyMatcher(DynamicGraph& g) : Matcher(g) {}

  void on_insert(VertexId u, VertexId v) override;
  void on_delete(VertexId u, VertexId v) override;
  void audit() const override;
};

/// Recomputes a maximum matching from scratch after every update.
class NaiveOptMatcher : public Matcher {
 public:
  explicit NaiveOptMatcher(DynamicGraph& g)
      : Matcher(g), scratch_(g.num_vertices()) {}

  void on_insert(VertexId u, VertexId v) override;
  void on_delete(VertexId u, VertexId v) override;
  void audit() const override;
  double quality_floor() const override { return 1.0; }

 private:
  void recompute();
  SearchScratch scratch_;
};

}  // namespace dynmatch
