#include "dynmatch/neiman_solomon.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dynmatch/errors.hpp"
#include "dynmatch/oracles.hpp"

namespace dynmatch {

double NeimanSolomonMatcher::degree_bound() const {
  return std::sqrt(2.0 * graph_.num_vertices() + 2.0 * graph_.num_edges());
}

void NeimanSolomonMatcher::do_match(VertexId u, VertexId v) {
  matching_.match(u, v);
  for (const VertexId w : graph_.neighbors(u)) free_neighbors_[w].erase(u);
  for (const VertexId w : graph_.neighbors(v)) free_neighbors_[w].erase(v);
}

void NeimanSolomonMatcher::do_unmatch(VertexId u, VertexId v) {
  matching_.unmatch(u, v);
  for (const VertexId w : graph_.neighbors(u)) free_neighbors_[w].insert(u);
  for (const VertexId w : graph_.neighbors(v)) free_neighbors_[w].insert(v);
}

void NeimanSolomonMatcher::on_insert(VertexId u, VertexId v) {
  if (matching_.is_free(u)) free_neighbors_[v].insert(u);
  if (matching_.is_free(v)) free_neighbors_[u].insert(v);
  const bool uf = matching_.is_free(u);
  const bool vf = matching_.is_free(v);
  if (uf && vf) {
    do_match(u, v);
    return;
  }
  if (!uf && !vf) return;
  // Exactly one endpoint matched: the insert can only have created a
  // length-3 augmenting path free_end - matched_end - mate - x.
  const VertexId matched_end = uf ? v : u;
  const VertexId free_end = uf ? u : v;
  const VertexId mate = matching_.mate(matched_end);
  const IndexedSet& candidates = free_neighbors_[mate];
  VertexId x = kNoVertex;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates.at(i) != free_end) {
      x = candidates.at(i);
      break;
    }
  }
  if (x != kNoVertex) {
    do_unmatch(matched_end, mate);
    do_match(free_end, matched_end);
    do_match(mate, x);
    return;
  }
  if (matching_.is_free(free_end) && graph_.degree(free_end) > degree_bound()) {
    find_surrogate(free_end);
    while (!pending_.empty()) {
      const VertexId z = pending_.front();
      pending_.erase(pending_.begin());
      stabilize(z);
    }
  }
}

void NeimanSolomonMatcher::on_delete(VertexId u, VertexId v) {
  free_neighbors_[u].erase(v);
  free_neighbors_[v].erase(u);
  if (matching_.mate(u) != v) return;
  do_unmatch(u, v);
  pending_.push_back(u);
  pending_.push_back(v);
  while (!pending_.empty()) {
    const VertexId z = pending_.front();
    pending_.erase(pending_.begin());
    stabilize(z);
  }
}

void NeimanSolomonMatcher::stabilize(VertexId x) {
  if (matching_.is_matched(x)) return;
  if (!free_neighbors_[x].empty()) {
    do_match(x, free_neighbors_[x].at(0));
    return;
  }
  // No free neighbor: look for a length-3 path x - a - mate(a) - f.
  for (const VertexId a : graph_.neighbors(x)) {
    const VertexId am = matching_.mate(a);
    const IndexedSet& candidates = free_neighbors_[am];
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const VertexId f = candidates.at(i);
      if (f == x) continue;
      do_unmatch(a, am);
      do_match(x, a);
      do_match(am, f);
      return;
    }
  }
  if (graph_.degree(x) > degree_bound()) find_surrogate(x);
}

void NeimanSolomonMatcher::find_surrogate(VertexId x) {
  const double low_degree = std::sqrt(2.0 * graph_.num_edges());
  for (const VertexId w : graph_.neighbors(x)) {
    if (matching_.is_free(w)) {
      do_match(x, w);
      return;
    }
    const VertexId z = matching_.mate(w);
    if (graph_.degree(z) <= low_degree) {
      do_unmatch(w, z);
      do_match(x, w);
      pending_.push_back(z);
      return;
    }
  }
  throw std::logic_error("find_surrogate: no low-degree surrogate for vertex " +
                         std::to_string(x));
}

void NeimanSolomonMatcher::audit() const {
  Matcher::audit();
  const double bound = degree_bound();
  for (VertexId v = 0; v < graph_.num_vertices(); ++v) {
    std::size_t free_count = 0;
    for (const VertexId w : graph_.neighbors(v)) {
      if (matching_.is_free(w)) {
        ++free_count;
        if (!free_neighbors_[v].contains(w)) {
          throw AuditError("ns: free_neighbors(" + std::to_string(v) + ") misses " +
                           std::to_string(w));
        }
      }
    }
    if (free_count != free_neighbors_[v].size()) {
      throw AuditError("ns: free_neighbors(" + std::to_string(v) + ") has stale entries");
    }
    if (matching_.is_free(v) && graph_.degree(v) > bound) {
      throw AuditError("ns NS-I2: free vertex " + std::to_string(v) + " has degree " +
                       std::to_string(graph_.degree(v)) + " > " + std::to_string(bound));
    }
  }
  if (has_augmenting_path_at_most(graph_, matching_, 3)) {
    throw AuditError("ns NS-I1: an augmenting path of length <= 3 exists");
  }
}

}  // namespace dynmatch
