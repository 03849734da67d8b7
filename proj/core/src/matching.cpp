#include "dynmatch/matching.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace dynmatch {

void MatchingState::match(VertexId u, VertexId v, UndoLog* log) {
  if (u == v || u >= mate_.size() || v >= mate_.size()) {
    throw std::logic_error("match: invalid endpoints");
  }
  if (!is_free(u) || !is_free(v)) {
    throw std::logic_error("match(" + std::to_string(u) + "," + std::to_string(v) +
                           "): endpoint not free");
  }
  mate_[u] = v;
  mate_[v] = u;
  ++size_;
  if (log) log->entries_.push_back({true, u, v});
}

void MatchingState::unmatch(VertexId u, VertexId v, UndoLog* log) {
  if (u >= mate_.size() || v >= mate_.size() || mate_[u] != v) {
    throw std::logic_error("unmatch(" + std::to_string(u) + "," + std::to_string(v) +
                           "): not a matched pair");
  }
  mate_[u] = kNoVertex;
  mate_[v] = kNoVertex;
  --size_;
  if (log) log->entries_.push_back({false, u, v});
}

void MatchingState::rollback(UndoLog& log, std::size_t mark) {
  while (log.entries_.size() > mark) {
    const UndoLog::Entry e = log.entries_.back();
    log.entries_.pop_back();
    if (e.was_match) {
      unmatch(e.u, e.v);
    } else {
      match(e.u, e.v);
    }
  }
}

void MatchingState::clear() {
  std::fill(mate_.begin(), mate_.end(), kNoVertex);
  size_ = 0;
}

void apply_augmenting_path(MatchingState& m, std::span<const VertexId> path) {
  if (path.size() < 2 || path.size() % 2 != 0) {
    throw std::logic_error("augmenting path must have an odd number of edges");
  }
  if (!m.is_free(path.front()) || !m.is_free(path.back())) {
    throw std::logic_error("augmenting path endpoints must be free");
  }
  std::unordered_set<VertexId> seen(path.begin(), path.end());
  if (seen.size() != path.size()) {
    throw std::logic_error("augmenting path vertices must be distinct");
  }
  for (std::size_t i = 1; i + 1 < path.size(); i += 2) {
    if (m.mate(path[i]) != path[i + 1]) {
      throw std::logic_error("augmenting path does not alternate");
    }
  }
  for (std::size_t i = 1; i + 1 < path.size(); i += 2) {
    m.unmatch(path[i], path[i + 1]);
  }
  for (std::size_t i = 0; i < path.size(); i += 2) {
    m.match(path[i], path[i + 1]);
  }
}

bool verify_matching(const DynamicGraph& g, const MatchingState& m) {
  if (m.num_vertices() != g.num_vertices()) return false;
  std::size_t matched = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const VertexId w = m.mate(v);
    if (w == kNoVertex) continue;
    if (w >= g.num_vertices() || m.mate(w) != v || w == v) return false;
    if (!g.has_edge(v, w)) return false;
    ++matched;
  }
  return matched == 2 * m.size();
}

bool is_maximal(const DynamicGraph& g, const MatchingState& m) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!m.is_free(v)) continue;
    for (VertexId w : g.neighbors(v)) {
      if (m.is_free(w)) return false;
    }
  }
  return true;
}

}  // namespace dynmatch
