#include "dynmatch/bgs.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dynmatch/errors.hpp"

namespace dynmatch {

BgsMatcher::BgsMatcher(DynamicGraph& g, double threshold_factor, std::uint64_t seed)
    : Matcher(g), level_(g.num_vertices(), 0), owned_(g.num_vertices()),
      threshold_(threshold_factor * std::sqrt(static_cast<double>(g.num_vertices()))),
      rng_(seed) {
  if (!(threshold_factor > 0)) throw InputError("bgs threshold factor must be positive");
}

void BgsMatcher::take_exclusive_ownership(VertexId x) {
  if (level_[x] != 0) return;  // a level-1 owner is already exclusive
  for (const VertexId w : owned_[x].items()) {
    if (level_[w] == 0) owned_[w].erase(x);
  }
}

VertexId BgsMatcher::random_settle(VertexId u) {
  if (owned_[u].empty()) {
    throw std::logic_error("random_settle: vertex " + std::to_string(u) +
                           " owns no edges");
  }
  const VertexId v = owned_[u].at(rng_.next_below(owned_[u].size()));
  if (matching_.is_matched(u)) matching_.unmatch(u, matching_.mate(u));
  VertexId freed = kNoVertex;
  if (matching_.is_matched(v)) {
    freed = matching_.mate(v);
    matching_.unmatch(v, freed);
  }
  take_exclusive_ownership(u);
  take_exclusive_ownership(v);
  matching_.match(u, v);
  level_[u] = 1;
  level_[v] = 1;
  return freed;
}

bool BgsMatcher::settle_by_scan(VertexId z) {
  for (const VertexId w : owned_[z].items()) {
    if (matching_.is_free(w)) {
      matching_.match(z, w);
      return true;
    }
  }
  return false;
}

void BgsMatcher::repair(VertexId w) {
  if (level_[w] != 0 || owned_[w].size() < threshold_) return;  // stale task
  const VertexId old_mate = matching_.is_matched(w) ? matching_.mate(w) : kNoVertex;
  const VertexId freed = random_settle(w);
  if (old_mate != kNoVertex) enqueue(Task::kFixFree, old_mate);
  if (freed != kNoVertex) enqueue(Task::kFixFree, freed);
}

void BgsMatcher::fix_free(VertexId z) {
  if (matching_.is_matched(z)) return;  // settled meanwhile
  if (level_[z] == 0) {
    settle_by_scan(z);
    return;
  }
  // Level-1 vertex lost its mate: give up edges whose other endpoint is at
  // level 1 (they pass to that endpoint), then either stay and re-settle or
  // drop to level 0.
  std::vector<VertexId> to_level1;
  for (const VertexId w : owned_[z].items()) {
    if (level_[w] == 1) to_level1.push_back(w);
  }
  for (const VertexId w : to_level1) {
    owned_[z].erase(w);
    owned_[w].insert(z);
  }
  if (owned_[z].size() >= threshold_) {
    const VertexId freed = random_settle(z);
    if (freed != kNoVertex) enqueue(Task::kFixFree, freed);
    return;
  }
  level_[z] = 0;
  // Level-0 neighbors regain shared ownership; any of them pushed to the
  // threshold is repaired.
  for (const VertexId w : owned_[z].items()) {
    owned_[w].insert(z);
    if (owned_[w].size() >= threshold_) enqueue(Task::kRepair, w);
  }
  settle_by_scan(z);
}

void BgsMatcher::drain() {
  while (!queue_.empty()) {
    const Task t = queue_.front();
    queue_.pop_front();
    if (t.kind == Task::kFixFree) {
      fix_free(t.v);
    } else {
      repair(t.v);
    }
  }
}

void BgsMatcher::on_insert(VertexId u, VertexId v) {
  const bool u1 = level_[u] == 1;
  const bool v1 = level_[v] == 1;
  if (u1) {
    owned_[u].insert(v);  // both level 1: the first mentioned vertex owns it
  } else if (v1) {
    owned_[v].insert(u);
  } else {
    owned_[u].insert(v);
    owned_[v].insert(u);
  }
  if (u1 || v1) return;
  if (matching_.is_free(u) && matching_.is_free(v)) matching_.match(u, v);
  if (owned_[u].size() >= threshold_ || owned_[v].size() >= threshold_) {
    enqueue(Task::kRepair, owned_[u].size() >= owned_[v].size() ? u : v);
    drain();
  }
}

void BgsMatcher::on_delete(VertexId u, VertexId v) {
  owned_[u].erase(v);
  owned_[v].erase(u);
  if (matching_.mate(u) != v) return;
  matching_.unmatch(u, v);
  enqueue(Task::kFixFree, u);
  enqueue(Task::kFixFree, v);
  drain();
}

void BgsMatcher::audit() const {
  Matcher::audit();
  const std::size_t n = graph_.num_vertices();
  for (VertexId v = 0; v < n; ++v) {
    if (level_[v] == 1 && matching_.is_free(v)) {
      throw AuditError("bgs I1: level-1 vertex " + std::to_string(v) + " is free");
    }
    if (level_[v] == 0 && owned_[v].size() >= threshold_) {
      throw AuditError("bgs I3: level-0 vertex " + std::to_string(v) + " owns " +
                       std::to_string(owned_[v].size()) + " edges");
    }
    if (level_[v] == 0 && matching_.is_free(v)) {
      for (const VertexId w : graph_.neighbors(v)) {
        if (matching_.is_free(w)) {
          throw AuditError("bgs I2: free vertex " + std::to_string(v) +
                           " has free neighbor " + std::to_string(w));
        }
      }
    }
    if (matching_.is_matched(v) && level_[v] != level_[matching_.mate(v)]) {
      throw AuditError("bgs I4: matched edge (" + std::to_string(v) + "," +
                       std::to_string(matching_.mate(v)) + ") spans levels");
    }
    for (const VertexId w : owned_[v].items()) {
      if (!graph_.has_edge(v, w)) {
        throw AuditError("bgs ownership: (" + std::to_string(v) + "," +
                         std::to_string(w) + ") owned but not in the graph");
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    for (const VertexId w : graph_.neighbors(v)) {
      if (w < v) continue;
      const bool ov = owned_[v].contains(w);
      const bool ow = owned_[w].contains(v);
      const int lv = level_[v], lw = level_[w];
      std::string expect;
      if (lv == 0 && lw == 0) {
        if (!(ov && ow)) expect = "both endpoints";
      } else if (lv != lw) {
        const bool hi_owns = lv == 1 ? ov : ow;
        const bool lo_owns = lv == 1 ? ow : ov;
        if (!hi_owns || lo_owns) expect = "exactly the level-1 endpoint";
      } else {
        if (ov == ow) expect = "exactly one endpoint";
      }
      if (!expect.empty()) {
        throw AuditError("bgs ownership: edge (" + std::to_string(v) + "," +
                         std::to_string(w) + ") must be owned by " + expect);
      }
    }
  }
  if (!is_maximal(graph_, matching_)) {
    throw AuditError("bgs: matching is not maximal");
  }
}

}  // namespace dynmatch
