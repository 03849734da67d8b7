#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "dynmatch/dynamic_graph.hpp"

namespace dynmatch {

/// Set of vertex ids with O(1) insert, erase (swap with last) and membership,
/// plus indexable storage order for uniform random picks and deterministic
/// scans. Same layout as the graph's adjacency structure.
class IndexedSet {
 public:
  bool contains(VertexId v) const { return pos_.contains(v); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  VertexId at(std::size_t i) const { return items_[i]; }
  std::span<const VertexId> items() const { return items_; }

  bool insert(VertexId v) {
    if (pos_.contains(v)) return false;
    pos_.emplace(v, static_cast<std::uint32_t>(items_.size()));
    items_.push_back(v);
    return true;
  }

  bool erase(VertexId v) {
    auto it = pos_.find(v);
    if (it == pos_.end()) return false;
    const std::uint32_t slot = it->second;
    const VertexId last = items_.back();
    items_[slot] = last;
    pos_[last] = slot;
    items_.pop_back();
    pos_.erase(v);
    return true;
  }

 private:
  std::vector<VertexId> items_;
  std::unordered_map<VertexId, std::uint32_t> pos_;
};

}  // namespace dynmatch
