#include "dynmatch/dynamic_graph.hpp"

#include <string>

#include "dynmatch/errors.hpp"

namespace dynmatch {

DynamicGraph::DynamicGraph(std::size_t n) : n_(n), adj_(n), pos_(n) {}

void DynamicGraph::require_vertex(VertexId v) const {
  if (v >= n_) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(n_) + ")");
  }
}

void DynamicGraph::require_valid(VertexId u, VertexId v) const {
  require_vertex(u);
  require_vertex(v);
  if (u == v) {
    throw InputError("self-loop (" + std::to_string(u) + "," + std::to_string(v) +
                     ") rejected");
  }
}

bool DynamicGraph::insert_edge(VertexId u, VertexId v) {
  require_valid(u, v);
  if (pos_[u].contains(v)) return false;
  pos_[u].emplace(v, static_cast<std::uint32_t>(adj_[u].size()));
  adj_[u].push_back(v);
  pos_[v].emplace(u, static_cast<std::uint32_t>(adj_[v].size()));
  adj_[v].push_back(u);
  ++m_;
  return true;
}

bool DynamicGraph::delete_edge(VertexId u, VertexId v) {
  require_valid(u, v);
  auto it = pos_[u].find(v);
  if (it == pos_[u].end()) return false;
  for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
    auto& list = adj_[a];
    auto& index = pos_[a];
    const std::uint32_t slot = index.at(b);
    const VertexId last = list.back();
    list[slot] = last;
    index[last] = slot;  // no-op position update when b was the last entry
    list.pop_back();
    index.erase(b);
  }
  --m_;
  return true;
}

bool DynamicGraph::has_edge(VertexId u, VertexId v) const {
  require_valid(u, v);
  return pos_[u].contains(v);
}

std::size_t DynamicGraph::degree(VertexId v) const {
  require_vertex(v);
  return adj_[v].size();
}

std::span<const VertexId> DynamicGraph::neighbors(VertexId v) const {
  require_vertex(v);
  return adj_[v];
}

std::optional<VertexId> DynamicGraph::random_neighbor(VertexId v, Rng& rng) const {
  require_vertex(v);
  const auto& list = adj_[v];
  if (list.empty()) return std::nullopt;
  return list[rng.next_below(list.size())];
}

void DynamicGraph::check_consistency() const {
  std::size_t total = 0;
  for (VertexId v = 0; v < n_; ++v) {
    const auto& list = adj_[v];
    const auto& index = pos_[v];
    if (list.size() != index.size()) {
      throw AuditError("adjacency/index size mismatch at vertex " + std::to_string(v));
    }
    for (std::uint32_t i = 0; i < list.size(); ++i) {
      const VertexId u = list[i];
      if (u >= n_ || u == v) {
        throw AuditError("invalid adjacency entry at vertex " + std::to_string(v));
      }
      auto it = index.find(u);
      if (it == index.end() || it->second != i) {
        throw AuditError("position index inconsistent at vertex " + std::to_string(v));
      }
      auto back = pos_[u].find(v);
      if (back == pos_[u].end()) {
        throw AuditError("asymmetric edge (" + std::to_string(v) + "," +
                         std::to_string(u) + ")");
      }
    }
    total += list.size();
  }
  if (total != 2 * m_) {
    throw AuditError("edge count mismatch: m=" + std::to_string(m_) +
                     " adjacency total=" + std::to_string(total));
  }
}

}  // namespace dynmatch
