#pragma once

#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/rng.hpp"
#include "dynmatch/workload.hpp"

namespace dynmatch::testing {

inline DynamicGraph graph_from_edges(std::size_t n,
                                     const std::vector<std::pair<VertexId, VertexId>>& edges) {
  DynamicGraph g(n);
  for (const auto& [u, v] : edges) g.insert_edge(u, v);
  return g;
}

inline StaticGraph path_graph(std::size_t k) {
  StaticGraph g;
  g.n = k;
  for (VertexId i = 0; i + 1 < k; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

inline StaticGraph cycle_graph(std::size_t k) {
  StaticGraph g = path_graph(k);
  if (k >= 3) g.edges.emplace_back(static_cast<VertexId>(k - 1), 0);
  return g;
}

inline StaticGraph petersen_graph() {
  StaticGraph g;
  g.n = 10;
  const std::vector<std::pair<VertexId, VertexId>> edges = {
      {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},          // outer cycle
      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},          // spokes
      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},          // inner pentagram
  };
  g.edges = edges;
  return g;
}

// Erdos-Renyi G(n, m): m distinct edges sampled uniformly.
inline StaticGraph gnm_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  std::set<std::pair<VertexId, VertexId>> picked;
  StaticGraph g;
  g.n = n;
  while (picked.size() < m) {
    const VertexId u = static_cast<VertexId>(rng.next_below(n));
    const VertexId v = static_cast<VertexId>(rng.next_below(n));
    if (u == v) continue;
    const auto e = std::minmax(u, v);
    if (picked.insert({e.first, e.second}).second) {
      g.edges.emplace_back(e.first, e.second);
    }
  }
  return g;
}

inline StaticGraph grid_graph(std::size_t rows, std::size_t cols) {
  StaticGraph g;
  g.n = rows * cols;
  const auto id = [cols](std::size_t r, std::size_t c) {
    return static_cast<VertexId>(r * cols + c);
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return g;
}

// Mixed insert/delete sequence: each op inserts a random absent edge with
// probability insert_share, otherwise deletes a random present edge.
inline UpdateSequence random_dynamic_sequence(std::size_t n, std::size_t ops,
                                              double insert_share, std::uint64_t seed) {
  Rng rng(seed);
  UpdateSequence seq;
  seq.n = n;
  std::vector<std::pair<VertexId, VertexId>> present;
  std::set<std::pair<VertexId, VertexId>> present_set;
  const std::size_t max_edges = n * (n - 1) / 2;
  while (seq.ops.size() < ops) {
    const bool want_insert = rng.next_unit() < insert_share;
    if ((want_insert && present.size() < max_edges) || present.empty()) {
      for (;;) {
        const VertexId u = static_cast<VertexId>(rng.next_below(n));
        const VertexId v = static_cast<VertexId>(rng.next_below(n));
        if (u == v) continue;
        const auto [a, b] = std::minmax(u, v);
        if (!present_set.insert({a, b}).second) continue;
        present.emplace_back(a, b);
        seq.ops.push_back({UpdateKind::kInsert, a, b});
        break;
      }
    } else {
      const std::size_t i = rng.next_below(present.size());
      const auto [a, b] = present[i];
      present[i] = present.back();
      present.pop_back();
      present_set.erase({a, b});
      seq.ops.push_back({UpdateKind::kDelete, a, b});
    }
  }
  return seq;
}

// Largest k with P[Binomial(n, p) <= k] <= alpha (returns 0 when even k=0
// exceeds alpha). Used as the rejection threshold of one-sided lower tests.
inline std::size_t binomial_lower_quantile(std::size_t n, double p, double alpha) {
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  double cdf = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double log_pmf = std::lgamma(static_cast<double>(n) + 1) -
                           std::lgamma(static_cast<double>(k) + 1) -
                           std::lgamma(static_cast<double>(n - k) + 1) +
                           static_cast<double>(k) * log_p +
                           static_cast<double>(n - k) * log_q;
    cdf += std::exp(log_pmf);
    if (cdf > alpha) return k == 0 ? 0 : k - 1;
  }
  return n;
}

}  // namespace dynmatch::testing
