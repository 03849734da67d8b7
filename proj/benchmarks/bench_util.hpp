#pragma once

#include <set>
#include <utility>

#include "dynmatch/rng.hpp"
#include "dynmatch/workload.hpp"

namespace dynmatch::bench {

inline StaticGraph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  std::set<std::pair<VertexId, VertexId>> picked;
  StaticGraph g;
  g.n = n;
  while (picked.size() < m) {
    const VertexId u = static_cast<VertexId>(rng.next_below(n));
    const VertexId v = static_cast<VertexId>(rng.next_below(n));
    if (u == v) continue;
    const auto [a, b] = std::minmax(u, v);
    if (picked.insert({a, b}).second) g.edges.emplace_back(a, b);
  }
  return g;
}

}  // namespace dynmatch::bench
