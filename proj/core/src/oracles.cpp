#include "dynmatch/oracles.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dynmatch/errors.hpp"

namespace dynmatch {

namespace {

struct BruteForce {
  const std::vector<std::pair<VertexId, VertexId>>& edges;
  std::size_t best = 0;

  void run(std::size_t idx, std::uint64_t used, std::size_t count) {
    best = std::max(best, count);
    if (idx == edges.size()) return;
    if (count + (edges.size() - idx) <= best) return;
    const auto [u, v] = edges[idx];
    const std::uint64_t mask = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    if ((used & mask) == 0) run(idx + 1, used | mask, count + 1);
    run(idx + 1, used, count);
  }
};

// Exhaustive search over simple alternating paths. `on_path` marks used
// vertices; lengths count edges.
struct AlternatingDfs {
  const DynamicGraph& g;
  const MatchingState& m;
  std::size_t limit;  // only paths of length <= limit are considered
  std::vector<char> on_path;
  std::size_t best = static_cast<std::size_t>(-1);
  bool stop_at_first;  // for existence queries, abort once any path is found

  AlternatingDfs(const DynamicGraph& g, const MatchingState& m, std::size_t limit,
                 bool stop_at_first)
      : g(g), m(m), limit(limit), on_path(g.num_vertices(), 0),
        stop_at_first(stop_at_first) {}

  bool found() const { return best != static_cast<std::size_t>(-1); }

  // Arrived at x through an unmatched edge after len edges.
  void arrive_unmatched(VertexId x, std::size_t len) {
    if (m.is_free(x)) {
      best = std::min(best, len);
      return;
    }
    if (stop_at_first && found()) return;
    const VertexId w = m.mate(x);
    if (on_path[w] || len + 1 > limit || len + 1 >= best) return;
    on_path[w] = 1;
    arrive_matched(w, len + 1);
    on_path[w] = 0;
  }

  // Arrived at x through a matched edge; next edge must be unmatched.
  void arrive_matched(VertexId x, std::size_t len) {
    if (len + 1 > limit || len + 1 >= best) return;
    const VertexId mx = m.mate(x);
    for (VertexId y : g.neighbors(x)) {
      if (y == mx || on_path[y]) continue;
      on_path[y] = 1;
      arrive_unmatched(y, len + 1);
      on_path[y] = 0;
      if (stop_at_first && found()) return;
    }
  }

  void from_root(VertexId root) {
    on_path[root] = 1;
    for (VertexId y : g.neighbors(root)) {
      if (on_path[y]) continue;
      on_path[y] = 1;
      arrive_unmatched(y, 1);
      on_path[y] = 0;
      if (stop_at_first && found()) break;
      if (best == 1) break;  // cannot improve
    }
    on_path[root] = 0;
  }
};

}  // namespace

std::size_t brute_force_max_matching_size(const DynamicGraph& g) {
  if (g.num_vertices() > 64) {
    throw InputError("brute_force_max_matching_size: more than 64 vertices");
  }
  if (g.num_edges() > kBruteForceEdgeLimit) {
    throw InputError("brute_force_max_matching_size: " + std::to_string(g.num_edges()) +
                     " edges exceeds enumeration limit " +
                     std::to_string(kBruteForceEdgeLimit));
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  BruteForce bf{edges};
  bf.run(0, 0, 0);
  return bf.best;
}

std::optional<std::size_t> shortest_augmenting_path_length(const DynamicGraph& g,
                                                           const MatchingState& m) {
  const std::size_t n = g.num_vertices();
  AlternatingDfs dfs(g, m, n == 0 ? 0 : n - 1, /*stop_at_first=*/false);
  for (VertexId v = 0; v < n; ++v) {
    if (!m.is_free(v)) continue;
    dfs.from_root(v);
    if (dfs.best == 1) break;
  }
  if (!dfs.found()) return std::nullopt;
  return dfs.best;
}

bool has_augmenting_path_at_most(const DynamicGraph& g, const MatchingState& m,
                                 std::size_t max_len) {
  AlternatingDfs dfs(g, m, max_len, /*stop_at_first=*/true);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!m.is_free(v)) continue;
    dfs.from_root(v);
    if (dfs.found()) return true;
  }
  return false;
}

bool has_augmenting_path_from(const DynamicGraph& g, const MatchingState& m,
                              VertexId root, std::size_t max_len) {
  if (!m.is_free(root)) return false;
  const std::size_t n = g.num_vertices();
  const std::size_t limit = std::min(max_len, n == 0 ? 0 : n - 1);
  AlternatingDfs dfs(g, m, limit, /*stop_at_first=*/true);
  dfs.from_root(root);
  return dfs.found();
}

}  // namespace dynmatch
