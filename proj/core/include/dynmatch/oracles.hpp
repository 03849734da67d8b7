#pragma once

#include <optional>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/matching.hpp"

namespace dynmatch {

/// Exact maximum matching size by exhaustive branch-and-bound over the edge
/// list. Verification oracle for small instances only: requires n <= 64 and
/// m <= kBruteForceEdgeLimit, otherwise raises InputError.
inline constexpr std::size_t kBruteForceEdgeLimit = 26;
std::size_t brute_force_max_matching_size(const DynamicGraph& g);

/// Length of a shortest augmenting path w.r.t. m, or nullopt when the
/// matching is maximum. Exhaustive search over simple alternating paths from
/// every free vertex; exponential in the worst case, intended for small
/// instances (tests use n <= 64).
std::optional<std::size_t> shortest_augmenting_path_length(const DynamicGraph& g,
                                                           const MatchingState& m);

/// True iff an augmenting path of length <= max_len exists. Bounded variants
/// stay cheap even on larger graphs (cost about n * Delta^max_len).
bool has_augmenting_path_at_most(const DynamicGraph& g, const MatchingState& m,
                                 std::size_t max_len);

/// Per-root oracle: true iff some augmenting path starts at the given free
/// vertex (optionally length-bounded).
bool has_augmenting_path_from(const DynamicGraph& g, const MatchingState& m,
                              VertexId root,
                              std::size_t max_len = static_cast<std::size_t>(-1));

}  // namespace dynmatch
