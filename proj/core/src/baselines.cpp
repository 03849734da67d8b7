#include "dynmatch/baselines.hpp"

#include "dynmatch/errors.hpp"

namespace dynmatch {

void GreedyMatcher::on_insert(VertexId u, VertexId v) {
  if (matching_.is_free(u) && matching_.is_free(v)) {
    matching_.match(u, v);
  }
}

void GreedyMatcher::on_delete(VertexId u, VertexId v) {
  if (matching_.mate(u) != v) return;
  matching_.unmatch(u, v);
  for (const VertexId x : {u, v}) {
    if (!matching_.is_free(x)) continue;
    for (const VertexId w : graph_.neighbors(x)) {
      if (matching_.is_free(w)) {
        matching_.match(x, w);
        break;
      }
    }
  }
}

void GreedyMatcher::audit() const {
  Matcher::audit();
  if (!is_maximal(graph_, matching_)) {
    throw AuditError("greedy: matching is not maximal");
  }
}

void NaiveOptMatcher::recompute() {
  static_max_matching_into(graph_, matching_, scratch_);
}

void NaiveOptMatcher::on_insert(VertexId, VertexId) { recompute(); }

void NaiveOptMatcher::on_delete(VertexId, VertexId) { recompute(); }

void NaiveOptMatcher::audit() const {
  Matcher::audit();
  if (!is_maximal(graph_, matching_)) {
    throw AuditError("naive-opt: matching is not maximal");
  }
}

}  // namespace dynmatch
