#include "dynmatch/dyn_blossom.hpp"

#include <algorithm>
#include <cmath>

#include "dynmatch/errors.hpp"

namespace dynmatch {

std::size_t depth_from_epsilon(double epsilon) {
  if (!(epsilon > 0)) throw InputError("epsilon must be positive");
  const double q = std::ceil(2.0 / epsilon - 1e-9);
  return static_cast<std::size_t>(q) - 1;
}

bool DynBlossomMatcher::gated_search(VertexId root, std::size_t bound) {
  SearchOutcome out;
  const bool ok = augment_from(graph_, matching_, root, scratch_, bound, &out);
  total_touched_edges_ += out.touched_edges;
  if (cfg_.lazy) lazy_.record(root, out.touched_edges);
  return ok;
}

void DynBlossomMatcher::on_insert(VertexId u, VertexId v) {
  if (cfg_.lazy) lazy_.tick();
  const bool uf = matching_.is_free(u);
  const bool vf = matching_.is_free(v);
  if (uf && vf) {
    matching_.match(u, v);
    return;
  }
  if (uf != vf) {
    const VertexId free_end = uf ? u : v;
    if (!cfg_.lazy || lazy_.gate(free_end)) {
      gated_search(free_end, cfg_.depth_bound());
    }
    return;
  }
  // Both endpoints matched. A new augmenting path would have to run through
  // (u,v), so hunt for a free vertex that reaches u over its matched edge
  // and augment from there. The unsafe configuration skips this.
  if (!cfg_.safe) return;
  if (cfg_.lazy && !lazy_.gate(u)) return;
  SearchOutcome locate;
  const auto free_vertex = find_free_reachable(graph_, matching_, u, scratch_, &locate);
  std::size_t touched = locate.touched_edges;
  if (free_vertex) {
    SearchOutcome aug;
    augment_from(graph_, matching_, *free_vertex, scratch_, cfg_.depth_bound(), &aug);
    touched += aug.touched_edges;
  }
  total_touched_edges_ += touched;
  if (cfg_.lazy) lazy_.record(u, touched);
}

void DynBlossomMatcher::on_delete(VertexId u, VertexId v) {
  if (cfg_.lazy) lazy_.tick();
  if (matching_.mate(u) != v) return;
  matching_.unmatch(u, v);
  for (const VertexId x : {u, v}) {
    if (!matching_.is_free(x)) continue;
    if (!cfg_.lazy || lazy_.gate(x)) {
      gated_search(x, cfg_.depth_bound());
    } else {
      gated_search(x, std::min<std::size_t>(3, cfg_.depth_bound()));
    }
  }
}

void DynBlossomMatcher::audit() const {
  Matcher::audit();
  if (cfg_.depth_bound() >= 1 && !is_maximal(graph_, matching_)) {
    throw AuditError("dyn-blossom: matching is not maximal");
  }
}

double DynBlossomMatcher::quality_floor() const {
  if (cfg_.safe && !cfg_.lazy && !cfg_.epsilon) return 1.0;
  return cfg_.depth_bound() >= 1 ? 0.5 : 0.0;
}

}  // namespace dynmatch
