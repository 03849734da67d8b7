#include "dynmatch/random_walk.hpp"

#include <cmath>
#include <stdexcept>

#include "dynmatch/errors.hpp"

namespace dynmatch {

std::size_t WalkConfig::max_steps() const {
  if (!(epsilon > 0)) throw InputError("walk epsilon must be positive");
  // Tolerance counters representation noise in 2/epsilon (e.g. epsilon=1/3).
  const double q = std::ceil(2.0 / epsilon - 1e-9);
  return static_cast<std::size_t>(q) - 1;
}

namespace {

bool plain_walk(const DynamicGraph& g, MatchingState& m, VertexId start,
                std::size_t max_steps, Rng& rng, UndoLog& log) {
  const std::size_t mark = log.mark();
  VertexId x = start;
  for (std::size_t step = 0; step < max_steps; ++step) {
    const auto nb = g.random_neighbor(x, rng);
    if (!nb) break;
    const VertexId w = *nb;
    if (m.is_free(w)) {
      m.match(x, w, &log);
      return true;
    }
    const VertexId y = m.mate(w);
    m.unmatch(w, y, &log);
    m.match(x, w, &log);
    x = y;
  }
  m.rollback(log, mark);
  return false;
}

bool settling_walk(const DynamicGraph& g, MatchingState& m, VertexId start,
                   std::size_t max_steps, Rng& rng, UndoLog& log) {
  VertexId x = start;
  std::size_t steps = 0;
  for (;;) {
    for (const VertexId w : g.neighbors(x)) {
      if (m.is_free(w)) {
        m.match(x, w, &log);
        return true;
      }
    }
    if (steps == max_steps) return false;  // x keeps the flips, stays free
    const auto nb = g.random_neighbor(x, rng);
    if (!nb) return false;
    ++steps;
    const VertexId w = *nb;  // matched: the settle scan found no free vertex
    const VertexId y = m.mate(w);
    m.unmatch(w, y, &log);
    m.match(x, w, &log);
    x = y;
  }
}

}  // namespace

bool random_augmenting_walk(const DynamicGraph& g, MatchingState& m, VertexId start,
                            const WalkConfig& cfg, Rng& rng, UndoLog& log) {
  if (!m.is_free(start)) {
    throw std::logic_error("random_augmenting_walk: start vertex is not free");
  }
  if (cfg.settling) return settling_walk(g, m, start, cfg.max_steps(), rng, log);
  return plain_walk(g, m, start, cfg.max_steps(), rng, log);
}

bool RandomWalkMatcher::walk_with_repetitions(VertexId start) {
  const std::uint64_t reps = cfg_.repetitions == 0 ? 1 : cfg_.repetitions;
  for (std::uint64_t r = 0; r < reps; ++r) {
    if (!matching_.is_free(start)) break;  // settling may have bound it
    if (random_augmenting_walk(graph_, matching_, start, cfg_, rng_, log_)) {
      return true;
    }
  }
  return false;
}

void RandomWalkMatcher::on_insert(VertexId u, VertexId v) {
  log_.clear();
  const bool uf = matching_.is_free(u);
  const bool vf = matching_.is_free(v);
  if (uf && vf) {
    matching_.match(u, v);
    return;
  }
  if (!uf && !vf) return;
  const VertexId matched_end = uf ? v : u;
  const VertexId free_end = uf ? u : v;
  const std::size_t mark = log_.mark();
  const VertexId w = matching_.mate(matched_end);
  matching_.unmatch(matched_end, w, &log_);
  matching_.match(matched_end, free_end, &log_);
  const bool ok = walk_with_repetitions(w);
  if (!ok && !cfg_.settling) matching_.rollback(log_, mark);
}

void RandomWalkMatcher::on_delete(VertexId u, VertexId v) {
  log_.clear();
  if (matching_.mate(u) != v) return;
  matching_.unmatch(u, v);  // the edge is gone; never rolled back
  for (const VertexId x : {u, v}) {
    if (!matching_.is_free(x)) continue;
    for (const VertexId w : graph_.neighbors(x)) {
      if (matching_.is_free(w)) {
        matching_.match(x, w);
        break;
      }
    }
  }
  for (const VertexId x : {u, v}) {
    if (!matching_.is_free(x)) continue;
    const std::size_t mark = log_.mark();
    const bool ok = walk_with_repetitions(x);
    if (!ok && !cfg_.settling) matching_.rollback(log_, mark);
  }
}

void RandomWalkMatcher::audit() const {
  Matcher::audit();
  if (!is_maximal(graph_, matching_)) {
    throw AuditError("random-walk: matching is not maximal");
  }
}

}  // namespace dynmatch
