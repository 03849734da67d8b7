#include "dynmatch/blossom.hpp"

#include <stdexcept>
#include <string>

namespace dynmatch {

SearchScratch::SearchScratch(std::size_t n)
    : stamp_(n, 0), even_(n, 0), parent_(n, kNoVertex), base_(n, kNoVertex),
      dist_(n, 0), lca_stamp_(n, 0), blossom_stamp_(n, 0) {}

bool SearchScratch::all_clear() const {
  for (std::size_t v = 0; v < stamp_.size(); ++v) {
    if (stamp_[v] == epoch_ && epoch_ != 0) return false;
  }
  return true;
}

/// One augmenting-path search. The implementation follows the classic
/// contracted-blossom BFS: even vertices are scanned; an unlabeled matched
/// neighbor becomes odd and its mate even; meeting another even vertex
/// contracts a blossom. Contraction rewires parent pointers of the even
/// vertices around the cycle so that the final trace is a plain
/// parent/mate walk, and promotes the odd cycle vertices to even.
///
/// All per-vertex state is stamped with the search epoch, so starting the
/// next search (or ending this one) invalidates it without a reset pass.
class BlossomSearcher {
 public:
  BlossomSearcher(const DynamicGraph& g, const MatchingState& m, SearchScratch& s,
                  std::size_t depth_bound, VertexId banned)
      : g_(g), m_(m), s_(s), bound_(depth_bound), banned_(banned) {
    s_.queue_.clear();
    s_.touched_.clear();
    ++s_.epoch_;
    head_ = 0;
  }

  ~BlossomSearcher() { ++s_.epoch_; }  // everything written becomes stale

  // Runs the tree growth from `root`, treated as free. Returns the free
  // vertex hit by the search (kNoVertex if none). On success the alternating
  // tree is left intact so the caller may trace and apply the path.
  VertexId grow(VertexId root) {
    root_ = root;
    touch(root);
    s_.even_[root] = 1;
    s_.queue_.push_back(root);
    while (head_ < s_.queue_.size()) {
      const VertexId x = s_.queue_[head_++];
      if (bound_ != kUnboundedDepth && s_.dist_[x] + 1 > bound_) continue;
      const VertexId mate_x = x == root_ ? kNoVertex : m_.mate(x);
      for (const VertexId y : g_.neighbors(x)) {
        ++touched_edges_;
        if (y == banned_ || y == mate_x) continue;
        touch(y);
        if (find_base(x) == find_base(y)) continue;
        if (y == root_ || (m_.is_matched(y) && is_odd(m_.mate(y)))) {
          contract(x, y);
        } else if (is_odd(y)) {
          continue;
        } else if (!s_.even_[y]) {
          if (m_.is_free(y)) {
            s_.parent_[y] = x;
            return y;
          }
          const VertexId w = m_.mate(y);
          if (bound_ != kUnboundedDepth && s_.dist_[x] + 2 > bound_) continue;
          s_.parent_[y] = x;
          s_.dist_[y] = s_.dist_[x] + 1;
          touch(w);
          s_.even_[w] = 1;
          s_.dist_[w] = s_.dist_[x] + 2;
          s_.queue_.push_back(w);
        }
      }
    }
    return kNoVertex;
  }

  // Flips the found path. `leaf` is the free vertex returned by grow().
  void apply(VertexId leaf, MatchingState& m) {
    VertexId cur = leaf;
    while (cur != kNoVertex) {
      const VertexId pv = s_.parent_[cur];
      const VertexId next = pv == root_ ? kNoVertex : m.mate(pv);
      if (next != kNoVertex) m.unmatch(pv, next);
      m.match(cur, pv);
      cur = next;
    }
  }

  std::size_t touched_edges() const { return touched_edges_; }
  std::size_t touched_vertices() const { return s_.touched_.size(); }

 private:
  void touch(VertexId v) {
    if (s_.stamp_[v] != s_.epoch_) {
      s_.stamp_[v] = s_.epoch_;
      s_.even_[v] = 0;
      s_.parent_[v] = kNoVertex;
      s_.base_[v] = v;
      s_.dist_[v] = 0;
      s_.touched_.push_back(v);
    }
  }

  bool is_odd(VertexId v) const {
    return s_.stamp_[v] == s_.epoch_ && s_.parent_[v] != kNoVertex && !s_.even_[v];
  }

  VertexId find_base(VertexId v) { return s_.base_[v]; }

  // Climbs the even spine from `v` to the root, marking bases, then climbs
  // from `w` until a marked base is met: the lowest common blossom base.
  VertexId lowest_common_base(VertexId v, VertexId w) {
    ++s_.lca_epoch_;
    VertexId a = v;
    for (;;) {
      a = find_base(a);
      s_.lca_stamp_[a] = s_.lca_epoch_;
      if (a == root_) break;
      a = find_base(s_.parent_[m_.mate(a)]);
    }
    VertexId b = w;
    for (;;) {
      b = find_base(b);
      if (s_.lca_stamp_[b] == s_.lca_epoch_) return b;
      b = find_base(s_.parent_[m_.mate(b)]);
    }
  }

  // Walks the even spine from `v` down to the base `stop`, marking every
  // base on the way as part of the new blossom and rewiring each even
  // vertex's parent pointer to route around the cycle through `child`.
  void mark_path(VertexId v, VertexId stop, VertexId child) {
    while (find_base(v) != stop) {
      const VertexId b = find_base(v);
      const VertexId o = m_.mate(v);
      s_.blossom_stamp_[b] = s_.blossom_epoch_;
      s_.blossom_stamp_[find_base(o)] = s_.blossom_epoch_;
      s_.parent_[v] = child;
      child = o;
      v = s_.parent_[o];
    }
  }

  void contract(VertexId x, VertexId y) {
    const VertexId b = lowest_common_base(x, y);
    ++s_.blossom_epoch_;
    mark_path(x, b, y);
    mark_path(y, b, x);
    // Re-base every touched vertex whose base joined the blossom; formerly
    // odd ones become even and are enqueued. Their distance is the length of
    // the alternating route around the cycle through the bridge.
    const std::uint64_t bridge_dist =
        std::uint64_t{s_.dist_[x]} + s_.dist_[y] + 1;
    for (const VertexId i : s_.touched_) {
      const VertexId bi = find_base(i);
      if (s_.blossom_stamp_[bi] != s_.blossom_epoch_) continue;
      s_.base_[i] = b;
      if (!s_.even_[i]) {
        s_.even_[i] = 1;
        s_.dist_[i] = static_cast<std::uint32_t>(
            bridge_dist > s_.dist_[i] ? bridge_dist - s_.dist_[i] : 0);
        s_.queue_.push_back(i);
      }
    }
  }

  const DynamicGraph& g_;
  const MatchingState& m_;
  SearchScratch& s_;
  std::size_t bound_;
  VertexId banned_;
  VertexId root_ = kNoVertex;
  std::size_t head_ = 0;
  std::size_t touched_edges_ = 0;
};

bool augment_from(const DynamicGraph& g, MatchingState& m, VertexId root,
                  SearchScratch& scratch, std::size_t depth_bound,
                  SearchOutcome* out) {
  if (!m.is_free(root)) {
    throw std::logic_error("augment_from: root " + std::to_string(root) +
                           " is not free");
  }
  BlossomSearcher search(g, m, scratch, depth_bound, kNoVertex);
  const VertexId leaf = search.grow(root);
  if (leaf != kNoVertex) search.apply(leaf, m);
  if (out) {
    out->success = leaf != kNoVertex;
    out->found_free = leaf;
    out->touched_vertices = search.touched_vertices();
    out->touched_edges = search.touched_edges();
  }
  return leaf != kNoVertex;
}

std::optional<VertexId> find_free_reachable(const DynamicGraph& g,
                                            const MatchingState& m, VertexId root,
                                            SearchScratch& scratch,
                                            SearchOutcome* out) {
  if (out) *out = SearchOutcome{};
  if (m.is_free(root)) {
    if (out) {
      out->success = true;
      out->found_free = root;
    }
    return root;
  }
  // Any augmenting path through `root` enters it over the matched edge, so
  // hunt from the mate with the root itself excluded from the graph.
  const VertexId w = m.mate(root);
  BlossomSearcher search(g, m, scratch, kUnboundedDepth, root);
  const VertexId leaf = search.grow(w);
  if (out) {
    out->success = leaf != kNoVertex;
    out->found_free = leaf;
    out->touched_vertices = search.touched_vertices();
    out->touched_edges = search.touched_edges();
  }
  if (leaf == kNoVertex) return std::nullopt;
  return leaf;
}

void static_max_matching_into(const DynamicGraph& g, MatchingState& m,
                              SearchScratch& scratch) {
  m.clear();
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (!m.is_free(u)) continue;
    for (const VertexId v : g.neighbors(u)) {
      if (m.is_free(v)) {
        m.match(u, v);
        break;
      }
    }
  }
  // One complete search per remaining free vertex suffices: a root that
  // fails stays unaugmentable under later augmentations elsewhere.
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (m.is_free(u)) augment_from(g, m, u, scratch);
  }
}

MatchingState static_max_matching(const DynamicGraph& g) {
  MatchingState m(g.num_vertices());
  SearchScratch scratch(g.num_vertices());
  static_max_matching_into(g, m, scratch);
  return m;
}

}  // namespace dynmatch
