#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/matching.hpp"

namespace dynmatch {

enum class Algorithm {
  kGreedy,
  kNaiveOpt,
  kRandomWalk,
  kDynBlossom,
  kBgs,
  kNeimanSolomon,
};

const char* algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(const std::string& name);

/// Algorithm selection plus its knobs. Flags that an algorithm does not
/// define are rejected by validate().
struct MatcherConfig {
  Algorithm algorithm = Algorithm::kGreedy;
  std::optional<double> epsilon;        // random-walk, dyn-blossom
  bool settling = false;                // random-walk
  bool safe = true;                     // dyn-blossom
  bool lazy = false;                    // dyn-blossom
  double bgs_threshold_factor = 1.0;    // bgs
  std::uint64_t walk_repetitions = 1;   // random-walk
  std::uint64_t seed = 1;
  std::uint32_t repetitions = 10;       // harness repetitions per instance

  // Throws InputError when a flag is set for an algorithm that has none.
  void validate() const;

  // Short label such as "random-walk(eps=0.1,settling)" used in reports.
  std::string label() const;
};

/// A dynamic matching algorithm bound to one graph. The driver mutates the
/// graph first and then notifies the matcher, so handlers see the post-update
/// adjacency. Single writer; instances may be moved between threads.
class Matcher {
 public:
  explicit Matcher(DynamicGraph& g) : graph_(g), matching_(g.num_vertices()) {}
  virtual ~Matcher() = default;

  virtual void on_insert(VertexId u, VertexId v) = 0;
  virtual void on_delete(VertexId u, VertexId v) = 0;

  // Full algorithm-specific invariant audit; throws AuditError on violation.
  virtual void audit() const;

  // Guaranteed fraction of the optimum size (1.0 for exact maintainers,
  // 0 when the configuration guarantees nothing).
  virtual double quality_floor() const { return 0.5; }

  const MatchingState& matching() const { return matching_; }
  const DynamicGraph& graph() const { return graph_; }

 protected:
  DynamicGraph& graph_;
  MatchingState matching_;
};

std::unique_ptr<Matcher> make_matcher(DynamicGraph& g, const MatcherConfig& cfg);

}  // namespace dynmatch
