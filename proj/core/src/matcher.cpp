#include "dynmatch/matcher.hpp"

#include <sstream>

#include "dynmatch/baselines.hpp"
#include "dynmatch/bgs.hpp"
#include "dynmatch/dyn_blossom.hpp"
#include "dynmatch/errors.hpp"
#include "dynmatch/neiman_solomon.hpp"
#include "dynmatch/random_walk.hpp"

namespace dynmatch {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kGreedy: return "greedy";
    case Algorithm::kNaiveOpt: return "naive-opt";
    case Algorithm::kRandomWalk: return "random-walk";
    case Algorithm::kDynBlossom: return "dyn-blossom";
    case Algorithm::kBgs: return "bgs";
    case Algorithm::kNeimanSolomon: return "neiman-solomon";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  for (const Algorithm a :
       {Algorithm::kGreedy, Algorithm::kNaiveOpt, Algorithm::kRandomWalk,
        Algorithm::kDynBlossom, Algorithm::kBgs, Algorithm::kNeimanSolomon}) {
    if (name == algorithm_name(a)) return a;
  }
  return std::nullopt;
}

void MatcherConfig::validate() const {
  const bool is_rw = algorithm == Algorithm::kRandomWalk;
  const bool is_db = algorithm == Algorithm::kDynBlossom;
  const bool is_bgs = algorithm == Algorithm::kBgs;
  if (epsilon && !(is_rw || is_db)) {
    throw InputError("epsilon is only valid for random-walk and dyn-blossom");
  }
  if (epsilon && !(*epsilon > 0)) throw InputError("epsilon must be positive");
  if (settling && !is_rw) throw InputError("settling is only valid for random-walk");
  if (walk_repetitions != 1 && !is_rw) {
    throw InputError("walk repetitions are only valid for random-walk");
  }
  if (walk_repetitions == 0) throw InputError("walk repetitions must be >= 1");
  if (lazy && !is_db) throw InputError("lazy is only valid for dyn-blossom");
  if (!safe && !is_db) throw InputError("unsafe is only valid for dyn-blossom");
  if (bgs_threshold_factor != 1.0 && !is_bgs) {
    throw InputError("the threshold factor is only valid for bgs");
  }
  if (!(bgs_threshold_factor > 0)) throw InputError("bgs threshold factor must be positive");
  if (repetitions == 0) throw InputError("repetitions must be >= 1");
}

std::string MatcherConfig::label() const {
  std::ostringstream out;
  out << algorithm_name(algorithm);
  std::vector<std::string> opts;
  if (epsilon) opts.push_back("eps=" + [this] {
    std::ostringstream e;
    e << *epsilon;
    return e.str();
  }());
  if (algorithm == Algorithm::kRandomWalk && settling) opts.push_back("settling");
  if (algorithm == Algorithm::kDynBlossom) opts.push_back(safe ? "safe" : "unsafe");
  if (lazy) opts.push_back("lazy");
  if (algorithm == Algorithm::kBgs && bgs_threshold_factor != 1.0) {
    std::ostringstream c;
    c << "c=" << bgs_threshold_factor;
    opts.push_back(c.str());
  }
  if (!opts.empty()) {
    out << "(";
    for (std::size_t i = 0; i < opts.size(); ++i) {
      if (i) out << ",";
      out << opts[i];
    }
    out << ")";
  }
  return out.str();
}

void Matcher::audit() const {
  if (!verify_matching(graph_, matching_)) {
    throw AuditError("matching state inconsistent with the graph");
  }
}

std::unique_ptr<Matcher> make_matcher(DynamicGraph& g, const MatcherConfig& cfg) {
  cfg.validate();
  switch (cfg.algorithm) {
    case Algorithm::kGreedy:
      return std::make_unique<GreedyMatcher>(g);
    case Algorithm::kNaiveOpt:
      return std::make_unique<NaiveOptMatcher>(g);
    case Algorithm::kRandomWalk: {
      WalkConfig wc;
      wc.epsilon = cfg.epsilon.value_or(0.5);
      wc.settling = cfg.settling;
      wc.repetitions = cfg.walk_repetitions;
      return std::make_unique<RandomWalkMatcher>(g, wc, cfg.seed);
    }
    case Algorithm::kDynBlossom: {
      BlossomConfig bc;
      bc.safe = cfg.safe;
      bc.lazy = cfg.lazy;
      bc.epsilon = cfg.epsilon;
      return std::make_unique<DynBlossomMatcher>(g, bc);
    }
    case Algorithm::kBgs:
      return std::make_unique<BgsMatcher>(g, cfg.bgs_threshold_factor, cfg.seed);
    case Algorithm::kNeimanSolomon:
      return std::make_unique<NeimanSolomonMatcher>(g);
  }
  throw InputError("unknown algorithm");
}

}  // namespace dynmatch
