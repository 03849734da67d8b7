#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dynmatch/matcher.hpp"
#include "dynmatch/workload.hpp"

namespace dynmatch {

struct BenchRecord {
  std::uint64_t op_index;
  UpdateKind kind;
  std::uint64_t elapsed_ns;
  std::size_t size_after;
};

struct RunSummary {
  std::string instance;
  std::string algorithm;
  std::uint32_t rep = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t ops = 0;
  std::uint64_t total_ns = 0;
  std::size_t final_size = 0;
  std::optional<std::size_t> opt_size;  // oracle size of the final graph
  std::optional<double> quality;        // final_size / opt_size
};

struct RunResult {
  std::vector<BenchRecord> records;
  RunSummary summary;
};

struct RunOptions {
  std::string instance_name = "instance";
  std::optional<std::size_t> verify_every;
  // The optimum oracle is skipped on graphs with more vertices than this.
  std::size_t oracle_vertex_limit = 200;
  bool keep_records = true;
};

/// Replays the sequence through the configured matcher, timing each update
/// (graph mutation plus matcher handler). With verify_every set, the
/// matcher's invariant audit runs at that interval, and on small graphs the
/// matching size is checked against the optimum oracle and the algorithm's
/// guaranteed floor. Audit failures raise AuditError naming the operation.
RunResult run_experiment(const UpdateSequence& seq, const MatcherConfig& cfg,
                         const RunOptions& opts = {});

/// exp(mean(log x)); every value must be positive.
double geometric_mean(std::span<const double> values);

/// Per-instance, per-algorithm objective values. NaN marks a missing cell.
struct ResultTable {
  std::vector<std::string> algorithms;
  std::vector<std::string> instances;
  std::vector<std::vector<double>> values;  // [instance][algorithm]

  void set(const std::string& instance, const std::string& algorithm, double value);
  double get(std::size_t instance_idx, std::size_t algorithm_idx) const;
};

enum class ProfileMode { kMaximize, kMinimizeTime };

struct ProfileRow {
  double tau;
  std::vector<double> fractions;  // aligned with PerfProfile::algorithms
};

struct PerfProfile {
  std::vector<std::string> algorithms;
  std::vector<ProfileRow> rows;
};

/// Dolan-More style performance profile. In maximize mode an algorithm
/// covers an instance at tau when objective >= tau * best; in minimize-time
/// mode when t <= fastest / tau. At tau = 1 the fraction is the share of
/// instances where the algorithm is best, ties counting for all.
PerfProfile performance_profile(const ResultTable& results, ProfileMode mode,
                                std::span<const double> taus);

/// Aggregates run summaries into a result table, reducing repetitions of the
/// same (instance, algorithm) cell with the geometric mean.
ResultTable build_result_table(std::span<const RunSummary> summaries, ProfileMode mode);

std::string records_csv(std::span<const BenchRecord> records);
std::string summaries_csv(std::span<const RunSummary> summaries);
std::vector<RunSummary> parse_summaries_csv(std::string_view text);
std::string profile_csv(const PerfProfile& profile);

/// Self-contained SVG: one step polyline per algorithm over the tau grid.
std::string profile_svg(const PerfProfile& profile);

/// Self-contained SVG of matching size over the operation index.
std::string series_svg(std::span<const BenchRecord> records, const std::string& name);

/// Default tau grid for profiles: `points` values descending from 1.
std::vector<double> default_tau_grid(double tau_min = 0.5, std::size_t points = 101);

}  // namespace dynmatch
