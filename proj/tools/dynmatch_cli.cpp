// Benchmark driver for the dynamic matching library: replays update
// sequences through a configured matcher, validates workload files, prints
// oracle sizes and aggregates summaries into performance profiles.
//
// Exit codes: 0 ok, 1 input error, 2 invariant-audit failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dynmatch/bench.hpp"
#include "dynmatch/blossom.hpp"
#include "dynmatch/errors.hpp"
#include "dynmatch/matcher.hpp"
#include "dynmatch/workload.hpp"

namespace {

using namespace dynmatch;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

std::string sniff_format(const std::string& path) {
  const auto ext = std::filesystem::path(path).extension().string();
  if (ext == ".metis" || ext == ".graph") return "metis";
  if (ext == ".seq") return "seq";
  if (ext == ".stream" || ext == ".tsv" || ext == ".el") return "stream";
  throw InputError("cannot infer the format of '" + path + "'; pass --format");
}

struct LoadedInput {
  UpdateSequence sequence;
  std::vector<std::uint64_t> remap;  // only for streams
  bool from_static = false;
};

LoadedInput load_input(const std::string& path, std::string format, bool random_order,
                       std::uint64_t seed) {
  if (format == "auto") format = sniff_format(path);
  const std::string text = read_file(path);
  LoadedInput out;
  if (format == "metis") {
    const auto parsed = parse_metis(text);
    if (parsed.dropped_self_loops || parsed.dropped_parallel) {
      std::cerr << "warning: dropped " << parsed.dropped_self_loops << " self-loops and "
                << parsed.dropped_parallel << " parallel entries\n";
    }
    out.sequence = random_order ? random_insertion_sequence(parsed.graph, seed)
                                : file_order_sequence(parsed.graph);
    out.from_static = true;
  } else if (format == "stream") {
    auto parsed = parse_edge_stream(text);
    if (parsed.dropped_duplicate_inserts || parsed.dropped_phantom_deletes ||
        parsed.dropped_self_loops) {
      std::cerr << "warning: dropped " << parsed.dropped_duplicate_inserts
                << " duplicate inserts, " << parsed.dropped_phantom_deletes
                << " phantom deletes, " << parsed.dropped_self_loops << " self-loops\n";
    }
    out.sequence = std::move(parsed.sequence);
    out.remap = std::move(parsed.original_ids);
  } else if (format == "seq") {
    out.sequence = parse_sequence(text);
  } else {
    throw InputError("unknown format '" + format + "'");
  }
  return out;
}

std::string remap_text(const std::vector<std::uint64_t>& remap) {
  std::ostringstream out;
  out << "dense original\n";
  for (std::size_t i = 0; i < remap.size(); ++i) {
    out << i << ' ' << remap[i] << "\n";
  }
  return out.str();
}

int cmd_run(const std::string& input, const std::string& format, MatcherConfig cfg,
            bool random_order, double undo_percent, std::optional<std::size_t> verify_every,
            std::size_t oracle_limit, const std::string& out_csv,
            const std::string& out_records, const std::string& out_svg,
            const std::string& instance_name) {
  auto loaded = load_input(input, format, random_order, cfg.seed);
  UpdateSequence seq = std::move(loaded.sequence);
  if (undo_percent > 0) seq = undo_suffix(seq, undo_percent);

  RunOptions opts;
  opts.instance_name = instance_name.empty()
                           ? std::filesystem::path(input).filename().string()
                           : instance_name;
  opts.verify_every = verify_every;
  opts.oracle_vertex_limit = oracle_limit;
  opts.keep_records = true;

  std::vector<RunSummary> summaries;
  std::vector<BenchRecord> last_records;
  for (std::uint32_t rep = 0; rep < cfg.repetitions; ++rep) {
    MatcherConfig rep_cfg = cfg;
    rep_cfg.seed = cfg.seed + rep;
    auto result = run_experiment(seq, rep_cfg, opts);
    result.summary.rep = rep;
    std::cout << result.summary.algorithm << " on " << opts.instance_name << " rep " << rep
              << ": n=" << result.summary.n << " ops=" << result.summary.ops
              << " total_ns=" << result.summary.total_ns
              << " final_size=" << result.summary.final_size;
    if (result.summary.quality) {
      std::cout << " opt=" << *result.summary.opt_size << " quality=" << *result.summary.quality;
    }
    std::cout << "\n";
    summaries.push_back(result.summary);
    last_records = std::move(result.records);
  }
  if (!out_csv.empty()) {
    write_file(out_csv, summaries_csv(summaries));
    if (!loaded.remap.empty()) write_file(out_csv + ".remap", remap_text(loaded.remap));
  }
  if (!out_records.empty()) write_file(out_records, records_csv(last_records));
  if (!out_svg.empty()) {
    write_file(out_svg, series_svg(last_records, cfg.label()));
  }
  return 0;
}

int cmd_profile(const std::vector<std::string>& inputs, const std::string& mode_name,
                double tau_min, std::size_t tau_points, const std::string& out_csv,
                const std::string& out_svg) {
  std::vector<RunSummary> summaries;
  for (const std::string& path : inputs) {
    const auto part = parse_summaries_csv(read_file(path));
    summaries.insert(summaries.end(), part.begin(), part.end());
  }
  const ProfileMode mode =
      mode_name == "time" ? ProfileMode::kMinimizeTime : ProfileMode::kMaximize;
  const auto table = build_result_table(summaries, mode);
  const auto taus = default_tau_grid(tau_min, tau_points);
  const auto profile = performance_profile(table, mode, taus);
  const std::string csv = profile_csv(profile);
  if (out_csv.empty()) {
    std::cout << csv;
  } else {
    write_file(out_csv, csv);
  }
  if (!out_svg.empty()) write_file(out_svg, profile_svg(profile));
  return 0;
}

int cmd_validate(const std::string& input, const std::string& format,
                 const std::string& out_seq) {
  auto loaded = load_input(input, format, /*random_order=*/false, /*seed=*/0);
  const auto report = validate_sequence(loaded.sequence);
  std::cout << "n=" << loaded.sequence.n << " ops=" << loaded.sequence.ops.size()
            << " dropped_duplicate_inserts=" << report.duplicate_inserts
            << " dropped_phantom_deletes=" << report.phantom_deletes
            << " dropped_invalid=" << report.self_loops << "\n";
  if (!out_seq.empty()) {
    const auto [cleaned, ignored] = clean_sequence(loaded.sequence);
    write_file(out_seq, write_sequence(cleaned));
    if (!loaded.remap.empty()) write_file(out_seq + ".remap", remap_text(loaded.remap));
  }
  return report.clean() ? 0 : 1;
}

int cmd_oracle(const std::string& input, const std::string& format) {
  auto loaded = load_input(input, format, /*random_order=*/false, /*seed=*/0);
  const DynamicGraph g = replay(loaded.sequence);
  std::cout << static_max_matching(g).size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamic matching benchmark driver"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "replay a sequence through one matcher");
  std::string input, format = "auto", algo;
  std::string out_csv, out_records, out_svg, instance_name;
  MatcherConfig cfg;
  bool settling = false, unsafe = false, lazy = false, random_order = false;
  double epsilon = -1, bgs_c = 1.0, undo_percent = 0;
  std::uint64_t verify_every_raw = 0;
  std::size_t oracle_limit = 200;
  run->add_option("--input", input, "input file")->required();
  run->add_option("--format", format, "metis|stream|seq|auto");
  run->add_option("--algo", algo,
                  "greedy|naive-opt|random-walk|dyn-blossom|bgs|neiman-solomon")
      ->required();
  run->add_option("--epsilon", epsilon, "walk length / search depth parameter");
  run->add_flag("--settling", settling, "random-walk delta-settling");
  run->add_flag("--unsafe", unsafe, "dyn-blossom: skip the both-matched search");
  run->add_flag("--safe", "dyn-blossom: keep the both-matched search (default)");
  run->add_flag("--lazy", lazy, "dyn-blossom: lazy augmenting path search");
  run->add_option("--bgs-c", bgs_c, "bgs threshold factor");
  run->add_option("--seed", cfg.seed, "rng seed");
  run->add_option("--reps", cfg.repetitions, "repetitions per instance");
  run->add_option("--walk-reps", cfg.walk_repetitions, "walk retries per start vertex");
  run->add_option("--verify-every", verify_every_raw,
                  "audit (and oracle-check on small graphs) every k ops");
  run->add_option("--oracle-limit", oracle_limit, "max n for oracle verification");
  run->add_flag("--random-order", random_order, "shuffle static edges (seeded)");
  run->add_option("--undo-percent", undo_percent, "append x% of ops undone");
  run->add_option("--out-csv", out_csv, "write per-rep summary CSV");
  run->add_option("--out-records", out_records, "write per-op record CSV (last rep)");
  run->add_option("--out-svg", out_svg, "write matching-size-over-time SVG (last rep)");
  run->add_option("--instance-name", instance_name, "instance label in summaries");

  // profile
  auto* profile = app.add_subcommand("profile", "aggregate summary CSVs into a profile");
  std::vector<std::string> profile_inputs;
  std::string profile_mode = "quality", profile_csv_path, profile_svg_path;
  double tau_min = 0.5;
  std::size_t tau_points = 101;
  profile->add_option("inputs", profile_inputs, "summary CSV files")->required();
  profile->add_option("--mode", profile_mode, "quality|time");
  profile->add_option("--tau-min", tau_min, "smallest tau in the grid");
  profile->add_option("--tau-points", tau_points, "grid size");
  profile->add_option("--out-csv", profile_csv_path, "write profile CSV");
  profile->add_option("--out-svg", profile_svg_path, "write profile SVG");

  // validate
  auto* validate = app.add_subcommand("validate", "check a sequence for replay validity");
  std::string v_input, v_format = "auto", v_out;
  validate->add_option("--input", v_input, "input file")->required();
  validate->add_option("--format", v_format, "metis|stream|seq|auto");
  validate->add_option("--out-seq", v_out, "write the cleaned native sequence");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "print the maximum matching size");
  std::string o_input, o_format = "auto";
  oracle->add_option("--input", o_input, "input file")->required();
  oracle->add_option("--format", o_format, "metis|stream|seq|auto");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const auto parsed_algo = parse_algorithm(algo);
      if (!parsed_algo) throw InputError("unknown algorithm '" + algo + "'");
      cfg.algorithm = *parsed_algo;
      if (epsilon >= 0) cfg.epsilon = epsilon;
      cfg.settling = settling;
      cfg.safe = !unsafe;
      cfg.lazy = lazy;
      cfg.bgs_threshold_factor = bgs_c;
      cfg.validate();
      return cmd_run(input, format, cfg, random_order, undo_percent,
                     verify_every_raw == 0
                         ? std::nullopt
                         : std::optional<std::size_t>(verify_every_raw),
                     oracle_limit, out_csv, out_records, out_svg, instance_name);
    }
    if (profile->parsed()) {
      return cmd_profile(profile_inputs, profile_mode, tau_min, tau_points,
                         profile_csv_path, profile_svg_path);
    }
    if (validate->parsed()) return cmd_validate(v_input, v_format, v_out);
    if (oracle->parsed()) return cmd_oracle(o_input, o_format);
  } catch (const AuditError& e) {
    std::cerr << "invariant audit failure: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
