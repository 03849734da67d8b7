#include "dynmatch/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "dynmatch/blossom.hpp"
#include "dynmatch/errors.hpp"

namespace dynmatch {

namespace {

void verify_against_oracle(const Matcher& matcher, std::uint64_t op_index) {
  const MatchingState opt = static_max_matching(matcher.graph());
  const std::size_t size = matcher.matching().size();
  if (size > opt.size()) {
    throw AuditError("op " + std::to_string(op_index) + ": matching size " +
                     std::to_string(size) + " exceeds optimum " +
                     std::to_string(opt.size()));
  }
  const double floor = matcher.quality_floor();
  if (floor > 0) {
    // ceil(floor * opt) with a tolerance for representation noise in floor.
    const std::size_t required = static_cast<std::size_t>(
        std::ceil(floor * static_cast<double>(opt.size()) - 1e-9));
    if (size < required) {
      throw AuditError("op " + std::to_string(op_index) + ": matching size " +
                       std::to_string(size) + " below guaranteed " +
                       std::to_string(required) + " (optimum " +
                       std::to_string(opt.size()) + ")");
    }
  }
}

}  // namespace

RunResult run_experiment(const UpdateSequence& seq, const MatcherConfig& cfg,
                         const RunOptions& opts) {
  cfg.validate();
  RunResult result;
  result.summary.instance = opts.instance_name;
  result.summary.algorithm = cfg.label();
  result.summary.seed = cfg.seed;
  result.summary.n = seq.n;
  result.summary.ops = seq.ops.size();

  DynamicGraph g(seq.n);
  auto matcher = make_matcher(g, cfg);
  const bool oracle_enabled = seq.n <= opts.oracle_vertex_limit;

  if (opts.keep_records) result.records.reserve(seq.ops.size());
  std::uint64_t total_ns = 0;
  for (std::size_t i = 0; i < seq.ops.size(); ++i) {
    const UpdateOp& op = seq.ops[i];
    const auto begin = std::chrono::steady_clock::now();
    bool applied;
    if (op.kind == UpdateKind::kInsert) {
      applied = g.insert_edge(op.u, op.v);
      if (applied) matcher->on_insert(op.u, op.v);
    } else {
      applied = g.delete_edge(op.u, op.v);
      if (applied) matcher->on_delete(op.u, op.v);
    }
    const auto end = std::chrono::steady_clock::now();
    if (!applied) {
      throw InputError("sequence invalid at op " + std::to_string(i) +
                       ": duplicate insert or phantom delete");
    }
    const std::uint64_t ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(end - begin).count();
    total_ns += ns;
    if (opts.keep_records) {
      result.records.push_back({i, op.kind, ns, matcher->matching().size()});
    }
    if (opts.verify_every && (i + 1) % *opts.verify_every == 0) {
      try {
        matcher->audit();
      } catch (const AuditError& e) {
        throw AuditError("op " + std::to_string(i) + ": " + e.what());
      }
      if (oracle_enabled) verify_against_oracle(*matcher, i);
    }
  }

  result.summary.total_ns = total_ns;
  result.summary.final_size = matcher->matching().size();
  if (oracle_enabled) {
    const MatchingState opt = static_max_matching(g);
    result.summary.opt_size = opt.size();
    result.summary.quality =
        opt.size() == 0 ? 1.0
                        : static_cast<double>(result.summary.final_size) / opt.size();
  }
  return result;
}

double geometric_mean(std::span<const double> values) {
  if (values.empty()) throw InputError("geometric mean of an empty set");
  double log_sum = 0;
  for (const double v : values) {
    if (!(v > 0)) throw InputError("geometric mean requires positive values");
    log_sum += std::log(v);
  }
  return std::exp(log_sum / static_cast<double>(values.size()));
}

void ResultTable::set(const std::string& instance, const std::string& algorithm,
                      double value) {
  auto find_or_add = [](std::vector<std::string>& names, const std::string& name) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
    names.push_back(name);
    return names.size() - 1;
  };
  const std::size_t ai = find_or_add(algorithms, algorithm);
  const std::size_t ii = find_or_add(instances, instance);
  if (values.size() < instances.size()) values.resize(instances.size());
  for (auto& row : values) {
    row.resize(algorithms.size(), std::numeric_limits<double>::quiet_NaN());
  }
  values[ii][ai] = value;
}

double ResultTable::get(std::size_t instance_idx, std::size_t algorithm_idx) const {
  return values[instance_idx][algorithm_idx];
}

PerfProfile performance_profile(const ResultTable& results, ProfileMode mode,
                                std::span<const double> taus) {
  const std::size_t num_algorithms = results.algorithms.size();
  const std::size_t num_instances = results.instances.size();
  if (num_algorithms == 0 || num_instances == 0) {
    throw InputError("performance profile needs at least one instance and algorithm");
  }
  for (std::size_t i = 0; i < num_instances; ++i) {
    for (std::size_t a = 0; a < num_algorithms; ++a) {
      const double v = results.get(i, a);
      if (std::isnan(v)) {
        throw InputError("missing result for '" + results.algorithms[a] + "' on '" +
                         results.instances[i] + "'");
      }
      if (mode == ProfileMode::kMinimizeTime && !(v > 0)) {
        throw InputError("time profile requires positive times");
      }
    }
  }
  std::vector<double> best(num_instances);
  for (std::size_t i = 0; i < num_instances; ++i) {
    double b = results.get(i, 0);
    for (std::size_t a = 1; a < num_algorithms; ++a) {
      b = mode == ProfileMode::kMaximize ? std::max(b, results.get(i, a))
                                         : std::min(b, results.get(i, a));
    }
    best[i] = b;
  }
  PerfProfile profile;
  profile.algorithms = results.algorithms;
  for (const double tau : taus) {
    if (!(tau > 0) || tau > 1) throw InputError("tau must lie in (0, 1]");
    ProfileRow row{tau, std::vector<double>(num_algorithms, 0)};
    for (std::size_t a = 0; a < num_algorithms; ++a) {
      std::size_t hit = 0;
      for (std::size_t i = 0; i < num_instances; ++i) {
        const double v = results.get(i, a);
        const bool covered = mode == ProfileMode::kMaximize ? v >= tau * best[i]
                                                            : v <= best[i] / tau;
        if (covered) ++hit;
      }
      row.fractions[a] = static_cast<double>(hit) / static_cast<double>(num_instances);
    }
    profile.rows.push_back(std::move(row));
  }
  return profile;
}

ResultTable build_result_table(std::span<const RunSummary> summaries, ProfileMode mode) {
  // Collect repetition values per cell, then reduce with the geometric mean.
  struct Cell {
    std::string instance, algorithm;
    std::vector<double> values;
  };
  std::vector<Cell> cells;
  for (const RunSummary& s : summaries) {
    const double value = mode == ProfileMode::kMaximize
                             ? s.quality.value_or(std::numeric_limits<double>::quiet_NaN())
                             : static_cast<double>(s.total_ns);
    auto it = std::find_if(cells.begin(), cells.end(), [&](const Cell& c) {
      return c.instance == s.instance && c.algorithm == s.algorithm;
    });
    if (it == cells.end()) {
      cells.push_back({s.instance, s.algorithm, {value}});
    } else {
      it->values.push_back(value);
    }
  }
  ResultTable table;
  for (const Cell& c : cells) {
    for (const double v : c.values) {
      if (std::isnan(v)) {
        throw InputError("summary for '" + c.algorithm + "' on '" + c.instance +
                         "' has no quality value (oracle disabled?)");
      }
    }
    table.set(c.instance, c.algorithm, geometric_mean(c.values));
  }
  return table;
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

std::string records_csv(std::span<const BenchRecord> records) {
  std::ostringstream out;
  out << "op_index,kind,elapsed_ns,matching_size\n";
  for (const BenchRecord& r : records) {
    out << r.op_index << ',' << (r.kind == UpdateKind::kInsert ? 'I' : 'D') << ','
        << r.elapsed_ns << ',' << r.size_after << "\n";
  }
  return out.str();
}

std::string summaries_csv(std::span<const RunSummary> summaries) {
  std::ostringstream out;
  out << "instance,algorithm,rep,seed,n,ops,total_ns,final_size,opt_size,quality\n";
  for (const RunSummary& s : summaries) {
    out << csv_escape(s.instance) << ',' << csv_escape(s.algorithm) << ',' << s.rep << ','
        << s.seed << ',' << s.n << ',' << s.ops << ',' << s.total_ns << ','
        << s.final_size << ',';
    if (s.opt_size) out << *s.opt_size;
    out << ',';
    if (s.quality) {
      out.precision(17);
      out << *s.quality;
    }
    out << "\n";
  }
  return out.str();
}

std::vector<RunSummary> parse_summaries_csv(std::string_view text) {
  std::vector<RunSummary> out;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (!line.starts_with("instance,")) {
        throw ParseError("unexpected summary CSV header", line_no);
      }
      continue;
    }
    const auto fields = csv_split(line);
    if (fields.size() != 10) {
      throw ParseError("expected 10 summary fields", line_no);
    }
    RunSummary s;
    try {
      s.instance = fields[0];
      s.algorithm = fields[1];
      s.rep = static_cast<std::uint32_t>(std::stoul(fields[2]));
      s.seed = std::stoull(fields[3]);
      s.n = std::stoull(fields[4]);
      s.ops = std::stoull(fields[5]);
      s.total_ns = std::stoull(fields[6]);
      s.final_size = std::stoull(fields[7]);
      if (!fields[8].empty()) s.opt_size = std::stoull(fields[8]);
      if (!fields[9].empty()) s.quality = std::stod(fields[9]);
    } catch (const std::exception&) {
      throw ParseError("malformed summary row", line_no);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string profile_csv(const PerfProfile& profile) {
  std::ostringstream out;
  out << "tau";
  for (const std::string& a : profile.algorithms) out << ',' << csv_escape(a);
  out << "\n";
  out.precision(17);
  for (const ProfileRow& row : profile.rows) {
    out << row.tau;
    for (const double f : row.fractions) out << ',' << f;
    out << "\n";
  }
  return out.str();
}

std::vector<double> default_tau_grid(double tau_min, std::size_t points) {
  if (!(tau_min > 0) || tau_min > 1 || points < 2) {
    throw InputError("invalid tau grid parameters");
  }
  std::vector<double> taus(points);
  for (std::size_t i = 0; i < points; ++i) {
    taus[i] = 1.0 - (1.0 - tau_min) * static_cast<double>(i) /
                        static_cast<double>(points - 1);
  }
  return taus;
}

namespace {

constexpr const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                    "#66a61e", "#e6ab02", "#a6761d", "#666666"};

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

std::string line_chart_svg(const std::string& x_label, const std::string& y_label,
                           const std::vector<Series>& series) {
  constexpr double kWidth = 800, kHeight = 560;
  constexpr double kLeft = 70, kRight = 780, kTop = 30, kBottom = 500;
  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  bool first = true;
  for (const Series& s : series) {
    for (const auto& [x, y] : s.points) {
      if (first) {
        x_min = x_max = x;
        y_min = y_max = y;
        first = false;
      }
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (x_max == x_min) x_max = x_min + 1;
  if (y_max == y_min) y_max = y_min + 1;
  const auto px = [&](double x) {
    return kLeft + (x - x_min) / (x_max - x_min) * (kRight - kLeft);
  };
  const auto py = [&](double y) {
    return kBottom - (y - y_min) / (y_max - y_min) * (kBottom - kTop);
  };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight
      << "\" y2=\"" << kBottom << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kBottom << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = x_min + (x_max - x_min) * i / 4.0;
    const double fy = y_min + (y_max - y_min) * i / 4.0;
    out << "<text x=\"" << px(fx) << "\" y=\"" << kBottom + 20
        << "\" font-size=\"12\" text-anchor=\"middle\">" << fx << "</text>\n";
    out << "<text x=\"" << kLeft - 8 << "\" y=\"" << py(fy) + 4
        << "\" font-size=\"12\" text-anchor=\"end\">" << fy << "</text>\n";
    out << "<line x1=\"" << kLeft << "\" y1=\"" << py(fy) << "\" x2=\"" << kRight
        << "\" y2=\"" << py(fy) << "\" stroke=\"#dddddd\"/>\n";
  }
  out << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kBottom + 45
      << "\" font-size=\"14\" text-anchor=\"middle\">" << x_label << "</text>\n";
  out << "<text x=\"18\" y=\"" << (kTop + kBottom) / 2
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << (kTop + kBottom) / 2 << ")\">" << y_label << "</text>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series[s].points) {
      out << px(x) << ',' << py(y) << ' ';
    }
    out << "\"/>\n";
    const double ly = kTop + 18.0 * static_cast<double>(s);
    out << "<line x1=\"" << kRight - 170 << "\" y1=\"" << ly << "\" x2=\""
        << kRight - 150 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << kRight - 144 << "\" y=\"" << ly + 4
        << "\" font-size=\"12\">" << series[s].name << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string profile_svg(const PerfProfile& profile) {
  std::vector<ProfileRow> rows = profile.rows;
  std::sort(rows.begin(), rows.end(),
            [](const ProfileRow& a, const ProfileRow& b) { return a.tau < b.tau; });
  std::vector<Series> series(profile.algorithms.size());
  for (std::size_t a = 0; a < profile.algorithms.size(); ++a) {
    series[a].name = profile.algorithms[a];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r > 0) {
        series[a].points.emplace_back(rows[r].tau, rows[r - 1].fractions[a]);
      }
      series[a].points.emplace_back(rows[r].tau, rows[r].fractions[a]);
    }
  }
  return line_chart_svg("tau", "fraction of instances", series);
}

std::string series_svg(std::span<const BenchRecord> records, const std::string& name) {
  Series s;
  s.name = name;
  for (const BenchRecord& r : records) {
    s.points.emplace_back(static_cast<double>(r.op_index),
                          static_cast<double>(r.size_after));
  }
  return line_chart_svg("operation", "matching size", {s});
}

}  // namespace dynmatch
