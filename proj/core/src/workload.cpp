#include "dynmatch/workload.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "dynmatch/errors.hpp"
#include "dynmatch/rng.hpp"

namespace dynmatch {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line_no) {
  T value{};
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("expected a number, got '" + std::string(token) + "'", line_no);
  }
  return value;
}

std::uint64_t canonical_key(VertexId u, VertexId v) {
  const auto [a, b] = std::minmax(u, v);
  return (std::uint64_t{a} << 32) | b;
}

}  // namespace

MetisParseResult parse_metis(std::string_view text) {
  const auto lines = split_lines(text);
  MetisParseResult result;
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  std::size_t n = 0, m = 0;
  bool have_header = false;
  std::vector<std::set<VertexId>> adj;

  std::size_t vertex = 0;  // 0-based id of the next adjacency line
  for (std::size_t i = 0; i < lines.size(); ++i) {
    line_no = i + 1;
    const std::string_view line = lines[i];
    if (!line.empty() && line[0] == '%') continue;  // comment
    if (!have_header) {
      const auto tokens = tokenize(line);
      if (tokens.empty()) continue;
      if (tokens.size() < 2 || tokens.size() > 3) {
        throw ParseError("header must be 'n m [fmt]'", line_no);
      }
      n = parse_number<std::size_t>(tokens[0], line_no);
      m = parse_number<std::size_t>(tokens[1], line_no);
      if (tokens.size() == 3) {
        const auto fmt = parse_number<std::size_t>(tokens[2], line_no);
        if (fmt != 0) {
          throw ParseError("only unweighted graphs (fmt 0) are supported", line_no);
        }
      }
      have_header = true;
      header_line = line_no;
      adj.resize(n);
      continue;
    }
    if (vertex >= n) {
      if (!tokenize(line).empty()) {
        throw ParseError("more adjacency lines than vertices", line_no);
      }
      continue;
    }
    for (const auto token : tokenize(line)) {
      const auto id = parse_number<std::size_t>(token, line_no);
      if (id < 1 || id > n) {
        throw ParseError("neighbor id " + std::to_string(id) + " out of range [1, " +
                         std::to_string(n) + "]", line_no);
      }
      const VertexId w = static_cast<VertexId>(id - 1);
      if (w == vertex) {
        ++result.dropped_self_loops;
        continue;
      }
      if (!adj[vertex].insert(w).second) ++result.dropped_parallel;
    }
    ++vertex;
  }
  if (!have_header) throw ParseError("missing header", lines.size());
  if (vertex < n) {
    throw ParseError("expected " + std::to_string(n) + " adjacency lines, got " +
                     std::to_string(vertex), line_no);
  }

  result.graph.n = n;
  std::size_t listed_pairs = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (const VertexId w : adj[u]) {
      if (!adj[w].contains(u)) {
        throw ParseError("asymmetric adjacency: " + std::to_string(u + 1) + " lists " +
                         std::to_string(w + 1) + " but not vice versa", header_line);
      }
      ++listed_pairs;
      if (u < w) result.graph.edges.emplace_back(u, w);
    }
  }
  if (result.dropped_self_loops == 0 && result.dropped_parallel == 0 &&
      listed_pairs != 2 * m) {
    throw ParseError("header claims " + std::to_string(m) + " edges but the listing has " +
                     std::to_string(listed_pairs / 2), header_line);
  }
  return result;
}

StreamParseResult parse_edge_stream(std::string_view text) {
  struct Event {
    std::int64_t timestamp;
    UpdateKind kind;
    std::uint64_t u, v;
  };
  std::vector<Event> events;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (!line.empty() && (line[0] == '%' || line[0] == '#')) continue;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() < 2 || tokens.size() > 4) {
      throw ParseError("expected 'u v [sign [timestamp]]'", i + 1);
    }
    Event e;
    e.u = parse_number<std::uint64_t>(tokens[0], i + 1);
    e.v = parse_number<std::uint64_t>(tokens[1], i + 1);
    double sign = 1.0;
    if (tokens.size() >= 3) sign = parse_number<double>(tokens[2], i + 1);
    e.kind = sign < 0 ? UpdateKind::kDelete : UpdateKind::kInsert;
    e.timestamp = tokens.size() == 4 ? parse_number<std::int64_t>(tokens[3], i + 1) : 0;
    events.push_back(e);
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });

  StreamParseResult result;
  std::unordered_map<std::uint64_t, VertexId> remap;
  auto dense = [&](std::uint64_t id) {
    auto it = remap.find(id);
    if (it != remap.end()) return it->second;
    const VertexId d = static_cast<VertexId>(result.original_ids.size());
    remap.emplace(id, d);
    result.original_ids.push_back(id);
    return d;
  };

  std::unordered_set<std::uint64_t> present;
  for (const Event& e : events) {
    if (e.u == e.v) {
      ++result.dropped_self_loops;
      continue;
    }
    const VertexId u = dense(e.u);
    const VertexId v = dense(e.v);
    const std::uint64_t key = canonical_key(u, v);
    if (e.kind == UpdateKind::kInsert) {
      if (!present.insert(key).second) {
        ++result.dropped_duplicate_inserts;
        continue;
      }
    } else {
      if (present.erase(key) == 0) {
        ++result.dropped_phantom_deletes;
        continue;
      }
    }
    result.sequence.ops.push_back({e.kind, u, v});
  }
  result.sequence.n = result.original_ids.size();
  return result;
}

ValidationReport validate_sequence(const UpdateSequence& seq) {
  ValidationReport report;
  std::unordered_set<std::uint64_t> present;
  for (const UpdateOp& op : seq.ops) {
    if (op.u == op.v || op.u >= seq.n || op.v >= seq.n) {
      ++report.self_loops;
      continue;
    }
    const std::uint64_t key = canonical_key(op.u, op.v);
    if (op.kind == UpdateKind::kInsert) {
      if (!present.insert(key).second) ++report.duplicate_inserts;
    } else {
      if (present.erase(key) == 0) ++report.phantom_deletes;
    }
  }
  return report;
}

std::pair<UpdateSequence, ValidationReport> clean_sequence(const UpdateSequence& seq) {
  UpdateSequence out;
  out.n = seq.n;
  ValidationReport report;
  std::unordered_set<std::uint64_t> present;
  for (const UpdateOp& op : seq.ops) {
    if (op.u == op.v || op.u >= seq.n || op.v >= seq.n) {
      ++report.self_loops;
      continue;
    }
    const std::uint64_t key = canonical_key(op.u, op.v);
    if (op.kind == UpdateKind::kInsert) {
      if (!present.insert(key).second) {
        ++report.duplicate_inserts;
        continue;
      }
    } else {
      if (present.erase(key) == 0) {
        ++report.phantom_deletes;
        continue;
      }
    }
    out.ops.push_back(op);
  }
  return {std::move(out), report};
}

UpdateSequence random_insertion_sequence(const StaticGraph& g, std::uint64_t seed) {
  UpdateSequence seq;
  seq.n = g.n;
  seq.ops.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) {
    seq.ops.push_back({UpdateKind::kInsert, u, v});
  }
  Rng rng(seed);
  for (std::size_t i = seq.ops.size(); i > 1; --i) {
    const std::size_t j = rng.next_below(i);
    std::swap(seq.ops[i - 1], seq.ops[j]);
  }
  return seq;
}

UpdateSequence file_order_sequence(const StaticGraph& g) {
  UpdateSequence seq;
  seq.n = g.n;
  for (const auto& [u, v] : g.edges) {
    seq.ops.push_back({UpdateKind::kInsert, u, v});
  }
  return seq;
}

UpdateSequence undo_suffix(const UpdateSequence& seq, double percent) {
  if (percent < 0 || percent > 100) {
    throw InputError("undo percentage must lie in [0, 100]");
  }
  const std::size_t count = static_cast<std::size_t>(
      std::floor(static_cast<long double>(percent) * seq.ops.size() / 100.0L));
  UpdateSequence out = seq;
  for (std::size_t i = 0; i < count; ++i) {
    UpdateOp op = seq.ops[seq.ops.size() - 1 - i];
    op.kind = op.kind == UpdateKind::kInsert ? UpdateKind::kDelete : UpdateKind::kInsert;
    out.ops.push_back(op);
  }
  return out;
}

std::string write_sequence(const UpdateSequence& seq) {
  std::ostringstream out;
  out << "n " << seq.n << " ops " << seq.ops.size() << "\n";
  for (const UpdateOp& op : seq.ops) {
    out << (op.kind == UpdateKind::kInsert ? 'I' : 'D') << ' ' << op.u << ' ' << op.v
        << "\n";
  }
  return out.str();
}

UpdateSequence parse_sequence(std::string_view text) {
  const auto lines = split_lines(text);
  UpdateSequence seq;
  bool have_header = false;
  std::size_t declared_ops = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto tokens = tokenize(lines[i]);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 4 || tokens[0] != "n" || tokens[2] != "ops") {
        throw ParseError("header must be 'n <n> ops <k>'", i + 1);
      }
      seq.n = parse_number<std::size_t>(tokens[1], i + 1);
      declared_ops = parse_number<std::size_t>(tokens[3], i + 1);
      have_header = true;
      continue;
    }
    if (tokens.size() != 3 || (tokens[0] != "I" && tokens[0] != "D")) {
      throw ParseError("operation line must be 'I u v' or 'D u v'", i + 1);
    }
    UpdateOp op;
    op.kind = tokens[0] == "I" ? UpdateKind::kInsert : UpdateKind::kDelete;
    op.u = parse_number<VertexId>(tokens[1], i + 1);
    op.v = parse_number<VertexId>(tokens[2], i + 1);
    if (op.u == op.v || op.u >= seq.n || op.v >= seq.n) {
      throw ParseError("invalid endpoints", i + 1);
    }
    seq.ops.push_back(op);
  }
  if (!have_header) throw ParseError("missing header", 1);
  if (seq.ops.size() != declared_ops) {
    throw ParseError("header claims " + std::to_string(declared_ops) + " ops but " +
                     std::to_string(seq.ops.size()) + " were listed", lines.size());
  }
  return seq;
}

DynamicGraph replay(const UpdateSequence& seq) {
  DynamicGraph g(seq.n);
  for (const UpdateOp& op : seq.ops) {
    const bool ok = op.kind == UpdateKind::kInsert ? g.insert_edge(op.u, op.v)
                                                   : g.delete_edge(op.u, op.v);
    if (!ok) {
      throw InputError("sequence is not replay-valid (duplicate insert or phantom delete)");
    }
  }
  return g;
}

}  // namespace dynmatch
