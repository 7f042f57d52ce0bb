#include "dgt/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace dgt {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string field;
  while (in >> field) out.push_back(field);
  return out;
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::int64_t parse_int(const std::string& text, std::size_t line_no, const char* what) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw FormatError(fmt::format("line {}: {} '{}' is not an integer", line_no, what, text));
  }
  return value;
}

double parse_real(const std::string& text, std::size_t line_no, const char* what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used == text.size() && std::isfinite(value)) return value;
  } catch (const std::exception&) {
  }
  throw FormatError(fmt::format("line {}: {} '{}' is not a number", line_no, what, text));
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "' for reading");
  return in;
}

}  // namespace

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  return out;
}

std::vector<EdgeRecord> read_edge_list(std::istream& in, const EdgeListOptions& options) {
  if (options.window_seconds && !(*options.window_seconds > 0.0)) {
    throw ConfigError("snapshot window must be positive");
  }
  std::vector<EdgeRecord> records;
  std::vector<double> stamps;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto fields = split_ws(line);
    if (fields.size() < 3) {
      throw FormatError(fmt::format("line {}: expected 'source target {}'", line_no,
                                    options.window_seconds ? "timestamp" : "snapshot"));
    }
    EdgeRecord r{fields[0], fields[1], 0};
    if (options.window_seconds) {
      stamps.push_back(parse_real(fields.back(), line_no, "timestamp"));
    } else {
      if (fields.size() > 3) {
        throw FormatError(fmt::format("line {}: too many columns for 'source target snapshot'",
                                      line_no));
      }
      r.snapshot = parse_int(fields[2], line_no, "snapshot");
      if (r.snapshot < 0) {
        throw FormatError(fmt::format("line {}: negative snapshot ordinal {}", line_no, r.snapshot));
      }
    }
    records.push_back(std::move(r));
  }
  if (options.window_seconds && !stamps.empty()) {
    const double origin = *std::min_element(stamps.begin(), stamps.end());
    for (std::size_t i = 0; i < records.size(); ++i) {
      records[i].snapshot =
          static_cast<std::int64_t>(std::floor((stamps[i] - origin) / *options.window_seconds));
    }
  }
  return records;
}

std::vector<EdgeRecord> read_edge_list_file(const std::string& path,
                                            const EdgeListOptions& options) {
  auto in = open_input(path);
  return read_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const SnapshotSequence& seq) {
  for (const auto& g : seq.snapshots) {
    const auto ordinal = static_cast<std::int64_t>(g.index()) + seq.first_ordinal;
    for (const auto& [i, j] : g.edges()) {
      fmt::print(out, "{} {} {}\n", seq.registry.label(i), seq.registry.label(j), ordinal);
    }
  }
}

std::vector<NodeRecord> read_node_list(std::istream& in) {
  std::vector<NodeRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto fields = split_ws(line);
    if (fields.size() != 2) {
      throw FormatError(fmt::format("line {}: expected 'node snapshot'", line_no));
    }
    records.push_back({fields[0], parse_int(fields[1], line_no, "snapshot")});
  }
  return records;
}

std::vector<NodeRecord> read_node_list_file(const std::string& path) {
  auto in = open_input(path);
  return read_node_list(in);
}

GroundTruth read_ground_truth(std::istream& in, const SnapshotSequence& seq) {
  GroundTruth truth;
  truth.resize(seq.size());
  std::unordered_map<std::string, Label> label_ids;

  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto fields = split_csv(trim(line));
    if (fields.size() != 3) {
      throw FormatError(
          fmt::format("line {}: expected 'snapshot,node_label,community_label'", line_no));
    }
    if (!header_seen) {
      header_seen = true;
      if (fields[0] == "snapshot") continue;
      throw FormatError("ground truth needs the header 'snapshot,node_label,community_label'");
    }
    const auto t = parse_int(fields[0], line_no, "snapshot") - seq.first_ordinal;
    if (t < 0 || static_cast<std::size_t>(t) >= seq.size()) continue;
    const auto node = seq.registry.find(fields[1]);
    if (!node) continue;

    auto [it, fresh] = label_ids.try_emplace(fields[2], truth.label_names().size());
    if (fresh) truth.label_names().push_back(fields[2]);
    auto& partition = truth.at(static_cast<std::size_t>(t));
    auto [pos, inserted] = partition.emplace(*node, it->second);
    if (!inserted && pos->second != it->second) {
      throw FormatError(fmt::format("line {}: node '{}' has two communities in snapshot {}",
                                    line_no, fields[1], fields[0]));
    }
  }
  return truth;
}

GroundTruth read_ground_truth_file(const std::string& path, const SnapshotSequence& seq) {
  auto in = open_input(path);
  return read_ground_truth(in, seq);
}

void write_ground_truth(std::ostream& out, const GroundTruth& truth, const SnapshotSequence& seq) {
  fmt::print(out, "snapshot,node_label,community_label\n");
  for (std::size_t t = 0; t < truth.size(); ++t) {
    const auto ordinal = static_cast<std::int64_t>(t) + seq.first_ordinal;
    for (const auto& [v, label] : truth.at(t)) {
      const std::string name =
          label < truth.label_names().size() ? truth.label_names()[label] : std::to_string(label);
      fmt::print(out, "{},{},{}\n", ordinal, seq.registry.label(v), name);
    }
  }
}

void write_partition(std::ostream& out, const Partition& p, const NodeRegistry& registry) {
  fmt::print(out, "node_label,community_id\n");
  for (const auto& [v, label] : p) fmt::print(out, "{},{}\n", registry.label(v), label);
}

Partition read_partition(std::istream& in, const NodeRegistry& registry) {
  Partition p;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto fields = split_csv(trim(line));
    if (fields.size() != 2) {
      throw FormatError(fmt::format("line {}: expected 'node_label,community_id'", line_no));
    }
    if (!header_seen) {
      header_seen = true;
      if (fields[0] == "node_label") continue;
    }
    const auto node = registry.find(fields[0]);
    if (!node) throw FormatError(fmt::format("line {}: unknown node '{}'", line_no, fields[0]));
    const auto label = parse_int(fields[1], line_no, "community id");
    if (!p.emplace(*node, static_cast<Label>(label)).second) {
      throw FormatError(fmt::format("line {}: node '{}' listed twice", line_no, fields[0]));
    }
  }
  return p;
}

void write_churn_report(std::ostream& out, const SnapshotSequence& seq) {
  fmt::print(out, "t,e_plus,e_minus,n_changed\n");
  for (std::size_t t = 1; t < seq.size(); ++t) {
    const auto c = diff(seq.snapshots[t - 1], seq.snapshots[t]);
    fmt::print(out, "{},{},{},{}\n", static_cast<std::int64_t>(t) + seq.first_ordinal,
               c.edges_added, c.edges_deleted, c.nodes_changed);
  }
}

}  // namespace dgt
