#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dgt/initialization.hpp"
#include "dgt/snapshot_graph.hpp"

namespace dgt {

struct EdgeListOptions {
  /// When set, the last column is a timestamp and records are bucketed into
  /// consecutive windows of this many seconds, counted from the earliest
  /// timestamp. Otherwise the third column is the snapshot ordinal.
  std::optional<double> window_seconds;
};

/// Parses `source target snapshot` lines. Blank lines and lines starting
/// with '#' are skipped. Throws FormatError with the line number on bad input.
std::vector<EdgeRecord> read_edge_list(std::istream& in, const EdgeListOptions& options = {});
std::vector<EdgeRecord> read_edge_list_file(const std::string& path,
                                            const EdgeListOptions& options = {});

/// Writes every snapshot as `source target snapshot` lines using the
/// original labels and ordinals.
void write_edge_list(std::ostream& out, const SnapshotSequence& seq);

/// Parses `node snapshot` lines, same comment rules as the edge list.
std::vector<NodeRecord> read_node_list(std::istream& in);
std::vector<NodeRecord> read_node_list_file(const std::string& path);

/// Parses a `snapshot,node_label,community_label` CSV (header required).
/// Rows naming nodes or snapshots the sequence does not know are ignored.
GroundTruth read_ground_truth(std::istream& in, const SnapshotSequence& seq);
GroundTruth read_ground_truth_file(const std::string& path, const SnapshotSequence& seq);
void write_ground_truth(std::ostream& out, const GroundTruth& truth, const SnapshotSequence& seq);

/// `node_label,community_id` rows in NodeId order.
void write_partition(std::ostream& out, const Partition& p, const NodeRegistry& registry);
Partition read_partition(std::istream& in, const NodeRegistry& registry);

/// `t,e_plus,e_minus,n_changed`, one row per consecutive pair; t is the
/// ordinal of the later snapshot.
void write_churn_report(std::ostream& out, const SnapshotSequence& seq);

/// Opens `path` for writing or throws ConfigError.
std::ofstream open_output(const std::string& path);

}  // namespace dgt
