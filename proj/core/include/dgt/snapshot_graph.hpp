#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dgt/common.hpp"

namespace dgt {

/// Bidirectional map between external node labels and dense NodeIds.
/// Ids are handed out in order of first appearance and never reused.
class NodeRegistry {
 public:
  NodeId intern(std::string_view label);
  std::optional<NodeId> find(std::string_view label) const;
  const std::string& label(NodeId id) const { return labels_.at(id); }
  std::size_t size() const noexcept { return labels_.size(); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> ids_;
};

using Edge = std::pair<NodeId, NodeId>;

/// One directed snapshot G^t without self-edges or parallel edges.
///
/// Adjacency is indexed by the sequence-wide NodeId, so vectors are sized
/// to the node universe; only nodes in nodes() belong to this snapshot.
/// Immutable after construction.
class SnapshotGraph {
 public:
  SnapshotGraph() = default;

  /// Builds the graph from raw directed edges. Self-edges are dropped and
  /// counted, duplicates collapse. `declared_nodes` adds nodes that may have
  /// no incident edge (node-list files).
  SnapshotGraph(std::size_t index, std::size_t universe, std::vector<Edge> edges,
                std::span<const NodeId> declared_nodes = {});

  std::size_t index() const noexcept { return index_; }
  std::size_t n() const noexcept { return nodes_.size(); }
  std::size_t m() const noexcept { return m_; }
  std::size_t universe_size() const noexcept { return out_.size(); }

  /// Sorted ids of the nodes in this snapshot.
  std::span<const NodeId> nodes() const noexcept { return nodes_; }
  bool contains(NodeId v) const noexcept { return v < present_.size() && present_[v]; }

  std::span<const NodeId> out_neighbors(NodeId v) const { return out_.at(v); }
  std::span<const NodeId> in_neighbors(NodeId v) const { return in_.at(v); }
  std::size_t out_degree(NodeId v) const { return out_.at(v).size(); }
  std::size_t in_degree(NodeId v) const { return in_.at(v).size(); }

  /// A^t_{ij}.
  bool has_edge(NodeId i, NodeId j) const;

  /// All edges, ordered by (source, target).
  std::vector<Edge> edges() const;

  std::size_t self_edges_dropped() const noexcept { return self_edges_dropped_; }

  friend bool operator==(const SnapshotGraph& a, const SnapshotGraph& b) {
    return a.nodes_ == b.nodes_ && a.out_ == b.out_;
  }

 private:
  std::size_t index_ = 0;
  std::size_t m_ = 0;
  std::size_t self_edges_dropped_ = 0;
  std::vector<NodeId> nodes_;
  std::vector<bool> present_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
};

struct SnapshotSequence {
  std::vector<SnapshotGraph> snapshots;
  NodeRegistry registry;
  std::size_t self_edges_dropped = 0;
  /// Input ordinal of snapshot 0; ordinals are stored shifted by this.
  std::int64_t first_ordinal = 0;

  std::size_t size() const noexcept { return snapshots.size(); }
  std::size_t node_universe() const noexcept { return registry.size(); }
};

/// One `source target snapshot` record of the edge stream.
struct EdgeRecord {
  std::string source;
  std::string target;
  std::int64_t snapshot = 0;
};

/// One `node snapshot` declaration from a node-list file.
struct NodeRecord {
  std::string node;
  std::int64_t snapshot = 0;
};

struct LoadOptions {
  /// Materialize every record as two directed edges.
  bool undirected = false;
  /// Extra per-snapshot nodes, typically isolated ones.
  std::vector<NodeRecord> declared_nodes;
};

/// Builds a sequence from an edge stream. Snapshot ordinals are shifted so
/// the smallest becomes 0; the resulting range must have no gaps and every
/// snapshot must keep at least one edge.
SnapshotSequence load_edge_stream(std::span<const EdgeRecord> records,
                                  const LoadOptions& options = {});

/// w^t_{ij}: nodes receiving an edge from both i and j.
std::size_t common_neighbors(const SnapshotGraph& g, NodeId i, NodeId j);

struct ChangeStats {
  std::size_t edges_added = 0;
  std::size_t edges_deleted = 0;
  std::size_t nodes_changed = 0;

  friend bool operator==(const ChangeStats&, const ChangeStats&) = default;
};

/// E+, E- and the number of nodes touched by either difference set.
ChangeStats diff(const SnapshotGraph& prev, const SnapshotGraph& next);

}  // namespace dgt
