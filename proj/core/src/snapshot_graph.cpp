#include "dgt/snapshot_graph.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <string>

namespace dgt {

NodeId NodeRegistry::intern(std::string_view label) {
  auto key = std::string(label);
  if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  const auto id = static_cast<NodeId>(labels_.size());
  labels_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

std::optional<NodeId> NodeRegistry::find(std::string_view label) const {
  if (auto it = ids_.find(std::string(label)); it != ids_.end()) return it->second;
  return std::nullopt;
}

SnapshotGraph::SnapshotGraph(std::size_t index, std::size_t universe, std::vector<Edge> edges,
                             std::span<const NodeId> declared_nodes)
    : index_(index), present_(universe, false), out_(universe), in_(universe) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  auto mark = [&](NodeId v) {
    if (v >= universe) throw PreconditionError("node id outside the node universe");
    present_[v] = true;
  };

  for (const auto& [i, j] : edges) {
    mark(i);
    mark(j);
    if (i == j) {
      ++self_edges_dropped_;
      continue;
    }
    out_[i].push_back(j);
    in_[j].push_back(i);
    ++m_;
  }
  for (NodeId v : declared_nodes) mark(v);

  // Edges were sorted by (source, target), so out lists are already sorted.
  for (auto& list : in_) std::sort(list.begin(), list.end());
  for (NodeId v = 0; v < universe; ++v) {
    if (present_[v]) nodes_.push_back(v);
  }
}

bool SnapshotGraph::has_edge(NodeId i, NodeId j) const {
  if (i >= out_.size()) return false;
  const auto& list = out_[i];
  return std::binary_search(list.begin(), list.end(), j);
}

std::vector<Edge> SnapshotGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(m_);
  for (NodeId i = 0; i < out_.size(); ++i) {
    for (NodeId j : out_[i]) result.emplace_back(i, j);
  }
  return result;
}

SnapshotSequence load_edge_stream(std::span<const EdgeRecord> records, const LoadOptions& options) {
  if (records.empty()) throw FormatError("no edges");

  std::int64_t lo = records.front().snapshot;
  std::int64_t hi = lo;
  for (const auto& r : records) {
    if (r.snapshot < 0) {
      throw FormatError("negative snapshot ordinal " + std::to_string(r.snapshot));
    }
    lo = std::min(lo, r.snapshot);
    hi = std::max(hi, r.snapshot);
  }
  for (const auto& d : options.declared_nodes) {
    if (d.snapshot < 0) {
      throw FormatError("negative snapshot ordinal " + std::to_string(d.snapshot));
    }
  }

  SnapshotSequence seq;
  seq.first_ordinal = lo;
  const auto count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::vector<Edge>> buckets(count);
  for (const auto& r : records) {
    const NodeId s = seq.registry.intern(r.source);
    const NodeId t = seq.registry.intern(r.target);
    auto& bucket = buckets[static_cast<std::size_t>(r.snapshot - lo)];
    bucket.emplace_back(s, t);
    if (options.undirected) bucket.emplace_back(t, s);
  }

  std::vector<std::vector<NodeId>> declared(count);
  for (const auto& d : options.declared_nodes) {
    if (d.snapshot < lo || d.snapshot > hi) {
      throw FormatError("declared node '" + d.node + "' refers to snapshot " +
                        std::to_string(d.snapshot) + " which has no edges");
    }
    declared[static_cast<std::size_t>(d.snapshot - lo)].push_back(seq.registry.intern(d.node));
  }

  const std::size_t universe = seq.registry.size();
  seq.snapshots.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    SnapshotGraph g(t, universe, std::move(buckets[t]), declared[t]);
    seq.self_edges_dropped += g.self_edges_dropped();
    if (g.m() == 0) {
      throw FormatError("snapshot " + std::to_string(static_cast<std::int64_t>(t) + lo) +
                        " has no edges (empty graph)");
    }
    seq.snapshots.push_back(std::move(g));
  }
  return seq;
}

std::size_t common_neighbors(const SnapshotGraph& g, NodeId i, NodeId j) {
  if (i == j) throw PreconditionError("common_neighbors requires i != j");
  const auto a = g.out_neighbors(i);
  const auto b = g.out_neighbors(j);
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

ChangeStats diff(const SnapshotGraph& prev, const SnapshotGraph& next) {
  const auto before = prev.edges();
  const auto after = next.edges();
  std::vector<Edge> added;
  std::vector<Edge> deleted;
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                      std::back_inserter(added));
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                      std::back_inserter(deleted));

  std::set<NodeId> touched;
  for (const auto& [i, j] : added) touched.insert({i, j});
  for (const auto& [i, j] : deleted) touched.insert({i, j});
  return {added.size(), deleted.size(), touched.size()};
}

}  // namespace dgt
