#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "dgt/community_structure.hpp"
#include "dgt/rng.hpp"
#include "dgt/snapshot_graph.hpp"

namespace dgt::test {

/// Snapshot over nodes 0..n-1, all declared present.
inline SnapshotGraph make_graph(std::size_t n, std::vector<Edge> edges, std::size_t index = 0) {
  std::vector<NodeId> all(n);
  std::iota(all.begin(), all.end(), NodeId{0});
  return SnapshotGraph(index, n, std::move(edges), all);
}

/// Edges of a complete bidirected graph on [first, first + size).
inline void add_clique(std::vector<Edge>& edges, NodeId first, NodeId size) {
  for (NodeId i = first; i < first + size; ++i) {
    for (NodeId j = first; j < first + size; ++j) {
      if (i != j) edges.emplace_back(i, j);
    }
  }
}

inline SnapshotGraph two_cliques(NodeId size) {
  std::vector<Edge> edges;
  add_clique(edges, 0, size);
  add_clique(edges, size, size);
  return make_graph(2 * size, std::move(edges));
}

/// Erdos-Renyi digraph with at least one edge.
inline SnapshotGraph random_graph(Rng& rng, std::size_t n, double p) {
  while (true) {
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = 0; j < n; ++j) {
        if (i != j && rng.bernoulli(p)) edges.emplace_back(i, j);
      }
    }
    if (!edges.empty()) return make_graph(n, std::move(edges));
  }
}

inline CommunityStructure singletons(const SnapshotGraph& g) {
  CommunityStructure s(g.universe_size());
  for (NodeId v : g.nodes()) s.add_singleton(v);
  return s;
}

/// Random overlapping structure: each node holds 0..max_labels of
/// `communities` labels.
inline CommunityStructure random_structure(Rng& rng, const SnapshotGraph& g,
                                           std::size_t communities, std::size_t max_labels) {
  CommunityStructure s(g.universe_size(), static_cast<CommunityId>(communities));
  for (NodeId v : g.nodes()) {
    const auto count = rng.below(max_labels + 1);
    for (std::size_t c = 0; c < count; ++c) {
      const auto k = static_cast<CommunityId>(rng.below(communities));
      if (!s.holds(v, k)) s.add_member(v, k);
    }
  }
  return s;
}

}  // namespace dgt::test
