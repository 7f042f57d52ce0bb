#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dgt/common.hpp"
#include "dgt/snapshot_graph.hpp"

namespace dgt {

/// Normalised mutual information 2 I(X;Y) / (H(X) + H(Y)).
///
/// Both partitions must cover the same node set. If both entropies are 0
/// the partitions are identical and the result is 1; if only one is 0 the
/// result is 0.
double nmi(const Partition& x, const Partition& y);

/// (1/m) sum_ij [A_ij - d_i^in d_j^out / m] delta(c_i, c_j).
double modularity_directed(const SnapshotGraph& g, const Partition& p);

/// Newman modularity for an undirected graph stored as a symmetric digraph
/// (each undirected edge present in both directions). Throws
/// PreconditionError if the graph is not symmetric.
double modularity_undirected(const SnapshotGraph& g, const Partition& p);

/// sum_t |predicted_t - actual_t|.
std::uint64_t count_error(std::span<const std::size_t> predicted,
                          std::span<const std::size_t> actual);

/// Number of distinct labels.
std::size_t community_count(const Partition& p);

/// Restricts `p` to the keys of `domain`.
Partition restrict_to(const Partition& p, const Partition& domain);

/// Extends `truth` to every node of `g`: unlabelled nodes share one extra
/// label, one larger than any label already used.
Partition with_unlabeled_community(const Partition& truth, const SnapshotGraph& g);

}  // namespace dgt
