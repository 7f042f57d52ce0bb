#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <unordered_map>

#include "dgt/common.hpp"
#include "dgt/community_structure.hpp"
#include "dgt/snapshot_graph.hpp"

namespace dgt {

enum class GainKind { similarity, modularity };

GainKind parse_gain_kind(std::string_view name);
const char* to_string(GainKind kind);

/// Read-mostly view of one snapshot used by every utility evaluation.
///
/// Common-neighbour counts are memoised per unordered pair on first use, so
/// a context must not be shared between threads. Each game run owns one.
class GainContext {
 public:
  /// Throws Error("empty graph") when the snapshot has no edges.
  explicit GainContext(const SnapshotGraph& g);

  const SnapshotGraph& graph() const noexcept { return *graph_; }
  double m() const noexcept { return m_; }
  double n() const noexcept { return n_; }
  double in_degree(NodeId v) const { return static_cast<double>(graph_->in_degree(v)); }
  double out_degree(NodeId v) const { return static_cast<double>(graph_->out_degree(v)); }

  /// Cached w^t_{ij}.
  std::size_t common_neighbors(NodeId i, NodeId j) const;

  std::size_t cache_size() const noexcept { return cache_.size(); }

 private:
  const SnapshotGraph* graph_;
  double m_;
  double n_;
  mutable std::unordered_map<std::uint64_t, std::uint32_t> cache_;
};

struct UtilityBreakdown {
  double gain = 0.0;
  double loss = 0.0;
  double utility = 0.0;
};

/// Neighbourhood similarity c^t_{ij}:
///
///   A_ij = 1, w_ij >= 1 :  w_ij (1 - d_i^in d_j^out / 2m)
///   A_ij = 0, w_ij >= 1 :  w_ij / n
///   A_ij = 1, w_ij = 0  :  d_i^in d_j^out / 4m
///   A_ij = 0, w_ij = 0  : -d_i^in d_j^out / 4m
double similarity(const GainContext& ctx, NodeId i, NodeId j);

/// (1/m) sum over k in labels, j in C_k \ {agent} of c_{agent,j}.
double gain_similarity(const GainContext& ctx, NodeId agent, const LabelSet& labels,
                       const CommunityStructure& structure);

/// Personalised modularity of `agent` when holding `labels`:
///
///   (1/2m) sum_{k in labels} sum_{j in C_k, j != i} sum_{k' in s_j}
///          ( A_ij delta(i,j) - d_i^in d_j^out / 2m * [k == k'] )
///
/// delta(i,j) is 1 when `labels` and s_j share a community.
double gain_modularity(const GainContext& ctx, NodeId agent, const LabelSet& labels,
                       const CommunityStructure& structure);

/// |labels| / m.
double loss(const GainContext& ctx, std::size_t label_count);
inline double loss(const GainContext& ctx, const LabelSet& labels) {
  return loss(ctx, labels.size());
}

/// Full evaluation of gain - loss for a hypothetical label set.
UtilityBreakdown utility(const GainContext& ctx, NodeId agent, const LabelSet& labels,
                         const CommunityStructure& structure, GainKind kind);

/// Gain contributed by the single label k to `agent`. Both gain functions
/// are sums of independent per-label terms, so utility changes of the
/// three actions reduce to these contributions.
double community_gain(const GainContext& ctx, NodeId agent, CommunityId k,
                      const CommunityStructure& structure, GainKind kind);

/// utility(after) - utility(before) for applying `action` to `agent`,
/// evaluated from per-label contributions. Join may name a community that
/// does not exist yet (a fresh singleton).
double utility_delta(const GainContext& ctx, NodeId agent, const Action& action,
                     const CommunityStructure& structure, GainKind kind);

}  // namespace dgt
