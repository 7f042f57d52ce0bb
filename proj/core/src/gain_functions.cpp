#include "dgt/gain_functions.hpp"

#include <string>

namespace dgt {

GainKind parse_gain_kind(std::string_view name) {
  if (name == "similarity") return GainKind::similarity;
  if (name == "modularity") return GainKind::modularity;
  throw ConfigError("unknown gain function '" + std::string(name) +
                    "' (expected similarity or modularity)");
}

const char* to_string(GainKind kind) {
  return kind == GainKind::similarity ? "similarity" : "modularity";
}

GainContext::GainContext(const SnapshotGraph& g)
    : graph_(&g), m_(static_cast<double>(g.m())), n_(static_cast<double>(g.n())) {
  if (g.m() == 0) throw Error("empty graph: snapshot " + std::to_string(g.index()) + " has m = 0");
}

std::size_t GainContext::common_neighbors(NodeId i, NodeId j) const {
  const auto lo = std::min(i, j);
  const auto hi = std::max(i, j);
  const std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | hi;
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const auto w = dgt::common_neighbors(*graph_, i, j);
  cache_.emplace(key, static_cast<std::uint32_t>(w));
  return w;
}

double similarity(const GainContext& ctx, NodeId i, NodeId j) {
  if (i == j) throw PreconditionError("similarity requires i != j");
  const bool adjacent = ctx.graph().has_edge(i, j);
  const auto w = static_cast<double>(ctx.common_neighbors(i, j));
  const double dd = ctx.in_degree(i) * ctx.out_degree(j);
  const double m = ctx.m();
  if (w >= 1.0) {
    return adjacent ? w * (1.0 - dd / (2.0 * m)) : w / ctx.n();
  }
  return adjacent ? dd / (4.0 * m) : -dd / (4.0 * m);
}

double gain_similarity(const GainContext& ctx, NodeId agent, const LabelSet& labels,
                       const CommunityStructure& structure) {
  double sum = 0.0;
  for (CommunityId k : labels) {
    const auto* members = structure.members(k);
    if (members == nullptr) continue;
    for (NodeId j : *members) {
      if (j != agent) sum += similarity(ctx, agent, j);
    }
  }
  return sum / ctx.m();
}

double gain_modularity(const GainContext& ctx, NodeId agent, const LabelSet& labels,
                       const CommunityStructure& structure) {
  const double m = ctx.m();
  const double din = ctx.in_degree(agent);
  double sum = 0.0;
  for (CommunityId k : labels) {
    const auto* members = structure.members(k);
    if (members == nullptr) continue;
    for (NodeId j : *members) {
      if (j == agent) continue;
      const LabelSet& sj = structure.labels(j);
      bool shared = false;
      for (CommunityId l : labels) {
        if (sj.contains(l)) {
          shared = true;
          break;
        }
      }
      const double a = ctx.graph().has_edge(agent, j) && shared ? 1.0 : 0.0;
      const double null_term = din * ctx.out_degree(j) / (2.0 * m);
      for (CommunityId kp : sj) sum += a - null_term * (k == kp ? 1.0 : 0.0);
    }
  }
  return sum / (2.0 * m);
}

double loss(const GainContext& ctx, std::size_t label_count) {
  return static_cast<double>(label_count) / ctx.m();
}

UtilityBreakdown utility(const GainContext& ctx, NodeId agent, const LabelSet& labels,
                         const CommunityStructure& structure, GainKind kind) {
  UtilityBreakdown u;
  u.gain = kind == GainKind::similarity ? gain_similarity(ctx, agent, labels, structure)
                                        : gain_modularity(ctx, agent, labels, structure);
  u.loss = loss(ctx, labels);
  u.utility = u.gain - u.loss;
  return u;
}

double community_gain(const GainContext& ctx, NodeId agent, CommunityId k,
                      const CommunityStructure& structure, GainKind kind) {
  const auto* members = structure.members(k);
  if (members == nullptr) return 0.0;
  const double m = ctx.m();
  double sum = 0.0;
  if (kind == GainKind::similarity) {
    for (NodeId j : *members) {
      if (j != agent) sum += similarity(ctx, agent, j);
    }
    return sum / m;
  }
  // Every j in C_k holds k, so delta(i,j) = 1 and exactly one k' in s_j
  // equals k: the inner sum collapses to A_ij |s_j| - d_i^in d_j^out / 2m.
  const double din = ctx.in_degree(agent);
  for (NodeId j : *members) {
    if (j == agent) continue;
    const double a = ctx.graph().has_edge(agent, j) ? 1.0 : 0.0;
    sum += a * static_cast<double>(structure.labels(j).size()) -
           din * ctx.out_degree(j) / (2.0 * m);
  }
  return sum / (2.0 * m);
}

double utility_delta(const GainContext& ctx, NodeId agent, const Action& action,
                     const CommunityStructure& structure, GainKind kind) {
  const double unit_loss = 1.0 / ctx.m();
  switch (action.kind) {
    case Action::Kind::noop:
      return 0.0;
    case Action::Kind::join:
      if (structure.holds(agent, action.to)) {
        throw PreconditionError("join of a community already held");
      }
      return community_gain(ctx, agent, action.to, structure, kind) - unit_loss;
    case Action::Kind::leave:
      if (!structure.holds(agent, action.from)) {
        throw PreconditionError("leave of a community not held");
      }
      return unit_loss - community_gain(ctx, agent, action.from, structure, kind);
    case Action::Kind::switch_:
      if (action.from == action.to) throw PreconditionError("switch legs must differ");
      if (!structure.holds(agent, action.from) || structure.holds(agent, action.to)) {
        throw PreconditionError("switch must leave a held community and join a new one");
      }
      return community_gain(ctx, agent, action.to, structure, kind) -
             community_gain(ctx, agent, action.from, structure, kind);
  }
  return 0.0;
}

}  // namespace dgt
