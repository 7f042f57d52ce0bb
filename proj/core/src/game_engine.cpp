#include "dgt/game_engine.hpp"

#include <set>
#include <string>

#include "dgt/rng.hpp"

namespace dgt {

void GameConfig::validate() const {
  if (max_passes < 1) throw ConfigError("max_passes must be at least 1");
  if (!(change_fraction_threshold >= 0.0 && change_fraction_threshold <= 1.0)) {
    throw ConfigError("change fraction threshold must lie in [0, 1]");
  }
}

std::size_t SnapshotResult::formed_communities() const {
  std::set<Label> labels;
  for (const auto& [v, label] : partition) labels.insert(label);
  return labels.size() - unassigned.size();
}

ScoredAction best_response(const GainContext& ctx, NodeId agent,
                           const CommunityStructure& structure, const GameConfig& config) {
  const auto& g = ctx.graph();
  const LabelSet& held = structure.labels(agent);

  LabelSet targets;
  auto collect = [&](std::span<const NodeId> neighbours) {
    for (NodeId j : neighbours) {
      for (CommunityId k : structure.labels(j)) {
        if (!held.contains(k)) targets.insert(k);
      }
    }
  };
  collect(g.out_neighbors(agent));
  collect(g.in_neighbors(agent));

  bool have_target = false;
  CommunityId best_target = 0;
  double best_target_gain = 0.0;
  for (CommunityId k : targets) {
    const double gain = community_gain(ctx, agent, k, structure, config.gain);
    if (!have_target || gain > best_target_gain) {
      have_target = true;
      best_target = k;
      best_target_gain = gain;
    }
  }

  bool have_source = false;
  CommunityId worst_held = 0;
  double worst_held_gain = 0.0;
  for (CommunityId k : held) {
    const double gain = community_gain(ctx, agent, k, structure, config.gain);
    if (!have_source || gain < worst_held_gain) {
      have_source = true;
      worst_held = k;
      worst_held_gain = gain;
    }
  }

  // Same arithmetic as utility_delta so the returned delta is reproducible.
  const double unit_loss = 1.0 / ctx.m();
  ScoredAction best;
  auto consider = [&](const Action& a, double delta) {
    if (delta > 0.0 && delta > best.delta) best = {a, delta};
  };
  // Evaluated in reverse preference order: a later candidate only wins on a
  // strictly larger delta, so earlier ones win ties.
  if (have_target && have_source && config.allow_switch) {
    consider(Action::switch_to(worst_held, best_target), best_target_gain - worst_held_gain);
  }
  if (have_target) consider(Action::join(best_target), best_target_gain - unit_loss);
  if (have_source) consider(Action::leave(worst_held), unit_loss - worst_held_gain);
  return best;
}

double total_utility(const GainContext& ctx, const CommunityStructure& structure, GainKind kind) {
  double total = 0.0;
  for (NodeId v : ctx.graph().nodes()) {
    for (CommunityId k : structure.labels(v)) {
      total += community_gain(ctx, v, k, structure, kind);
    }
    total -= loss(ctx, structure.labels(v));
  }
  return total;
}

double potential(const GainContext& ctx, const CommunityStructure& structure, GainKind kind,
                 double rho_g, double rho_l) {
  if (!(rho_g > 0.0) || !(rho_l > 0.0)) {
    throw PreconditionError("potential requires positive locality factors");
  }
  double gains = 0.0;
  double losses = 0.0;
  for (NodeId v : ctx.graph().nodes()) {
    const LabelSet& labels = structure.labels(v);
    for (CommunityId k : labels) gains += community_gain(ctx, v, k, structure, kind);
    losses += loss(ctx, labels);
  }
  return rho_l * losses - rho_g * gains;
}

Partition hard_assignment(const GainContext& ctx, CommunityStructure& structure, GainKind kind) {
  Partition partition;
  for (NodeId v : ctx.graph().nodes()) {
    const LabelSet& labels = structure.labels(v);
    if (labels.empty()) {
      partition.emplace(v, structure.allocate_id());
      continue;
    }
    CommunityId chosen = *labels.begin();
    double chosen_gain = community_gain(ctx, v, chosen, structure, kind);
    for (CommunityId k : labels) {
      const double gain = community_gain(ctx, v, k, structure, kind);
      if (gain > chosen_gain) {
        chosen = k;
        chosen_gain = gain;
      }
    }
    partition.emplace(v, chosen);
  }
  return partition;
}

bool is_local_equilibrium(const GainContext& ctx, const CommunityStructure& structure,
                          const GameConfig& config) {
  for (NodeId v : ctx.graph().nodes()) {
    if (best_response(ctx, v, structure, config).action.kind != Action::Kind::noop) return false;
  }
  return true;
}

namespace {

void check_initial(const SnapshotGraph& graph, const CommunityStructure& initial) {
  if (initial.universe_size() != graph.universe_size()) {
    throw InvariantError("initial structure covers " + std::to_string(initial.universe_size()) +
                         " nodes but the snapshot universe has " +
                         std::to_string(graph.universe_size()));
  }
  auto report = audit(initial);
  for (const auto& [k, members] : initial.communities()) {
    for (NodeId v : members) {
      if (!graph.contains(v)) {
        report.push_back("community " + std::to_string(k) + " contains agent " +
                         std::to_string(v) + " absent from snapshot " +
                         std::to_string(graph.index()));
      }
    }
  }
  if (!report.empty()) {
    std::string message = "initial structure failed audit:";
    for (const auto& line : report) message += "\n  " + line;
    throw InvariantError(message);
  }
}

}  // namespace

std::pair<CommunityStructure, SnapshotResult> run_snapshot(const SnapshotGraph& graph,
                                                           CommunityStructure initial,
                                                           const GameConfig& config,
                                                           const MoveObserver& observer) {
  config.validate();
  check_initial(graph, initial);

  const GainContext ctx(graph);
  CommunityStructure structure = std::move(initial);
  SnapshotResult result;
  Rng rng(config.rng_seed);

  std::vector<NodeId> order(graph.nodes().begin(), graph.nodes().end());
  const double n = static_cast<double>(order.size());

  for (std::uint32_t pass = 0; pass < config.max_passes; ++pass) {
    rng.shuffle(std::span<NodeId>(order));
    std::size_t changed = 0;
    for (NodeId agent : order) {
      ++result.games_played;
      const ScoredAction move = best_response(ctx, agent, structure, config);
      switch (move.action.kind) {
        case Action::Kind::noop: ++result.actions.noop; continue;
        case Action::Kind::join: ++result.actions.join; break;
        case Action::Kind::leave: ++result.actions.leave; break;
        case Action::Kind::switch_: ++result.actions.switch_; break;
      }
      if (!(move.delta > 0.0)) {
        throw InvariantError("agent " + std::to_string(agent) + " chose " + to_string(move.action) +
                             " with non-positive delta");
      }
      if (observer) observer(agent, move, structure);
      structure.apply(agent, move.action);
      ++changed;
    }

    ++result.passes_used;
    const double total = total_utility(ctx, structure, config.gain);
    result.utility_trace.push_back(total);
    result.telemetry.push_back({pass, changed, total, potential(ctx, structure, config.gain)});

    if (changed == 0) {
      result.reached_fixed_point = true;
      break;
    }
    if (static_cast<double>(changed) < config.change_fraction_threshold * n) break;
  }

  for (NodeId v : graph.nodes()) {
    if (structure.labels(v).empty()) result.unassigned.push_back(v);
  }
  result.partition = hard_assignment(ctx, structure, config.gain);
  return {std::move(structure), std::move(result)};
}

}  // namespace dgt
