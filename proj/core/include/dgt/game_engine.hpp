#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "dgt/common.hpp"
#include "dgt/community_structure.hpp"
#include "dgt/gain_functions.hpp"
#include "dgt/snapshot_graph.hpp"

namespace dgt {

struct GameConfig {
  GainKind gain = GainKind::similarity;
  /// Each pass gives every agent one game, so the default caps a snapshot
  /// at 8n individual games.
  std::uint32_t max_passes = 8;
  /// Stop once fewer than this fraction of agents changed strategy in a pass.
  double change_fraction_threshold = 0.05;
  std::uint64_t rng_seed = 0;
  bool allow_switch = true;

  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

struct ScoredAction {
  Action action;
  double delta = 0.0;
};

/// Best response of `agent` restricted to its local strategy space.
///
/// Join / Switch targets are communities hosting an in- or out-neighbour of
/// the agent; the best target and the worst held community are chosen
/// independently and combined into the Switch candidate. Returns NoOp unless
/// some candidate improves utility strictly. Ties among improving moves
/// prefer Switch, then Join, then Leave; ties between communities prefer the
/// lowest id.
ScoredAction best_response(const GainContext& ctx, NodeId agent,
                           const CommunityStructure& structure, const GameConfig& config);

struct ActionCounts {
  std::size_t noop = 0;
  std::size_t join = 0;
  std::size_t leave = 0;
  std::size_t switch_ = 0;
};

struct PassTelemetry {
  std::size_t pass = 0;
  std::size_t changed_agents = 0;
  double total_utility = 0.0;
  double potential = 0.0;
};

struct SnapshotResult {
  /// Final disjoint assignment over the snapshot's nodes.
  Partition partition;
  /// Agents that held no label at the end and got a fallback singleton.
  std::vector<NodeId> unassigned;
  std::size_t passes_used = 0;
  std::size_t games_played = 0;
  ActionCounts actions;
  /// Summed agent utility after each pass.
  std::vector<double> utility_trace;
  std::vector<PassTelemetry> telemetry;
  /// True when the last pass changed nobody.
  bool reached_fixed_point = false;

  /// Communities formed by the game: partition labels excluding the
  /// fallback singletons of unassigned agents.
  std::size_t formed_communities() const;
};

/// Called for every applied move before it mutates the structure.
using MoveObserver =
    std::function<void(NodeId agent, const ScoredAction& move, const CommunityStructure& before)>;

/// Plays the community formation game on one snapshot.
///
/// Every pass visits all agents once in a fresh random order and applies
/// each best response immediately. The run stops after max_passes, after a
/// pass with no changes, or once the fraction of agents that changed in a
/// pass drops below the threshold. Throws InvariantError when `initial`
/// fails the audit or references nodes outside the snapshot.
std::pair<CommunityStructure, SnapshotResult> run_snapshot(const SnapshotGraph& graph,
                                                           CommunityStructure initial,
                                                           const GameConfig& config,
                                                           const MoveObserver& observer = {});

/// Collapses each agent's labels to the held community with the largest
/// gain contribution (lowest id on ties). Agents without labels get fresh
/// singleton ids drawn from `structure`.
Partition hard_assignment(const GainContext& ctx, CommunityStructure& structure, GainKind kind);

/// True iff no agent of the snapshot has an improving local move.
bool is_local_equilibrium(const GainContext& ctx, const CommunityStructure& structure,
                          const GameConfig& config);

/// Sum of agent utilities over the snapshot's nodes.
double total_utility(const GainContext& ctx, const CommunityStructure& structure, GainKind kind);

/// rho_l * sum_i l_i(S) - rho_g * sum_i g_i(S).
double potential(const GainContext& ctx, const CommunityStructure& structure, GainKind kind,
                 double rho_g = 1.0, double rho_l = 1.0);

}  // namespace dgt
