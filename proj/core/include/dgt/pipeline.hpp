#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "dgt/game_engine.hpp"
#include "dgt/initialization.hpp"
#include "dgt/snapshot_graph.hpp"

namespace dgt {

struct PipelineOptions {
  VariantSpec variant;
  /// rng_seed is ignored here: every (repetition, snapshot) cell gets
  /// derive_seed(seed, rep, t) for the game and splitmix64 of that value
  /// for initialization.
  GameConfig game;
  std::size_t repetitions = 10;
  std::uint64_t seed = 1;
  /// Upper bound on repetitions evaluated concurrently.
  std::size_t jobs = 1;
  /// Score with undirected modularity (input was symmetrised).
  bool undirected = false;
  /// Treat ground-truth-less nodes as one extra community instead of
  /// excluding them from NMI.
  bool unlabeled_as_community = false;

  void validate() const;
};

struct SnapshotMetrics {
  std::size_t t = 0;
  double n_communities_pred = 0.0;
  std::optional<double> n_communities_true;
  std::optional<double> nmi;
  double modularity = 0.0;
};

struct RepetitionRun {
  std::vector<SnapshotResult> results;
  std::vector<SnapshotMetrics> metrics;
};

struct PipelineResult {
  std::vector<RepetitionRun> repetitions;
  /// Per-snapshot means over repetitions.
  std::vector<SnapshotMetrics> mean;
};

/// Scores one game result against a snapshot and optional truth. The
/// predicted count is SnapshotResult::formed_communities(); NMI and
/// modularity use the full partition.
SnapshotMetrics evaluate_snapshot(const SnapshotGraph& g, const SnapshotResult& result,
                                  const Partition* truth, const PipelineOptions& options);

/// Plays every snapshot in order for repetition `rep`.
RepetitionRun run_repetition(const SnapshotSequence& seq, const GroundTruth* truth,
                             const PipelineOptions& options, std::size_t rep);

/// All repetitions, up to options.jobs at a time. Results are stored by
/// repetition index, so output does not depend on scheduling.
PipelineResult run_pipeline(const SnapshotSequence& seq, const GroundTruth* truth,
                            const PipelineOptions& options);

/// Mean NMI over snapshots of one repetition; nullopt without truth.
std::optional<double> mean_nmi(const RepetitionRun& run);

double mean(const std::vector<double>& xs);
/// Sample standard deviation (n - 1); 0 for fewer than two values.
double sample_std(const std::vector<double>& xs);

/// `t,n_communities_pred,n_communities_true,nmi,modularity` rows followed by
/// a `mean` and a `std` row over snapshots. Missing values are left empty.
void write_metrics_report(std::ostream& out, const std::vector<SnapshotMetrics>& rows,
                          std::int64_t first_ordinal);

/// `pass,changed_agents,total_utility,potential`.
void write_telemetry(std::ostream& out, const SnapshotResult& result);

}  // namespace dgt
