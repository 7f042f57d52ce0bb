#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dgt/initialization.hpp"
#include "dgt/snapshot_graph.hpp"

namespace dgt {

/// Planted-partition dynamic benchmark.
struct SynthConfig {
  std::size_t communities = 4;
  std::size_t community_size = 25;
  double p_in = 0.3;
  double p_out = 0.01;
  /// Fraction of nodes moved to another planted community per snapshot.
  double churn = 0.1;
  std::size_t snapshots = 5;
  std::uint64_t rng_seed = 1;

  void validate() const;
};

struct SynthData {
  SnapshotSequence sequence;
  GroundTruth truth;
  /// The edge stream the sequence was loaded from, in output order.
  std::vector<EdgeRecord> records;
  /// Nodes reassigned going into each snapshot (0 for snapshot 0).
  std::vector<std::size_t> moved;
  /// Planted label per node label index ("0".."n-1") and snapshot.
  std::vector<std::vector<std::size_t>> plant;
};

/// Snapshot 0 samples every ordered pair at p_in within a block and p_out
/// across blocks. Each later snapshot moves floor(churn * n) distinct random
/// nodes to a different block and resamples only the pairs touching a moved
/// node. Node labels are "0".."n-1". If a snapshot ends up with no edges the
/// whole sequence is redrawn from the next seed stream.
SynthData generate(const SynthConfig& cfg);

}  // namespace dgt
