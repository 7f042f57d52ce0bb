#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dgt/common.hpp"
#include "dgt/community_structure.hpp"
#include "dgt/rng.hpp"
#include "dgt/snapshot_graph.hpp"

namespace dgt {

enum class Variant {
  dgt,   ///< carry the union of every earlier membership
  dgts,  ///< independent run per snapshot
  dgtp,  ///< carry memberships of the previous snapshot only
  dgtg,  ///< seed with a fraction of the ground-truth communities
};

Variant parse_variant(std::string_view name);
const char* to_string(Variant v);

struct VariantSpec {
  Variant kind = Variant::dgt;
  /// Only used by dgtg; fraction of n^t covered by seeded communities.
  double seed_fraction = 0.0;

  void validate() const;
};

/// Known community membership per snapshot. Nodes may be unlabelled.
class GroundTruth {
 public:
  GroundTruth() = default;
  explicit GroundTruth(std::vector<Partition> snapshots) : snapshots_(std::move(snapshots)) {}

  std::size_t size() const noexcept { return snapshots_.size(); }
  bool covers(std::size_t t) const noexcept { return t < snapshots_.size(); }
  const Partition& at(std::size_t t) const { return snapshots_.at(t); }
  Partition& at(std::size_t t) { return snapshots_.at(t); }
  void resize(std::size_t count) { snapshots_.resize(count); }

  /// Names of interned community labels, indexed by Label value.
  std::vector<std::string>& label_names() noexcept { return label_names_; }
  const std::vector<std::string>& label_names() const noexcept { return label_names_; }

 private:
  std::vector<Partition> snapshots_;
  std::vector<std::string> label_names_;
};

/// Initial community structure for snapshot t.
///
/// `history` holds the evolved (pre hard-assignment) structures of the
/// snapshots before t; dgt and dgtp at t > 0 need all t of them. Ids of new
/// communities start at `first_free_id` so they never collide with ids used
/// earlier in the run. `rng` drives dgtg's choice of seed communities.
CommunityStructure init_structure(const VariantSpec& variant, std::size_t t,
                                  std::span<const CommunityStructure> history,
                                  const SnapshotGraph& graph, const GroundTruth* truth,
                                  CommunityId first_free_id, Rng& rng);

}  // namespace dgt
