#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dgt/common.hpp"

namespace dgt {

using LabelSet = std::set<CommunityId>;
using MemberSet = std::set<NodeId>;

/// A single agent move. Switch carries both legs: `from` is left, `to` joined.
struct Action {
  enum class Kind { noop, join, leave, switch_ };

  Kind kind = Kind::noop;
  CommunityId from = 0;
  CommunityId to = 0;

  static Action noop() { return {}; }
  static Action join(CommunityId k) { return {Kind::join, 0, k}; }
  static Action leave(CommunityId k) { return {Kind::leave, k, 0}; }
  static Action switch_to(CommunityId out, CommunityId in) { return {Kind::switch_, out, in}; }

  friend bool operator==(const Action&, const Action&) = default;
};

std::string to_string(const Action& a);
const char* to_string(Action::Kind kind);

/// Overlapping community state C^t together with the per-agent label sets
/// s_i^t. Both views are kept in sync by every mutator; empty communities
/// are removed as soon as their last member leaves.
class CommunityStructure {
 public:
  CommunityStructure() = default;
  explicit CommunityStructure(std::size_t universe, CommunityId first_free_id = 0)
      : memberships_(universe), next_id_(first_free_id) {}

  /// Assembles a structure from raw parts without checking consistency.
  /// audit() reports any violation; used for carry-over and for fixtures.
  static CommunityStructure from_parts(std::map<CommunityId, MemberSet> communities,
                                       std::vector<LabelSet> memberships, CommunityId next_id);

  std::size_t universe_size() const noexcept { return memberships_.size(); }
  std::size_t community_count() const noexcept { return communities_.size(); }
  CommunityId next_id() const noexcept { return next_id_; }

  const std::map<CommunityId, MemberSet>& communities() const noexcept { return communities_; }
  const LabelSet& labels(NodeId v) const { return memberships_.at(v); }
  const std::vector<LabelSet>& memberships() const noexcept { return memberships_; }

  /// Members of k, or nullptr when k does not exist.
  const MemberSet* members(CommunityId k) const;
  bool holds(NodeId v, CommunityId k) const { return memberships_.at(v).contains(k); }

  /// Reserves a fresh id without creating a community.
  CommunityId allocate_id() { return next_id_++; }

  /// Creates {v} under a fresh id and returns that id.
  CommunityId add_singleton(NodeId v);

  /// Adds v to k, creating k when absent. Ids at or beyond next_id() advance
  /// the counter so they are never handed out again.
  void add_member(NodeId v, CommunityId k);

  /// Removes v from k; k disappears if it becomes empty.
  void remove_member(NodeId v, CommunityId k);

  /// Applies a move for agent v. Throws PreconditionError when the move does
  /// not fit the current label set.
  void apply(NodeId v, const Action& a);

 private:
  std::map<CommunityId, MemberSet> communities_;
  std::vector<LabelSet> memberships_;
  CommunityId next_id_ = 0;
};

/// Checks i in C_k <=> k in s_i and that no community is empty. Returns one
/// human-readable line per violation; empty means consistent.
std::vector<std::string> audit(const CommunityStructure& s);

}  // namespace dgt
