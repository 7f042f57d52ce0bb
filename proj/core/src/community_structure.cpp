#include "dgt/community_structure.hpp"

#include <string>

namespace dgt {

const char* to_string(Action::Kind kind) {
  switch (kind) {
    case Action::Kind::noop: return "noop";
    case Action::Kind::join: return "join";
    case Action::Kind::leave: return "leave";
    case Action::Kind::switch_: return "switch";
  }
  return "?";
}

std::string to_string(const Action& a) {
  switch (a.kind) {
    case Action::Kind::noop: return "noop";
    case Action::Kind::join: return "join(" + std::to_string(a.to) + ")";
    case Action::Kind::leave: return "leave(" + std::to_string(a.from) + ")";
    case Action::Kind::switch_:
      return "switch(" + std::to_string(a.from) + "->" + std::to_string(a.to) + ")";
  }
  return "?";
}

CommunityStructure CommunityStructure::from_parts(std::map<CommunityId, MemberSet> communities,
                                                  std::vector<LabelSet> memberships,
                                                  CommunityId next_id) {
  CommunityStructure s;
  s.communities_ = std::move(communities);
  s.memberships_ = std::move(memberships);
  s.next_id_ = next_id;
  return s;
}

const MemberSet* CommunityStructure::members(CommunityId k) const {
  auto it = communities_.find(k);
  return it == communities_.end() ? nullptr : &it->second;
}

CommunityId CommunityStructure::add_singleton(NodeId v) {
  const CommunityId k = allocate_id();
  add_member(v, k);
  return k;
}

void CommunityStructure::add_member(NodeId v, CommunityId k) {
  if (v >= memberships_.size()) throw PreconditionError("agent outside the node universe");
  communities_[k].insert(v);
  memberships_[v].insert(k);
  if (k >= next_id_) next_id_ = k + 1;
}

void CommunityStructure::remove_member(NodeId v, CommunityId k) {
  auto it = communities_.find(k);
  if (it == communities_.end() || !it->second.erase(v)) {
    throw PreconditionError("agent " + std::to_string(v) + " is not a member of community " +
                            std::to_string(k));
  }
  memberships_.at(v).erase(k);
  if (it->second.empty()) communities_.erase(it);
}

void CommunityStructure::apply(NodeId v, const Action& a) {
  switch (a.kind) {
    case Action::Kind::noop:
      return;
    case Action::Kind::join:
      if (holds(v, a.to)) throw PreconditionError("join of a community already held");
      add_member(v, a.to);
      return;
    case Action::Kind::leave:
      if (!holds(v, a.from)) throw PreconditionError("leave of a community not held");
      remove_member(v, a.from);
      return;
    case Action::Kind::switch_:
      if (a.from == a.to) throw PreconditionError("switch legs must differ");
      if (!holds(v, a.from)) throw PreconditionError("switch out of a community not held");
      if (holds(v, a.to)) throw PreconditionError("switch into a community already held");
      remove_member(v, a.from);
      add_member(v, a.to);
      return;
  }
}

std::vector<std::string> audit(const CommunityStructure& s) {
  std::vector<std::string> report;
  const auto& memberships = s.memberships();
  for (const auto& [k, members] : s.communities()) {
    if (members.empty()) report.push_back("community " + std::to_string(k) + " is empty");
    if (k >= s.next_id()) {
      report.push_back("community " + std::to_string(k) + " is not below next_id " +
                       std::to_string(s.next_id()));
    }
    for (NodeId v : members) {
      if (v >= memberships.size()) {
        report.push_back("community " + std::to_string(k) + " lists agent " + std::to_string(v) +
                         " outside the node universe");
      } else if (!memberships[v].contains(k)) {
        report.push_back("agent " + std::to_string(v) + " is in community " + std::to_string(k) +
                         " but its label set lacks it");
      }
    }
  }
  for (NodeId v = 0; v < memberships.size(); ++v) {
    for (CommunityId k : memberships[v]) {
      const auto* members = s.members(k);
      if (members == nullptr || !members->contains(v)) {
        report.push_back("agent " + std::to_string(v) + " holds label " + std::to_string(k) +
                         " but community " + std::to_string(k) + " does not list it");
      }
    }
  }
  return report;
}

}  // namespace dgt
