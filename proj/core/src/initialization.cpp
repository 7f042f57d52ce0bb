#include "dgt/initialization.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace dgt {

Variant parse_variant(std::string_view name) {
  if (name == "dgt") return Variant::dgt;
  if (name == "dgts") return Variant::dgts;
  if (name == "dgtp") return Variant::dgtp;
  if (name == "dgtg") return Variant::dgtg;
  throw ConfigError("unknown variant '" + std::string(name) + "' (expected dgt, dgts, dgtp, dgtg)");
}

const char* to_string(Variant v) {
  switch (v) {
    case Variant::dgt: return "dgt";
    case Variant::dgts: return "dgts";
    case Variant::dgtp: return "dgtp";
    case Variant::dgtg: return "dgtg";
  }
  return "?";
}

void VariantSpec::validate() const {
  if (!(seed_fraction >= 0.0 && seed_fraction <= 1.0)) {
    throw ConfigError("seed fraction must lie in [0, 1]");
  }
}

namespace {

void fill_singletons(CommunityStructure& s, const SnapshotGraph& graph) {
  for (NodeId v : graph.nodes()) {
    if (s.labels(v).empty()) s.add_singleton(v);
  }
}

CommunityStructure carry_over(std::span<const CommunityStructure> sources,
                              const SnapshotGraph& graph, CommunityId first_free_id) {
  CommunityId next_id = first_free_id;
  for (const auto& src : sources) next_id = std::max(next_id, src.next_id());
  CommunityStructure s(graph.universe_size(), next_id);
  for (const auto& src : sources) {
    if (src.universe_size() > graph.universe_size()) {
      throw PreconditionError("history structure exceeds the node universe");
    }
    for (NodeId v : graph.nodes()) {
      if (v >= src.universe_size()) continue;
      for (CommunityId k : src.labels(v)) {
        if (!s.holds(v, k)) s.add_member(v, k);
      }
    }
  }
  fill_singletons(s, graph);
  return s;
}

CommunityStructure seed_from_truth(const Partition& truth, const SnapshotGraph& graph,
                                   double fraction, CommunityId first_free_id, Rng& rng) {
  CommunityStructure s(graph.universe_size(), first_free_id);

  std::map<Label, std::vector<NodeId>> groups;
  for (const auto& [v, label] : truth) {
    if (graph.contains(v)) groups[label].push_back(v);
  }
  std::vector<const std::vector<NodeId>*> order;
  order.reserve(groups.size());
  for (const auto& [label, members] : groups) order.push_back(&members);
  rng.shuffle(std::span(order));

  const auto budget =
      static_cast<std::size_t>(std::floor(fraction * static_cast<double>(graph.n())));
  std::size_t seeded = 0;
  for (const auto* members : order) {
    if (seeded >= budget) break;
    const CommunityId k = s.allocate_id();
    for (NodeId v : *members) s.add_member(v, k);
    seeded += members->size();
  }
  fill_singletons(s, graph);
  return s;
}

}  // namespace

CommunityStructure init_structure(const VariantSpec& variant, std::size_t t,
                                  std::span<const CommunityStructure> history,
                                  const SnapshotGraph& graph, const GroundTruth* truth,
                                  CommunityId first_free_id, Rng& rng) {
  variant.validate();
  switch (variant.kind) {
    case Variant::dgtg:
      if (truth == nullptr) throw ConfigError("dgtg requires ground truth (--truth)");
      if (!truth->covers(t)) {
        throw ConfigError("ground truth has no entry for snapshot " + std::to_string(t));
      }
      return seed_from_truth(truth->at(t), graph, variant.seed_fraction, first_free_id, rng);
    case Variant::dgts:
      break;
    case Variant::dgt:
    case Variant::dgtp:
      if (t == 0) break;
      if (history.size() < t) {
        throw InvariantError("history holds " + std::to_string(history.size()) +
                             " structures but snapshot " + std::to_string(t) + " needs " +
                             std::to_string(t));
      }
      if (variant.kind == Variant::dgtp) return carry_over(history.subspan(t - 1, 1), graph, first_free_id);
      return carry_over(history.first(t), graph, first_free_id);
  }
  CommunityStructure s(graph.universe_size(), first_free_id);
  fill_singletons(s, graph);
  return s;
}

}  // namespace dgt
