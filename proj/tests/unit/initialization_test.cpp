#include <gtest/gtest.h>

#include "dgt/game_engine.hpp"
#include "dgt/initialization.hpp"
#include "fixtures.hpp"

namespace dgt {
namespace {

CommunityStructure holding(std::size_t universe, NodeId v, CommunityId k) {
  CommunityStructure s(universe);
  s.add_member(v, k);
  return s;
}

TEST(Variant, ParseAndValidate) {
  EXPECT_EQ(parse_variant("dgt"), Variant::dgt);
  EXPECT_EQ(parse_variant("dgts"), Variant::dgts);
  EXPECT_EQ(parse_variant("dgtp"), Variant::dgtp);
  EXPECT_EQ(parse_variant("dgtg"), Variant::dgtg);
  EXPECT_THROW(parse_variant("dgx"), ConfigError);
  VariantSpec spec{Variant::dgtg, 1.5};
  EXPECT_THROW(spec.validate(), ConfigError);
}

TEST(InitStructure, SingletonsForDgts) {
  auto g = test::make_graph(5, {{0, 1}, {2, 3}, {3, 4}});
  Rng rng(1);
  const auto s = init_structure({Variant::dgts}, 0, {}, g, nullptr, 0, rng);
  EXPECT_EQ(s.community_count(), 5u);
  for (NodeId v = 0; v < 5; ++v) EXPECT_EQ(s.labels(v).size(), 1u);
  EXPECT_TRUE(audit(s).empty());
}

TEST(InitStructure, DgtCarriesUnionOfHistory) {
  auto g = test::make_graph(3, {{0, 1}, {1, 2}}, 2);
  std::vector<CommunityStructure> history{holding(3, 0, 3), holding(3, 0, 7)};
  Rng rng(1);
  const auto s = init_structure({Variant::dgt}, 2, history, g, nullptr, 8, rng);
  EXPECT_EQ(s.labels(0), (LabelSet{3, 7}));
  EXPECT_TRUE(audit(s).empty());
  EXPECT_GE(s.next_id(), 8u);

  const auto p = init_structure({Variant::dgtp}, 2, history, g, nullptr, 8, rng);
  EXPECT_EQ(p.labels(0), (LabelSet{7}));
}

TEST(InitStructure, DgtpEqualsDgtWithOnePriorSnapshot) {
  Rng rng(3);
  auto prev = test::random_graph(rng, 10, 0.3);
  auto [evolved, result] = run_snapshot(prev, test::singletons(prev), GameConfig{});
  auto g = test::random_graph(rng, 10, 0.3);
  std::vector<CommunityStructure> history{evolved};
  Rng a(5);
  Rng b(5);
  const auto x = init_structure({Variant::dgt}, 1, history, g, nullptr, evolved.next_id(), a);
  const auto y = init_structure({Variant::dgtp}, 1, history, g, nullptr, evolved.next_id(), b);
  EXPECT_EQ(x.communities(), y.communities());
}

TEST(InitStructure, DropsAbsentNodesAndEmptiedCommunities) {
  // Universe of 4; node 3 is not in snapshot 1.
  std::vector<NodeId> present{0, 1, 2};
  SnapshotGraph g(1, 4, {{0, 1}, {1, 2}}, present);
  CommunityStructure prev(4);
  prev.add_member(3, 0);
  prev.add_member(0, 1);
  prev.add_member(3, 1);
  Rng rng(1);
  const auto s = init_structure({Variant::dgt}, 1, std::vector{prev}, g, nullptr, 2, rng);
  EXPECT_TRUE(audit(s).empty());
  EXPECT_EQ(s.members(0), nullptr);
  EXPECT_EQ(*s.members(1), (MemberSet{0}));
  EXPECT_TRUE(s.labels(3).empty());
  // Nodes without carried labels start as singletons.
  EXPECT_EQ(s.labels(1).size(), 1u);
}

TEST(InitStructure, DgtgSeedsWholeCommunities) {
  auto g = test::two_cliques(5);
  Partition truth;
  for (NodeId v = 0; v < 10; ++v) truth[v] = v < 5 ? 0 : 1;
  GroundTruth gt({truth});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const auto s = init_structure({Variant::dgtg, 0.3}, 0, {}, g, &gt, 0, rng);
    EXPECT_TRUE(audit(s).empty());
    // One whole block of 5 covers the budget of 3; the other five are singletons.
    std::size_t sizes5 = 0;
    for (const auto& [k, members] : s.communities()) sizes5 += members.size() == 5 ? 1 : 0;
    EXPECT_EQ(sizes5, 1u);
    EXPECT_EQ(s.community_count(), 6u);
  }
}

TEST(InitStructure, DgtgZeroFractionIsSingletons) {
  auto g = test::two_cliques(4);
  Partition truth;
  for (NodeId v = 0; v < 8; ++v) truth[v] = v / 4;
  GroundTruth gt({truth});
  Rng a(1);
  Rng b(1);
  const auto x = init_structure({Variant::dgtg, 0.0}, 0, {}, g, &gt, 0, a);
  const auto y = init_structure({Variant::dgts}, 0, {}, g, nullptr, 0, b);
  EXPECT_EQ(x.communities(), y.communities());
}

TEST(InitStructure, Errors) {
  auto g = test::two_cliques(3);
  Rng rng(1);
  EXPECT_THROW(init_structure({Variant::dgtg, 0.5}, 0, {}, g, nullptr, 0, rng), ConfigError);
  EXPECT_THROW(init_structure({Variant::dgt}, 2, {}, g, nullptr, 0, rng), InvariantError);
}

TEST(InitStructure, AlwaysPassesAudit) {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto g0 = test::random_graph(rng, 12, 0.25);
    auto g1 = test::random_graph(rng, 12, 0.25);
    GameConfig cfg;
    cfg.rng_seed = static_cast<std::uint64_t>(trial);
    auto [s0, r0] = run_snapshot(g0, test::singletons(g0), cfg);
    for (auto kind : {Variant::dgt, Variant::dgtp, Variant::dgts}) {
      const auto s = init_structure({kind}, 1, std::vector{s0}, g1, nullptr, s0.next_id(), rng);
      EXPECT_TRUE(audit(s).empty());
      for (NodeId v : g1.nodes()) EXPECT_FALSE(s.labels(v).empty());
    }
  }
}

}  // namespace
}  // namespace dgt
