#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "dgt/io.hpp"
#include "dgt/snapshot_graph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace dgt {
namespace {

std::vector<EdgeRecord> records(std::initializer_list<EdgeRecord> list) { return list; }

TEST(LoadEdgeStream, MinimalCycle) {
  const auto seq = load_edge_stream(records({{"a", "b", 0}, {"b", "a", 0}}));
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_EQ(seq.snapshots[0].n(), 2u);
  EXPECT_EQ(seq.snapshots[0].m(), 2u);
}

TEST(LoadEdgeStream, DropsSelfEdgesAndCountsThem) {
  const auto seq = load_edge_stream(records({{"a", "a", 0}, {"a", "b", 0}}));
  EXPECT_EQ(seq.snapshots[0].n(), 2u);
  EXPECT_EQ(seq.snapshots[0].m(), 1u);
  EXPECT_EQ(seq.self_edges_dropped, 1u);
}

TEST(LoadEdgeStream, CollapsesDuplicates) {
  const auto seq = load_edge_stream(records({{"a", "b", 0}, {"a", "b", 0}, {"a", "b", 0}}));
  EXPECT_EQ(seq.snapshots[0].m(), 1u);
}

TEST(LoadEdgeStream, ThirtySnapshots) {
  std::vector<EdgeRecord> recs;
  for (int t = 0; t < 30; ++t) {
    recs.push_back({"p" + std::to_string(t), "p" + std::to_string(t + 1), t});
  }
  EXPECT_EQ(load_edge_stream(recs).size(), 30u);
}

TEST(LoadEdgeStream, NormalizesOrdinals) {
  const auto seq = load_edge_stream(records({{"a", "b", 5}, {"b", "c", 6}}));
  EXPECT_EQ(seq.size(), 2u);
  EXPECT_EQ(seq.first_ordinal, 5);
  EXPECT_EQ(seq.snapshots[1].index(), 1u);
}

TEST(LoadEdgeStream, Errors) {
  EXPECT_THROW(load_edge_stream({}), FormatError);
  EXPECT_THROW(load_edge_stream(records({{"a", "b", -1}})), FormatError);
  // Gap at ordinal 1 would be an empty snapshot.
  EXPECT_THROW(load_edge_stream(records({{"a", "b", 0}, {"a", "b", 2}})), FormatError);
  // Only a self-edge: m = 0.
  EXPECT_THROW(load_edge_stream(records({{"a", "a", 0}})), FormatError);
}

TEST(LoadEdgeStream, IdsByFirstAppearanceAndStable) {
  const auto seq = load_edge_stream(records({{"x", "y", 0}, {"z", "x", 1}}));
  EXPECT_EQ(seq.registry.find("x"), NodeId{0});
  EXPECT_EQ(seq.registry.find("y"), NodeId{1});
  EXPECT_EQ(seq.registry.find("z"), NodeId{2});
  EXPECT_EQ(seq.registry.label(2), "z");
  // Per-snapshot node sets are edge induced.
  EXPECT_FALSE(seq.snapshots[1].contains(1));
  EXPECT_TRUE(seq.snapshots[1].contains(2));
  EXPECT_EQ(seq.snapshots[1].n(), 2u);
}

TEST(LoadEdgeStream, UndirectedMaterializesBothDirections) {
  LoadOptions opts;
  opts.undirected = true;
  const auto seq = load_edge_stream(records({{"a", "b", 0}}), opts);
  EXPECT_EQ(seq.snapshots[0].m(), 2u);
  EXPECT_TRUE(seq.snapshots[0].has_edge(1, 0));
}

TEST(LoadEdgeStream, DeclaredNodesJoinTheSnapshot) {
  LoadOptions opts;
  opts.declared_nodes = {{"lonely", 0}};
  const auto seq = load_edge_stream(records({{"a", "b", 0}}), opts);
  EXPECT_EQ(seq.snapshots[0].n(), 3u);
  EXPECT_EQ(seq.snapshots[0].m(), 1u);
}

TEST(CommonNeighbors, Examples) {
  // Star i->k, j->k.
  auto star = test::make_graph(3, {{0, 2}, {1, 2}});
  EXPECT_EQ(common_neighbors(star, 0, 1), 1u);
  // i->k1,k2 ; j->k2,k3.
  auto g = test::make_graph(5, {{0, 2}, {0, 3}, {1, 3}, {1, 4}});
  EXPECT_EQ(common_neighbors(g, 0, 1), 1u);
  auto disjoint = test::make_graph(4, {{0, 2}, {1, 3}});
  EXPECT_EQ(common_neighbors(disjoint, 0, 1), 0u);
  EXPECT_THROW(common_neighbors(g, 1, 1), PreconditionError);
}

TEST(CommonNeighbors, SymmetricAndMatchesDenseOracle) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = test::random_graph(rng, 12, 0.3);
    const auto dense = oracle::densify(g);
    for (NodeId i = 0; i < 12; ++i) {
      for (NodeId j = 0; j < 12; ++j) {
        if (i == j) continue;
        ASSERT_EQ(common_neighbors(g, i, j), common_neighbors(g, j, i));
        ASSERT_EQ(static_cast<int>(common_neighbors(g, i, j)), oracle::common_neighbors(dense, i, j));
      }
    }
  }
}

TEST(SnapshotGraph, DegreeSumsEqualEdgeCount) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = test::random_graph(rng, 15, 0.2);
    std::size_t out = 0;
    std::size_t in = 0;
    for (NodeId v : g.nodes()) {
      out += g.out_degree(v);
      in += g.in_degree(v);
      for (NodeId u : g.out_neighbors(v)) {
        auto ins = g.in_neighbors(u);
        ASSERT_TRUE(std::find(ins.begin(), ins.end(), v) != ins.end());
      }
    }
    EXPECT_EQ(out, g.m());
    EXPECT_EQ(in, g.m());
  }
}

SnapshotSequence pair_of(std::vector<EdgeRecord> recs) { return load_edge_stream(recs); }

TEST(Diff, HandComputedCases) {
  auto same = pair_of({{"a", "b", 0}, {"a", "b", 1}});
  EXPECT_EQ(diff(same.snapshots[0], same.snapshots[1]), (ChangeStats{0, 0, 0}));

  auto moved = pair_of({{"a", "b", 0}, {"a", "c", 1}});
  EXPECT_EQ(diff(moved.snapshots[0], moved.snapshots[1]), (ChangeStats{1, 1, 3}));

  auto shrink = pair_of({{"a", "b", 0}, {"b", "c", 0}, {"a", "b", 1}});
  EXPECT_EQ(diff(shrink.snapshots[0], shrink.snapshots[1]), (ChangeStats{0, 1, 2}));
}

TEST(Diff, SelfDiffIsZero) {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = test::random_graph(rng, 10, 0.3);
    EXPECT_EQ(diff(g, g), (ChangeStats{}));
  }
}

TEST(SnapshotGraph, EdgeListRoundTrip) {
  Rng rng(8);
  std::vector<EdgeRecord> recs;
  for (int t = 0; t < 3; ++t) {
    for (int e = 0; e < 40; ++e) {
      recs.push_back({"n" + std::to_string(rng.below(15)), "n" + std::to_string(rng.below(15)), t});
    }
  }
  const auto seq = load_edge_stream(recs);
  std::stringstream buffer;
  write_edge_list(buffer, seq);
  const auto again = load_edge_stream(read_edge_list(buffer));
  ASSERT_EQ(again.size(), seq.size());
  for (std::size_t t = 0; t < seq.size(); ++t) {
    std::set<std::pair<std::string, std::string>> a;
    std::set<std::pair<std::string, std::string>> b;
    for (auto [i, j] : seq.snapshots[t].edges()) a.emplace(seq.registry.label(i), seq.registry.label(j));
    for (auto [i, j] : again.snapshots[t].edges()) {
      b.emplace(again.registry.label(i), again.registry.label(j));
    }
    EXPECT_EQ(a, b);
  }
}

}  // namespace
}  // namespace dgt
