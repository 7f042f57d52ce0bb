#include <benchmark/benchmark.h>

#include "dgt/dgt.hpp"

namespace {

using namespace dgt;

SynthData fixture(std::int64_t community_size) {
  SynthConfig cfg;
  cfg.community_size = static_cast<std::size_t>(community_size);
  cfg.snapshots = 2;
  return generate(cfg);
}

CommunityStructure singletons(const SnapshotGraph& g) {
  CommunityStructure s(g.universe_size());
  for (NodeId v : g.nodes()) s.add_singleton(v);
  return s;
}

void BM_RunSnapshot(benchmark::State& state) {
  const auto data = fixture(state.range(0));
  const auto& g = data.sequence.snapshots[0];
  GameConfig cfg;
  for (auto _ : state) {
    auto result = run_snapshot(g, singletons(g), cfg);
    benchmark::DoNotOptimize(result.second.partition);
  }
  state.SetComplexityN(static_cast<std::int64_t>(g.n()));
}
BENCHMARK(BM_RunSnapshot)->RangeMultiplier(2)->Range(25, 100)->Complexity();

void BM_UtilityDelta(benchmark::State& state) {
  const auto data = fixture(25);
  const auto& g = data.sequence.snapshots[0];
  auto [structure, result] = run_snapshot(g, singletons(g), GameConfig{});
  GainContext ctx(g);
  const auto kind = state.range(0) == 0 ? GainKind::similarity : GainKind::modularity;
  NodeId agent = 0;
  for (auto _ : state) {
    const auto target = result.partition.at(agent);
    const auto action = structure.holds(agent, static_cast<CommunityId>(target))
                            ? Action::leave(static_cast<CommunityId>(target))
                            : Action::join(static_cast<CommunityId>(target));
    benchmark::DoNotOptimize(utility_delta(ctx, agent, action, structure, kind));
    agent = (agent + 1) % static_cast<NodeId>(g.n());
  }
}
BENCHMARK(BM_UtilityDelta)->Arg(0)->Arg(1);

void BM_Nmi(benchmark::State& state) {
  const auto n = static_cast<NodeId>(state.range(0));
  Partition x;
  Partition y;
  for (NodeId v = 0; v < n; ++v) {
    x[v] = v % 7;
    y[v] = (v * 31) % 11;
  }
  for (auto _ : state) benchmark::DoNotOptimize(nmi(x, y));
}
BENCHMARK(BM_Nmi)->Range(64, 4096);

void BM_ModularityDirected(benchmark::State& state) {
  const auto data = fixture(state.range(0));
  const auto& g = data.sequence.snapshots[0];
  Partition p;
  for (NodeId v : g.nodes()) p[v] = v % 4;
  for (auto _ : state) benchmark::DoNotOptimize(modularity_directed(g, p));
}
BENCHMARK(BM_ModularityDirected)->Range(25, 200);

}  // namespace

BENCHMARK_MAIN();
