#include "dgt/synth.hpp"

#include <cmath>
#include <string>

#include "dgt/rng.hpp"

namespace dgt {

void SynthConfig::validate() const {
  if (communities < 1 || community_size < 1 || snapshots < 1) {
    throw ConfigError("communities, community size and snapshots must all be at least 1");
  }
  if (!(p_out >= 0.0 && p_out < p_in && p_in <= 1.0)) {
    throw ConfigError("edge probabilities must satisfy 0 <= p_out < p_in <= 1");
  }
  if (!(churn >= 0.0 && churn <= 1.0)) throw ConfigError("churn must lie in [0, 1]");
  const auto n = static_cast<double>(communities * community_size);
  const auto c = static_cast<double>(communities);
  const auto s = static_cast<double>(community_size);
  const double expected_m = p_in * c * s * (s - 1.0) + p_out * n * (n - s);
  if (!(expected_m > 0.0)) throw ConfigError("infeasible benchmark: expected edge count is 0");
  if (churn > 0.0 && communities < 2 && std::floor(churn * n) >= 1.0) {
    throw ConfigError("churn needs at least two planted communities");
  }
}

namespace {

struct Draw {
  std::vector<std::vector<EdgeRecord>> records;
  std::vector<std::size_t> moved;
  std::vector<std::vector<std::size_t>> plant;
  bool every_snapshot_has_edges = true;
};

Draw draw(const SynthConfig& cfg, std::uint64_t stream_seed) {
  const std::size_t n = cfg.communities * cfg.community_size;
  Rng rng(stream_seed);
  Draw d;

  std::vector<std::size_t> block(n);
  for (std::size_t v = 0; v < n; ++v) block[v] = v / cfg.community_size;
  std::vector<char> adj(n * n, 0);

  auto sample = [&](std::size_t i, std::size_t j) {
    const double p = block[i] == block[j] ? cfg.p_in : cfg.p_out;
    adj[i * n + j] = rng.bernoulli(p) ? 1 : 0;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) sample(i, j);
    }
  }

  std::vector<std::size_t> ids(n);
  for (std::size_t v = 0; v < n; ++v) ids[v] = v;
  const auto to_move = static_cast<std::size_t>(std::floor(cfg.churn * static_cast<double>(n)));

  for (std::size_t t = 0; t < cfg.snapshots; ++t) {
    std::size_t moved = 0;
    if (t > 0 && to_move > 0) {
      // Partial Fisher-Yates: the first to_move entries become a uniform sample.
      for (std::size_t i = 0; i < to_move; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(ids[i], ids[j]);
      }
      std::vector<char> is_moved(n, 0);
      for (std::size_t i = 0; i < to_move; ++i) {
        const std::size_t v = ids[i];
        auto other = static_cast<std::size_t>(rng.below(cfg.communities - 1));
        if (other >= block[v]) ++other;
        block[v] = other;
        is_moved[v] = 1;
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j && (is_moved[i] || is_moved[j])) sample(i, j);
        }
      }
      moved = to_move;
    }
    d.moved.push_back(moved);
    d.plant.push_back(block);

    auto& out = d.records.emplace_back();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (adj[i * n + j]) {
          out.push_back({std::to_string(i), std::to_string(j), static_cast<std::int64_t>(t)});
        }
      }
    }
    if (out.empty()) d.every_snapshot_has_edges = false;
  }
  return d;
}

}  // namespace

SynthData generate(const SynthConfig& cfg) {
  cfg.validate();
  constexpr int kMaxStreams = 64;
  for (int stream = 0; stream < kMaxStreams; ++stream) {
    Draw d = draw(cfg, derive_seed(cfg.rng_seed, 0x5eed, static_cast<std::uint64_t>(stream)));
    if (!d.every_snapshot_has_edges) continue;

    SynthData data;
    for (auto& bucket : d.records) {
      for (auto& r : bucket) data.records.push_back(std::move(r));
    }
    data.sequence = load_edge_stream(data.records);
    data.moved = std::move(d.moved);
    data.plant = std::move(d.plant);

    data.truth.resize(cfg.snapshots);
    for (std::size_t b = 0; b < cfg.communities; ++b) {
      data.truth.label_names().push_back("c" + std::to_string(b));
    }
    for (std::size_t t = 0; t < cfg.snapshots; ++t) {
      for (std::size_t v = 0; v < data.plant[t].size(); ++v) {
        if (auto id = data.sequence.registry.find(std::to_string(v))) {
          data.truth.at(t).emplace(*id, data.plant[t][v]);
        }
      }
    }
    return data;
  }
  throw ConfigError("could not draw a benchmark with edges in every snapshot");
}

}  // namespace dgt
