#include "dgt/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "dgt/metrics.hpp"
#include "dgt/rng.hpp"

namespace dgt {

void PipelineOptions::validate() const {
  variant.validate();
  game.validate();
  if (repetitions < 1) throw ConfigError("repetitions must be at least 1");
  if (jobs < 1) throw ConfigError("jobs must be at least 1");
}

SnapshotMetrics evaluate_snapshot(const SnapshotGraph& g, const SnapshotResult& result,
                                  const Partition* truth, const PipelineOptions& options) {
  const Partition& predicted = result.partition;
  SnapshotMetrics row;
  row.t = g.index();
  row.n_communities_pred = static_cast<double>(result.formed_communities());
  row.modularity =
      options.undirected ? modularity_undirected(g, predicted) : modularity_directed(g, predicted);
  if (truth == nullptr) return row;

  Partition reference;
  if (options.unlabeled_as_community) {
    reference = with_unlabeled_community(*truth, g);
  } else {
    for (const auto& [v, label] : *truth) {
      if (g.contains(v)) reference.emplace_hint(reference.end(), v, label);
    }
  }
  row.n_communities_true = static_cast<double>(community_count(reference));
  if (!reference.empty()) row.nmi = nmi(restrict_to(predicted, reference), reference);
  return row;
}

RepetitionRun run_repetition(const SnapshotSequence& seq, const GroundTruth* truth,
                             const PipelineOptions& options, std::size_t rep) {
  options.validate();
  if (options.variant.kind == Variant::dgtg && truth == nullptr) {
    throw ConfigError("variant dgtg requires ground truth (--truth)");
  }
  RepetitionRun run;
  std::vector<CommunityStructure> history;
  history.reserve(seq.size());
  CommunityId next_id = 0;

  for (std::size_t t = 0; t < seq.size(); ++t) {
    const auto& g = seq.snapshots[t];
    const std::uint64_t cell = derive_seed(options.seed, rep, t);
    Rng init_rng(splitmix64(cell));
    auto initial =
        init_structure(options.variant, t, history, g, truth, next_id, init_rng);

    GameConfig game = options.game;
    game.rng_seed = cell;
    auto [evolved, result] = run_snapshot(g, std::move(initial), game);
    next_id = evolved.next_id();

    const Partition* reference = truth != nullptr && truth->covers(t) ? &truth->at(t) : nullptr;
    run.metrics.push_back(evaluate_snapshot(g, result, reference, options));
    run.results.push_back(std::move(result));
    history.push_back(std::move(evolved));
  }
  return run;
}

PipelineResult run_pipeline(const SnapshotSequence& seq, const GroundTruth* truth,
                            const PipelineOptions& options) {
  options.validate();
  PipelineResult out;
  out.repetitions.resize(options.repetitions);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t rep = next++; rep < options.repetitions; rep = next++) {
      try {
        out.repetitions[rep] = run_repetition(seq, truth, options, rep);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = options.repetitions;
      }
    }
  };
  const std::size_t threads = std::min(options.jobs, options.repetitions);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  const double reps = static_cast<double>(options.repetitions);
  for (std::size_t t = 0; t < seq.size(); ++t) {
    SnapshotMetrics row;
    row.t = t;
    double nmi_sum = 0.0;
    std::size_t nmi_count = 0;
    for (const auto& run : out.repetitions) {
      const auto& m = run.metrics[t];
      row.n_communities_pred += m.n_communities_pred / reps;
      row.modularity += m.modularity / reps;
      row.n_communities_true = m.n_communities_true;
      if (m.nmi) {
        nmi_sum += *m.nmi;
        ++nmi_count;
      }
    }
    if (nmi_count > 0) row.nmi = nmi_sum / static_cast<double>(nmi_count);
    out.mean.push_back(row);
  }
  return out;
}

std::optional<double> mean_nmi(const RepetitionRun& run) {
  std::vector<double> values;
  for (const auto& m : run.metrics) {
    if (m.nmi) values.push_back(*m.nmi);
  }
  if (values.empty()) return std::nullopt;
  return mean(values);
}

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double sample_std(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double mu = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

namespace {

std::string cell(const std::optional<double>& v) {
  return v ? fmt::format("{:.6f}", *v) : std::string();
}

}  // namespace

void write_metrics_report(std::ostream& out, const std::vector<SnapshotMetrics>& rows,
                          std::int64_t first_ordinal) {
  fmt::print(out, "t,n_communities_pred,n_communities_true,nmi,modularity\n");
  std::vector<double> pred, truth, nmi_values, modularity;
  for (const auto& r : rows) {
    fmt::print(out, "{},{:.6f},{},{},{:.6f}\n", static_cast<std::int64_t>(r.t) + first_ordinal,
               r.n_communities_pred, cell(r.n_communities_true), cell(r.nmi), r.modularity);
    pred.push_back(r.n_communities_pred);
    modularity.push_back(r.modularity);
    if (r.n_communities_true) truth.push_back(*r.n_communities_true);
    if (r.nmi) nmi_values.push_back(*r.nmi);
  }
  auto summary = [&](const char* name, double (*f)(const std::vector<double>&)) {
    auto opt = [&](const std::vector<double>& xs) {
      return xs.empty() ? std::optional<double>() : std::optional<double>(f(xs));
    };
    fmt::print(out, "{},{:.6f},{},{},{:.6f}\n", name, f(pred), cell(opt(truth)),
               cell(opt(nmi_values)), f(modularity));
  };
  summary("mean", &mean);
  summary("std", &sample_std);
}

void write_telemetry(std::ostream& out, const SnapshotResult& result) {
  fmt::print(out, "pass,changed_agents,total_utility,potential\n");
  for (const auto& p : result.telemetry) {
    fmt::print(out, "{},{},{:.12g},{:.12g}\n", p.pass, p.changed_agents, p.total_utility,
               p.potential);
  }
}

}  // namespace dgt
