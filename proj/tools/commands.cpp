#include "commands.hpp"

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

namespace dgt::cli {

namespace fs = std::filesystem;

namespace {

EdgeListOptions edge_list_options(const std::string& snapshot_by) {
  EdgeListOptions options;
  if (snapshot_by == "column") return options;
  constexpr std::string_view prefix = "window:";
  if (snapshot_by.rfind(prefix, 0) == 0) {
    const auto text = snapshot_by.substr(prefix.size());
    try {
      std::size_t used = 0;
      const double w = std::stod(text, &used);
      if (used == text.size() && w > 0.0) {
        options.window_seconds = w;
        return options;
      }
    } catch (const std::exception&) {
    }
  }
  throw ConfigError("--snapshot-by expects 'column' or 'window:<seconds>', got '" + snapshot_by +
                    "'");
}

fs::path prepare_out(const std::string& dir) {
  fs::path path(dir);
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec) throw ConfigError("cannot create output directory '" + dir + "': " + ec.message());
  return path;
}

std::string ordinal_name(const SnapshotSequence& seq, std::size_t t) {
  return std::to_string(static_cast<std::int64_t>(t) + seq.first_ordinal);
}

std::optional<GroundTruth> load_truth(const RunSpec& spec, const SnapshotSequence& seq) {
  if (spec.truth.empty()) return std::nullopt;
  return read_ground_truth_file(spec.truth, seq);
}

}  // namespace

SnapshotSequence load_input(const InputSpec& spec) {
  if (spec.input.empty()) throw ConfigError("--input is required");
  const auto records = read_edge_list_file(spec.input, edge_list_options(spec.snapshot_by));
  LoadOptions options;
  options.undirected = spec.undirected;
  if (!spec.nodes.empty()) options.declared_nodes = read_node_list_file(spec.nodes);
  auto seq = load_edge_stream(records, options);
  if (seq.self_edges_dropped > 0) {
    fmt::print(std::cerr, "warning: dropped {} self-edge(s)\n", seq.self_edges_dropped);
  }
  return seq;
}

PipelineOptions to_options(const RunSpec& spec) {
  PipelineOptions options;
  options.variant.kind = parse_variant(spec.variant);
  options.variant.seed_fraction = spec.seed_fraction;
  options.game.gain = parse_gain_kind(spec.gain);
  options.game.max_passes = spec.max_passes;
  options.game.change_fraction_threshold = spec.threshold;
  options.repetitions = spec.repetitions;
  options.seed = spec.seed;
  options.jobs = spec.jobs;
  options.undirected = spec.input.undirected;
  options.unlabeled_as_community = spec.unlabeled_as_community;
  options.validate();
  if (options.variant.kind == Variant::dgtg && spec.truth.empty()) {
    throw ConfigError("variant dgtg requires ground truth: pass --truth <file>");
  }
  return options;
}

void run(const RunSpec& spec) {
  const auto options = to_options(spec);
  const auto seq = load_input(spec.input);
  const auto truth = load_truth(spec, seq);
  const auto out = prepare_out(spec.out);

  const auto result = run_pipeline(seq, truth ? &*truth : nullptr, options);

  for (std::size_t rep = 0; rep < result.repetitions.size(); ++rep) {
    const auto& run = result.repetitions[rep];
    for (std::size_t t = 0; t < run.results.size(); ++t) {
      const auto stem = fmt::format("t{}_rep{}", ordinal_name(seq, t), rep);
      auto file = open_output((out / ("communities_" + stem + ".csv")).string());
      write_partition(file, run.results[t].partition, seq.registry);
      if (spec.diagnostics) {
        auto diag = open_output((out / ("diagnostics_" + stem + ".csv")).string());
        write_telemetry(diag, run.results[t]);
      }
    }
  }
  auto metrics = open_output((out / "metrics.csv").string());
  write_metrics_report(metrics, result.mean, seq.first_ordinal);
  if (seq.size() >= 2) {
    auto churn = open_output((out / "churn.csv").string());
    write_churn_report(churn, seq);
  }
}

void sweep_seed_fraction(const RunSpec& spec, const std::vector<double>& fractions) {
  if (fractions.empty()) throw ConfigError("--fractions needs at least one value");
  for (double f : fractions) {
    if (!(f >= 0.0 && f <= 1.0)) {
      throw ConfigError(fmt::format("--fractions value {} is outside [0, 1]", f));
    }
  }
  RunSpec base = spec;
  base.variant = "dgtg";
  auto options = to_options(base);
  const auto seq = load_input(spec.input);
  const auto truth = load_truth(spec, seq);
  const auto out = prepare_out(spec.out);

  auto report = open_output((out / "sweep.csv").string());
  fmt::print(report, "fraction,nmi_mean,nmi_std\n");
  for (double f : fractions) {
    options.variant.seed_fraction = f;
    const auto result = run_pipeline(seq, &*truth, options);
    std::vector<double> per_rep;
    for (const auto& run : result.repetitions) {
      if (auto v = mean_nmi(run)) per_rep.push_back(*v);
    }
    fmt::print(report, "{},{:.6f},{:.6f}\n", f, mean(per_rep), sample_std(per_rep));
  }
}

void churn_report(const InputSpec& spec, const std::string& out_dir) {
  const auto seq = load_input(spec);
  if (seq.size() < 2) {
    throw ConfigError("churn report needs at least two snapshots, input has " +
                      std::to_string(seq.size()));
  }
  const auto out = prepare_out(out_dir);
  auto file = open_output((out / "churn.csv").string());
  write_churn_report(file, seq);
}

void synth(const SynthSpec& spec) {
  const auto data = generate(spec.config);
  const auto out = prepare_out(spec.out);
  auto edges = open_output((out / "edges.txt").string());
  fmt::print(edges, "# source target snapshot\n");
  for (const auto& r : data.records) fmt::print(edges, "{} {} {}\n", r.source, r.target, r.snapshot);
  auto truth = open_output((out / "truth.csv").string());
  write_ground_truth(truth, data.truth, data.sequence);
}

namespace {

void add_input_flags(CLI::App* cmd, InputSpec& spec) {
  cmd->add_option("--input", spec.input, "Edge-list file: 'source target snapshot' per line")
      ->required();
  cmd->add_option("--nodes", spec.nodes, "Optional node-list file: 'node snapshot' per line");
  cmd->add_option("--snapshot-by", spec.snapshot_by,
                  "'column' or 'window:<seconds>' to bucket a trailing timestamp column");
  cmd->add_flag("--undirected", spec.undirected, "Treat each record as an undirected edge");
}

void add_run_flags(CLI::App* cmd, RunSpec& spec) {
  add_input_flags(cmd, spec.input);
  cmd->add_option("--gain", spec.gain, "similarity | modularity");
  cmd->add_option("--truth", spec.truth, "Ground truth CSV: snapshot,node_label,community_label");
  cmd->add_option("--repetitions", spec.repetitions, "Independent seeded repetitions");
  cmd->add_option("--max-passes", spec.max_passes, "Passes over all agents per snapshot");
  cmd->add_option("--threshold", spec.threshold, "Stop when the changed fraction drops below");
  cmd->add_option("--seed", spec.seed, "Base random seed");
  cmd->add_option("--jobs", spec.jobs, "Repetitions evaluated in parallel");
  cmd->add_flag("--diagnostics", spec.diagnostics, "Write per-pass convergence telemetry");
  cmd->add_flag("--unlabeled-as-community", spec.unlabeled_as_community,
                "Score unlabelled nodes as one extra ground-truth community");
  cmd->add_option("--out", spec.out, "Output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Game-theoretic dynamic community detection"};
  app.require_subcommand(1);

  RunSpec run_spec;
  auto* run_cmd = app.add_subcommand("run", "Detect communities in every snapshot");
  add_run_flags(run_cmd, run_spec);
  run_cmd->add_option("--variant", run_spec.variant, "dgt | dgts | dgtp | dgtg");
  run_cmd->add_option("--seed-fraction", run_spec.seed_fraction,
                      "dgtg: fraction of nodes covered by seeded communities");

  RunSpec sweep_spec;
  std::vector<double> fractions;
  auto* sweep_cmd = app.add_subcommand("sweep", "dgtg NMI as a function of the seed fraction");
  add_run_flags(sweep_cmd, sweep_spec);
  sweep_cmd->add_option("--fractions", fractions, "Comma-separated seed fractions")
      ->delimiter(',')
      ->required();

  InputSpec churn_spec;
  std::string churn_out = ".";
  auto* churn_cmd = app.add_subcommand("churn", "Edge and node churn between snapshots");
  add_input_flags(churn_cmd, churn_spec);
  churn_cmd->add_option("--out", churn_out, "Output directory");

  SynthSpec synth_spec;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a planted dynamic benchmark");
  auto& sc = synth_spec.config;
  synth_cmd->add_option("--communities", sc.communities, "Planted communities");
  synth_cmd->add_option("--community-size", sc.community_size, "Nodes per community");
  synth_cmd->add_option("--p-in", sc.p_in, "Intra-community edge probability");
  synth_cmd->add_option("--p-out", sc.p_out, "Inter-community edge probability");
  synth_cmd->add_option("--churn", sc.churn, "Fraction of nodes moved per snapshot");
  synth_cmd->add_option("--snapshots", sc.snapshots, "Number of snapshots");
  synth_cmd->add_option("--seed", sc.rng_seed, "Random seed");
  synth_cmd->add_option("--out", synth_spec.out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run_cmd) run(run_spec);
    if (*sweep_cmd) sweep_seed_fraction(sweep_spec, fractions);
    if (*churn_cmd) churn_report(churn_spec, churn_out);
    if (*synth_cmd) synth(synth_spec);
  } catch (const InvariantError& e) {
    fmt::print(std::cerr, "internal error: {}\n", e.what());
    return kInternal;
  } catch (const std::exception& e) {
    fmt::print(std::cerr, "error: {}\n", e.what());
    return kUsage;
  }
  return kOk;
}

}  // namespace dgt::cli
