#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgt/dgt.hpp"

namespace dgt::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kUsage = 1, kInternal = 2 };

struct InputSpec {
  std::string input;
  std::string nodes;
  /// "column" (third field is the snapshot) or "window:<seconds>".
  std::string snapshot_by = "column";
  bool undirected = false;
};

struct RunSpec {
  InputSpec input;
  std::string variant = "dgt";
  std::string gain = "similarity";
  double seed_fraction = 0.0;
  std::string truth;
  std::size_t repetitions = 10;
  std::uint32_t max_passes = 8;
  double threshold = 0.05;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  bool diagnostics = false;
  bool unlabeled_as_community = false;
  std::string out = ".";
};

struct SynthSpec {
  SynthConfig config;
  std::string out = ".";
};

SnapshotSequence load_input(const InputSpec& spec);
PipelineOptions to_options(const RunSpec& spec);

/// Runs the pipeline and writes partitions, metrics.csv and churn.csv.
void run(const RunSpec& spec);

/// One dgtg pipeline per fraction; writes sweep.csv.
void sweep_seed_fraction(const RunSpec& spec, const std::vector<double>& fractions);

/// Writes churn.csv; needs at least two snapshots.
void churn_report(const InputSpec& spec, const std::string& out_dir);

/// Writes edges.txt and truth.csv for a planted benchmark.
void synth(const SynthSpec& spec);

/// Full command line entry point; never throws.
int main(int argc, char** argv);

}  // namespace dgt::cli
