#pragma once

#include <string>
#include <utility>
#include <vector>

#include "airfl/config.hpp"
#include "airfl/dataset.hpp"
#include "airfl/trace.hpp"

namespace airfl {

// Train/test pair according to cfg.dataset: IDX files from the resolved
// data directory, or one synthetic draw split into train and held-out test
// (same class centers for both).
std::pair<Dataset, Dataset> load_experiment_data(const ExperimentConfig& cfg);

struct RunSummary {
  std::string cell;
  ExperimentConfig config;
  std::vector<RunTrace> traces;  // one per seed
  double mean_accuracy = kUnset;
  double std_accuracy = kUnset;
  bool any_diverged = false;
};

// Executes every seed of the configured experiment. Replicate seeds run in
// parallel (up to cfg.threads workers); with a single seed the parallelism
// moves inside the round, across clients. Results are bit-identical for
// any thread count.
RunSummary run_experiment(const ExperimentConfig& cfg, const Dataset& train,
                          const Dataset& test);

// Writes <cell>.seed<seed>.trace.csv per seed plus <cell>.summary.csv.
void write_run_outputs(const RunSummary& summary, const std::string& out_dir);

// Whole `run` command: load, execute, persist. Returns the summary.
RunSummary run_from_config(const ExperimentConfig& cfg, const std::string& out_dir);

// Parsed back from a summary CSV by the table generator.
struct SummaryFile {
  std::string cell;
  std::string algorithm;
  std::string csi;
  std::string channel;
  int p = 0;
  double snr_db = 0.0;
  std::vector<std::pair<std::uint64_t, double>> seed_accuracy;
  std::vector<bool> seed_diverged;
  double mean_accuracy = kUnset;
  double std_accuracy = kUnset;
  bool any_diverged = false;
};

SummaryFile read_summary_csv(const std::string& path);

}  // namespace airfl
