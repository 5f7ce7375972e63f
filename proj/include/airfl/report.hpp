#pragma once

#include <string>
#include <vector>

#include "airfl/bounds.hpp"

namespace airfl {

// Sweep description for the accuracy table: one axis (p or snr_db) times
// algorithm blocks times the three communication-model columns.
struct SweepSpec {
  std::string runs_dir = "runs";
  std::vector<std::string> algorithms = {"charles", "cotaf", "fedavg"};
  std::vector<std::string> channels = {"imperfect", "perfect", "no_fading"};
  std::vector<int> p_values;        // non-empty: sweep over p
  std::vector<double> snr_values;   // non-empty: sweep over snr_db
  int base_p = 2;
  double base_snr_db = 10.0;
};

SweepSpec parse_sweep_file(const std::string& path);

struct TableOutput {
  std::string csv;
  std::string text;
  std::vector<std::string> missing_cells;  // non-empty means incomplete runs
};

// Collects <cell>.summary.csv files from runs_dir and lays out the
// accuracy table. Diverged cells render as "/".
TableOutput make_table(const SweepSpec& spec);

struct ConstantsFile {
  BoundConstants constants;
  double eta = 0.0;  // 0: take eta from each trace's metadata
};

ConstantsFile parse_constants_file(const std::string& path);

struct BoundReportRow {
  std::string file;
  BoundTerms terms;
  double total = 0.0;
  double stat_err_ceiling = 0.0;
  double est_err_ceiling = 0.0;
  double h_min = 0.0;
  double mean_grad_norm2 = 0.0;
  double min_grad_norm2 = 0.0;
  bool mean_within_bound = false;
  bool min_within_bound = false;
  std::string error;  // non-empty when the trace could not be scored
};

struct BoundReportOutput {
  std::vector<BoundReportRow> rows;
  std::string csv;
  std::string text;
};

// Bound decomposition plus the small-perturbation comparison for every
// trace file; `patterns` entries may use '*' wildcards in the file name.
BoundReportOutput make_bound_report(const std::vector<std::string>& patterns,
                                    const ConstantsFile& constants);

// Expands '*' wildcards in the final path component.
std::vector<std::string> expand_trace_patterns(const std::vector<std::string>& patterns);

}  // namespace airfl
