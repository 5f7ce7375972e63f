#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "airfl/bounds.hpp"

namespace airfl {

inline constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

// Scalarized per-client round outcome kept in the trace (full update
// vectors stay inside RoundResult and are not persisted).
struct ClientRoundStat {
  int tau = 0;  // 0 = absent this round
  double tx_power = 0.0;
  bool clipped = false;
  double h_mod = 0.0;
  double hhat_mod = 0.0;
  double mismatch = 0.0;  // |1 - h / h_hat|
};

struct TraceRow {
  int round = 0;
  double beta_server = 1.0;
  double imag_residue = 0.0;
  // Filled at evaluation points only; NaN elsewhere.
  double train_loss = kUnset;
  double test_accuracy = kUnset;
  double grad_norm2 = kUnset;
  std::vector<ClientRoundStat> clients;
};

// Full per-seed record of one run, written as `# airfl-trace v1` CSV.
struct RunTrace {
  std::uint64_t seed = 0;
  std::size_t m = 0;
  int rounds = 0;  // planned T; rows may stop earlier on divergence
  int classes = 0;
  double eta = 0.0;
  double sigma_c2 = 0.0;
  double power = 0.0;
  double sigma_h2 = 0.0;
  double sigma_est2 = 0.0;
  std::string algorithm;
  std::string csi;
  std::string channel_mode;
  double f_x0 = kUnset;  // initial train loss
  std::vector<double> alpha;
  std::vector<TraceRow> rows;
  bool diverged = false;
  double final_accuracy = kUnset;
  double final_loss = kUnset;
  std::optional<BoundTerms> bound_terms;
};

// Deterministic text formatting for CSV payloads (shortest round-trip
// representation, locale-free).
std::string format_double(double v);

void write_trace_csv(const RunTrace& trace, const std::string& path);
RunTrace read_trace_csv(const std::string& path);

}  // namespace airfl
