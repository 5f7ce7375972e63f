#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "airfl/algorithms.hpp"
#include "airfl/channel.hpp"

namespace airfl {

// Flat key = value experiment description. Every field has a default;
// unknown keys in a file are rejected so typos cannot silently no-op.
struct ExperimentConfig {
  std::string dataset = "mnist";  // mnist | synthetic
  std::string data_dir;           // empty: $AIRFL_DATA_DIR, then ./data/mnist
  std::size_t train_limit = 0;    // 0 = use all training samples

  std::size_t synth_dim = 20;
  std::size_t synth_samples = 4000;
  int synth_classes = 10;
  double synth_separation = 3.0;
  std::uint64_t synth_seed = 7;

  std::size_t m = 10;
  int rounds = 200;
  double eta = 0.05;
  int p = 2;  // distinct labels per client
  double snr_db = 10.0;
  double sigma_h2 = 1.0;
  double sigma_est2 = 0.1;
  double power = 0.1;

  std::string algorithm = "charles";  // charles | cotaf | fedavg
  std::string channel = "fading";     // fading | no_fading
  std::string csi = "imperfect";      // perfect | imperfect | mean_csi

  int tau_min = 1;
  int tau_max = 8;
  int local_steps = 4;  // H for cotaf/fedavg
  int batch_size = 32;
  std::string beta_policy = "auto";  // auto | fixed:<value>
  int tau_target = 4;
  std::string baseline_power = "invert";  // invert | clip
  std::string snr_ref = "total";  // total | symbol: noise reference bandwidth
  std::string cotaf_precoder = "bound";  // bound | prev_max

  std::vector<std::uint64_t> seeds = {1, 2, 3};
  int eval_every = 10;
  int threads = 1;
  std::string run_name;  // optional override of the derived cell id

  Algorithm algorithm_enum() const;
  ChannelMode channel_enum() const;
  CsiMode csi_enum() const;
  BetaPolicy beta_policy_struct() const;
  BaselinePower baseline_power_enum() const;
  CotafPrecoder cotaf_precoder_enum() const;

  // Stable identifier used in output file names and the sweep table:
  // <algorithm>_<csi | no_fading>_p<p>_snr<snr_db>.
  std::string cell_id() const;
};

// Parses and validates; throws std::invalid_argument naming the offending
// key on any violation.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

// Applies one "key=value" override on top of an existing config.
void apply_override(ExperimentConfig& cfg, const std::string& assignment);

void validate_config(const ExperimentConfig& cfg);

// Shared low-level reader: key = value lines, '#'/';' comments.
std::vector<std::pair<std::string, std::string>> parse_kv_text(const std::string& text);
std::vector<std::pair<std::string, std::string>> parse_kv_file(const std::string& path);

}  // namespace airfl
