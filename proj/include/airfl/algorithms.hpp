#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "airfl/channel.hpp"
#include "airfl/dataset.hpp"
#include "airfl/model.hpp"

namespace airfl {

enum class Algorithm { kCharles, kCotaf, kFedAvg };

struct BetaPolicy {
  enum class Kind { kFixed, kAuto };
  Kind kind = Kind::kAuto;
  double fixed_value = 1.0;
  int tau_target = 4;  // local-step count the auto calibration aims for
};

// How the fixed-step baselines treat the power budget when inverting an
// estimated channel. kInvert lets the 1/h_hat factor through unbounded --
// the budget only calibrates the noise floor, and a near-zero estimate
// produces an arbitrarily large transmission (this is what makes plain
// channel inversion fragile under imperfect CSI). kClip instead hard-caps
// every transmission at the budget. CHARLES takes neither path: step-count
// adaptation plus its clip fallback always keeps it inside the budget.
enum class BaselinePower { kInvert, kClip };

// COTAF precoder gain source. kBound provisions the gain from the a-priori
// update-norm bound (H * eta * G)^2, guaranteeing the expected power
// constraint the way the published precoder does but leaving most of the
// budget unused whenever the bound is loose. kPrevMax tracks the previous
// round's largest realized update norm instead.
enum class CotafPrecoder { kBound, kPrevMax };

struct AlgoConfig {
  double power = 1.0;  // per-client transmit budget P
  double eta = 0.05;
  int tau_min = 1;
  int tau_max = 8;
  int fixed_steps = 4;  // H for the fixed-step baselines
  int batch_size = 32;
  double eps_h = kDeepFadeEpsilon;
  BetaPolicy beta{};
  BaselinePower baseline_power = BaselinePower::kInvert;
  CotafPrecoder cotaf_precoder = CotafPrecoder::kBound;
  int threads = 1;  // client-level parallelism inside a round
};

// Everything a round needs that does not change between rounds.
struct RoundContext {
  const SoftmaxLayout* layout = nullptr;
  const Dataset* data = nullptr;
  const ClientPartition* partition = nullptr;
  ChannelConfig channel{};
  AlgoConfig algo{};
  std::uint64_t master_seed = 0;
};

// One client's outcome for one round. `beta_i` always holds the exact
// power-control factor beta_t * alpha_i / (tau * h_hat); clipping rescales
// the transmitted signal, never this factor. An absent (deep-faded) client
// keeps tau = 0 and contributes nothing to the superposition.
struct ClientRoundReport {
  int tau = 0;
  ComplexGain beta_i{0.0, 0.0};
  double tx_power = 0.0;
  bool clipped = false;
  bool absent = false;
  ChannelDraw draw{};
  ModelVector update;  // delta x(tau)
};

struct RoundResult {
  ModelVector new_global;
  std::vector<ClientRoundReport> reports;
  double beta_server = 1.0;          // server descaling factor this round
  double effective_noise_var = 0.0;  // sigma_c2 / beta_server^2
  double imag_residue_norm = 0.0;    // ||Im(y)|| / beta_server, discarded by decode
};

// Norm estimates gathered before round 0 to scale the power control.
struct PilotStats {
  double update_norm_tau_target = 0.0;  // max_i ||delta_i(tau_target)||
  double update_norm_fixed = 0.0;       // max_i ||delta_i(H)||
  double median_hhat = 0.0;             // median |h_hat| over clients
  double grad_bound2 = 0.0;             // max single-sample ||grad||^2 (G^2)
};

PilotStats run_pilot(const RoundContext& ctx, const ModelVector& x0);

// Server scaling factor. fixed(c) passes c through; auto targets a median
// local-step count of tau_target on the pilot statistics:
//   beta_0 = tau_target * median|h_hat| * sqrt(P) / (max_i alpha_i * u0).
double choose_beta(const PilotStats& pilot, double power, const BetaPolicy& policy,
                   double max_alpha);

// Per-run engine state; beta_t is held constant after calibration, the
// COTAF precoder gain is refreshed every round from the previous round's
// largest update norm.
struct EngineState {
  double beta_t = 1.0;
  double cotaf_gamma = 1.0;
  double cotaf_prev_max_norm2 = 0.0;
};

EngineState init_engine_state(Algorithm alg, const RoundContext& ctx, const ModelVector& x0);

// Smallest k in [tau_min, tau_max] whose transmission obeys the power
// constraint (beta_t * alpha_i / (k |h_hat|)) * ||delta(k)|| <= sqrt(P),
// scanning the recorded trajectory. Returns (tau_max, true) when no k
// qualifies; the caller then rescales to meet the constraint exactly.
// Throws DeepFadeError when |h_hat| < eps_h.
std::pair<int, bool> select_local_steps(const SgdTrajectory& traj, double beta_t,
                                        double alpha_i, ComplexGain h_hat, double power,
                                        int tau_min, int tau_max, double eps_h);

// One CHARLES client: local SGD to tau_max, adaptive step selection,
// channel-inversion scaling, hard clip. Writes the complex transmit signal
// to z_out and returns the report.
ClientRoundReport charles_client(const ModelVector& x_t, const RoundContext& ctx,
                                 std::size_t client, double beta_t,
                                 const ChannelDraw& draw, Rng& sgd_rng,
                                 ComplexVector& z_out);

// Server side of the aggregation: x_{t+1} = x_t + Re{y / beta_t}. The
// imaginary residue's norm is reported through *imag_residue_norm.
ModelVector server_decode(const ModelVector& x_t, const ComplexVector& y, double beta_t,
                          double* imag_residue_norm);

// Round engines over a given set of per-client channel draws. Client work
// runs in parallel when ctx.algo.threads > 1; the reduction order is fixed,
// so results are identical for any thread count.
RoundResult charles_round(const ModelVector& x_t, const RoundContext& ctx, EngineState& state,
                          int round, const std::vector<ChannelDraw>& draws);

// COTAF baseline: H fixed local steps, update amplified to the power budget
// by sqrt(gamma_t) with gamma_t fed back from the previous round's largest
// update norm, estimated-channel inversion, hard clip.
RoundResult cotaf_round(const ModelVector& x_t, const RoundContext& ctx, EngineState& state,
                        int round, const std::vector<ChannelDraw>& draws);

// FedAvg baseline over the same analog channel: alpha-weighted updates with
// estimated-channel inversion, hard clip, unit server scaling.
RoundResult fedavg_round(const ModelVector& x_t, const RoundContext& ctx, EngineState& state,
                         int round, const std::vector<ChannelDraw>& draws);

// One full round of the selected algorithm: draws one channel per client
// from the round's substreams and dispatches to the engine.
RoundResult run_round(Algorithm alg, const ModelVector& x_t, const RoundContext& ctx,
                      EngineState& state, int round);

}  // namespace airfl
