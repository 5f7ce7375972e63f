#pragma once

#include <cstddef>
#include <functional>

#include "airfl/channel.hpp"
#include "airfl/dataset.hpp"
#include "airfl/model.hpp"

namespace airfl {

struct RunTrace;

// Empirical stand-ins for the analysis constants: gradient smoothness L,
// stochastic-gradient variance sigma^2, gradient-norm bound G^2, and the
// initial optimality gap (cross-entropy infimum taken as 0). Probe-based
// maxima are lower bounds on the true suprema, so downstream checks treat
// them as estimates, not certificates.
struct BoundConstants {
  double lipschitz = 0.0;        // L
  double grad_variance = 0.0;    // sigma^2
  double grad_bound2 = 0.0;      // G^2
  double f0_minus_fstar = 0.0;   // F(x_0) - F(x_*)
};

// Five-term decomposition of the convergence bound.
struct BoundTerms {
  double opt_err = 0.0;
  double channel_noise_err = 0.0;
  double local_update_err = 0.0;
  double statistical_err = 0.0;
  double channel_est_err = 0.0;

  double total() const {
    return opt_err + channel_noise_err + local_update_err + statistical_err + channel_est_err;
  }
};

struct ConstantsOptions {
  int probes = 10;          // probe points / pairs
  int grad_samples = 64;    // single-sample gradients per probe point
  double probe_scale = 1e-2;
};

// Max ratio ||grad(x) - grad(y)|| / ||x - y|| over random probe pairs at
// distance ~scale around `center`. Generic so closed-form tasks can
// validate it directly.
double estimate_lipschitz(const std::function<ModelVector(const ModelVector&)>& grad_fn,
                          const ModelVector& center, int probes, double scale, Rng& rng);

BoundConstants estimate_constants(const SoftmaxLayout& layout, const Dataset& data,
                                  const ClientPartition& partition, const ModelVector& x0,
                                  const ConstantsOptions& opt, Rng& rng);

struct ChannelMoments {
  double ratio2 = 0.0;      // E |h / h_hat|^2
  double mismatch2 = 0.0;   // E |1 - h / h_hat|^2
  std::size_t discarded = 0;
};

// Monte-Carlo channel moments over joint (h, delta) draws; estimates with
// |h_hat| below the deep-fade threshold are discarded and counted.
ChannelMoments channel_moments(const ChannelConfig& cfg, std::size_t samples, Rng& rng);

// Convergence bound evaluated on a finished trace: per-round realized
// tau, beta and channel moduli enter the sums directly. Requires
// eta <= 1 / L.
BoundTerms convergence_bound(const BoundConstants& c, const RunTrace& trace, double eta);

struct TaylorCheck {
  double exact = 0.0;        // |1 - h/h_hat|, direct route
  double first_order = 0.0;  // |delta / h_hat|, identity route
  double residual = 0.0;     // | exact - |delta / h| |
};

// Compares the exact mismatch factor against its first-order expansion.
TaylorCheck taylor_check(ComplexGain h, ComplexGain delta);

struct DescentReport {
  double mean_grad_norm2 = 0.0;  // average over recorded eval points
  double min_grad_norm2 = 0.0;
  BoundTerms terms;
  bool mean_within_bound = false;
  bool min_within_bound = false;
  int eval_points = 0;
};

// Advisory comparison of realized gradient norms against the bound total;
// empirical averages versus expectations, so violations are reported, not
// fatal.
DescentReport descent_check(const RunTrace& trace, const BoundConstants& c, double eta);

}  // namespace airfl
