#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "airfl/rng.hpp"

namespace airfl {

using ComplexGain = std::complex<double>;
using ComplexVector = std::vector<std::complex<double>>;

// One client's channel state for one round: true gain, estimation error,
// and the estimate the client acts on. h_hat == h + delta always.
struct ChannelDraw {
  ComplexGain h{1.0, 0.0};
  ComplexGain delta{0.0, 0.0};
  ComplexGain h_hat{1.0, 0.0};
};

enum class ChannelMode { kFading, kNoFading };
enum class CsiMode { kPerfect, kImperfect, kMeanCsi };

struct ChannelConfig {
  double sigma_h2 = 1.0;    // fading variance of h ~ CN(0, sigma_h2)
  double sigma_est2 = 0.0;  // estimation-error variance of delta
  double sigma_c2 = 0.0;    // AWGN variance per complex receive coordinate
  ChannelMode mode = ChannelMode::kFading;
  CsiMode csi = CsiMode::kPerfect;
};

// Rayleigh block-fading gain: h ~ CN(0, sigma_h2), real/imaginary parts
// independent Gaussians of variance sigma_h2 / 2 (Box-Muller draws).
ComplexGain sample_fading(const ChannelConfig& cfg, Rng& rng);

// Attaches the client-side estimate to a true gain. Imperfect CSI adds
// delta ~ CN(0, sigma_est2); mean-CSI replaces the estimate with the mean
// fading modulus sigma_h * sqrt(pi)/2 at zero phase (the fast-fading
// variant, where only the fading distribution is known).
ChannelDraw estimate_csi(ComplexGain h, const ChannelConfig& cfg, Rng& rng);

// Full per-client draw for one round: no_fading pins h = h_hat = 1.
ChannelDraw draw_channel(const ChannelConfig& cfg, Rng& fading_rng, Rng& csi_rng);

// Uplink MAC: y = sum_i h_i * z_i + w with w entries CN(0, sigma_c2).
// All z_i must have length d.
ComplexVector mac_superpose(const std::vector<std::pair<ComplexGain, const ComplexVector*>>& signals,
                            double sigma_c2, std::size_t d, Rng& rng);

// Noise variance hitting the stated maximum SNR: per-symbol signal power
// P/d over per-coordinate noise variance, so sigma_c2 = (P/d) / 10^(snr/10).
double calibrate_noise(double power, double snr_db, std::size_t d);

// Consumers dividing by h_hat must reject estimates below this modulus.
inline constexpr double kDeepFadeEpsilon = 1e-6;

}  // namespace airfl
