#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace airfl {

// SplitMix64 finalizer. Stable across platforms and compilers; this is the
// documented hash behind every substream id, so traces are reproducible
// from (master seed, round, client, purpose) alone.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

// Purpose tag of a random substream. Each (round, client, purpose) triple
// owns an independent stream, so client work can run in any order or thread
// count without changing a single draw, and adding clients never disturbs
// the streams of existing (round, client) pairs.
enum class Stream : std::uint64_t {
  kFading = 1,
  kCsiError = 2,
  kAwgn = 3,
  kLocalSgd = 4,
  kSynthetic = 5,
  kPilot = 6,
  kPilotChannel = 7,
  kProbe = 8,
  kMoments = 9,
};

// Reserved client id for round-level streams (e.g. the AWGN vector).
inline constexpr std::uint64_t kServerStream = 0xffffffffull;

constexpr std::uint64_t substream_id(std::uint64_t master, std::uint64_t round,
                                     std::uint64_t client, Stream purpose) {
  constexpr std::uint64_t kPhi = 0x9e3779b97f4a7c15ull;
  std::uint64_t h = mix64(master + kPhi);
  h = mix64(h ^ (round + kPhi));
  h = mix64(h ^ (client + kPhi));
  h = mix64(h ^ (static_cast<std::uint64_t>(purpose) + kPhi));
  return h;
}

// Deterministic generator: mt19937_64 is bit-exact per the standard, and the
// uniform/gaussian transforms below avoid the implementation-defined
// std::*_distribution adaptors.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller on two uniforms; the sine branch is
  // cached so consecutive calls consume draws in pairs.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]; keeps log() finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  // Circularly symmetric complex Gaussian CN(0, var): independent real and
  // imaginary parts, each with variance var / 2.
  std::complex<double> complex_gaussian(double var) {
    const double s = std::sqrt(var / 2.0);
    const double re = gaussian();
    const double im = gaussian();
    return {s * re, s * im};
  }

  // Uniform integer in [0, n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline Rng make_stream(std::uint64_t master, std::uint64_t round,
                       std::uint64_t client, Stream purpose) {
  return Rng(substream_id(master, round, client, purpose));
}

}  // namespace airfl
