#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "airfl/dataset.hpp"
#include "airfl/rng.hpp"

namespace airfl {

// Flat parameter vector of a run; length stays fixed once created.
using ModelVector = std::vector<double>;

// Softmax-regression parameter layout over a flat ModelVector:
// feature-major weights W[j * C + c] for j < feature_dim, then C biases.
// dim() = C * feature_dim + C.
struct SoftmaxLayout {
  std::size_t feature_dim = 0;
  int classes = 0;

  std::size_t dim() const {
    return feature_dim * static_cast<std::size_t>(classes) +
           static_cast<std::size_t>(classes);
  }
  std::size_t weight_index(std::size_t feature, int cls) const {
    return feature * static_cast<std::size_t>(classes) + static_cast<std::size_t>(cls);
  }
  std::size_t bias_index(int cls) const {
    return feature_dim * static_cast<std::size_t>(classes) + static_cast<std::size_t>(cls);
  }
  ModelVector zeros() const { return ModelVector(dim(), 0.0); }
};

// Row-wise class probabilities, max-subtracted for stability. Output is
// rows.size() x C, row-major; every row sums to 1.
std::vector<double> softmax_probs(const SoftmaxLayout& layout, const ModelVector& x,
                                  const Dataset& data, std::span<const std::size_t> rows);

// Mean cross-entropy over the batch and its exact analytic gradient.
double loss_and_grad(const SoftmaxLayout& layout, const ModelVector& x,
                     const Dataset& data, std::span<const std::size_t> batch,
                     ModelVector& grad_out);

double loss_only(const SoftmaxLayout& layout, const ModelVector& x,
                 const Dataset& data, std::span<const std::size_t> batch);

// Record of one client's local descent: cumulative updates
// delta(k) = x_k - x_0 for k = 1..k_max, their norms, and per-step
// stochastic gradient norms. Replaying the same substream reproduces the
// trajectory bit-exactly.
struct SgdTrajectory {
  std::vector<ModelVector> cumulative;   // cumulative[k-1] = delta(k)
  std::vector<double> cumulative_norm;   // ||delta(k)||
  std::vector<double> grad_norm;         // ||g_k||

  int max_steps() const { return static_cast<int>(cumulative.size()); }
  const ModelVector& delta(int k) const { return cumulative.at(static_cast<std::size_t>(k) - 1); }
  double delta_norm(int k) const { return cumulative_norm.at(static_cast<std::size_t>(k) - 1); }
};

// Core recurrence x_{k+1} = x_k - eta * g(x_k), recording every cumulative
// update. The gradient callable may draw from the provided stream.
using StochasticGradFn = std::function<void(const ModelVector&, Rng&, ModelVector&)>;
SgdTrajectory sgd_trajectory(const ModelVector& x0, double eta, int k_max,
                             const StochasticGradFn& grad, Rng& rng);

// Plain SGD from x0 on the client's shard: each step samples `batch_size`
// indices uniformly with replacement from `shard` and moves against the
// mean batch gradient. Records delta(k) for every k so the caller can stop
// at any k <= k_max after the fact.
SgdTrajectory local_sgd(const SoftmaxLayout& layout, const ModelVector& x0,
                        const Dataset& data, std::span<const std::size_t> shard,
                        double eta, int k_max, int batch_size, Rng& rng);

struct EvalResult {
  double loss = 0.0;
  double accuracy = 0.0;
};

// Mean loss and argmax accuracy over the full set; argmax ties go to the
// lowest class index.
EvalResult evaluate(const SoftmaxLayout& layout, const ModelVector& x, const Dataset& test);

// Full-batch gradient over an index set (loss gradient of the mean).
ModelVector full_gradient(const SoftmaxLayout& layout, const ModelVector& x,
                          const Dataset& data, std::span<const std::size_t> rows);

// Small vector helpers shared by the round engines and tests.
double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& a);

}  // namespace airfl
