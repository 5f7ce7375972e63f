#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace airfl {

// Labeled feature matrix. Features are row-major, n x feature_dim.
struct Dataset {
  std::vector<double> features;
  std::vector<int> labels;
  std::size_t feature_dim = 0;
  int num_classes = 0;

  std::size_t size() const { return labels.size(); }
  const double* row(std::size_t i) const { return features.data() + i * feature_dim; }
};

// Per-client index lists into a shared Dataset plus aggregation weights.
// Index lists are disjoint; weights are |D_i| / sum_j |D_j|.
struct ClientPartition {
  std::vector<std::vector<std::size_t>> client_indices;
  std::vector<double> weights;

  std::size_t clients() const { return client_indices.size(); }
};

// Reads an image/label pair in IDX format (big-endian magic 2051/2049,
// big-endian dimension sizes, raw row-major bytes). Pixels are scaled to
// [0, 1]; the class count is fixed at 10.
Dataset load_mnist_idx(const std::string& image_path, const std::string& label_path);

// Gaussian-mixture classification fixture: `classes` centers scaled so the
// minimum pairwise center distance equals `separation`, unit isotropic
// noise, labels assigned round-robin. Deterministic for a fixed seed.
Dataset synthetic_logreg(std::size_t dim, std::size_t n, int classes,
                         double separation, std::uint64_t seed);

// Label-based non-IID split: sort indices by label (ties by original index),
// cut each label's run into equal-size shards, and deal shards to clients in
// label-major round-robin order so every client covers exactly p distinct
// labels. Labels are truncated to a common usable count first, so all
// clients end up with identical sample counts and weights of exactly 1/m.
// Requires m * p divisible by the class count.
ClientPartition partition_noniid(const Dataset& data, std::size_t m, int p);

}  // namespace airfl
