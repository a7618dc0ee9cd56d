// Copyright 2026 The symdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMDEC_MLP_HPP
#define SYMDEC_MLP_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symdec/bitvec.hpp"

namespace symdec {

// Fully connected feed-forward classifier: ReLU hidden layers, softmax
// output. Weights are row-major (out x in); forward for layer l is
// a_l = relu(W_l a_{l-1} + b_l), with softmax on the last layer.
struct NetworkParams {
  std::vector<int> layer_sizes;              // input, hidden..., output
  std::vector<std::vector<double>> weights;  // one (out x in) block per layer
  std::vector<std::vector<double>> biases;   // one (out) block per layer

  static NetworkParams zeros(const std::vector<int>& layer_sizes);

  int input_size() const { return layer_sizes.front(); }
  int output_size() const { return layer_sizes.back(); }
  int num_layers() const { return static_cast<int>(weights.size()); }
  std::size_t num_params() const;
};

// Same shapes as the parameters; used for analytic gradients and Adam state.
struct Gradient {
  std::vector<std::vector<double>> weights;
  std::vector<std::vector<double>> biases;

  static Gradient zeros_like(const NetworkParams& net);
};

// Classification samples with bit-packed inputs (expanded to 0.0/1.0 doubles
// per batch, which keeps million-sample sets small in memory).
struct SampleSet {
  int input_dim = 0;
  int num_classes = 16;
  std::vector<std::uint8_t> packed;  // row_stride() bytes per sample, LSB first
  std::vector<std::uint8_t> labels;

  std::size_t size() const { return labels.size(); }
  std::size_t row_stride() const {
    return (static_cast<std::size_t>(input_dim) + 7) / 8;
  }
  void append(const BitVec& bits, std::uint8_t label);
  void expand_row(std::size_t i, double* out) const;
};

struct TrainConfig {
  std::vector<int> hidden_sizes = {500, 250};
  std::int64_t num_iterations = 100000;
  double learning_rate = 1e-3;
  int batch_size = 1000;
  double weight_decay = 0.0;   // lambda in loss + lambda * |theta|^2
  double init_stddev = 0.01;   // N(0, stddev) initial weights and biases
  std::uint64_t seed = 0;
  double validation_fraction = 0.05;
  std::int64_t record_interval = 1000;
};

struct CurvePoint {
  std::int64_t iteration;
  double train_loss;  // minibatch objective, regularizer included
  double val_loss;    // mean negative log likelihood on held-out samples
  double val_error;   // held-out misclassification fraction
};

struct TrainResult {
  NetworkParams net;
  std::vector<CurvePoint> curves;
};

// Gaussian-initialized parameters; the draw order (per layer: weights
// row-major, then biases) is part of the reproducibility contract.
NetworkParams init_network(const std::vector<int>& layer_sizes,
                           std::uint64_t seed, double stddev);

// Softmax probabilities for one input vector.
std::vector<double> forward(const NetworkParams& net, const double* x);
int predict(const NetworkParams& net, const double* x);

// Mean objective over a batch: negative log likelihood of the labels plus
// weight_decay times the squared parameter norm.
double batch_loss(const NetworkParams& net, const double* xs,
                  const std::uint8_t* labels, int count, double weight_decay);

// Analytic gradient of batch_loss.
Gradient batch_gradient(const NetworkParams& net, const double* xs,
                        const std::uint8_t* labels, int count,
                        double weight_decay);

// Adam on minibatches sampled with replacement. Deterministic for a fixed
// config: initialization, batch choice and the validation split all derive
// from config.seed. Curve points are recorded every record_interval
// iterations (pre-update) and once more after the final update.
TrainResult train(const SampleSet& data, const TrainConfig& config);

// JSON model serialization; metadata is free-form and round-trips.
void save_model(const std::string& path, const NetworkParams& net,
                const std::map<std::string, std::string>& metadata);
NetworkParams load_model(const std::string& path,
                         std::map<std::string, std::string>* metadata = nullptr);

void write_curves_csv(const std::string& path,
                      const std::vector<CurvePoint>& curves);

}  // namespace symdec

#endif
