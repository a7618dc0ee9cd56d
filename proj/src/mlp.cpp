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

#include "symdec/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "symdec/kernels.hpp"
#include "symdec/philox.hpp"

namespace symdec {

namespace {

constexpr double kAdamBeta1 = 0.9;
constexpr double kAdamBeta2 = 0.999;
constexpr double kAdamEpsilon = 1e-8;
constexpr double kLogFloor = 1e-30;  // clamp before ln to dodge -inf

void check_net(const NetworkParams& net) {
  if (net.layer_sizes.size() < 2)
    throw std::invalid_argument("network needs input and output layers");
  for (int s : net.layer_sizes)
    if (s < 1) throw std::invalid_argument("layer sizes must be positive");
  if (net.weights.size() + 1 != net.layer_sizes.size() ||
      net.biases.size() != net.weights.size())
    throw std::invalid_argument("parameter blocks do not match layer sizes");
  for (std::size_t l = 0; l < net.weights.size(); ++l) {
    std::size_t in = net.layer_sizes[l], out = net.layer_sizes[l + 1];
    if (net.weights[l].size() != in * out || net.biases[l].size() != out)
      throw std::invalid_argument("parameter blocks do not match layer sizes");
  }
}

// acts[0] must hold the (count x input) batch; fills acts[1..L] and applies
// softmax on the final layer.
void forward_batch(const NetworkParams& net, int count,
                   std::vector<std::vector<double>>& acts) {
  const kernels::Ops& K = kernels::ops();
  int n_layers = net.num_layers();
  for (int l = 0; l < n_layers; ++l) {
    int in = net.layer_sizes[l];
    int out = net.layer_sizes[l + 1];
    const double* w = net.weights[l].data();
    const double* b = net.biases[l].data();
    acts[l + 1].resize(static_cast<std::size_t>(count) * out);
    for (int s = 0; s < count; ++s) {
      const double* x = acts[l].data() + static_cast<std::size_t>(s) * in;
      double* y = acts[l + 1].data() + static_cast<std::size_t>(s) * out;
      for (int o = 0; o < out; ++o)
        y[o] = K.dot(w + static_cast<std::size_t>(o) * in, x, in) + b[o];
      if (l + 1 < n_layers) {
        K.relu(y, out);
      } else {
        double peak = y[0];
        for (int o = 1; o < out; ++o) peak = std::max(peak, y[o]);
        double total = 0.0;
        for (int o = 0; o < out; ++o) {
          y[o] = std::exp(y[o] - peak);
          total += y[o];
        }
        for (int o = 0; o < out; ++o) y[o] /= total;
      }
    }
  }
}

double data_loss_from_acts(const std::vector<double>& probs,
                           const std::uint8_t* labels, int count, int out) {
  double total = 0.0;
  for (int s = 0; s < count; ++s) {
    double p = probs[static_cast<std::size_t>(s) * out + labels[s]];
    total -= std::log(std::max(p, kLogFloor));
  }
  return total / count;
}

double squared_param_norm(const NetworkParams& net) {
  const kernels::Ops& K = kernels::ops();
  double total = 0.0;
  for (const auto& w : net.weights) total += K.dot(w.data(), w.data(), w.size());
  for (const auto& b : net.biases) total += K.dot(b.data(), b.data(), b.size());
  return total;
}

// Backward pass given forward activations; fills grad (assumed zeroed) and
// leaves acts untouched.
void backward_from_acts(const NetworkParams& net,
                        const std::vector<std::vector<double>>& acts,
                        const std::uint8_t* labels, int count,
                        double weight_decay, Gradient& grad,
                        std::vector<std::vector<double>>& deltas) {
  const kernels::Ops& K = kernels::ops();
  int n_layers = net.num_layers();
  int out_final = net.layer_sizes.back();
  deltas.resize(n_layers);
  deltas[n_layers - 1].assign(
      static_cast<std::size_t>(count) * out_final, 0.0);
  {
    double inv = 1.0 / count;
    const std::vector<double>& probs = acts[n_layers];
    std::vector<double>& dz = deltas[n_layers - 1];
    for (int s = 0; s < count; ++s) {
      std::size_t base = static_cast<std::size_t>(s) * out_final;
      for (int k = 0; k < out_final; ++k) dz[base + k] = probs[base + k] * inv;
      dz[base + labels[s]] -= inv;
    }
  }
  for (int l = n_layers - 1; l >= 0; --l) {
    int in = net.layer_sizes[l];
    int out = net.layer_sizes[l + 1];
    const std::vector<double>& dz = deltas[l];
    double* dw = grad.weights[l].data();
    double* db = grad.biases[l].data();
    for (int s = 0; s < count; ++s) {
      const double* ap = acts[l].data() + static_cast<std::size_t>(s) * in;
      const double* dzs = dz.data() + static_cast<std::size_t>(s) * out;
      for (int o = 0; o < out; ++o) {
        if (dzs[o] == 0.0) continue;
        K.axpy(dzs[o], ap, dw + static_cast<std::size_t>(o) * in, in);
        db[o] += dzs[o];
      }
    }
    if (l > 0) {
      deltas[l - 1].assign(static_cast<std::size_t>(count) * in, 0.0);
      std::vector<double>& dprev = deltas[l - 1];
      const double* w = net.weights[l].data();
      for (int s = 0; s < count; ++s) {
        double* dps = dprev.data() + static_cast<std::size_t>(s) * in;
        const double* dzs = dz.data() + static_cast<std::size_t>(s) * out;
        for (int o = 0; o < out; ++o) {
          if (dzs[o] == 0.0) continue;
          K.axpy(dzs[o], w + static_cast<std::size_t>(o) * in, dps, in);
        }
        // ReLU subgradient: zero where the activation was clamped
        const double* a = acts[l].data() + static_cast<std::size_t>(s) * in;
        for (int i = 0; i < in; ++i)
          if (a[i] <= 0.0) dps[i] = 0.0;
      }
    }
  }
  if (weight_decay != 0.0) {
    for (int l = 0; l < n_layers; ++l) {
      K.axpy(2.0 * weight_decay, net.weights[l].data(),
             grad.weights[l].data(), grad.weights[l].size());
      K.axpy(2.0 * weight_decay, net.biases[l].data(), grad.biases[l].data(),
             grad.biases[l].size());
    }
  }
}

}  // namespace

NetworkParams NetworkParams::zeros(const std::vector<int>& layer_sizes) {
  NetworkParams net;
  net.layer_sizes = layer_sizes;
  if (layer_sizes.size() < 2)
    throw std::invalid_argument("network needs input and output layers");
  for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
    if (layer_sizes[l] < 1 || layer_sizes[l + 1] < 1)
      throw std::invalid_argument("layer sizes must be positive");
    net.weights.emplace_back(
        static_cast<std::size_t>(layer_sizes[l]) * layer_sizes[l + 1], 0.0);
    net.biases.emplace_back(layer_sizes[l + 1], 0.0);
  }
  return net;
}

std::size_t NetworkParams::num_params() const {
  std::size_t total = 0;
  for (const auto& w : weights) total += w.size();
  for (const auto& b : biases) total += b.size();
  return total;
}

Gradient Gradient::zeros_like(const NetworkParams& net) {
  Gradient g;
  for (const auto& w : net.weights) g.weights.emplace_back(w.size(), 0.0);
  for (const auto& b : net.biases) g.biases.emplace_back(b.size(), 0.0);
  return g;
}

void SampleSet::append(const BitVec& bits, std::uint8_t label) {
  if (static_cast<int>(bits.size()) != input_dim)
    throw std::invalid_argument("sample width does not match the set");
  if (label >= num_classes)
    throw std::invalid_argument("label out of range");
  std::size_t stride = row_stride();
  std::size_t base = packed.size();
  packed.resize(base + stride, 0);
  for (int i = 0; i < input_dim; ++i)
    if (bits.test(i)) packed[base + (i >> 3)] |= std::uint8_t(1) << (i & 7);
  labels.push_back(label);
}

void SampleSet::expand_row(std::size_t i, double* out) const {
  std::size_t stride = row_stride();
  const std::uint8_t* row = packed.data() + i * stride;
  for (int b = 0; b < input_dim; ++b)
    out[b] = (row[b >> 3] >> (b & 7)) & 1 ? 1.0 : 0.0;
}

NetworkParams init_network(const std::vector<int>& layer_sizes,
                           std::uint64_t seed, double stddev) {
  NetworkParams net = NetworkParams::zeros(layer_sizes);
  PhiloxStream rng(seed, 0);
  for (int l = 0; l < net.num_layers(); ++l) {
    for (double& w : net.weights[l]) w = rng.next_normal(0.0, stddev);
    for (double& b : net.biases[l]) b = rng.next_normal(0.0, stddev);
  }
  return net;
}

std::vector<double> forward(const NetworkParams& net, const double* x) {
  check_net(net);
  std::vector<std::vector<double>> acts(net.num_layers() + 1);
  acts[0].assign(x, x + net.input_size());
  forward_batch(net, 1, acts);
  return acts.back();
}

int predict(const NetworkParams& net, const double* x) {
  std::vector<double> probs = forward(net, x);
  return static_cast<int>(std::max_element(probs.begin(), probs.end()) -
                          probs.begin());
}

double batch_loss(const NetworkParams& net, const double* xs,
                  const std::uint8_t* labels, int count, double weight_decay) {
  check_net(net);
  if (count < 1) throw std::invalid_argument("empty batch");
  std::vector<std::vector<double>> acts(net.num_layers() + 1);
  acts[0].assign(xs, xs + static_cast<std::size_t>(count) * net.input_size());
  forward_batch(net, count, acts);
  double loss = data_loss_from_acts(acts.back(), labels, count,
                                    net.output_size());
  if (weight_decay != 0.0) loss += weight_decay * squared_param_norm(net);
  return loss;
}

Gradient batch_gradient(const NetworkParams& net, const double* xs,
                        const std::uint8_t* labels, int count,
                        double weight_decay) {
  check_net(net);
  if (count < 1) throw std::invalid_argument("empty batch");
  std::vector<std::vector<double>> acts(net.num_layers() + 1);
  acts[0].assign(xs, xs + static_cast<std::size_t>(count) * net.input_size());
  forward_batch(net, count, acts);
  Gradient grad = Gradient::zeros_like(net);
  std::vector<std::vector<double>> deltas;
  backward_from_acts(net, acts, labels, count, weight_decay, grad, deltas);
  return grad;
}

TrainResult train(const SampleSet& data, const TrainConfig& config) {
  if (data.size() == 0) throw std::invalid_argument("empty sample set");
  if (data.input_dim < 1) throw std::invalid_argument("bad input width");
  if (config.batch_size < 1) throw std::invalid_argument("bad batch size");
  if (config.num_iterations < 0) throw std::invalid_argument("bad iteration count");
  if (config.record_interval < 1) throw std::invalid_argument("bad record interval");
  if (!(config.validation_fraction >= 0.0 && config.validation_fraction < 1.0))
    throw std::invalid_argument("validation fraction must lie in [0, 1)");

  std::vector<int> layer_sizes;
  layer_sizes.push_back(data.input_dim);
  for (int h : config.hidden_sizes) layer_sizes.push_back(h);
  layer_sizes.push_back(data.num_classes);
  NetworkParams net = init_network(layer_sizes, config.seed, config.init_stddev);

  // Seeded-permutation holdout split (stream 2 of the seed).
  std::size_t n = data.size();
  std::vector<std::uint64_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  PhiloxStream split_rng(config.seed, 2);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t j = i + split_rng.next_below(n - i);
    std::swap(perm[i], perm[j]);
  }
  std::size_t val_count = static_cast<std::size_t>(
      std::llround(config.validation_fraction * static_cast<double>(n)));
  std::size_t train_count = n - val_count;
  if (train_count == 0) throw std::invalid_argument("no training samples left");

  int in_dim = data.input_dim;
  int out_dim = data.num_classes;
  std::vector<double> val_x(val_count * in_dim);
  std::vector<std::uint8_t> val_y(val_count);
  for (std::size_t i = 0; i < val_count; ++i) {
    data.expand_row(perm[i], val_x.data() + i * in_dim);
    val_y[i] = data.labels[perm[i]];
  }

  const kernels::Ops& K = kernels::ops();
  Gradient adam_m = Gradient::zeros_like(net);
  Gradient adam_v = Gradient::zeros_like(net);
  Gradient grad = Gradient::zeros_like(net);
  double b1_pow = 1.0, b2_pow = 1.0;

  int batch = config.batch_size;
  std::vector<std::vector<double>> acts(net.num_layers() + 1);
  std::vector<std::vector<double>> deltas;
  std::vector<std::uint8_t> batch_y(batch);
  PhiloxStream batch_rng(config.seed, 1);

  auto validation_point = [&](double* vloss, double* verr) {
    if (val_count == 0) {
      *vloss = std::numeric_limits<double>::quiet_NaN();
      *verr = std::numeric_limits<double>::quiet_NaN();
      return;
    }
    std::vector<std::vector<double>> vacts(net.num_layers() + 1);
    double nll = 0.0;
    std::size_t wrong = 0;
    std::size_t chunk = std::min<std::size_t>(val_count, 4096);
    for (std::size_t start = 0; start < val_count; start += chunk) {
      std::size_t cnt = std::min(chunk, val_count - start);
      vacts[0].assign(val_x.begin() + start * in_dim,
                      val_x.begin() + (start + cnt) * in_dim);
      forward_batch(net, static_cast<int>(cnt), vacts);
      const std::vector<double>& probs = vacts.back();
      for (std::size_t s = 0; s < cnt; ++s) {
        const double* row = probs.data() + s * out_dim;
        int label = val_y[start + s];
        nll -= std::log(std::max(row[label], kLogFloor));
        int arg = static_cast<int>(
            std::max_element(row, row + out_dim) - row);
        if (arg != label) ++wrong;
      }
    }
    *vloss = nll / static_cast<double>(val_count);
    *verr = static_cast<double>(wrong) / static_cast<double>(val_count);
  };

  std::vector<CurvePoint> curves;
  auto record = [&](std::int64_t it, double train_loss) {
    double vl, ve;
    validation_point(&vl, &ve);
    curves.push_back({it, train_loss, vl, ve});
  };

  for (std::int64_t it = 0; it < config.num_iterations; ++it) {
    acts[0].resize(static_cast<std::size_t>(batch) * in_dim);
    for (int b = 0; b < batch; ++b) {
      std::size_t idx = perm[val_count + batch_rng.next_below(train_count)];
      data.expand_row(idx, acts[0].data() + static_cast<std::size_t>(b) * in_dim);
      batch_y[b] = data.labels[idx];
    }
    forward_batch(net, batch, acts);
    double loss = data_loss_from_acts(acts.back(), batch_y.data(), batch,
                                      out_dim);
    if (config.weight_decay != 0.0)
      loss += config.weight_decay * squared_param_norm(net);
    if (it % config.record_interval == 0) record(it, loss);

    for (auto& block : grad.weights) std::fill(block.begin(), block.end(), 0.0);
    for (auto& block : grad.biases) std::fill(block.begin(), block.end(), 0.0);
    backward_from_acts(net, acts, batch_y.data(), batch, config.weight_decay,
                       grad, deltas);

    b1_pow *= kAdamBeta1;
    b2_pow *= kAdamBeta2;
    double m_corr = 1.0 / (1.0 - b1_pow);
    double v_corr = 1.0 / (1.0 - b2_pow);
    for (int l = 0; l < net.num_layers(); ++l) {
      K.adam_step(net.weights[l].data(), adam_m.weights[l].data(),
                  adam_v.weights[l].data(), grad.weights[l].data(),
                  net.weights[l].size(), config.learning_rate, kAdamBeta1,
                  kAdamBeta2, kAdamEpsilon, m_corr, v_corr);
      K.adam_step(net.biases[l].data(), adam_m.biases[l].data(),
                  adam_v.biases[l].data(), grad.biases[l].data(),
                  net.biases[l].size(), config.learning_rate, kAdamBeta1,
                  kAdamBeta2, kAdamEpsilon, m_corr, v_corr);
    }
  }

  // Closing point on the interval grid: the last minibatch re-evaluated
  // under the final parameters.
  if (config.num_iterations % config.record_interval == 0) {
    double final_loss = std::numeric_limits<double>::quiet_NaN();
    if (config.num_iterations > 0) {
      forward_batch(net, batch, acts);
      final_loss = data_loss_from_acts(acts.back(), batch_y.data(), batch,
                                       out_dim);
      if (config.weight_decay != 0.0)
        final_loss += config.weight_decay * squared_param_norm(net);
    }
    record(config.num_iterations, final_loss);
  }

  return {std::move(net), std::move(curves)};
}

}  // namespace symdec
