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

#include "symdec/hld.hpp"

#include <thread>
#include <vector>

namespace symdec {

namespace {

int clamp_jobs(int jobs) {
  if (jobs < 1) throw std::invalid_argument("job count must be positive");
  return jobs;
}

// Split [0, total) into `jobs` chunks and run fn(chunk begin, chunk end) on
// each; results must be combined in chunk order by the caller for
// determinism.
template <typename Fn>
void run_chunks(std::uint64_t total, int jobs, Fn fn) {
  jobs = clamp_jobs(jobs);
  if (jobs == 1 || total < 2) {
    fn(0, std::uint64_t{0}, total);
    return;
  }
  std::uint64_t per = total / jobs;
  std::uint64_t extra = total % jobs;
  std::vector<std::thread> workers;
  std::uint64_t begin = 0;
  for (int j = 0; j < jobs; ++j) {
    std::uint64_t len = per + (static_cast<std::uint64_t>(j) < extra ? 1 : 0);
    std::uint64_t end = begin + len;
    workers.emplace_back([fn, j, begin, end] { fn(j, begin, end); });
    begin = end;
  }
  for (auto& w : workers) w.join();
}

}  // namespace

const char* underlying_name(Underlying u) {
  switch (u) {
    case Underlying::Mwpm:
      return "mwpm";
    case Underlying::Trivial:
      return "trivial";
  }
  return "unknown";
}

const char* symmetry_name(SymmetryMode m) {
  switch (m) {
    case SymmetryMode::None:
      return "none";
    case SymmetryMode::Center:
      return "center";
    case SymmetryMode::Align:
      return "align";
  }
  return "unknown";
}

DecoderFn base_decoder(const CodeGeometry& g, Underlying u) {
  if (u == Underlying::Mwpm)
    return [g](const Syndrome& s) { return mwpm_decode(g, s); };
  return [g](const Syndrome& s) { return trivial_decode(g, s); };
}

DecoderFn wrapped_decoder(const CodeGeometry& g, Underlying u,
                          SymmetryMode mode) {
  DecoderFn base = base_decoder(g, u);
  if (mode == SymmetryMode::None) return base;
  return [g, base, mode](const Syndrome& s) {
    return wrapped_decode(g, base, mode, s);
  };
}

TrainingSample make_sample(const CodeGeometry& g, const DecoderFn& base,
                           SymmetryMode mode, const PauliChain& error) {
  Syndrome s = syndrome_of(g, error);
  auto [canonical, t] = canonicalize(g, s, mode);
  PauliChain in_frame_recovery = base(canonical);
  PauliChain residual =
      multiply(apply(g, t, error), in_frame_recovery);
  int label = logical_class(g, residual);
  return {canonical.bits, static_cast<std::uint8_t>(label)};
}

SampleSet generate_dataset(const CodeGeometry& g, const DatasetSpec& spec,
                           int jobs) {
  if (spec.L != g.L())
    throw std::invalid_argument("dataset spec does not match lattice");
  NoiseModel model(spec.p_train, spec.seed);
  SampleSet set;
  set.input_dim = g.num_edges();
  set.num_classes = 16;
  std::size_t stride = set.row_stride();
  set.packed.assign(stride * spec.count, 0);
  set.labels.assign(spec.count, 0);
  DecoderFn base = base_decoder(g, spec.underlying);
  run_chunks(spec.count, jobs,
             [&](int, std::uint64_t begin, std::uint64_t end) {
               for (std::uint64_t i = begin; i < end; ++i) {
                 PauliChain error = sample_error(g, model, i);
                 TrainingSample sample = make_sample(g, base, spec.symmetry,
                                                     error);
                 std::uint8_t* row = set.packed.data() + i * stride;
                 for (int b = 0; b < set.input_dim; ++b)
                   if (sample.input.test(b))
                     row[b >> 3] |= std::uint8_t(1) << (b & 7);
                 set.labels[i] = sample.label;
               }
             });
  return set;
}

PauliChain hld_decode(const CodeGeometry& g, const NetworkParams& net,
                      const DecoderFn& base, SymmetryMode mode,
                      const Syndrome& s) {
  if (net.input_size() != g.num_edges() || net.output_size() != 16)
    throw std::invalid_argument("network shape does not match the lattice");
  auto [canonical, t] = canonicalize(g, s, mode);
  PauliChain correction = base(canonical);
  PauliChain recovery = apply(g, inverse(g, t), correction);
  std::vector<double> x(net.input_size());
  for (int i = 0; i < net.input_size(); ++i)
    x[i] = canonical.bits.test(i) ? 1.0 : 0.0;
  int canonical_label = predict(net, x.data());
  int label = relabel_logical(canonical_label, t);
  return multiply(recovery, chain_with_class(g, label));
}

DecoderFn hld_decoder(const CodeGeometry& g,
                      std::shared_ptr<const NetworkParams> net, Underlying u,
                      SymmetryMode mode) {
  if (!net) throw std::invalid_argument("missing network");
  DecoderFn base = base_decoder(g, u);
  return [g, net, base, mode](const Syndrome& s) {
    return hld_decode(g, *net, base, mode, s);
  };
}

std::pair<std::uint64_t, std::uint64_t> logical_error_rate(
    const CodeGeometry& g, const DecoderFn& decoder, double p,
    std::uint64_t trials, std::uint64_t seed, int jobs) {
  NoiseModel model(p, seed);
  jobs = clamp_jobs(jobs);
  std::vector<std::uint64_t> failures(jobs, 0);
  run_chunks(trials, jobs, [&](int j, std::uint64_t begin, std::uint64_t end) {
    std::uint64_t local = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      PauliChain error = sample_error(g, model, i);
      Syndrome s = syndrome_of(g, error);
      PauliChain recovery = decoder(s);
      if (!is_success(g, error, recovery)) ++local;
    }
    failures[j] += local;
  });
  std::uint64_t total = 0;
  for (std::uint64_t f : failures) total += f;
  return {total, trials};
}

}  // namespace symdec
