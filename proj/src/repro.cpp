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

#include "symdec/repro.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "symdec/blossom.hpp"
#include "symdec/matching.hpp"
#include "symdec/mlp.hpp"
#include "symdec/noise.hpp"
#include "symdec/pauli.hpp"
#include "symdec/philox.hpp"

namespace symdec {
namespace {

Syndrome syndrome_from_masks(const CodeGeometry& g, std::uint32_t vmask,
                             std::uint32_t fmask) {
  const int n = g.num_vertices();
  Syndrome s(g);
  for (int i = 0; i < n; ++i) {
    if ((vmask >> i) & 1u) s.bits.set(static_cast<std::size_t>(i), true);
    if ((fmask >> i) & 1u) s.bits.set(static_cast<std::size_t>(n + i), true);
  }
  return s;
}

}  // namespace

std::optional<TranslationWitness> find_translation_witness(
    const CodeGeometry& g) {
  const int n = g.num_vertices();
  if (n > 8)
    throw std::invalid_argument(
        "exhaustive syndrome search is limited to tiny lattices");
  const std::uint32_t limit = 1u << n;
  const DecoderFn base = [&g](const Syndrome& s) { return mwpm_decode(g, s); };

  for (std::uint32_t vmask = 0; vmask < limit; ++vmask) {
    if (std::popcount(vmask) % 2 != 0) continue;
    for (std::uint32_t fmask = 0; fmask < limit; ++fmask) {
      if (std::popcount(fmask) % 2 != 0) continue;
      if (vmask == 0 && fmask == 0) continue;
      const Syndrome s = syndrome_from_masks(g, vmask, fmask);
      const PauliChain r = mwpm_decode(g, s);
      const PauliChain w = wrapped_decode(g, base, SymmetryMode::Center, s);

      for (int dr = 0; dr < g.L(); ++dr) {
        for (int dc = 0; dc < g.L(); ++dc) {
          if (dr == 0 && dc == 0) continue;
          const Syndrome st = translate_syndrome(g, s, dr, dc);
          const PauliChain rt = mwpm_decode(g, st);
          const PauliChain diff =
              multiply(rt, translate_chain(g, r, dr, dc));
          const int cls = logical_class(g, diff);
          if (cls == 0 || (cls & 0b1010) != 0) continue;  // want pure X

          const PauliChain wt =
              wrapped_decode(g, base, SymmetryMode::Center, st);
          if (wt == translate_chain(g, w, dr, dc))
            return TranslationWitness{s, Transform{dr, dc, false}, cls};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<OrderingWitness> find_ordering_witness(const CodeGeometry& g,
                                                     std::uint64_t max_tries) {
  // Fixed constants so the demonstration is reproducible without input.
  constexpr std::uint64_t kErrorSeed = 0x0d0e5eedULL;
  constexpr double kNoise = 0.15;
  const NoiseModel model{kNoise, kErrorSeed};
  PhiloxStream transforms(kErrorSeed + 1, 0);

  const auto naive = [&](const Syndrome& s) {
    return center(g, antitransposition_representant(g, s).first).first;
  };

  for (std::uint64_t trial = 0; trial < max_tries; ++trial) {
    const Syndrome s = syndrome_of(g, sample_error(g, model, trial));
    if (!s.bits.any()) continue;
    Transform t;
    t.dr = static_cast<int>(transforms.next_below(
        static_cast<std::uint64_t>(g.L())));
    t.dc = static_cast<int>(transforms.next_below(
        static_cast<std::uint64_t>(g.L())));
    t.antitransposed = transforms.next_below(2) != 0;
    const Syndrome s2 = apply(g, t, s);

    const Syndrome a1 = align(g, s).first;
    const Syndrome a2 = align(g, s2).first;
    if (!(a1 == a2))
      throw std::logic_error("align must be constant on orbits");

    const Syndrome n1 = naive(s);
    const Syndrome n2 = naive(s2);
    if (!(n1 == n2)) return OrderingWitness{s, s2, t, n1, n2, a1};
  }
  return std::nullopt;
}

MatchingCheck check_matching_exactness(const CodeGeometry& g,
                                       std::uint64_t num_cases, double p,
                                       std::uint64_t seed,
                                       int max_detections) {
  const NoiseModel model{p, seed};
  MatchingCheck result;
  for (std::uint64_t i = 0; result.cases_checked < num_cases; ++i) {
    const Syndrome s = syndrome_of(g, sample_error(g, model, i));
    const DetectionList det = detections_of(g, s);
    const int nv = static_cast<int>(det.vertices.size());
    const int nf = static_cast<int>(det.faces.size());
    if (nv > max_detections || nf > max_detections) continue;
    ++result.cases_checked;

    bool ok = true;
    for (int pass = 0; pass < 2; ++pass) {
      const std::vector<int>& sites = pass == 0 ? det.vertices : det.faces;
      const SiteKind kind = pass == 0 ? SiteKind::Vertex : SiteKind::Face;
      const int m = static_cast<int>(sites.size());
      if (m == 0) continue;
      std::vector<std::int64_t> w(static_cast<std::size_t>(m) * m, 0);
      for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
          const std::int64_t d = torus_distance(g, Site{kind, sites[a]},
                                                Site{kind, sites[b]});
          w[static_cast<std::size_t>(a) * m + b] = d;
          w[static_cast<std::size_t>(b) * m + a] = d;
        }
      }
      const std::vector<int> mate = min_weight_perfect_matching(m, w);
      if (matching_weight(mate, w) != brute_force_matching_weight(m, w))
        ok = false;
    }
    if (!ok) ++result.mismatches;
  }
  return result;
}

SymmetryCheck check_symmetry_properties(const CodeGeometry& g,
                                        std::uint64_t num_syndromes,
                                        std::uint64_t num_chains, double p,
                                        std::uint64_t seed) {
  SymmetryCheck out;
  const NoiseModel model{p, seed};
  PhiloxStream rng(seed + 1, 0);
  const std::uint64_t L = static_cast<std::uint64_t>(g.L());
  const std::size_t n_edges = static_cast<std::size_t>(g.num_edges());

  const auto expect = [&out](bool cond) {
    ++out.cases_checked;
    if (!cond) ++out.failures;
  };

  for (std::uint64_t i = 0; i < num_syndromes; ++i) {
    const Syndrome s = syndrome_of(g, sample_error(g, model, i));
    const int dr = static_cast<int>(rng.next_below(L));
    const int dc = static_cast<int>(rng.next_below(L));
    Transform t;
    t.dr = static_cast<int>(rng.next_below(L));
    t.dc = static_cast<int>(rng.next_below(L));
    t.antitransposed = rng.next_below(2) != 0;

    const auto [c0, tc] = center(g, s);
    expect(apply(g, tc, s) == c0);
    expect(center(g, c0).first == c0);
    expect(center(g, translate_syndrome(g, s, dr, dc)).first == c0);

    const auto [a0, ta] = align(g, s);
    expect(apply(g, ta, s) == a0);
    expect(align(g, a0).first == a0);
    expect(align(g, apply(g, t, s)).first == a0);
  }

  for (std::uint64_t j = 0; j < num_chains; ++j) {
    PauliChain c(n_edges);
    for (std::size_t e = 0; e < n_edges; ++e) {
      if (rng.next_below(2)) c.x.set(e, true);
      if (rng.next_below(2)) c.z.set(e, true);
    }
    Transform t;
    t.dr = static_cast<int>(rng.next_below(L));
    t.dc = static_cast<int>(rng.next_below(L));
    t.antitransposed = rng.next_below(2) != 0;
    expect(syndrome_of(g, apply(g, t, c)) == apply(g, t, syndrome_of(g, c)));

    // Conjugating a translation by the reflection reverses and swaps the
    // displacement: sigma T(dr, dc) sigma = T(-dc, -dr).
    const Transform sigma{0, 0, true};
    const Transform lhs =
        compose(g, sigma, compose(g, Transform{t.dr, t.dc, false}, sigma));
    const Transform rhs{g.wrap(-t.dc), g.wrap(-t.dr), false};
    expect(lhs == rhs);
  }
  return out;
}

GradientCheck check_gradients(std::uint64_t seed) {
  const std::vector<int> layers = {6, 5, 4, 16};
  const int in_dim = layers.front();
  const int classes = layers.back();
  const int count = 32;

  PhiloxStream rng(seed, 0);
  std::vector<double> xs(static_cast<std::size_t>(count) * in_dim);
  std::vector<std::uint8_t> labels(count);
  for (int i = 0; i < count; ++i) {
    for (int d = 0; d < in_dim; ++d)
      xs[static_cast<std::size_t>(i) * in_dim + d] =
          rng.next_below(2) ? 1.0 : 0.0;
    labels[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>(rng.next_below(
            static_cast<std::uint64_t>(classes)));
  }

  NetworkParams net = init_network(layers, seed + 1, 0.5);
  const double lambda = 1e-3;
  const Gradient analytic =
      batch_gradient(net, xs.data(), labels.data(), count, lambda);

  GradientCheck out;
  const double h = 1e-5;
  const auto check_coord = [&](double* param, double analytic_g) {
    const double saved = *param;
    *param = saved + h;
    const double up = batch_loss(net, xs.data(), labels.data(), count, lambda);
    *param = saved - h;
    const double dn = batch_loss(net, xs.data(), labels.data(), count, lambda);
    *param = saved;
    const double fd = (up - dn) / (2.0 * h);
    const double rel = std::abs(analytic_g - fd) /
                       std::max({std::abs(analytic_g), std::abs(fd), 1e-8});
    if (rel > out.max_rel_error) out.max_rel_error = rel;
    ++out.coords_checked;
  };

  for (int l = 0; l < net.num_layers(); ++l) {
    for (std::size_t i = 0; i < net.weights[l].size(); ++i)
      check_coord(&net.weights[l][i], analytic.weights[l][i]);
    for (std::size_t i = 0; i < net.biases[l].size(); ++i)
      check_coord(&net.biases[l][i], analytic.biases[l][i]);
  }

  for (int i = 0; i < count; ++i) {
    const std::vector<double> probs =
        forward(net, xs.data() + static_cast<std::size_t>(i) * in_dim);
    double sum = 0.0;
    for (double q : probs) sum += q;
    const double dev = std::abs(sum - 1.0);
    if (dev > out.softmax_max_dev) out.softmax_max_dev = dev;
  }
  return out;
}

}  // namespace symdec
