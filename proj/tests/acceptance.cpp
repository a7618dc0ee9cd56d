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

// Release gate: ten numbered end-to-end criteria, each printing exactly one
// [PASS]/[FAIL] line on stdout. Run with no arguments to check everything,
// or pass criterion numbers to run a subset. Exit status is the number of
// failed criteria. Stage progress for the long-running experiments goes to
// stderr so logs stay readable without polluting the verdict lines.

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "symdec/code.hpp"
#include "symdec/eval.hpp"
#include "symdec/hld.hpp"
#include "symdec/mlp.hpp"
#include "symdec/noise.hpp"
#include "symdec/philox.hpp"
#include "symdec/repro.hpp"
#include "symdec/symmetry.hpp"

using namespace symdec;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

void stage(const char* what) { std::fprintf(stderr, "  ... %s\n", what); }

// 1. Canonicalization property suite: centering and alignment are
//    orbit-constant and idempotent, the returned transforms are valid, and
//    syndrome extraction commutes with every lattice transform, across four
//    lattice sizes with 10^4 random syndromes and 10^4 random chains each.
Outcome criterion1() {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  for (int L : {2, 3, 5, 7}) {
    const CodeGeometry g(L);
    const SymmetryCheck c =
        check_symmetry_properties(g, 10000, 10000, 0.1, 1000 + L);
    checked += c.cases_checked;
    failures += c.failures;
  }
  return {failures == 0,
          fmt("canonicalization invariants: %" PRIu64 " checks, %" PRIu64
              " failures (L=2,3,5,7; 10^4 syndromes + 10^4 chains each)",
              checked, failures)};
}

// 2. Matching exactness: decoder matching weight equals the brute-force
//    minimum over all perfect matchings on 10^3 random L=5 syndromes with at
//    most 10 same-type detections.
Outcome criterion2() {
  const CodeGeometry g(5);
  const MatchingCheck c = check_matching_exactness(g, 1000, 0.1, 0xA11CE, 10);
  return {c.cases_checked == 1000 && c.mismatches == 0,
          fmt("matching vs exhaustive oracle: %" PRIu64 "/1000 accepted, %" PRIu64
              " mismatches (L=5, <=10 detections per type)",
              c.cases_checked, c.mismatches)};
}

// 3. Translation witness: exhaustive 2x2 search finds a syndrome and a
//    translation where the plain matching recoveries differ by a nonzero
//    purely-X logical operator while the center-wrapped recoveries differ by
//    exactly the translation.
Outcome criterion3() {
  const CodeGeometry g(2);
  const auto w = find_translation_witness(g);
  if (!w) return {false, "translation witness: none found on the 2x2 lattice"};
  return {true, fmt("translation witness on 2x2: translation (%d,%d), plain "
                    "recoveries differ by pure-X class %d; centered "
                    "recoveries differ by the translation alone",
                    w->translation.dr, w->translation.dc, w->plain_class)};
}

// 4. Ordering witness: on 3x3, the shortcut "reflect first, then center"
//    canonicalization splits an orbit pair that full alignment maps to one
//    representative.
Outcome criterion4() {
  const CodeGeometry g(3);
  const auto w = find_ordering_witness(g, 100000);
  if (!w) return {false, "ordering witness: none found on the 3x3 lattice"};
  return {true,
          fmt("ordering witness on 3x3: orbit pair related by (%d,%d,%s) "
              "splits under reflect-then-center but aligns to one "
              "representative",
              w->relation.dr, w->relation.dc,
              w->relation.antitransposed ? "reflected" : "plain")};
}

// 5. Gradient and normalization suite: analytic backpropagation matches
//    central finite differences to better than 1e-4 relative error on every
//    coordinate of a small random network; softmax outputs sum to one within
//    1e-12.
Outcome criterion5() {
  const GradientCheck c = check_gradients(42);
  return {c.max_rel_error < 1e-4 && c.softmax_max_dev < 1e-12,
          fmt("gradients: max relative error %.3g over %" PRIu64
              " coordinates (gate 1e-4); softmax deviation %.3g (gate 1e-12)",
              c.max_rel_error, c.coords_checked, c.softmax_max_dev)};
}

// 6. A zero-initialized classifier is exactly uniform: its mean negative log
//    likelihood on real data equals ln 16 to within 1e-9.
Outcome criterion6() {
  const CodeGeometry g(3);
  DatasetSpec spec;
  spec.L = 3;
  spec.count = 512;
  spec.seed = 6;
  const SampleSet data = generate_dataset(g, spec);
  const int n = static_cast<int>(data.size());
  std::vector<double> xs(static_cast<std::size_t>(n) * data.input_dim);
  for (int i = 0; i < n; ++i)
    data.expand_row(i, xs.data() + std::size_t(i) * data.input_dim);
  const NetworkParams zeros = NetworkParams::zeros({18, 500, 250, 16});
  const double loss = batch_loss(zeros, xs.data(), data.labels.data(), n, 0.0);
  const double expected = std::log(16.0);
  return {std::abs(loss - expected) < 1e-9,
          fmt("uniform-network loss: %.12f vs ln 16 = %.12f (|diff| %.3g, "
              "gate 1e-9)",
              loss, expected, std::abs(loss - expected))};
}

// 7. Ratio confidence interval: frozen digits for the equal-arm case and
//    93-97% empirical coverage of a true unit ratio (p=0.01, n=10^5 per arm,
//    10^3 repetitions).
Outcome criterion7() {
  const RatioCi ci = log_ratio_ci(100, 1000000, 100, 1000000);
  const bool digits_ok = ci.ratio == 1.0 && std::abs(ci.lo - 0.758) < 1e-3 &&
                         std::abs(ci.hi - 1.320) < 1e-3;

  const double p_true = 0.01;
  const std::uint64_t n = 100000;
  const int reps = 1000;
  PhiloxStream rng(0xC1C1, 0);
  int covered = 0;
  int usable = 0;
  for (int rep = 0; rep < reps; ++rep) {
    std::uint64_t k1 = 0, k2 = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (rng.next_double() < p_true) ++k1;
      if (rng.next_double() < p_true) ++k2;
    }
    const RatioCi c = log_ratio_ci(k1, n, k2, n);
    if (c.degenerate) continue;
    ++usable;
    if (c.lo <= 1.0 && 1.0 <= c.hi) ++covered;
  }
  const double coverage = usable ? double(covered) / double(usable) : 0.0;
  const bool coverage_ok = coverage >= 0.93 && coverage <= 0.97;
  return {digits_ok && coverage_ok,
          fmt("ratio CI: equal arms -> [%.6f, %.6f] vs [0.758, 1.320] "
              "(within 1e-3: %s); coverage %.3f over %d reps (gate "
              "0.93-0.97)",
              ci.lo, ci.hi, digits_ok ? "yes" : "NO", coverage, usable)};
}

// 8. Desk-scale decoding experiment on the 3x3 lattice. Train the full-width
//    classifier (hidden 500/250, learning rate 1e-3, batch 1000, 10^5
//    iterations) on 10^6 aligned samples at p=0.1 with the matching decoder
//    underneath, plus a second classifier on the same million errors without
//    canonicalization. Evaluated on 10^6 shared trials at p=0.1, the aligned
//    network-backed decoder must beat plain matching with the 95% ratio CI
//    entirely below one, and must not lose to the uncanonicalized network.
Outcome criterion8() {
  const CodeGeometry g(3);
  const std::uint64_t kSamples = 1000000;
  const std::uint64_t kTrials = 1000000;
  const std::uint64_t kDataSeed = 0x8DA7A;
  const std::uint64_t kEvalSeed = 0x8E7A1;

  stage("criterion 8: generating 10^6 aligned training samples (L=3, p=0.1)");
  DatasetSpec aligned_spec;
  aligned_spec.L = 3;
  aligned_spec.underlying = Underlying::Mwpm;
  aligned_spec.symmetry = SymmetryMode::Align;
  aligned_spec.p_train = 0.1;
  aligned_spec.count = kSamples;
  aligned_spec.seed = kDataSeed;
  const SampleSet aligned_data = generate_dataset(g, aligned_spec);

  stage("criterion 8: generating the same errors without canonicalization");
  DatasetSpec plain_spec = aligned_spec;
  plain_spec.symmetry = SymmetryMode::None;
  const SampleSet plain_data = generate_dataset(g, plain_spec);

  TrainConfig config;  // hidden 500/250, lr 1e-3, batch 1000 by default
  config.num_iterations = 100000;
  config.record_interval = 10000;

  stage("criterion 8: training the aligned classifier (10^5 iterations)");
  config.seed = 8001;
  const TrainResult aligned_run = train(aligned_data, config);
  stage("criterion 8: training the uncanonicalized classifier");
  config.seed = 8002;
  const TrainResult plain_run = train(plain_data, config);

  stage("criterion 8: evaluating 10^6 shared trials at p=0.1");
  const auto aligned_net =
      std::make_shared<const NetworkParams>(aligned_run.net);
  const auto plain_net = std::make_shared<const NetworkParams>(plain_run.net);
  std::vector<VariantSpec> variants;
  variants.push_back({"mwpm", base_decoder(g, Underlying::Mwpm)});
  variants.push_back(
      {"hld-mwpm-align",
       hld_decoder(g, aligned_net, Underlying::Mwpm, SymmetryMode::Align)});
  variants.push_back(
      {"hld-mwpm-none",
       hld_decoder(g, plain_net, Underlying::Mwpm, SymmetryMode::None)});
  const auto records = sweep(g, variants, 0, {0.1}, kTrials, kEvalSeed);

  const ExperimentRecord& mwpm = records[0];
  const ExperimentRecord& align = records[1];
  const ExperimentRecord& plain = records[2];
  const RatioCi align_vs_plain =
      log_ratio_ci(align.k, align.n, plain.k, plain.n);

  const bool beats_mwpm = align.rate < mwpm.rate && align.ci.hi < 1.0;
  const bool not_worse_than_plain =
      align.rate <= plain.rate && align_vs_plain.ratio < 1.0;
  return {beats_mwpm && not_worse_than_plain,
          fmt("3x3 experiment, 10^6 trials at p=0.1: mwpm %.5f, aligned HLD "
              "%.5f (ratio %.4f, CI [%.4f, %.4f], upper<1: %s), plain HLD "
              "%.5f (aligned/plain %.4f<1: %s)",
              mwpm.rate, align.rate, align.ci.ratio, align.ci.lo, align.ci.hi,
              beats_mwpm ? "yes" : "NO", plain.rate, align_vs_plain.ratio,
              not_worse_than_plain ? "yes" : "NO")};
}

// 9. Reduced 5x5 smoke run (the published full-scale 5x5/7x7 experiments
//    need tens of millions of samples and are out of scope here): 10^5
//    samples, 10^4 iterations, asserting end-to-end soundness only — valid
//    labels, canonical inputs, finite decreasing loss, and recoveries that
//    reproduce the measured syndrome.
Outcome criterion9() {
  const CodeGeometry g(5);
  stage("criterion 9: generating 10^5 aligned training samples (L=5, p=0.1)");
  DatasetSpec spec;
  spec.L = 5;
  spec.underlying = Underlying::Mwpm;
  spec.symmetry = SymmetryMode::Align;
  spec.p_train = 0.1;
  spec.count = 100000;
  spec.seed = 0x95EED;
  const SampleSet data = generate_dataset(g, spec);

  bool labels_ok = true;
  for (std::uint8_t label : data.labels) labels_ok &= label < 16;

  // Spot-check that stored inputs are canonical-orbit representatives.
  const DecoderFn base = base_decoder(g, Underlying::Mwpm);
  const NoiseModel m{0.1, 0x95EED};
  bool inputs_ok = true;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const PauliChain e = sample_error(g, m, i);
    const TrainingSample s = make_sample(g, base, SymmetryMode::Align, e);
    const auto [canon, t] = canonicalize(g, syndrome_of(g, e),
                                         SymmetryMode::Align);
    inputs_ok &= s.input == canon.bits;
  }

  stage("criterion 9: training for 10^4 iterations");
  TrainConfig config;
  config.num_iterations = 10000;
  config.record_interval = 1000;
  config.seed = 9001;
  const TrainResult run = train(data, config);

  bool loss_finite = true;
  for (const CurvePoint& pt : run.curves)
    loss_finite &= std::isfinite(pt.train_loss);
  const double first_loss = run.curves.front().train_loss;
  const double last_loss = run.curves.back().train_loss;

  const auto net = std::make_shared<const NetworkParams>(run.net);
  const DecoderFn decoder =
      hld_decoder(g, net, Underlying::Mwpm, SymmetryMode::Align);
  bool syndromes_ok = true;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Syndrome s = syndrome_of(g, sample_error(g, m, 500000 + i));
    syndromes_ok &= syndrome_of(g, decoder(s)) == s;
  }

  const bool pass = labels_ok && inputs_ok && loss_finite &&
                    last_loss < first_loss && syndromes_ok;
  return {pass, fmt("5x5 smoke (10^5 samples, 10^4 iterations): labels %s, "
                    "canonical inputs %s, loss %.4f -> %.4f (finite %s, "
                    "decreasing %s), recovery syndromes %s",
                    labels_ok ? "valid" : "INVALID",
                    inputs_ok ? "ok" : "WRONG", first_loss, last_loss,
                    loss_finite ? "yes" : "NO",
                    last_loss < first_loss ? "yes" : "NO",
                    syndromes_ok ? "match" : "MISMATCH")};
}

// 10. Decode-time scaling: over L in {5,10,20,40} at p=0.1, the average
//     alignment time fits a log-log slope in [1.5, 3.0] (quadratic on
//     average, quartic worst case) and the consecutive-pairing decoder fits
//     2 +/- 0.5; mean times grow monotonically.
Outcome criterion10() {
  stage("criterion 10: timing decoders over L in {5,10,20,40}");
  const BenchReport report = bench_scaling({5, 10, 20, 40}, 0.1, 1000, 0xB0B);
  bool monotone = true;
  for (std::size_t i = 1; i < report.align.size(); ++i)
    monotone &= report.align[i].mean_ns >= report.align[i - 1].mean_ns;
  const bool align_ok =
      report.align_slope >= 1.5 && report.align_slope <= 3.0;
  const bool trivial_ok =
      report.trivial_slope >= 1.5 && report.trivial_slope <= 2.5;
  return {align_ok && trivial_ok && monotone,
          fmt("scaling slopes: align %.3f (gate [1.5, 3.0]), trivial %.3f "
              "(gate [1.5, 2.5]), matching %.3f for reference; align times "
              "monotone: %s",
              report.align_slope, report.trivial_slope, report.mwpm_slope,
              monotone ? "yes" : "NO")};
}

using CriterionFn = Outcome (*)();
constexpr CriterionFn kCriteria[] = {
    criterion1, criterion2, criterion3, criterion4, criterion5,
    criterion6, criterion7, criterion8, criterion9, criterion10};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    const int n = std::atoi(argv[i]);
    if (n < 1 || n > 10) {
      std::fprintf(stderr, "usage: %s [criterion 1-10 ...]\n", argv[0]);
      return 64;
    }
    which.push_back(n);
  }
  if (which.empty())
    for (int n = 1; n <= 10; ++n) which.push_back(n);

  int failed = 0;
  for (int n : which) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = kCriteria[n - 1]();
    } catch (const std::exception& e) {
      outcome = {false, std::string("unexpected exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("[%s] criterion %d: %s (%.1fs)\n",
                outcome.pass ? "PASS" : "FAIL", n, outcome.detail.c_str(),
                seconds);
    std::fflush(stdout);
    if (!outcome.pass) ++failed;
  }
  return failed;
}
