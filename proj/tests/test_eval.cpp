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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "symdec/code.hpp"
#include "symdec/eval.hpp"
#include "symdec/hld.hpp"
#include "symdec/manifest.hpp"
#include "symdec/philox.hpp"
#include "symdec/version.hpp"

using namespace symdec;

namespace {

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("log-ratio interval for equal arms brackets one symmetrically") {
  // 100 failures out of a million in both arms. The point estimate is exactly
  // one; the bounds land at known digits for the normal-approximation
  // interval on the log of the ratio.
  const RatioCi ci = log_ratio_ci(100, 1000000, 100, 1000000);
  CHECK(!ci.degenerate);
  CHECK(ci.ratio == 1.0);
  CHECK(std::abs(ci.lo - 0.758) < 1e-3);
  CHECK(std::abs(ci.hi - 1.320) < 1e-3);
  CHECK(doctest::Approx(ci.lo * ci.hi).epsilon(1e-9) == 1.0);
}

TEST_CASE("log-ratio interval matches a hand-computed asymmetric case") {
  const std::uint64_t k1 = 37, n1 = 50000, k2 = 102, n2 = 60000;
  const double p1 = double(k1) / double(n1);
  const double p2 = double(k2) / double(n2);
  const double se =
      std::sqrt((1.0 - p1) / (double(n1) * p1) + (1.0 - p2) / (double(n2) * p2));
  const RatioCi ci = log_ratio_ci(k1, n1, k2, n2);
  CHECK(doctest::Approx(ci.ratio).epsilon(1e-12) == p1 / p2);
  CHECK(doctest::Approx(ci.lo).epsilon(1e-12) ==
        std::exp(std::log(p1 / p2) - 1.96 * se));
  CHECK(doctest::Approx(ci.hi).epsilon(1e-12) ==
        std::exp(std::log(p1 / p2) + 1.96 * se));
}

TEST_CASE("log-ratio interval degenerates gracefully at zero counts") {
  SUBCASE("zero numerator") {
    const RatioCi ci = log_ratio_ci(0, 1000, 5, 1000);
    CHECK(ci.degenerate);
    CHECK(ci.ratio == 0.0);
    CHECK(std::isnan(ci.lo));
    CHECK(std::isnan(ci.hi));
  }
  SUBCASE("zero denominator") {
    const RatioCi ci = log_ratio_ci(5, 1000, 0, 1000);
    CHECK(ci.degenerate);
    CHECK(std::isnan(ci.ratio));
  }
  SUBCASE("both zero") {
    CHECK(log_ratio_ci(0, 1000, 0, 1000).degenerate);
  }
}

TEST_CASE("log-ratio interval rejects impossible counts") {
  CHECK_THROWS_AS(log_ratio_ci(5, 0, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(log_ratio_ci(1, 10, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(log_ratio_ci(11, 10, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(log_ratio_ci(1, 10, 11, 10), std::invalid_argument);
}

TEST_CASE("log-ratio interval covers the true ratio about 95% of the time") {
  // Two independent binomial arms with the same true failure probability.
  // Repeatedly form the interval and count how often it contains 1.
  const double p_true = 0.01;
  const std::uint64_t n = 5000;
  const int reps = 2000;
  PhiloxStream rng(0xC0FFEE, 0);
  int covered = 0;
  int usable = 0;
  for (int rep = 0; rep < reps; ++rep) {
    std::uint64_t k1 = 0, k2 = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (rng.next_double() < p_true) ++k1;
      if (rng.next_double() < p_true) ++k2;
    }
    const RatioCi ci = log_ratio_ci(k1, n, k2, n);
    if (ci.degenerate) continue;
    ++usable;
    if (ci.lo <= 1.0 && 1.0 <= ci.hi) ++covered;
  }
  REQUIRE(usable > reps * 9 / 10);
  const double coverage = double(covered) / double(usable);
  CHECK(coverage > 0.93);
  CHECK(coverage < 0.97);
}

TEST_CASE("pseudo-threshold interpolates the crossing with the bare line") {
  // bare(p) = 1 - (1-p)^2. Choose rates straddling it: at p=0.10 the bare
  // value is 0.19, at p=0.12 it is 0.2256.
  const std::vector<double> ps = {0.10, 0.12};
  const std::vector<double> rates = {0.15, 0.25};
  const auto t = pseudo_threshold(ps, rates);
  REQUIRE(t.has_value());
  CHECK(t->bracket_lo == 0.10);
  CHECK(t->bracket_hi == 0.12);
  // Linear interpolation of diff(p) = rate - bare(p):
  const double d0 = 0.15 - (1.0 - 0.9 * 0.9);
  const double d1 = 0.25 - (1.0 - 0.88 * 0.88);
  const double expected = 0.10 + 0.02 * (-d0) / (d1 - d0);
  CHECK(doctest::Approx(t->p_estimate).epsilon(1e-12) == expected);
  CHECK(t->p_estimate > 0.10);
  CHECK(t->p_estimate < 0.12);
}

TEST_CASE("pseudo-threshold lands exactly on a grid point crossing") {
  const double p1 = 0.1;
  const double bare1 = 1.0 - (1.0 - p1) * (1.0 - p1);
  const std::vector<double> ps = {0.05, p1, 0.15};
  const std::vector<double> rates = {0.01, bare1, 0.5};
  const auto t = pseudo_threshold(ps, rates);
  REQUIRE(t.has_value());
  CHECK(t->p_estimate == p1);
}

TEST_CASE("pseudo-threshold is absent when the curve never crosses") {
  const std::vector<double> ps = {0.05, 0.10, 0.15};
  // Always below the bare line: the decoder is winning everywhere.
  const std::vector<double> rates = {0.001, 0.01, 0.05};
  CHECK(!pseudo_threshold(ps, rates).has_value());
}

TEST_CASE("pseudo-threshold validates its inputs") {
  CHECK_THROWS_AS(pseudo_threshold({0.1}, {0.1, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(pseudo_threshold({0.2, 0.1}, {0.1, 0.2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(pseudo_threshold({0.1, 0.1}, {0.1, 0.2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(pseudo_threshold({}, {}), std::invalid_argument);
}

TEST_CASE("sweep pins the reference ratio to one and reuses the same errors") {
  const CodeGeometry g(3);
  std::vector<VariantSpec> variants;
  variants.push_back({"mwpm", base_decoder(g, Underlying::Mwpm)});
  variants.push_back({"trivial", base_decoder(g, Underlying::Trivial)});

  const std::vector<double> ps = {0.05, 0.1};
  const std::uint64_t trials = 3000;
  const std::uint64_t seed = 77;
  const auto records = sweep(g, variants, 0, ps, trials, seed);
  REQUIRE(records.size() == 4);

  for (const auto& r : records) {
    CHECK(r.L == 3);
    CHECK(r.n == trials);
    CHECK(r.seed == seed);
    CHECK(r.ref_variant == "mwpm");
    CHECK(r.rate == doctest::Approx(double(r.k) / double(r.n)));
    if (r.variant == "mwpm") {
      CHECK(r.ci.ratio == 1.0);  // exact: same counts in both arms
      CHECK(r.ref_k == r.k);
    }
  }

  // The reference counts agree with an independent evaluation of the same
  // decoder on the same seed: trial i sees the same error either way.
  for (std::size_t pi = 0; pi < ps.size(); ++pi) {
    const auto [k, n] = logical_error_rate(
        g, base_decoder(g, Underlying::Mwpm), ps[pi], trials, seed);
    CHECK(records[pi * variants.size()].k == k);
    CHECK(records[pi * variants.size()].n == n);
  }

  // Consecutive pairing loses to matching at p = 0.1 with 3000 trials.
  const auto& mwpm_r = records[2];
  const auto& triv_r = records[3];
  REQUIRE(mwpm_r.variant == "mwpm");
  REQUIRE(triv_r.variant == "trivial");
  CHECK(triv_r.k > mwpm_r.k);
  CHECK(triv_r.ci.ratio > 1.0);
}

TEST_CASE("sweep results survive a CSV round-trip including NaN fields") {
  const CodeGeometry g(2);
  std::vector<VariantSpec> variants;
  variants.push_back({"mwpm", base_decoder(g, Underlying::Mwpm)});
  // Tiny trial count at tiny p: zero failures force degenerate intervals.
  auto records = sweep(g, variants, 0, {0.001, 0.2}, 50, 5);
  REQUIRE(!records.empty());
  bool has_degenerate = false;
  for (const auto& r : records) has_degenerate |= r.ci.degenerate;
  CHECK(has_degenerate);  // p=0.001 with 50 trials yields k=0

  const std::string path = temp_path("symdec_test_results.csv");
  write_results_csv(path, records);
  const auto loaded = read_results_csv(path);
  REQUIRE(loaded.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(loaded[i].variant == records[i].variant);
    CHECK(loaded[i].L == records[i].L);
    CHECK(loaded[i].p == records[i].p);
    CHECK(loaded[i].n == records[i].n);
    CHECK(loaded[i].k == records[i].k);
    CHECK(loaded[i].rate == records[i].rate);
    CHECK(loaded[i].ref_variant == records[i].ref_variant);
    CHECK(loaded[i].ref_k == records[i].ref_k);
    CHECK(loaded[i].ref_n == records[i].ref_n);
    CHECK(loaded[i].seed == records[i].seed);
    CHECK(loaded[i].ci.degenerate == records[i].ci.degenerate);
    if (records[i].ci.degenerate) {
      CHECK(std::isnan(loaded[i].ci.lo) == std::isnan(records[i].ci.lo));
      CHECK(std::isnan(loaded[i].ci.hi) == std::isnan(records[i].ci.hi));
    } else {
      CHECK(loaded[i].ci.ratio == records[i].ci.ratio);
      CHECK(loaded[i].ci.lo == records[i].ci.lo);
      CHECK(loaded[i].ci.hi == records[i].ci.hi);
    }
  }
  std::filesystem::remove(path);
}

TEST_CASE("results reader rejects malformed files") {
  const std::string path = temp_path("symdec_test_bad_results.csv");
  {
    std::ofstream out(path);
    out << "wrong,header\n1,2\n";
  }
  CHECK_THROWS_AS(read_results_csv(path), std::runtime_error);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_results_csv(path), std::runtime_error);  // missing
}

TEST_CASE("decode-time scaling report behaves on a tiny grid") {
  const BenchReport report = bench_scaling({2, 3, 4}, 0.1, 6, 9);
  REQUIRE(report.align.size() == 3);
  REQUIRE(report.trivial.size() == 3);
  REQUIRE(report.mwpm.size() == 3);
  for (const auto* rows : {&report.align, &report.trivial, &report.mwpm}) {
    for (const auto& row : *rows) {
      CHECK(row.p == 0.1);
      CHECK(row.n_samples == 6);
      CHECK(row.mean_ns > 0.0);
      CHECK(std::isfinite(row.stddev_ns));
    }
  }
  CHECK(std::isfinite(report.align_slope));
  CHECK(std::isfinite(report.trivial_slope));
  CHECK(std::isfinite(report.mwpm_slope));

  const std::string path = temp_path("symdec_test_bench.csv");
  write_bench_csv(path, report.align);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "L,p,n_samples,mean_ns,stddev_ns");
  int rows = 0;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 3);
  std::filesystem::remove(path);
}

TEST_CASE("run manifests round-trip next to their primary output") {
  const std::string out = temp_path("symdec_test_output.csv");
  RunManifest m;
  m.command = "eval";
  m.arguments = {"--L", "3", "--n", "1000"};
  m.version = kVersion;
  m.timestamp = utc_timestamp();
  m.config["p_list"] = "0.05,0.1";
  m.config["seed"] = "42";
  m.outputs = {out};
  write_manifest(out, m);
  const std::string manifest_path = out + ".manifest";
  REQUIRE(std::filesystem::exists(manifest_path));

  const RunManifest loaded = read_manifest(manifest_path);
  CHECK(loaded.command == m.command);
  CHECK(loaded.arguments == m.arguments);
  CHECK(loaded.config == m.config);
  CHECK(loaded.outputs == m.outputs);
  CHECK(loaded.version == std::string(kVersion));
  CHECK(loaded.timestamp == m.timestamp);
  std::filesystem::remove(manifest_path);
}
