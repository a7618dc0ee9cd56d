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

#ifndef SYMDEC_EVAL_HPP
#define SYMDEC_EVAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symdec/hld.hpp"

namespace symdec {

// Confidence interval for the ratio of two binomial rates (k1/n1) / (k2/n2)
// on the log scale: exp(ln(p1/p2) +- z * se) with
// se = sqrt((1-p1)/(n1 p1) + (1-p2)/(n2 p2)). With either failure count at
// zero the interval is degenerate: the ratio is 0 (k1 == 0, k2 > 0) or
// undefined, and the bounds are NaN.
struct RatioCi {
  double ratio;
  double lo;
  double hi;
  bool degenerate;
};

RatioCi log_ratio_ci(std::uint64_t k1, std::uint64_t n1, std::uint64_t k2,
                     std::uint64_t n2, double z = 1.96);

struct VariantSpec {
  std::string name;
  DecoderFn decoder;
};

struct ExperimentRecord {
  std::string variant;
  int L;
  double p;
  std::uint64_t n;
  std::uint64_t k;
  double rate;
  std::string ref_variant;
  std::uint64_t ref_k;
  std::uint64_t ref_n;
  RatioCi ci;  // this variant vs the reference, same error samples
  std::uint64_t seed;
};

// Failure rates for every (variant, p) pair. All variants at a given p
// decode the same errors (the sample index fully determines the error), so
// rate ratios are paired comparisons. The reference variant's row carries a
// ratio of exactly 1.
std::vector<ExperimentRecord> sweep(const CodeGeometry& g,
                                    const std::vector<VariantSpec>& variants,
                                    std::size_t reference_index,
                                    const std::vector<double>& p_list,
                                    std::uint64_t trials, std::uint64_t seed,
                                    int jobs = 1);

// First crossing of the failure rate with the bare-memory line
// 1 - (1-p)^2, linearly interpolated between grid points; nullopt when the
// curves never cross on the grid.
struct PseudoThreshold {
  double p_estimate;
  double bracket_lo;
  double bracket_hi;
};
std::optional<PseudoThreshold> pseudo_threshold(
    const std::vector<double>& p_list, const std::vector<double>& rates);

// Wall-clock scaling of syndrome canonicalization (and the baseline
// decoders, for contrast) over lattice sizes at fixed p. Times exclude
// sampling and syndrome extraction.
struct BenchRow {
  int L;
  double p;
  std::uint64_t n_samples;
  double mean_ns;
  double stddev_ns;
};

struct BenchReport {
  std::vector<BenchRow> align;
  std::vector<BenchRow> trivial;
  std::vector<BenchRow> mwpm;
  double align_slope;    // least-squares d ln(mean_ns) / d ln(L)
  double trivial_slope;
  double mwpm_slope;
};

BenchReport bench_scaling(const std::vector<int>& L_list, double p,
                          std::uint64_t n_samples, std::uint64_t seed);

void write_results_csv(const std::string& path,
                       const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> read_results_csv(const std::string& path);
void write_bench_csv(const std::string& path,
                     const std::vector<BenchRow>& rows);

}  // namespace symdec

#endif
