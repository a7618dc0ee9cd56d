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

#include "symdec/eval.hpp"

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "symdec/matching.hpp"
#include "symdec/noise.hpp"
#include "symdec/symmetry.hpp"

namespace symdec {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double checked_rate(std::uint64_t k, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("rate needs at least one trial");
  if (k > n) throw std::invalid_argument("failure count exceeds trial count");
  return static_cast<double>(k) / static_cast<double>(n);
}

}  // namespace

RatioCi log_ratio_ci(std::uint64_t k1, std::uint64_t n1, std::uint64_t k2,
                     std::uint64_t n2, double z) {
  const double p1 = checked_rate(k1, n1);
  const double p2 = checked_rate(k2, n2);
  if (k1 == 0 || k2 == 0) {
    const double ratio = (k2 > 0) ? 0.0 : kNaN;
    return RatioCi{ratio, kNaN, kNaN, true};
  }
  const double ratio = p1 / p2;
  const double se =
      std::sqrt((1.0 - p1) / (static_cast<double>(n1) * p1) +
                (1.0 - p2) / (static_cast<double>(n2) * p2));
  const double log_ratio = std::log(ratio);
  return RatioCi{ratio, std::exp(log_ratio - z * se),
                 std::exp(log_ratio + z * se), false};
}

std::vector<ExperimentRecord> sweep(const CodeGeometry& g,
                                    const std::vector<VariantSpec>& variants,
                                    std::size_t reference_index,
                                    const std::vector<double>& p_list,
                                    std::uint64_t trials, std::uint64_t seed,
                                    int jobs) {
  if (variants.empty()) throw std::invalid_argument("sweep needs a variant");
  if (reference_index >= variants.size())
    throw std::invalid_argument("reference index out of range");

  std::vector<ExperimentRecord> records;
  records.reserve(variants.size() * p_list.size());
  for (double p : p_list) {
    // Trial i of every variant decodes the same error (same seed, stream i),
    // so ratios below are paired comparisons.
    std::vector<std::uint64_t> fails(variants.size());
    for (std::size_t v = 0; v < variants.size(); ++v) {
      fails[v] =
          logical_error_rate(g, variants[v].decoder, p, trials, seed, jobs)
              .first;
    }
    const std::uint64_t ref_k = fails[reference_index];
    for (std::size_t v = 0; v < variants.size(); ++v) {
      ExperimentRecord rec;
      rec.variant = variants[v].name;
      rec.L = g.L();
      rec.p = p;
      rec.n = trials;
      rec.k = fails[v];
      rec.rate = checked_rate(fails[v], trials);
      rec.ref_variant = variants[reference_index].name;
      rec.ref_k = ref_k;
      rec.ref_n = trials;
      rec.ci = log_ratio_ci(fails[v], trials, ref_k, trials);
      rec.seed = seed;
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::optional<PseudoThreshold> pseudo_threshold(
    const std::vector<double>& p_list, const std::vector<double>& rates) {
  if (p_list.empty())
    throw std::invalid_argument("p grid is empty");
  if (p_list.size() != rates.size())
    throw std::invalid_argument("p grid and rate list differ in length");
  for (std::size_t i = 0; i + 1 < p_list.size(); ++i) {
    if (!(p_list[i] < p_list[i + 1]))
      throw std::invalid_argument("p grid must be strictly increasing");
  }

  auto diff = [&](std::size_t i) {
    const double bare = 1.0 - (1.0 - p_list[i]) * (1.0 - p_list[i]);
    return rates[i] - bare;
  };

  for (std::size_t i = 0; i < p_list.size(); ++i) {
    const double d = diff(i);
    if (d == 0.0) return PseudoThreshold{p_list[i], p_list[i], p_list[i]};
    if (i + 1 < p_list.size()) {
      const double d_next = diff(i + 1);
      if ((d < 0.0 && d_next > 0.0) || (d > 0.0 && d_next < 0.0)) {
        const double t = -d / (d_next - d);
        const double p = p_list[i] + t * (p_list[i + 1] - p_list[i]);
        return PseudoThreshold{p, p_list[i], p_list[i + 1]};
      }
    }
  }
  return std::nullopt;
}

namespace {

struct Welford {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }
  double stddev() const {
    return n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) : 0.0;
  }
};

template <typename Fn>
BenchRow time_per_call(int L, double p, const std::vector<Syndrome>& inputs,
                       Fn&& fn) {
  using clock = std::chrono::steady_clock;
  // Warm caches and branch predictors before measuring.
  std::uint64_t sink = 0;
  for (std::size_t i = 0; i < inputs.size() && i < 8; ++i) sink += fn(inputs[i]);
  Welford w;
  for (const Syndrome& s : inputs) {
    const auto t0 = clock::now();
    sink += fn(s);
    const auto t1 = clock::now();
    w.add(std::chrono::duration<double, std::nano>(t1 - t0).count());
  }
  // Keep the accumulated observable alive so the timed calls cannot be
  // discarded as dead code.
  volatile std::uint64_t keep = sink;
  (void)keep;
  return BenchRow{L, p, w.n, w.mean, w.stddev()};
}

double loglog_slope(const std::vector<BenchRow>& rows) {
  if (rows.size() < 2) return kNaN;
  double sx = 0, sy = 0;
  for (const BenchRow& r : rows) {
    sx += std::log(static_cast<double>(r.L));
    sy += std::log(r.mean_ns);
  }
  const double n = static_cast<double>(rows.size());
  const double mx = sx / n, my = sy / n;
  double num = 0, den = 0;
  for (const BenchRow& r : rows) {
    const double dx = std::log(static_cast<double>(r.L)) - mx;
    num += dx * (std::log(r.mean_ns) - my);
    den += dx * dx;
  }
  return num / den;
}

}  // namespace

BenchReport bench_scaling(const std::vector<int>& L_list, double p,
                          std::uint64_t n_samples, std::uint64_t seed) {
  if (L_list.empty()) throw std::invalid_argument("bench needs lattice sizes");
  if (n_samples == 0) throw std::invalid_argument("bench needs samples");

  BenchReport report;
  for (int L : L_list) {
    const CodeGeometry g(L);
    const NoiseModel model{p, seed};
    std::vector<Syndrome> inputs;
    inputs.reserve(n_samples);
    for (std::uint64_t i = 0; i < n_samples; ++i)
      inputs.push_back(syndrome_of(g, sample_error(g, model, i)));

    report.align.push_back(time_per_call(L, p, inputs, [&](const Syndrome& s) {
      const auto [canon, t] = align(g, s);
      return static_cast<std::uint64_t>(t.dr) + canon.bits.count();
    }));
    report.trivial.push_back(
        time_per_call(L, p, inputs, [&](const Syndrome& s) {
          return trivial_decode(g, s).x.count();
        }));
    report.mwpm.push_back(time_per_call(L, p, inputs, [&](const Syndrome& s) {
      return mwpm_decode(g, s).x.count();
    }));
  }
  report.align_slope = loglog_slope(report.align);
  report.trivial_slope = loglog_slope(report.trivial);
  report.mwpm_slope = loglog_slope(report.mwpm);
  return report;
}

namespace {

std::string format_double(double x) {
  if (std::isnan(x)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& field) {
  if (field.empty()) return kNaN;
  std::size_t pos = 0;
  const double v = std::stod(field, &pos);
  if (pos != field.size()) throw std::runtime_error("bad numeric field");
  return v;
}

std::uint64_t parse_u64(const std::string& field) {
  std::size_t pos = 0;
  const unsigned long long v = std::stoull(field, &pos);
  if (pos != field.size()) throw std::runtime_error("bad integer field");
  return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

constexpr char kResultsHeader[] =
    "variant,L,p,n,k,rate,ref_variant,ref_k,ref_n,ratio,ci_lo,ci_hi,seed";

}  // namespace

void write_results_csv(const std::string& path,
                       const std::vector<ExperimentRecord>& records) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << kResultsHeader << '\n';
  for (const ExperimentRecord& r : records) {
    out << r.variant << ',' << r.L << ',' << format_double(r.p) << ',' << r.n
        << ',' << r.k << ',' << format_double(r.rate) << ',' << r.ref_variant
        << ',' << r.ref_k << ',' << r.ref_n << ','
        << format_double(r.ci.ratio) << ',' << format_double(r.ci.lo) << ','
        << format_double(r.ci.hi) << ',' << r.seed << '\n';
  }
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

std::vector<ExperimentRecord> read_results_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line) || line != kResultsHeader)
    throw std::runtime_error("unexpected results header in " + path);
  std::vector<ExperimentRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 13)
      throw std::runtime_error("malformed results row in " + path);
    ExperimentRecord r;
    r.variant = f[0];
    r.L = static_cast<int>(parse_u64(f[1]));
    r.p = parse_double(f[2]);
    r.n = parse_u64(f[3]);
    r.k = parse_u64(f[4]);
    r.rate = parse_double(f[5]);
    r.ref_variant = f[6];
    r.ref_k = parse_u64(f[7]);
    r.ref_n = parse_u64(f[8]);
    r.ci.ratio = parse_double(f[9]);
    r.ci.lo = parse_double(f[10]);
    r.ci.hi = parse_double(f[11]);
    r.ci.degenerate = std::isnan(r.ci.lo) || std::isnan(r.ci.hi);
    r.seed = parse_u64(f[12]);
    records.push_back(std::move(r));
  }
  return records;
}

void write_bench_csv(const std::string& path,
                     const std::vector<BenchRow>& rows) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "L,p,n_samples,mean_ns,stddev_ns\n";
  for (const BenchRow& r : rows) {
    out << r.L << ',' << format_double(r.p) << ',' << r.n_samples << ','
        << format_double(r.mean_ns) << ',' << format_double(r.stddev_ns)
        << '\n';
  }
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

}  // namespace symdec
