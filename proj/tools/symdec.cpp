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

// Command-line front end: dataset generation, classifier training,
// decoder evaluation, canonicalization benchmarks, and self-check
// reproduction cases.
//
// Exit codes: 0 success, 1 usage error, 2 I/O or file-format error,
// 3 configuration mismatch, 4 self-check failure.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symdec/code.hpp"
#include "symdec/eval.hpp"
#include "symdec/geometry.hpp"
#include "symdec/hld.hpp"
#include "symdec/kernels.hpp"
#include "symdec/manifest.hpp"
#include "symdec/matching.hpp"
#include "symdec/mlp.hpp"
#include "symdec/repro.hpp"
#include "symdec/version.hpp"

namespace {

using namespace symdec;

// Thrown when flags are internally consistent but disagree with the data
// they name (wrong lattice size for a model, and so on).
struct ConfigMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a self-check case fails to produce its witness or oracle match.
struct SelfCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_g(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Underlying parse_underlying(const std::string& name) {
  if (name == "mwpm") return Underlying::Mwpm;
  if (name == "trivial") return Underlying::Trivial;
  throw CLI::ValidationError("--underlying", "must be 'mwpm' or 'trivial'");
}

SymmetryMode parse_symmetry(const std::string& name) {
  if (name == "none") return SymmetryMode::None;
  if (name == "center") return SymmetryMode::Center;
  if (name == "align") return SymmetryMode::Align;
  throw CLI::ValidationError("--symmetry",
                             "must be 'none', 'center' or 'align'");
}

std::vector<int> parse_layer_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--layers", "bad layer size '" + item + "'");
    }
    if (pos != item.size() || v <= 0)
      throw CLI::ValidationError("--layers", "bad layer size '" + item + "'");
    out.push_back(v);
  }
  if (out.empty())
    throw CLI::ValidationError("--layers", "needs at least one layer size");
  return out;
}

// "a,b,c" or "start:stop:step" (inclusive endpoints).
std::vector<double> parse_p_list(const std::string& text) {
  std::vector<double> out;
  const auto bad = [&]() {
    return CLI::ValidationError("--p-list", "cannot parse '" + text + "'");
  };
  if (text.find(':') != std::string::npos) {
    double start = 0, stop = 0, step = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step,
                    &extra) != 3 ||
        step <= 0 || stop < start)
      throw bad();
    for (std::int64_t i = 0;; ++i) {
      const double p = start + static_cast<double>(i) * step;
      if (p > stop + step * 1e-9) break;
      out.push_back(p);
    }
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t pos = 0;
      double v = 0;
      try {
        v = std::stod(item, &pos);
      } catch (const std::exception&) {
        throw bad();
      }
      if (pos != item.size()) throw bad();
      out.push_back(v);
    }
  }
  if (out.empty()) throw bad();
  return out;
}

std::vector<std::string> collect_args(int argc, char** argv) {
  return std::vector<std::string>(argv, argv + argc);
}

// ---------------------------------------------------------------------------
// gen-data

struct GenDataArgs {
  int L = 3;
  double p = 0.1;
  std::uint64_t n = 0;
  std::string underlying = "mwpm";
  std::string symmetry = "align";
  std::uint64_t seed = 0;
  std::string out;
  int jobs = 1;
};

int cmd_gen_data(const GenDataArgs& a, const std::vector<std::string>& argv) {
  DatasetSpec spec;
  spec.L = a.L;
  spec.underlying = parse_underlying(a.underlying);
  spec.symmetry = parse_symmetry(a.symmetry);
  spec.p_train = a.p;
  spec.count = a.n;
  spec.seed = a.seed;

  const CodeGeometry g(a.L);
  const SampleSet set = generate_dataset(g, spec, a.jobs);
  write_dataset(a.out, spec, set);

  std::uint64_t hist[16] = {};
  for (std::uint8_t label : set.labels) ++hist[label];
  std::printf("wrote %s: %" PRIu64 " samples, L=%d, p=%g, %s/%s\n",
              a.out.c_str(), spec.count, spec.L, spec.p_train,
              underlying_name(spec.underlying), symmetry_name(spec.symmetry));
  std::printf("label histogram:\n");
  for (int k = 0; k < 16; ++k)
    std::printf("  class %2d: %" PRIu64 "\n", k, hist[k]);

  RunManifest m;
  m.command = "gen-data";
  m.arguments = argv;
  m.version = kVersion;
  m.timestamp = utc_timestamp();
  m.config = {{"L", std::to_string(a.L)},
              {"p", format_g(a.p)},
              {"n", std::to_string(a.n)},
              {"underlying", a.underlying},
              {"symmetry", a.symmetry},
              {"seed", std::to_string(a.seed)},
              {"jobs", std::to_string(a.jobs)},
              {"out", a.out}};
  m.outputs = {a.out};
  write_manifest(a.out, m);
  return 0;
}

// ---------------------------------------------------------------------------
// train

struct TrainArgs {
  std::string data;
  std::string layers = "500,250";
  std::int64_t iters = 100000;
  double lr = 1e-3;
  int batch = 1000;
  double weight_decay = 0.0;
  double init_width = 0.01;
  double val_fraction = 0.05;
  std::int64_t val_interval = 1000;
  std::uint64_t seed = 0;
  std::string out_model;
  std::string out_curves;
};

int cmd_train(const TrainArgs& a, const std::vector<std::string>& argv) {
  DatasetSpec spec;
  const SampleSet data = read_dataset(a.data, &spec);

  TrainConfig config;
  config.hidden_sizes = parse_layer_list(a.layers);
  config.num_iterations = a.iters;
  config.learning_rate = a.lr;
  config.batch_size = a.batch;
  config.weight_decay = a.weight_decay;
  config.init_stddev = a.init_width;
  config.seed = a.seed;
  config.validation_fraction = a.val_fraction;
  config.record_interval = a.val_interval;

  std::printf("training on %s: %zu samples, input dim %d\n", a.data.c_str(),
              data.size(), data.input_dim);
  std::printf("layers=%s iters=%" PRId64 " lr=%s batch=%d init-width=%s\n",
              a.layers.c_str(), a.iters, format_g(a.lr).c_str(), a.batch,
              format_g(a.init_width).c_str());
  std::printf("kernel backend: %s\n",
              kernels::backend_name(kernels::active_backend()));

  const TrainResult result = train(data, config);

  std::map<std::string, std::string> metadata = {
      {"L", std::to_string(spec.L)},
      {"underlying", underlying_name(spec.underlying)},
      {"symmetry", symmetry_name(spec.symmetry)},
      {"p_train", format_g(spec.p_train)},
      {"dataset", a.data},
      {"dataset_seed", std::to_string(spec.seed)},
      {"train_seed", std::to_string(a.seed)},
      {"layers", a.layers},
      {"iters", std::to_string(a.iters)},
      {"lr", format_g(a.lr)},
      {"batch", std::to_string(a.batch)},
      {"weight_decay", format_g(a.weight_decay)},
      {"init_width", format_g(a.init_width)},
      {"val_fraction", format_g(a.val_fraction)},
      {"val_interval", std::to_string(a.val_interval)},
      {"version", kVersion}};
  save_model(a.out_model, result.net, metadata);
  write_curves_csv(a.out_curves, result.curves);

  if (!result.curves.empty()) {
    const CurvePoint& last = result.curves.back();
    std::printf("final: iteration %" PRId64 " train_loss %.6f val_loss %.6f "
                "val_error %.6f\n",
                last.iteration, last.train_loss, last.val_loss,
                last.val_error);
  }

  RunManifest m;
  m.command = "train";
  m.arguments = argv;
  m.version = kVersion;
  m.timestamp = utc_timestamp();
  m.config = {{"data", a.data},
              {"layers", a.layers},
              {"iters", std::to_string(a.iters)},
              {"lr", format_g(a.lr)},
              {"batch", std::to_string(a.batch)},
              {"weight_decay", format_g(a.weight_decay)},
              {"init_width", format_g(a.init_width)},
              {"val_fraction", format_g(a.val_fraction)},
              {"val_interval", std::to_string(a.val_interval)},
              {"seed", std::to_string(a.seed)},
              {"out_model", a.out_model},
              {"out_curves", a.out_curves}};
  m.outputs = {a.out_model, a.out_curves};
  write_manifest(a.out_model, m);
  return 0;
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  std::string model;
  int L = 0;  // 0 = take from model metadata
  std::string p_list = "0.01:0.18:0.01";
  std::uint64_t n = 0;
  std::string underlying = "mwpm";
  std::string symmetry = "none";
  std::string reference = "mwpm";
  std::uint64_t seed = 0;
  std::string out;
  int jobs = 1;
  bool underlying_given = false;
  bool symmetry_given = false;
};

int cmd_eval(const EvalArgs& a, const std::vector<std::string>& argv) {
  if (a.reference != "mwpm")
    throw CLI::ValidationError("--reference", "only 'mwpm' is supported");

  std::string underlying = a.underlying;
  std::string symmetry = a.symmetry;
  int L = a.L;

  std::optional<NetworkParams> net;
  std::map<std::string, std::string> metadata;
  if (!a.model.empty()) {
    net = load_model(a.model, &metadata);
    // Adopt training-time settings unless overridden; reject contradictions.
    const auto adopt = [&](const char* key, std::string& value, bool given) {
      const auto it = metadata.find(key);
      if (it == metadata.end()) return;
      if (!given)
        value = it->second;
      else if (value != it->second)
        throw ConfigMismatchError(std::string("--") + key + " '" + value +
                                  "' contradicts model metadata '" +
                                  it->second + "'");
    };
    adopt("underlying", underlying, a.underlying_given);
    adopt("symmetry", symmetry, a.symmetry_given);
    if (const auto it = metadata.find("L"); it != metadata.end()) {
      const int meta_L = std::stoi(it->second);
      if (L == 0)
        L = meta_L;
      else if (L != meta_L)
        throw ConfigMismatchError("--L " + std::to_string(L) +
                                  " contradicts model metadata L " +
                                  it->second);
    }
  }
  if (L == 0)
    throw CLI::ValidationError("--L", "required when no model supplies it");

  const CodeGeometry g(L);
  if (net && net->input_size() != g.num_edges())
    throw ConfigMismatchError(
        "model input size " + std::to_string(net->input_size()) +
        " does not fit L=" + std::to_string(L) + " (" +
        std::to_string(g.num_edges()) + " stabilizers)");

  const Underlying u = parse_underlying(underlying);
  const SymmetryMode mode = parse_symmetry(symmetry);

  std::string name;
  DecoderFn decoder;
  if (net) {
    name = std::string("hld-") + underlying_name(u) + "-" +
           symmetry_name(mode);
    decoder = hld_decoder(
        g, std::make_shared<const NetworkParams>(std::move(*net)), u, mode);
  } else if (mode == SymmetryMode::None) {
    name = underlying_name(u);
    decoder = base_decoder(g, u);
  } else {
    name = std::string(underlying_name(u)) + "+" + symmetry_name(mode);
    decoder = wrapped_decoder(g, u, mode);
  }

  std::vector<VariantSpec> variants;
  variants.push_back({"mwpm", base_decoder(g, Underlying::Mwpm)});
  if (name != "mwpm") variants.push_back({name, std::move(decoder)});

  const std::vector<double> p_values = parse_p_list(a.p_list);
  const std::vector<ExperimentRecord> records =
      sweep(g, variants, 0, p_values, a.n, a.seed, a.jobs);
  write_results_csv(a.out, records);

  for (const ExperimentRecord& r : records) {
    std::printf("%s L=%d p=%g: %" PRIu64 "/%" PRIu64 " rate %.6g ratio %.4g\n",
                r.variant.c_str(), r.L, r.p, r.k, r.n, r.rate, r.ci.ratio);
  }

  RunManifest m;
  m.command = "eval";
  m.arguments = argv;
  m.version = kVersion;
  m.timestamp = utc_timestamp();
  m.config = {{"model", a.model},
              {"L", std::to_string(L)},
              {"p_list", a.p_list},
              {"n", std::to_string(a.n)},
              {"underlying", underlying},
              {"symmetry", symmetry},
              {"reference", a.reference},
              {"seed", std::to_string(a.seed)},
              {"jobs", std::to_string(a.jobs)},
              {"out", a.out}};
  m.outputs = {a.out};
  write_manifest(a.out, m);
  return 0;
}

// ---------------------------------------------------------------------------
// repro

std::string describe_syndrome(const CodeGeometry& g, const Syndrome& s) {
  const DetectionList det = detections_of(g, s);
  std::string text = "vertices {";
  for (std::size_t i = 0; i < det.vertices.size(); ++i) {
    if (i) text += ", ";
    text += std::to_string(det.vertices[i]);
  }
  text += "} faces {";
  for (std::size_t i = 0; i < det.faces.size(); ++i) {
    if (i) text += ", ";
    text += std::to_string(det.faces[i]);
  }
  text += "}";
  return text;
}

std::string describe_transform(const Transform& t) {
  std::string text = "(dr=" + std::to_string(t.dr) +
                     ", dc=" + std::to_string(t.dc) + ")";
  if (t.antitransposed) text += " after anti-transposition";
  return text;
}

int cmd_repro(const std::string& which) {
  if (which == "translation-witness") {
    const CodeGeometry g(2);
    const auto w = find_translation_witness(g);
    if (!w) throw SelfCheckError("no translation witness found on the 2x2");
    std::printf("translation-witness: PASS\n");
    std::printf("  syndrome: %s\n", describe_syndrome(g, w->syndrome).c_str());
    std::printf("  translation: %s\n",
                describe_transform(w->translation).c_str());
    std::printf("  plain matching recoveries differ by logical class %d "
                "(pure X)\n",
                w->plain_class);
    std::printf("  center-wrapped recoveries differ by exactly the "
                "translation\n");
    return 0;
  }
  if (which == "ordering-witness") {
    const CodeGeometry g(3);
    const auto w = find_ordering_witness(g, 100000);
    if (!w) throw SelfCheckError("no ordering witness found on the 3x3");
    std::printf("ordering-witness: PASS\n");
    std::printf("  first:  %s\n", describe_syndrome(g, w->first).c_str());
    std::printf("  second: %s (first mapped through %s)\n",
                describe_syndrome(g, w->second).c_str(),
                describe_transform(w->relation).c_str());
    std::printf("  reflect-first-then-center representatives differ:\n");
    std::printf("    %s\n", describe_syndrome(g, w->naive_first).c_str());
    std::printf("    %s\n", describe_syndrome(g, w->naive_second).c_str());
    std::printf("  align agrees on both: %s\n",
                describe_syndrome(g, w->aligned).c_str());
    return 0;
  }
  if (which == "matching-oracle") {
    const CodeGeometry g(5);
    const MatchingCheck c = check_matching_exactness(g, 1000, 0.1, 0xA11CE, 10);
    std::printf("matching-oracle: %" PRIu64 " cases, %" PRIu64 " mismatches\n",
                c.cases_checked, c.mismatches);
    if (c.mismatches != 0 || c.cases_checked != 1000)
      throw SelfCheckError("matching disagrees with the exhaustive oracle");
    std::printf("matching-oracle: PASS\n");
    return 0;
  }
  if (which == "grad-check") {
    const GradientCheck c = check_gradients(42);
    std::printf("grad-check: %" PRIu64 " coordinates, max relative error "
                "%.3g, softmax deviation %.3g\n",
                c.coords_checked, c.max_rel_error, c.softmax_max_dev);
    if (!(c.max_rel_error < 1e-4) || !(c.softmax_max_dev < 1e-12))
      throw SelfCheckError("gradient or normalization check failed");
    std::printf("grad-check: PASS\n");
    return 0;
  }
  throw CLI::ValidationError(
      "--case",
      "must be one of translation-witness, ordering-witness, "
      "matching-oracle, grad-check");
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::string L_list = "5,10,20,40";
  double p = 0.1;
  std::uint64_t n = 1000;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_bench(const BenchArgs& a, const std::vector<std::string>& argv) {
  std::vector<int> sizes = parse_layer_list(a.L_list);  // same grammar
  const BenchReport report = bench_scaling(sizes, a.p, a.n, a.seed);

  const auto print_rows = [](const char* label,
                             const std::vector<BenchRow>& rows) {
    for (const BenchRow& r : rows)
      std::printf("%-10s L=%-3d n=%" PRIu64 " mean %.1f ns sd %.1f ns\n",
                  label, r.L, r.n_samples, r.mean_ns, r.stddev_ns);
  };
  print_rows("align", report.align);
  print_rows("trivial", report.trivial);
  print_rows("mwpm", report.mwpm);
  if (sizes.size() >= 3) {
    std::printf("log-log slope align:   %.3f\n", report.align_slope);
    std::printf("log-log slope trivial: %.3f\n", report.trivial_slope);
    std::printf("log-log slope mwpm:    %.3f\n", report.mwpm_slope);
  }

  if (!a.out.empty()) {
    write_bench_csv(a.out, report.align);
    RunManifest m;
    m.command = "bench";
    m.arguments = argv;
    m.version = kVersion;
    m.timestamp = utc_timestamp();
    m.config = {{"L_list", a.L_list},
                {"p", format_g(a.p)},
                {"n", std::to_string(a.n)},
                {"seed", std::to_string(a.seed)},
                {"out", a.out}};
    m.outputs = {a.out};
    write_manifest(a.out, m);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric code decoding workbench"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  GenDataArgs gen;
  CLI::App* gen_cmd =
      app.add_subcommand("gen-data", "Generate a labeled training dataset");
  gen_cmd->add_option("--L", gen.L, "Lattice size")->capture_default_str();
  gen_cmd->add_option("--p", gen.p, "Depolarizing noise parameter")
      ->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "Number of samples")->required();
  gen_cmd->add_option("--underlying", gen.underlying, "mwpm or trivial")
      ->capture_default_str();
  gen_cmd->add_option("--symmetry", gen.symmetry, "none, center or align")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Sampling seed")->required();
  gen_cmd->add_option("--out", gen.out, "Output dataset path")->required();
  gen_cmd->add_option("--jobs", gen.jobs, "Worker threads")
      ->capture_default_str();

  TrainArgs tr;
  CLI::App* train_cmd =
      app.add_subcommand("train", "Train the logical-class network");
  train_cmd->add_option("--data", tr.data, "Dataset path")->required();
  train_cmd->add_option("--layers", tr.layers, "Hidden layer sizes")
      ->capture_default_str();
  train_cmd->add_option("--iters", tr.iters, "Training iterations")
      ->capture_default_str();
  train_cmd->add_option("--lr", tr.lr, "Learning rate")->capture_default_str();
  train_cmd->add_option("--batch", tr.batch, "Minibatch size")
      ->capture_default_str();
  train_cmd->add_option("--weight-decay", tr.weight_decay,
                        "L2 penalty coefficient")
      ->capture_default_str();
  train_cmd->add_option("--init-width", tr.init_width,
                        "Initial parameter standard deviation")
      ->capture_default_str();
  train_cmd->add_option("--val-fraction", tr.val_fraction,
                        "Held-out validation fraction")
      ->capture_default_str();
  train_cmd->add_option("--val-interval", tr.val_interval,
                        "Iterations between curve records")
      ->capture_default_str();
  train_cmd->add_option("--seed", tr.seed, "Training seed")->required();
  train_cmd->add_option("--out-model", tr.out_model, "Model output path")
      ->required();
  train_cmd->add_option("--out-curves", tr.out_curves, "Curves CSV path")
      ->required();

  EvalArgs ev;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "Measure logical error rates");
  eval_cmd->add_option("--model", ev.model,
                       "Trained model (omit for the bare decoder)");
  eval_cmd->add_option("--L", ev.L, "Lattice size");
  eval_cmd->add_option("--p-list", ev.p_list,
                       "Noise parameters: 'a,b,c' or 'start:stop:step'")
      ->capture_default_str();
  eval_cmd->add_option("--n", ev.n, "Trials per noise parameter")->required();
  CLI::Option* ev_u =
      eval_cmd->add_option("--underlying", ev.underlying, "mwpm or trivial")
          ->capture_default_str();
  CLI::Option* ev_s =
      eval_cmd->add_option("--symmetry", ev.symmetry, "none, center or align")
          ->capture_default_str();
  eval_cmd->add_option("--reference", ev.reference, "Reference decoder")
      ->capture_default_str();
  eval_cmd->add_option("--seed", ev.seed, "Sampling seed")->required();
  eval_cmd->add_option("--out", ev.out, "Results CSV path")->required();
  eval_cmd->add_option("--jobs", ev.jobs, "Worker threads")
      ->capture_default_str();

  std::string repro_case;
  CLI::App* repro_cmd =
      app.add_subcommand("repro", "Run a deterministic self-check case");
  repro_cmd
      ->add_option("--case", repro_case,
                   "translation-witness, ordering-witness, matching-oracle "
                   "or grad-check")
      ->required();

  BenchArgs be;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Time canonicalization and decoding");
  bench_cmd->add_option("--L-list", be.L_list, "Lattice sizes")
      ->capture_default_str();
  bench_cmd->add_option("--p", be.p, "Depolarizing noise parameter")
      ->capture_default_str();
  bench_cmd->add_option("--n", be.n, "Samples per lattice size")
      ->capture_default_str();
  bench_cmd->add_option("--seed", be.seed, "Sampling seed")->required();
  bench_cmd->add_option("--out", be.out, "Benchmark CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const std::vector<std::string> args = collect_args(argc, argv);
  try {
    if (*gen_cmd) return cmd_gen_data(gen, args);
    if (*train_cmd) return cmd_train(tr, args);
    if (*eval_cmd) {
      ev.underlying_given = ev_u->count() > 0;
      ev.symmetry_given = ev_s->count() > 0;
      return cmd_eval(ev, args);
    }
    if (*repro_cmd) return cmd_repro(repro_case);
    if (*bench_cmd) return cmd_bench(be, args);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const ConfigMismatchError& e) {
    std::fprintf(stderr, "configuration mismatch: %s\n", e.what());
    return 3;
  } catch (const SelfCheckError& e) {
    std::fprintf(stderr, "self-check failed: %s\n", e.what());
    return 4;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 1;
}
