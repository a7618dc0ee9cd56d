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

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "symdec/mlp.hpp"

namespace symdec {

namespace {
constexpr const char* kModelKind = "symdec-model";
constexpr int kModelVersion = 1;
}  // namespace

void save_model(const std::string& path, const NetworkParams& net,
                const std::map<std::string, std::string>& metadata) {
  nlohmann::json doc;
  doc["format"] = kModelKind;
  doc["format_version"] = kModelVersion;
  doc["layer_sizes"] = net.layer_sizes;
  doc["weights"] = net.weights;
  doc["biases"] = net.biases;
  doc["metadata"] = metadata;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open model file for writing: " + path);
  out << doc.dump(1, '\t') << '\n';
  if (!out) throw std::runtime_error("failed writing model file: " + path);
}

NetworkParams load_model(const std::string& path,
                         std::map<std::string, std::string>* metadata) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("model file is not valid JSON: " + path + ": " +
                             e.what());
  }
  try {
    if (doc.at("format").get<std::string>() != kModelKind)
      throw std::runtime_error("not a model file: " + path);
    if (doc.at("format_version").get<int>() != kModelVersion)
      throw std::runtime_error("unsupported model file version in " + path);
    NetworkParams net;
    net.layer_sizes = doc.at("layer_sizes").get<std::vector<int>>();
    net.weights = doc.at("weights").get<std::vector<std::vector<double>>>();
    net.biases = doc.at("biases").get<std::vector<std::vector<double>>>();
    if (net.layer_sizes.size() < 2 ||
        net.weights.size() + 1 != net.layer_sizes.size() ||
        net.biases.size() != net.weights.size())
      throw std::runtime_error("model file has inconsistent shapes: " + path);
    for (std::size_t l = 0; l < net.weights.size(); ++l) {
      std::size_t in_sz = net.layer_sizes[l], out_sz = net.layer_sizes[l + 1];
      if (net.weights[l].size() != in_sz * out_sz ||
          net.biases[l].size() != out_sz)
        throw std::runtime_error("model file has inconsistent shapes: " + path);
    }
    if (metadata) {
      metadata->clear();
      if (doc.contains("metadata"))
        *metadata =
            doc["metadata"].get<std::map<std::string, std::string>>();
    }
    return net;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("model file is missing fields: " + path + ": " +
                             e.what());
  }
}

void write_curves_csv(const std::string& path,
                      const std::vector<CurvePoint>& curves) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open curve file for writing: " + path);
  std::fprintf(f, "iteration,train_loss,val_loss,val_error\n");
  for (const CurvePoint& p : curves)
    std::fprintf(f, "%" PRId64 ",%.17g,%.17g,%.17g\n", p.iteration,
                 p.train_loss, p.val_loss, p.val_error);
  if (std::fclose(f) != 0)
    throw std::runtime_error("failed writing curve file: " + path);
}

}  // namespace symdec
