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

#ifndef SYMDEC_HLD_HPP
#define SYMDEC_HLD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include "symdec/matching.hpp"
#include "symdec/mlp.hpp"
#include "symdec/noise.hpp"
#include "symdec/symmetry.hpp"

namespace symdec {

// The two baseline decoders a classifier network can sit on top of.
enum class Underlying { Mwpm, Trivial };

const char* underlying_name(Underlying u);
const char* symmetry_name(SymmetryMode m);

// Plain decoder closure for one lattice.
DecoderFn base_decoder(const CodeGeometry& g, Underlying u);

// Baseline decoder applied in the canonical frame of `mode`.
DecoderFn wrapped_decoder(const CodeGeometry& g, Underlying u,
                          SymmetryMode mode);

// One supervised example: the canonical syndrome of an error, labeled with
// the homology class of (error * wrapped recovery) expressed in the
// canonical frame. Identity-syndrome errors are kept; their label is the
// class of the error itself.
struct TrainingSample {
  BitVec input;
  std::uint8_t label;
};

TrainingSample make_sample(const CodeGeometry& g, const DecoderFn& base,
                           SymmetryMode mode, const PauliChain& error);

struct DatasetSpec {
  int L = 3;
  Underlying underlying = Underlying::Mwpm;
  SymmetryMode symmetry = SymmetryMode::Align;
  double p_train = 0.1;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};

// Sample `count` depolarizing errors and label them. Sample i derives from
// stream i of the seed, so the result is identical for any job count.
SampleSet generate_dataset(const CodeGeometry& g, const DatasetSpec& spec,
                           int jobs = 1);

// Little-endian binary container for labeled syndrome datasets. Writing the
// same spec twice produces byte-identical files.
void write_dataset(const std::string& path, const DatasetSpec& spec,
                   const SampleSet& set);
SampleSet read_dataset(const std::string& path, DatasetSpec* spec = nullptr);

// Full high-level decode: canonicalize, run the base decoder in-frame,
// pull the correction back, and multiply in the logical correction chain
// the classifier picked (relabeled back to the outer frame).
PauliChain hld_decode(const CodeGeometry& g, const NetworkParams& net,
                      const DecoderFn& base, SymmetryMode mode,
                      const Syndrome& s);

// Decoder closure around hld_decode; the network is shared, so the closure
// stays cheap to copy and safe to call from several threads.
DecoderFn hld_decoder(const CodeGeometry& g,
                      std::shared_ptr<const NetworkParams> net, Underlying u,
                      SymmetryMode mode);

// Monte Carlo logical failure count: trial i draws error i from the seed,
// decodes, and checks is_success. Returns {failures, trials}; deterministic
// for any job count.
std::pair<std::uint64_t, std::uint64_t> logical_error_rate(
    const CodeGeometry& g, const DecoderFn& decoder, double p,
    std::uint64_t trials, std::uint64_t seed, int jobs = 1);

}  // namespace symdec

#endif
