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

#ifndef SYMDEC_NOISE_HPP
#define SYMDEC_NOISE_HPP

#include <cstdint>

#include "symdec/code.hpp"
#include "symdec/geometry.hpp"
#include "symdec/pauli.hpp"

namespace symdec {

// Independent depolarizing noise: each qubit is left alone with probability
// 1-p and hit by X, Y or Z with probability p/3 each.
struct NoiseModel {
  double p = 0.0;
  std::uint64_t seed = 0;

  NoiseModel(double p_, std::uint64_t seed_) : p(p_), seed(seed_) {
    if (!(p >= 0.0) || !(p <= 1.0))
      throw std::invalid_argument("error probability must lie in [0, 1]");
  }
};

// Error probability for the channel rho -> (1-q) rho + q I/2: replacing a
// qubit by the maximally mixed state with probability q applies a nontrivial
// Pauli with probability p = 3q/4.
double depolarizing_p_from_q(double q);

// The error hitting sample `sample_index`. Counter-based: sample i is
// generated from stream i of the model's seed, so any subset of samples can
// be produced in any order, on any number of workers, with identical results.
// One uniform draw per edge, edges in ascending index order; the draw u
// selects X for u < p/3, Y for u < 2p/3, Z for u < p, identity otherwise.
PauliChain sample_error(const CodeGeometry& g, const NoiseModel& model,
                        std::uint64_t sample_index);

}  // namespace symdec

#endif
