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

#include "symdec/noise.hpp"

#include "symdec/philox.hpp"

namespace symdec {

double depolarizing_p_from_q(double q) {
  if (!(q >= 0.0 && q <= 1.0))
    throw std::invalid_argument("channel rate must lie in [0, 1]");
  return 0.75 * q;
}

PauliChain sample_error(const CodeGeometry& g, const NoiseModel& model,
                        std::uint64_t sample_index) {
  PauliChain chain = identity_chain(g);
  PhiloxStream rng(model.seed, sample_index);
  double third = model.p / 3.0;
  int n = g.num_edges();
  for (int e = 0; e < n; ++e) {
    double u = rng.next_double();
    if (u >= model.p) continue;
    if (u < third) {
      chain.x.set(e);  // X
    } else if (u < 2.0 * third) {
      chain.x.set(e);  // Y
      chain.z.set(e);
    } else {
      chain.z.set(e);  // Z
    }
  }
  return chain;
}

}  // namespace symdec
