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

#ifndef SYMDEC_PAULI_HPP
#define SYMDEC_PAULI_HPP

#include "symdec/bitvec.hpp"
#include "symdec/geometry.hpp"

namespace symdec {

// n-qubit Pauli operator modulo phase, in symplectic form: bit e of `x` says
// the operator acts with an X factor on qubit (edge) e, bit e of `z` says it
// acts with a Z factor. Both set means Y.
struct PauliChain {
  BitVec x;
  BitVec z;

  PauliChain() = default;
  explicit PauliChain(std::size_t n_qubits) : x(n_qubits), z(n_qubits) {}

  std::size_t num_qubits() const { return x.size(); }
  bool is_identity() const { return !x.any() && !z.any(); }

  bool operator==(const PauliChain& other) const = default;
};

inline PauliChain identity_chain(const CodeGeometry& g) {
  return PauliChain(static_cast<std::size_t>(g.num_edges()));
}

// Product modulo phase: supports XOR componentwise.
PauliChain multiply(const PauliChain& a, const PauliChain& b);

// True iff the operators commute: the symplectic form
// |a.x & b.z| + |a.z & b.x| is even.
bool commutes(const PauliChain& a, const PauliChain& b);

}  // namespace symdec

#endif
