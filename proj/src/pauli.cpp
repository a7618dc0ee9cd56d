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

#include "symdec/pauli.hpp"

namespace symdec {

PauliChain multiply(const PauliChain& a, const PauliChain& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("Pauli chain length mismatch");
  PauliChain out = a;
  out.x ^= b.x;
  out.z ^= b.z;
  return out;
}

bool commutes(const PauliChain& a, const PauliChain& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("Pauli chain length mismatch");
  return !(BitVec::and_parity(a.x, b.z) ^ BitVec::and_parity(a.z, b.x));
}

}  // namespace symdec
