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

#ifndef SYMDEC_CODE_HPP
#define SYMDEC_CODE_HPP

#include <cstdint>

#include "symdec/bitvec.hpp"
#include "symdec/geometry.hpp"
#include "symdec/pauli.hpp"

namespace symdec {

// Stabilizer measurement outcome. 2*L*L bits: bit i (i < L*L) is the star
// operator at vertex i, bit L*L + j is the plaquette operator at face j.
// A set bit is a detection (measurement outcome -1).
struct Syndrome {
  BitVec bits;

  Syndrome() = default;
  explicit Syndrome(const CodeGeometry& g)
      : bits(static_cast<std::size_t>(g.num_edges())) {}

  bool operator==(const Syndrome& other) const = default;
};

// Syndrome of a Pauli chain: a star at vertex v fires iff the chain's Z part
// overlaps the star's edges an odd number of times; a plaquette at face f
// fires iff the X part overlaps the face boundary oddly.
Syndrome syndrome_of(const CodeGeometry& g, const PauliChain& chain);

// The two encoded qubits and their logical representatives. Logical Z
// operators are Z-type cycles, logical X operators are X-type cycles:
//   Z1 = Z on the horizontal edges of row 0      (a horizontal Z loop)
//   X1 = X on the horizontal edges of column 0   (a vertical X loop)
//   Z2 = Z on the vertical edges of column 0     (a vertical Z loop)
//   X2 = X on the vertical edges of row 0        (a horizontal X loop)
// Each Xi anticommutes with Zi and commutes with everything else.
enum class LogicalOp { Z1, X1, Z2, X2 };

PauliChain logical_operator(const CodeGeometry& g, LogicalOp which);

// All four representatives at once, for hot loops.
struct LogicalSet {
  PauliChain z1, x1, z2, x2;
};
LogicalSet logical_operators(const CodeGeometry& g);

// Homology class of a chain with empty syndrome, encoded in four bits:
//   bit 0: anticommutes with Z1   (X1-type content)
//   bit 1: anticommutes with X1   (Z1-type content)
//   bit 2: anticommutes with Z2   (X2-type content)
//   bit 3: anticommutes with X2   (Z2-type content)
// Class 0 means the chain is a stabilizer (trivial cycle). Requires the
// chain's syndrome to be empty.
int logical_class(const CodeGeometry& g, const PauliChain& chain);
int logical_class(const LogicalSet& logicals, const PauliChain& chain);

// A Pauli chain whose homology class is exactly `label` (0..15): the product
// of the logical representatives picked out by the label bits.
PauliChain chain_with_class(const CodeGeometry& g, int label);

// True iff recovery * error acts trivially on the encoded qubits. Requires
// syndrome_of(error) == syndrome_of(recovery).
bool is_success(const CodeGeometry& g, const PauliChain& error,
                const PauliChain& recovery);

// Rank over GF(2) of a list of bit vectors; used to validate the stabilizer
// group structure (2 L^2 - 2 independent generators).
int gf2_rank(std::vector<BitVec> rows);

}  // namespace symdec

#endif
