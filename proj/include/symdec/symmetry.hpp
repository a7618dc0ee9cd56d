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

#ifndef SYMDEC_SYMMETRY_HPP
#define SYMDEC_SYMMETRY_HPP

#include <functional>
#include <utility>

#include "symdec/code.hpp"
#include "symdec/geometry.hpp"

namespace symdec {

// A lattice symmetry: optionally anti-transpose, then translate by (dr, dc).
// Anti-transposition is the reflection through the lattice's anti-diagonal,
// sending vertex (r, c) to (L-1-c, L-1-r); it maps vertices to vertices and
// faces to faces, and is an involution.
struct Transform {
  int dr = 0;
  int dc = 0;
  bool antitransposed = false;

  bool is_identity() const { return dr == 0 && dc == 0 && !antitransposed; }
  bool operator==(const Transform& other) const = default;
};

// Strict total order on syndromes: s1 < s2 iff at the first bit index where
// they differ, s1 has the detection.
bool syndrome_less(const Syndrome& a, const Syndrome& b);

Syndrome translate_syndrome(const CodeGeometry& g, const Syndrome& s, int dr,
                            int dc);
Syndrome antitranspose_syndrome(const CodeGeometry& g, const Syndrome& s);
PauliChain translate_chain(const CodeGeometry& g, const PauliChain& c, int dr,
                           int dc);
PauliChain antitranspose_chain(const CodeGeometry& g, const PauliChain& c);

// Group operations. compose(outer, inner) applies inner first; inverse
// satisfies apply(inverse(t), apply(t, s)) == s.
Transform compose(const CodeGeometry& g, const Transform& outer,
                  const Transform& inner);
Transform inverse(const CodeGeometry& g, const Transform& t);
Syndrome apply(const CodeGeometry& g, const Transform& t, const Syndrome& s);
PauliChain apply(const CodeGeometry& g, const Transform& t,
                 const PauliChain& c);

// Translation representative: among the translations that move some vertex
// detection to index 0 (or, with no vertex detections, some face detection
// to index L^2), the lexicographically smallest translated syndrome. The
// empty syndrome maps to itself under the identity. Candidates are tried in
// ascending detection order and ties keep the first, so the result is
// deterministic; the returned transform satisfies
// apply(t, s) == canonical syndrome.
std::pair<Syndrome, Transform> center(const CodeGeometry& g,
                                      const Syndrome& s);

// The smaller of s and its anti-transposition (identity transform on ties).
std::pair<Syndrome, Transform> antitransposition_representant(
    const CodeGeometry& g, const Syndrome& s);

// Full canonicalization over translations and anti-transposition:
// min(center(s), center(antitranspose(center(s)))), preferring the
// translation-only branch on ties. Constant on every orbit of the symmetry
// group generated by translations and anti-transposition.
std::pair<Syndrome, Transform> align(const CodeGeometry& g, const Syndrome& s);

enum class SymmetryMode { None, Center, Align };

std::pair<Syndrome, Transform> canonicalize(const CodeGeometry& g,
                                            const Syndrome& s,
                                            SymmetryMode mode);

// How a transform permutes homology class labels: translations act
// trivially; anti-transposition exchanges the two encoded qubits, swapping
// label bits 0 <-> 2 and 1 <-> 3.
int relabel_logical(int label, const Transform& t);

using DecoderFn = std::function<PauliChain(const Syndrome&)>;

// Decode in the canonical frame and pull the correction back: with
// (s', t) = canonicalize(s), returns apply(inverse(t), decoder(s')).
PauliChain wrapped_decode(const CodeGeometry& g, const DecoderFn& decoder,
                          SymmetryMode mode, const Syndrome& s);

}  // namespace symdec

#endif
