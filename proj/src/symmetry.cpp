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

#include "symdec/symmetry.hpp"

namespace symdec {

namespace {

void check_syndrome(const CodeGeometry& g, const Syndrome& s) {
  if (static_cast<int>(s.bits.size()) != g.num_edges())
    throw std::invalid_argument("syndrome does not match lattice size");
}

// Lazy lexicographic comparison of two translates of the same syndrome:
// generates bit k of translate(s, d) as s[k - d] on the fly and stops at the
// first difference. Average cost is O(1) bits at moderate detection density,
// which keeps centering at O(detections) overall instead of O(detections *
// L^2).
bool translated_less(const CodeGeometry& g, const Syndrome& s, int dr1,
                     int dc1, int dr2, int dc2) {
  int L = g.L();
  int n = L * L;
  for (int section = 0; section < 2; ++section) {
    int offset = section * n;
    int pr1 = g.wrap(-dr1), pr2 = g.wrap(-dr2);
    for (int r = 0; r < L; ++r) {
      int base1 = offset + pr1 * L, base2 = offset + pr2 * L;
      int pc1 = g.wrap(-dc1), pc2 = g.wrap(-dc2);
      for (int c = 0; c < L; ++c) {
        bool b1 = s.bits.test(base1 + pc1);
        bool b2 = s.bits.test(base2 + pc2);
        if (b1 != b2) return b1;
        if (++pc1 == L) pc1 = 0;
        if (++pc2 == L) pc2 = 0;
      }
      if (++pr1 == L) pr1 = 0;
      if (++pr2 == L) pr2 = 0;
    }
  }
  return false;
}

}  // namespace

bool syndrome_less(const Syndrome& a, const Syndrome& b) {
  return BitVec::front_loaded_less(a.bits, b.bits);
}

Syndrome translate_syndrome(const CodeGeometry& g, const Syndrome& s, int dr,
                            int dc) {
  check_syndrome(g, s);
  int L = g.L();
  int n = L * L;
  Syndrome out(g);
  for (int section = 0; section < 2; ++section) {
    int offset = section * n;
    for (int r = 0; r < L; ++r)
      for (int c = 0; c < L; ++c)
        if (s.bits.test(offset + r * L + c))
          out.bits.set(offset + g.wrap(r + dr) * L + g.wrap(c + dc));
  }
  return out;
}

Syndrome antitranspose_syndrome(const CodeGeometry& g, const Syndrome& s) {
  check_syndrome(g, s);
  int L = g.L();
  int n = L * L;
  Syndrome out(g);
  for (int r = 0; r < L; ++r)
    for (int c = 0; c < L; ++c) {
      if (s.bits.test(r * L + c))
        out.bits.set((L - 1 - c) * L + (L - 1 - r));
      if (s.bits.test(n + r * L + c))
        out.bits.set(n + g.wrap(L - 2 - c) * L + g.wrap(L - 2 - r));
    }
  return out;
}

PauliChain translate_chain(const CodeGeometry& g, const PauliChain& ch, int dr,
                           int dc) {
  if (static_cast<int>(ch.num_qubits()) != g.num_edges())
    throw std::invalid_argument("chain does not match lattice size");
  int L = g.L();
  PauliChain out = identity_chain(g);
  for (int r = 0; r < L; ++r)
    for (int c = 0; c < L; ++c) {
      int h_src = g.h_edge(r, c), h_dst = g.h_edge(r + dr, c + dc);
      int v_src = g.v_edge(r, c), v_dst = g.v_edge(r + dr, c + dc);
      if (ch.x.test(h_src)) out.x.set(h_dst);
      if (ch.z.test(h_src)) out.z.set(h_dst);
      if (ch.x.test(v_src)) out.x.set(v_dst);
      if (ch.z.test(v_src)) out.z.set(v_dst);
    }
  return out;
}

PauliChain antitranspose_chain(const CodeGeometry& g, const PauliChain& ch) {
  if (static_cast<int>(ch.num_qubits()) != g.num_edges())
    throw std::invalid_argument("chain does not match lattice size");
  int L = g.L();
  PauliChain out = identity_chain(g);
  for (int r = 0; r < L; ++r)
    for (int c = 0; c < L; ++c) {
      // h(r, c) joins (r, c)-(r, c+1); the images of those vertices are
      // joined by v(L-2-c, L-1-r). Likewise v(r, c) maps to h(L-1-c, L-2-r).
      int h_src = g.h_edge(r, c);
      int h_dst = g.v_edge(L - 2 - c, L - 1 - r);
      int v_src = g.v_edge(r, c);
      int v_dst = g.h_edge(L - 1 - c, L - 2 - r);
      if (ch.x.test(h_src)) out.x.set(h_dst);
      if (ch.z.test(h_src)) out.z.set(h_dst);
      if (ch.x.test(v_src)) out.x.set(v_dst);
      if (ch.z.test(v_src)) out.z.set(v_dst);
    }
  return out;
}

Transform compose(const CodeGeometry& g, const Transform& outer,
                  const Transform& inner) {
  // outer o inner. Conjugation rule: antitranspose o translate(dr, dc) ==
  // translate(-dc, -dr) o antitranspose.
  Transform t;
  t.antitransposed = outer.antitransposed != inner.antitransposed;
  int idr = inner.dr, idc = inner.dc;
  if (outer.antitransposed) {
    int tmp = idr;
    idr = -idc;
    idc = -tmp;
  }
  t.dr = g.wrap(outer.dr + idr);
  t.dc = g.wrap(outer.dc + idc);
  return t;
}

Transform inverse(const CodeGeometry& g, const Transform& t) {
  if (!t.antitransposed) return {g.wrap(-t.dr), g.wrap(-t.dc), false};
  // (translate(d) o antitranspose)^-1 swaps the displacement components.
  return {g.wrap(t.dc), g.wrap(t.dr), true};
}

Syndrome apply(const CodeGeometry& g, const Transform& t, const Syndrome& s) {
  Syndrome out = t.antitransposed ? antitranspose_syndrome(g, s) : s;
  if (t.dr != 0 || t.dc != 0) out = translate_syndrome(g, out, t.dr, t.dc);
  return out;
}

PauliChain apply(const CodeGeometry& g, const Transform& t,
                 const PauliChain& c) {
  PauliChain out = t.antitransposed ? antitranspose_chain(g, c) : c;
  if (t.dr != 0 || t.dc != 0) out = translate_chain(g, out, t.dr, t.dc);
  return out;
}

std::pair<Syndrome, Transform> center(const CodeGeometry& g,
                                      const Syndrome& s) {
  check_syndrome(g, s);
  int L = g.L();
  int n = L * L;
  // Candidate translations put a vertex detection at index 0, or a face
  // detection at index L^2 when there are no vertex detections.
  std::vector<int> anchors;
  for (int i : s.bits.ones())
    if (i < n) anchors.push_back(i);
  if (anchors.empty())
    for (int i : s.bits.ones()) anchors.push_back(i - n);
  if (anchors.empty()) return {s, Transform{}};
  int best_dr = 0, best_dc = 0;
  bool first = true;
  for (int site : anchors) {
    int dr = g.wrap(-(site / L));
    int dc = g.wrap(-(site % L));
    if (first || translated_less(g, s, dr, dc, best_dr, best_dc)) {
      best_dr = dr;
      best_dc = dc;
      first = false;
    }
  }
  return {translate_syndrome(g, s, best_dr, best_dc),
          Transform{best_dr, best_dc, false}};
}

std::pair<Syndrome, Transform> antitransposition_representant(
    const CodeGeometry& g, const Syndrome& s) {
  Syndrome flipped = antitranspose_syndrome(g, s);
  if (syndrome_less(flipped, s)) return {flipped, Transform{0, 0, true}};
  return {s, Transform{}};
}

std::pair<Syndrome, Transform> align(const CodeGeometry& g,
                                     const Syndrome& s) {
  auto [centered, t1] = center(g, s);
  Syndrome flipped = antitranspose_syndrome(g, centered);
  auto [flipped_centered, t2] = center(g, flipped);
  if (syndrome_less(flipped_centered, centered)) {
    Transform sigma{0, 0, true};
    return {flipped_centered, compose(g, t2, compose(g, sigma, t1))};
  }
  return {centered, t1};
}

std::pair<Syndrome, Transform> canonicalize(const CodeGeometry& g,
                                            const Syndrome& s,
                                            SymmetryMode mode) {
  switch (mode) {
    case SymmetryMode::None:
      check_syndrome(g, s);
      return {s, Transform{}};
    case SymmetryMode::Center:
      return center(g, s);
    case SymmetryMode::Align:
      return align(g, s);
  }
  throw std::invalid_argument("unknown symmetry mode");
}

int relabel_logical(int label, const Transform& t) {
  if (label < 0 || label > 15)
    throw std::invalid_argument("class label out of range");
  if (!t.antitransposed) return label;
  int swapped = 0;
  if (label & 1) swapped |= 4;
  if (label & 2) swapped |= 8;
  if (label & 4) swapped |= 1;
  if (label & 8) swapped |= 2;
  return swapped;
}

PauliChain wrapped_decode(const CodeGeometry& g, const DecoderFn& decoder,
                          SymmetryMode mode, const Syndrome& s) {
  auto [canonical, t] = canonicalize(g, s, mode);
  PauliChain correction = decoder(canonical);
  return apply(g, inverse(g, t), correction);
}

}  // namespace symdec
