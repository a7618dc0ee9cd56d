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

#include "symdec/matching.hpp"

#include <cstdlib>

#include "symdec/blossom.hpp"

namespace symdec {

namespace {

// Shortest signed displacement from `from` to `to` on a ring of length L,
// preferring the positive direction when both ways are equally long.
int signed_offset(int from, int to, int L) {
  int forward = (to - from + L) % L;
  return (forward <= L - forward) ? forward : forward - L;
}

void check_site(const CodeGeometry& g, Site s) {
  if (s.index < 0 || s.index >= g.num_vertices())
    throw std::invalid_argument("site index out of range");
}

}  // namespace

DetectionList detections_of(const CodeGeometry& g, const Syndrome& s) {
  if (static_cast<int>(s.bits.size()) != g.num_edges())
    throw std::invalid_argument("syndrome does not match lattice size");
  DetectionList out;
  int n = g.num_vertices();
  for (int i : s.bits.ones()) {
    if (i < n)
      out.vertices.push_back(i);
    else
      out.faces.push_back(i - n);
  }
  return out;
}

int torus_distance(const CodeGeometry& g, Site a, Site b) {
  if (a.kind != b.kind)
    throw std::invalid_argument("cannot measure distance across site kinds");
  check_site(g, a);
  check_site(g, b);
  int L = g.L();
  int dr = std::abs(signed_offset(g.site_row(a.index), g.site_row(b.index), L));
  int dc = std::abs(signed_offset(g.site_col(a.index), g.site_col(b.index), L));
  return dr + dc;
}

PauliChain shortest_path_chain(const CodeGeometry& g, Site a, Site b) {
  if (a.kind != b.kind)
    throw std::invalid_argument("cannot connect sites of different kinds");
  check_site(g, a);
  check_site(g, b);
  PauliChain chain = identity_chain(g);
  if (a.index == b.index) return chain;

  // Walk from the colexicographically smaller site: column first, then row.
  int ar = g.site_row(a.index), ac = g.site_col(a.index);
  int br = g.site_row(b.index), bc = g.site_col(b.index);
  if (bc < ac || (bc == ac && br < ar)) {
    std::swap(ar, br);
    std::swap(ac, bc);
  }
  int L = g.L();
  int dr = signed_offset(ar, br, L);
  int dc = signed_offset(ac, bc, L);
  BitVec& side = (a.kind == SiteKind::Vertex) ? chain.z : chain.x;

  int r = ar;
  for (int i = 0; i < std::abs(dr); ++i) {
    if (a.kind == SiteKind::Vertex) {
      // vertex (r, ac) <-> (r +- 1, ac) via a vertical edge
      if (dr > 0) {
        side.flip(g.v_edge(r, ac));
        r = g.wrap(r + 1);
      } else {
        r = g.wrap(r - 1);
        side.flip(g.v_edge(r, ac));
      }
    } else {
      // face (r, ac) <-> (r +- 1, ac) via the horizontal edge between them
      if (dr > 0) {
        side.flip(g.h_edge(r + 1, ac));
        r = g.wrap(r + 1);
      } else {
        side.flip(g.h_edge(r, ac));
        r = g.wrap(r - 1);
      }
    }
  }
  int c = ac;
  for (int i = 0; i < std::abs(dc); ++i) {
    if (a.kind == SiteKind::Vertex) {
      // vertex (br, c) <-> (br, c +- 1) via a horizontal edge
      if (dc > 0) {
        side.flip(g.h_edge(br, c));
        c = g.wrap(c + 1);
      } else {
        c = g.wrap(c - 1);
        side.flip(g.h_edge(br, c));
      }
    } else {
      // face (br, c) <-> (br, c +- 1) via the vertical edge between them
      if (dc > 0) {
        side.flip(g.v_edge(br, c + 1));
        c = g.wrap(c + 1);
      } else {
        side.flip(g.v_edge(br, c));
        c = g.wrap(c - 1);
      }
    }
  }
  return chain;
}

PauliChain trivial_decode(const CodeGeometry& g, const Syndrome& s) {
  DetectionList det = detections_of(g, s);
  if (det.vertices.size() % 2 != 0 || det.faces.size() % 2 != 0)
    throw std::invalid_argument("syndrome has odd detection parity");
  PauliChain chain = identity_chain(g);
  for (std::size_t i = 0; i + 1 < det.vertices.size(); i += 2) {
    chain = multiply(chain, shortest_path_chain(
                                g, {SiteKind::Vertex, det.vertices[i]},
                                {SiteKind::Vertex, det.vertices[i + 1]}));
  }
  for (std::size_t i = 0; i + 1 < det.faces.size(); i += 2) {
    chain = multiply(chain, shortest_path_chain(
                                g, {SiteKind::Face, det.faces[i]},
                                {SiteKind::Face, det.faces[i + 1]}));
  }
  return chain;
}

std::vector<std::pair<int, int>> mwpm_pairs(const CodeGeometry& g,
                                            const std::vector<int>& sites,
                                            SiteKind kind) {
  int n = static_cast<int>(sites.size());
  if (n % 2 != 0)
    throw std::invalid_argument("syndrome has odd detection parity");
  if (n == 0) return {};
  std::vector<std::int64_t> weights(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::int64_t d =
          torus_distance(g, {kind, sites[i]}, {kind, sites[j]});
      weights[static_cast<std::size_t>(i) * n + j] = d;
      weights[static_cast<std::size_t>(j) * n + i] = d;
    }
  std::vector<int> mate = min_weight_perfect_matching(n, weights);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    if (i < mate[i]) pairs.emplace_back(i, mate[i]);
  return pairs;
}

PauliChain mwpm_decode(const CodeGeometry& g, const Syndrome& s) {
  DetectionList det = detections_of(g, s);
  PauliChain chain = identity_chain(g);
  for (auto [i, j] : mwpm_pairs(g, det.vertices, SiteKind::Vertex)) {
    chain = multiply(chain, shortest_path_chain(
                                g, {SiteKind::Vertex, det.vertices[i]},
                                {SiteKind::Vertex, det.vertices[j]}));
  }
  for (auto [i, j] : mwpm_pairs(g, det.faces, SiteKind::Face)) {
    chain = multiply(chain, shortest_path_chain(
                                g, {SiteKind::Face, det.faces[i]},
                                {SiteKind::Face, det.faces[j]}));
  }
  return chain;
}

}  // namespace symdec
