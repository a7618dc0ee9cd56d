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

#ifndef SYMDEC_GEOMETRY_HPP
#define SYMDEC_GEOMETRY_HPP

#include <array>
#include <stdexcept>

namespace symdec {

// Square L x L lattice with periodic boundary conditions.
//
// Sites and labels (all row-major, rows increase downward, columns to the
// right, everything mod L):
//   vertex (r, c)            -> index r*L + c
//   face   (r, c)            -> index r*L + c; face (r, c) sits below-right
//                               of vertex (r, c)
//   horizontal edge h(r, c)  -> index r*L + c; joins vertex (r, c) to
//                               (r, c+1)
//   vertical edge   v(r, c)  -> index L*L + r*L + c; joins vertex (r, c) to
//                               (r+1, c)
//
// Face (r, c) is bounded by h(r, c) on top, h(r+1, c) on the bottom,
// v(r, c) on the left and v(r, c+1) on the right.
class CodeGeometry {
 public:
  explicit CodeGeometry(int L) : L_(L) {
    if (L < 2) throw std::invalid_argument("lattice size must be at least 2");
  }

  int L() const { return L_; }
  int num_vertices() const { return L_ * L_; }
  int num_faces() const { return L_ * L_; }
  int num_edges() const { return 2 * L_ * L_; }

  int wrap(int x) const {
    int m = x % L_;
    return m < 0 ? m + L_ : m;
  }

  int vertex_index(int r, int c) const { return wrap(r) * L_ + wrap(c); }
  int face_index(int r, int c) const { return wrap(r) * L_ + wrap(c); }
  int h_edge(int r, int c) const { return wrap(r) * L_ + wrap(c); }
  int v_edge(int r, int c) const { return L_ * L_ + wrap(r) * L_ + wrap(c); }

  bool edge_is_horizontal(int e) const {
    check_edge(e);
    return e < L_ * L_;
  }
  int edge_row(int e) const {
    check_edge(e);
    return (e % (L_ * L_)) / L_;
  }
  int edge_col(int e) const {
    check_edge(e);
    return e % L_;
  }

  int site_row(int s) const {
    check_site(s);
    return s / L_;
  }
  int site_col(int s) const {
    check_site(s);
    return s % L_;
  }

  // The four edges incident to a vertex: the horizontal edges to its right
  // and left and the vertical edges below and above.
  std::array<int, 4> star_edges(int v) const {
    check_site(v);
    int r = v / L_, c = v % L_;
    return {h_edge(r, c), h_edge(r, c - 1), v_edge(r, c), v_edge(r - 1, c)};
  }

  // The four edges bounding a face.
  std::array<int, 4> plaquette_edges(int f) const {
    check_site(f);
    int r = f / L_, c = f % L_;
    return {h_edge(r, c), h_edge(r + 1, c), v_edge(r, c), v_edge(r, c + 1)};
  }

 private:
  void check_edge(int e) const {
    if (e < 0 || e >= num_edges())
      throw std::invalid_argument("edge index out of range");
  }
  void check_site(int s) const {
    if (s < 0 || s >= L_ * L_)
      throw std::invalid_argument("site index out of range");
  }

  int L_;
};

}  // namespace symdec

#endif
