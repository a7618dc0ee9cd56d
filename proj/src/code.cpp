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

#include "symdec/code.hpp"

namespace symdec {

Syndrome syndrome_of(const CodeGeometry& g, const PauliChain& chain) {
  if (static_cast<int>(chain.num_qubits()) != g.num_edges())
    throw std::invalid_argument("chain does not match lattice size");
  Syndrome s(g);
  int n = g.num_vertices();
  for (int v = 0; v < n; ++v) {
    bool parity = false;
    for (int e : g.star_edges(v)) parity ^= chain.z.test(e);
    if (parity) s.bits.set(v);
  }
  for (int f = 0; f < n; ++f) {
    bool parity = false;
    for (int e : g.plaquette_edges(f)) parity ^= chain.x.test(e);
    if (parity) s.bits.set(n + f);
  }
  return s;
}

PauliChain logical_operator(const CodeGeometry& g, LogicalOp which) {
  PauliChain chain = identity_chain(g);
  int L = g.L();
  switch (which) {
    case LogicalOp::Z1:
      for (int c = 0; c < L; ++c) chain.z.set(g.h_edge(0, c));
      break;
    case LogicalOp::X1:
      for (int r = 0; r < L; ++r) chain.x.set(g.h_edge(r, 0));
      break;
    case LogicalOp::Z2:
      for (int r = 0; r < L; ++r) chain.z.set(g.v_edge(r, 0));
      break;
    case LogicalOp::X2:
      for (int c = 0; c < L; ++c) chain.x.set(g.v_edge(0, c));
      break;
  }
  return chain;
}

LogicalSet logical_operators(const CodeGeometry& g) {
  return {logical_operator(g, LogicalOp::Z1), logical_operator(g, LogicalOp::X1),
          logical_operator(g, LogicalOp::Z2), logical_operator(g, LogicalOp::X2)};
}

int logical_class(const LogicalSet& logicals, const PauliChain& chain) {
  int label = 0;
  if (!commutes(chain, logicals.z1)) label |= 1;
  if (!commutes(chain, logicals.x1)) label |= 2;
  if (!commutes(chain, logicals.z2)) label |= 4;
  if (!commutes(chain, logicals.x2)) label |= 8;
  return label;
}

int logical_class(const CodeGeometry& g, const PauliChain& chain) {
  if (syndrome_of(g, chain).bits.any())
    throw std::invalid_argument("logical_class requires an empty syndrome");
  return logical_class(logical_operators(g), chain);
}

PauliChain chain_with_class(const CodeGeometry& g, int label) {
  if (label < 0 || label > 15)
    throw std::invalid_argument("class label out of range");
  PauliChain chain = identity_chain(g);
  if (label & 1) chain = multiply(chain, logical_operator(g, LogicalOp::X1));
  if (label & 2) chain = multiply(chain, logical_operator(g, LogicalOp::Z1));
  if (label & 4) chain = multiply(chain, logical_operator(g, LogicalOp::X2));
  if (label & 8) chain = multiply(chain, logical_operator(g, LogicalOp::Z2));
  return chain;
}

bool is_success(const CodeGeometry& g, const PauliChain& error,
                const PauliChain& recovery) {
  if (!(syndrome_of(g, error) == syndrome_of(g, recovery)))
    throw std::invalid_argument("recovery does not match the error syndrome");
  return logical_class(logical_operators(g), multiply(error, recovery)) == 0;
}

int gf2_rank(std::vector<BitVec> rows) {
  int rank = 0;
  std::size_t n_cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < n_cols; ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r].test(col)) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != static_cast<std::size_t>(rank) && rows[r].test(col))
        rows[r] ^= rows[rank];
    }
    ++rank;
    if (static_cast<std::size_t>(rank) == rows.size()) break;
  }
  return rank;
}

}  // namespace symdec
