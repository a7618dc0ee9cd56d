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

#ifndef SYMDEC_MATCHING_HPP
#define SYMDEC_MATCHING_HPP

#include <vector>

#include "symdec/code.hpp"
#include "symdec/geometry.hpp"

namespace symdec {

enum class SiteKind { Vertex, Face };

struct Site {
  SiteKind kind;
  int index;
};

// Detections of a syndrome, ascending index, split by stabilizer type.
struct DetectionList {
  std::vector<int> vertices;
  std::vector<int> faces;
};
DetectionList detections_of(const CodeGeometry& g, const Syndrome& s);

// Taxicab distance on the torus between two sites of the same kind.
int torus_distance(const CodeGeometry& g, Site a, Site b);

// A minimum-length connecting chain between two same-kind sites: Z on edges
// for vertex pairs (flipping exactly the two star outcomes), X on edges for
// face pairs. Deterministic tie-breaking: the walk starts at the
// colexicographically smaller site (smaller column, then smaller row), covers
// the row offset first and the column offset second, and on an exactly
// antipodal offset steps in the positive direction.
PauliChain shortest_path_chain(const CodeGeometry& g, Site a, Site b);

// Pair detections in ascending index order ((0,1), (2,3), ...) and connect
// each pair by a shortest path. A cheap baseline decoder.
PauliChain trivial_decode(const CodeGeometry& g, const Syndrome& s);

// Minimum-weight perfect matching decoder: per stabilizer type, match the
// detections with minimum total torus distance (exact blossom matching) and
// connect matched pairs by shortest paths.
PauliChain mwpm_decode(const CodeGeometry& g, const Syndrome& s);

// The matched pairs themselves (indices into the detection list of one
// type), exposed for tests.
std::vector<std::pair<int, int>> mwpm_pairs(const CodeGeometry& g,
                                            const std::vector<int>& sites,
                                            SiteKind kind);

}  // namespace symdec

#endif
