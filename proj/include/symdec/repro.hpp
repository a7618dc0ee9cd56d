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

#ifndef SYMDEC_REPRO_HPP
#define SYMDEC_REPRO_HPP

#include <cstdint>
#include <optional>

#include "symdec/code.hpp"
#include "symdec/geometry.hpp"
#include "symdec/symmetry.hpp"

namespace symdec {

// Self-check routines shared by the CLI and the acceptance tests. Each one
// either demonstrates a documented behavior with an explicit witness or
// verifies an implementation against an independent oracle.

// Exhaustive search over all valid syndromes of a small lattice for a
// syndrome s and translation T such that the plain matching decoder's
// recoveries for s and T(s) differ by a nonzero purely-X logical operator,
// while the center-wrapped decoder's recoveries differ by exactly the
// translation. Demonstrates that centering removes the decoder's
// translation inconsistency.
struct TranslationWitness {
  Syndrome syndrome;
  Transform translation;
  int plain_class;  // class of (recovery_T * T(recovery)), pure X, nonzero
};
std::optional<TranslationWitness> find_translation_witness(
    const CodeGeometry& g);

// Randomized search for an orbit pair where the shortcut canonicalization
// "pick min(s, antitranspose(s)) first, then center" lands on different
// representatives, while align agrees on both. Demonstrates why the full
// minimization over the combined group is required. Internal constants fix
// the sampling sequence, so the search is deterministic.
struct OrderingWitness {
  Syndrome first;
  Syndrome second;      // apply(relation, first)
  Transform relation;
  Syndrome naive_first;   // shortcut representative of first
  Syndrome naive_second;  // shortcut representative of second (differs)
  Syndrome aligned;       // align representative (same for both)
};
std::optional<OrderingWitness> find_ordering_witness(const CodeGeometry& g,
                                                     std::uint64_t max_tries);

// Matching decoder vs. exhaustive minimum over all perfect matchings, on
// random depolarizing syndromes whose per-type detection count is at most
// max_detections. Counts only accepted syndromes.
struct MatchingCheck {
  std::uint64_t cases_checked = 0;
  std::uint64_t mismatches = 0;
};
MatchingCheck check_matching_exactness(const CodeGeometry& g,
                                       std::uint64_t num_cases, double p,
                                       std::uint64_t seed,
                                       int max_detections = 10);

// Canonicalization properties on random depolarizing syndromes: the
// returned transform maps input to representative, representatives are
// fixed points, center is constant on translation orbits, align on full
// orbits; plus the symmetry/extraction commuting diagram
// syndrome_of(t(chain)) == t(syndrome_of(chain)) on random chains.
struct SymmetryCheck {
  std::uint64_t cases_checked = 0;
  std::uint64_t failures = 0;
};
SymmetryCheck check_symmetry_properties(const CodeGeometry& g,
                                        std::uint64_t num_syndromes,
                                        std::uint64_t num_chains, double p,
                                        std::uint64_t seed);

// Analytic classifier gradient vs. central finite differences on a small
// random network, every coordinate; plus softmax normalization deviation on
// random inputs.
struct GradientCheck {
  double max_rel_error = 0.0;
  double softmax_max_dev = 0.0;
  std::uint64_t coords_checked = 0;
};
GradientCheck check_gradients(std::uint64_t seed);

}  // namespace symdec

#endif
