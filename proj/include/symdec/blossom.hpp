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

#ifndef SYMDEC_BLOSSOM_HPP
#define SYMDEC_BLOSSOM_HPP

#include <cstdint>
#include <vector>

namespace symdec {

// Exact minimum-weight perfect matching on a complete graph with
// non-negative integer weights, computed by a primal-dual algorithm with
// explicit odd-set (blossom) shrinking. Deterministic for fixed inputs.
//
// `weights` is a flattened n x n symmetric matrix (diagonal ignored); n must
// be even and positive, or 0 for the empty matching. Returns mate[i] = the
// vertex matched to i.
std::vector<int> min_weight_perfect_matching(
    int n, const std::vector<std::int64_t>& weights);

// Exhaustive reference: minimum matching weight over all (n-1)!! pairings.
// Usable up to n ~ 12. Returns the optimal total weight.
std::int64_t brute_force_matching_weight(
    int n, const std::vector<std::int64_t>& weights);

// Total weight of a matching under a weight matrix.
std::int64_t matching_weight(const std::vector<int>& mate,
                             const std::vector<std::int64_t>& weights);

}  // namespace symdec

#endif
