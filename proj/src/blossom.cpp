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

#include "symdec/blossom.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace symdec {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Primal-dual maximum-weight perfect matching with explicit blossom nodes.
//
// Vertices are 1..n; shrunken odd cycles get ids above n. Weights are kept
// on a doubled scale so every dual variable stays integral: the reduced cost
// of an edge between two tree vertices always has even parity, because tight
// edges force equal label parity along alternating paths.
//
// Node states per phase: 0 = outer (even tree depth), 1 = inner, -1 = free.
struct Solver {
  struct Slot {
    int u = 0, v = 0;        // real endpoints represented by this node pair
    std::int64_t w = 0;      // doubled weight; 0 means "no edge recorded"
  };

  int n;                      // real vertex count
  int cap;                    // 1 + n + n/2 ids
  int node_count;             // ids in use (grows as blossoms form)
  std::vector<Slot> slots;    // cap * cap, indexed slot(x, y)
  std::vector<std::int64_t> dual;
  std::vector<int> match, slack, top, parent, state, visited;
  std::vector<std::vector<int>> ring;   // odd cycle children per blossom id
  std::vector<int> containing;          // cap * (n + 1): child of b holding x
  std::deque<int> queue;
  int stamp = 0;

  explicit Solver(int n_real)
      : n(n_real),
        cap(n_real + n_real / 2 + 2),
        node_count(n_real),
        slots(static_cast<std::size_t>(cap) * cap),
        dual(cap, 0),
        match(cap, 0),
        slack(cap, 0),
        top(cap, 0),
        parent(cap, 0),
        state(cap, -1),
        visited(cap, 0),
        ring(cap),
        containing(static_cast<std::size_t>(cap) * (n_real + 1), 0) {}

  Slot& slot(int x, int y) { return slots[static_cast<std::size_t>(x) * cap + y]; }
  int& child_holding(int b, int x) {
    return containing[static_cast<std::size_t>(b) * (n + 1) + x];
  }
  std::int64_t reduced_cost(const Slot& s) const {
    return dual[s.u] + dual[s.v] - s.w;
  }

  void note_slack(int u, int x) {
    if (!slack[x] || reduced_cost(slot(u, x)) < reduced_cost(slot(slack[x], x)))
      slack[x] = u;
  }
  void recompute_slack(int x) {
    slack[x] = 0;
    for (int u = 1; u <= n; ++u)
      if (slot(u, x).w > 0 && top[u] != x && state[top[u]] == 0) note_slack(u, x);
  }

  void push_outer(int x) {
    if (x <= n) {
      queue.push_back(x);
    } else {
      for (int y : ring[x]) push_outer(y);
    }
  }
  void assign_top(int x, int b) {
    top[x] = b;
    if (x > n)
      for (int y : ring[x]) assign_top(y, b);
  }

  // Position of child xr in blossom b's cycle, reversing the cycle direction
  // if needed so the position is even (the alternating path from the base
  // must have even length).
  int ring_position(int b, int xr) {
    int pos = static_cast<int>(
        std::find(ring[b].begin(), ring[b].end(), xr) - ring[b].begin());
    if (pos % 2 == 1) {
      std::reverse(ring[b].begin() + 1, ring[b].end());
      pos = static_cast<int>(ring[b].size()) - pos;
    }
    return pos;
  }

  // Record that node u is matched along its slot edge toward node v,
  // recursively rematching inside blossoms and rotating the cycle so the
  // externally matched child sits at the base (index 0).
  void set_match(int u, int v) {
    Slot ed = slot(u, v);
    match[u] = ed.v;
    if (u <= n) return;
    int xr = child_holding(u, ed.u);
    int pos = ring_position(u, xr);
    for (int i = 0; i < pos; ++i) set_match(ring[u][i], ring[u][i ^ 1]);
    set_match(xr, v);
    std::rotate(ring[u].begin(), ring[u].begin() + pos, ring[u].end());
  }

  // Flip matched/unmatched status along the alternating tree path from node
  // u (outer) up to its root, after matching u toward v.
  void augment_path(int u, int v) {
    for (;;) {
      int matched_real = match[u];
      int above = matched_real ? top[matched_real] : 0;
      set_match(u, v);
      if (!above) return;
      int grandparent = top[parent[above]];
      set_match(above, grandparent);
      v = above;
      u = grandparent;
    }
  }

  int lowest_common_ancestor(int u, int v) {
    ++stamp;
    while (u || v) {
      if (u) {
        if (visited[u] == stamp) return u;
        visited[u] = stamp;
        u = match[u] ? top[match[u]] : 0;
        if (u) u = top[parent[u]];
      }
      std::swap(u, v);
    }
    return 0;
  }

  // Smallest unused blossom id; an id is in use while its ring is non-empty
  // (active or swallowed by a larger blossom).
  int fresh_id() {
    int b = n + 1;
    while (b <= node_count && !ring[b].empty()) ++b;
    if (b > node_count) node_count = b;
    return b;
  }

  // Shrink the odd cycle formed by the tight edge (eu, ev) plus the two tree
  // paths to the lowest common ancestor `anchor` into a fresh outer node.
  void add_blossom(int eu, int anchor, int ev) {
    int b = fresh_id();
    dual[b] = 0;
    state[b] = 0;
    match[b] = match[anchor];
    parent[b] = parent[anchor];
    ring[b] = {anchor};
    for (int x = top[eu]; x != anchor;) {
      ring[b].push_back(x);
      int inner = top[match[x]];
      ring[b].push_back(inner);
      push_outer(inner);
      x = top[parent[inner]];
    }
    std::reverse(ring[b].begin() + 1, ring[b].end());
    for (int x = top[ev]; x != anchor;) {
      ring[b].push_back(x);
      int inner = top[match[x]];
      ring[b].push_back(inner);
      push_outer(inner);
      x = top[parent[inner]];
    }
    assign_top(b, b);
    for (int x = 1; x <= node_count; ++x) {
      if (x == b) continue;
      slot(b, x).w = 0;
      slot(x, b).w = 0;
    }
    for (int x = 1; x <= n; ++x) child_holding(b, x) = 0;
    for (int xs : ring[b]) {
      for (int x = 1; x <= node_count; ++x) {
        if (x == b) continue;
        const Slot& cand = slot(xs, x);
        if (cand.w > 0 &&
            (slot(b, x).w == 0 ||
             reduced_cost(cand) < reduced_cost(slot(b, x)))) {
          slot(b, x) = cand;
          slot(x, b) = slot(x, xs);
        }
      }
      for (int x = 1; x <= n; ++x)
        if (child_holding(xs, x)) child_holding(b, x) = xs;
    }
    // The children's slack entries die with their top status; other trees
    // may already have scanned past us, so rebuild the incoming candidate
    // from scratch or the next dual adjustment can overshoot.
    recompute_slack(b);
  }

  // Undo a zero-dual inner blossom: the children along the even alternating
  // path from the base to the tree entry stay in the tree, the rest become
  // free.
  void expand_blossom(int b) {
    for (int xs : ring[b]) assign_top(xs, xs);
    int entry_real = slot(b, parent[b]).u;
    int xr = child_holding(b, entry_real);
    int pos = ring_position(b, xr);
    for (int i = 0; i < pos; i += 2) {
      int inner_child = ring[b][i];
      int outer_child = ring[b][i + 1];
      parent[inner_child] = slot(outer_child, inner_child).u;
      state[inner_child] = 1;
      state[outer_child] = 0;
      slack[inner_child] = 0;
      recompute_slack(outer_child);  // same reasoning as in add_blossom
      push_outer(outer_child);
    }
    state[xr] = 1;
    parent[xr] = parent[b];
    slack[xr] = 0;
    for (std::size_t i = pos + 1; i < ring[b].size(); ++i) {
      int xs = ring[b][i];
      state[xs] = -1;
      recompute_slack(xs);
    }
    top[b] = 0;
    ring[b].clear();
  }

  // Handle a tight edge whose u side is outer. Returns true after an
  // augmentation.
  bool on_tight_edge(Slot ed) {
    int xu = top[ed.u], xv = top[ed.v];
    if (state[xv] == -1) {
      parent[xv] = ed.u;
      state[xv] = 1;
      int partner = top[match[xv]];
      state[partner] = 0;
      slack[xv] = 0;
      slack[partner] = 0;
      push_outer(partner);
    } else if (state[xv] == 0) {
      int anchor = lowest_common_ancestor(xu, xv);
      if (!anchor) {
        augment_path(xu, xv);
        augment_path(xv, xu);
        return true;
      }
      add_blossom(ed.u, anchor, ed.v);
    }
    return false;
  }

  // One phase: grow alternating trees from every unmatched node, adjusting
  // duals, until an augmenting path is found. Returns false if no
  // augmentation is possible (no perfect matching).
  bool grow_and_augment() {
    for (int x = 1; x <= node_count; ++x) {
      state[x] = -1;
      parent[x] = 0;
      slack[x] = 0;
    }
    queue.clear();
    bool have_root = false;
    for (int x = 1; x <= node_count; ++x) {
      if (top[x] == x && !match[x]) {
        state[x] = 0;
        push_outer(x);
        have_root = true;
      }
    }
    if (!have_root) return false;
    for (;;) {
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (state[top[u]] != 0) continue;
        for (int v = 1; v <= n; ++v) {
          if (v == u || top[u] == top[v]) continue;
          const Slot& ed = slot(u, v);
          if (reduced_cost(ed) == 0) {
            if (on_tight_edge(ed)) return true;
          } else {
            note_slack(u, top[v]);
          }
        }
      }
      std::int64_t step = kInf;
      for (int b = n + 1; b <= node_count; ++b)
        if (top[b] == b && state[b] == 1) step = std::min(step, dual[b] / 2);
      for (int x = 1; x <= node_count; ++x) {
        if (top[x] != x || !slack[x]) continue;
        std::int64_t rc = reduced_cost(slot(slack[x], x));
        if (state[x] == -1)
          step = std::min(step, rc);
        else if (state[x] == 0)
          step = std::min(step, rc / 2);
      }
      if (step >= kInf) return false;
      for (int u = 1; u <= n; ++u) {
        if (state[top[u]] == 0)
          dual[u] -= step;
        else if (state[top[u]] == 1)
          dual[u] += step;
      }
      for (int b = n + 1; b <= node_count; ++b) {
        if (top[b] != b) continue;
        if (state[b] == 0)
          dual[b] += 2 * step;
        else if (state[b] == 1)
          dual[b] -= 2 * step;
      }
      for (int x = 1; x <= node_count; ++x) {
        if (top[x] != x || !slack[x] || state[x] == 1) continue;
        if (top[slack[x]] == x) continue;
        if (reduced_cost(slot(slack[x], x)) == 0) {
          if (on_tight_edge(slot(slack[x], x))) return true;
        }
      }
      for (int b = n + 1; b <= node_count; ++b)
        if (top[b] == b && state[b] == 1 && dual[b] == 0) expand_blossom(b);
    }
  }

  std::vector<int> solve(const std::vector<std::int64_t>& weights) {
    // Transform to maximization with strictly positive doubled weights; a
    // constant shift per edge cannot change which perfect matching wins.
    std::int64_t w_max = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j)
          w_max = std::max(w_max,
                           weights[static_cast<std::size_t>(i) * n + j]);
    for (int u = 1; u <= n; ++u) {
      top[u] = u;
      child_holding(u, u) = u;
      for (int v = 1; v <= n; ++v) {
        if (u == v) continue;
        std::int64_t w_in = weights[static_cast<std::size_t>(u - 1) * n + (v - 1)];
        slot(u, v) = {u, v, 2 * (w_max - w_in + 1)};
      }
    }
    std::int64_t dual0 = w_max + 1;  // half the largest doubled weight
    for (int u = 1; u <= n; ++u) dual[u] = dual0;

    for (;;) {
      bool all_matched = true;
      for (int u = 1; u <= n; ++u)
        if (!match[u]) {
          all_matched = false;
          break;
        }
      if (all_matched) break;
      if (!grow_and_augment())
        throw std::logic_error("no perfect matching exists");
    }
    std::vector<int> mate(n);
    for (int u = 1; u <= n; ++u) mate[u - 1] = match[u] - 1;
    return mate;
  }
};

std::int64_t brute_force_recurse(int n, const std::vector<std::int64_t>& w,
                                 unsigned used) {
  int first = -1;
  for (int i = 0; i < n; ++i)
    if (!(used & (1u << i))) {
      first = i;
      break;
    }
  if (first < 0) return 0;
  std::int64_t best = kInf;
  for (int j = first + 1; j < n; ++j) {
    if (used & (1u << j)) continue;
    std::int64_t rest = brute_force_recurse(
        n, w, used | (1u << first) | (1u << j));
    best = std::min(best, w[static_cast<std::size_t>(first) * n + j] + rest);
  }
  return best;
}

}  // namespace

std::vector<int> min_weight_perfect_matching(
    int n, const std::vector<std::int64_t>& weights) {
  if (n < 0 || n % 2 != 0)
    throw std::invalid_argument("vertex count must be even");
  if (n == 0) return {};
  if (weights.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("weight matrix size mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t w = weights[static_cast<std::size_t>(i) * n + j];
      if (i != j && (w < 0 || w != weights[static_cast<std::size_t>(j) * n + i]))
        throw std::invalid_argument(
            "weights must be symmetric and non-negative");
    }
  Solver solver(n);
  return solver.solve(weights);
}

std::int64_t brute_force_matching_weight(
    int n, const std::vector<std::int64_t>& weights) {
  if (n < 0 || n % 2 != 0)
    throw std::invalid_argument("vertex count must be even");
  if (n == 0) return 0;
  if (n > 20) throw std::invalid_argument("brute force limited to n <= 20");
  return brute_force_recurse(n, weights, 0);
}

std::int64_t matching_weight(const std::vector<int>& mate,
                             const std::vector<std::int64_t>& weights) {
  int n = static_cast<int>(mate.size());
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    if (mate[i] < 0 || mate[i] >= n || mate[mate[i]] != i || mate[i] == i)
      throw std::invalid_argument("not a perfect matching");
    if (i < mate[i]) total += weights[static_cast<std::size_t>(i) * n + mate[i]];
  }
  return total;
}

}  // namespace symdec
