#pragma once

#include <concepts>
#include <deque>
#include <vector>

#include "maxstp/error.hpp"

namespace maxstp {

// Exchange oracle for k independent sets I_0..I_{k-1} of one matroid over
// dense elements 0..n-1. The partition driver owns the assignment and keeps
// the oracle in sync through insert/erase.
//
//   can_insert(j, x)  -> I_j + x is independent        (x not in I_j)
//   exchanges(j, x)   -> all y in I_j with I_j - y + x independent,
//                        only asked when can_insert(j, x) is false
template <class O>
concept ExchangeOracle = requires(O& o, const O& co, int j, int x) {
  { co.element_count() } -> std::convertible_to<int>;
  { co.set_count() } -> std::convertible_to<int>;
  { o.can_insert(j, x) } -> std::convertible_to<bool>;
  { o.exchanges(j, x) } -> std::convertible_to<std::vector<int>>;
  o.insert(j, x);
  o.erase(j, x);
};

struct PartitionState {
  // owner[x] = index of the set holding x, or -1.
  std::vector<int> owner;
  // Elements reachable from the unassigned elements in the final exchange
  // digraph; filled only when the driver stops short of the target.
  std::vector<int> blocked;
  bool reached_target = false;
  int total = 0;

  std::vector<std::vector<int>> sets(int k) const {
    std::vector<std::vector<int>> out(k);
    for (int x = 0; x < static_cast<int>(owner.size()); ++x) {
      if (owner[x] >= 0) out[owner[x]].push_back(x);
    }
    return out;
  }
};

// Grows k disjoint independent sets by shortest augmenting paths in the
// exchange digraph until their total size reaches `target` or no path exists.
// When stuck, `blocked` is the set R reachable from the uncovered elements;
// it then holds that |R ∩ I_j| = rank(R) for every j and E \ R is covered,
// so k*rank(R) + |E \ R| equals the current total.
template <ExchangeOracle O>
PartitionState partition_into_independent_sets(O& oracle, int target) {
  const int n = oracle.element_count();
  const int k = oracle.set_count();
  PartitionState st;
  st.owner.assign(n, -1);

  auto place = [&](int x, int j) {
    if (st.owner[x] >= 0) oracle.erase(st.owner[x], x);
    if (j >= 0) oracle.insert(j, x);
    st.owner[x] = j;
  };

  // Greedy fill: augmenting paths of length zero.
  for (int x = 0; x < n && st.total < target; ++x) {
    for (int j = 0; j < k; ++j) {
      if (oracle.can_insert(j, x)) {
        place(x, j);
        ++st.total;
        break;
      }
    }
  }

  std::vector<int> pred(n);
  std::vector<int> pred_set(n);  // set in which the predecessor replaces this element
  std::vector<char> seen(n);
  while (st.total < target) {
    std::fill(seen.begin(), seen.end(), 0);
    std::fill(pred.begin(), pred.end(), -1);
    std::deque<int> queue;
    for (int x = 0; x < n; ++x) {
      if (st.owner[x] < 0) {
        seen[x] = 1;
        queue.push_back(x);
      }
    }
    int sink = -1;
    int sink_set = -1;
    while (!queue.empty() && sink < 0) {
      int x = queue.front();
      queue.pop_front();
      for (int j = 0; j < k && sink < 0; ++j) {
        if (j == st.owner[x]) continue;
        if (oracle.can_insert(j, x)) {
          sink = x;
          sink_set = j;
          break;
        }
        for (int y : oracle.exchanges(j, x)) {
          if (seen[y]) continue;
          seen[y] = 1;
          pred[y] = x;
          pred_set[y] = j;
          queue.push_back(y);
        }
      }
    }
    if (sink < 0) {
      for (int x = 0; x < n; ++x) {
        if (seen[x]) st.blocked.push_back(x);
      }
      return st;
    }
    // Walk back along the path: each element moves into the set its
    // successor vacates. All swaps are computed against the pre-path state,
    // which the shortest-path choice keeps valid.
    std::vector<std::pair<int, int>> moves{{sink, sink_set}};
    for (int y = sink; pred[y] >= 0; y = pred[y]) moves.push_back({pred[y], pred_set[y]});
    for (auto [x, j] : moves) {
      if (st.owner[x] >= 0) oracle.erase(st.owner[x], x);
    }
    for (auto [x, j] : moves) {
      oracle.insert(j, x);
      st.owner[x] = j;
    }
    ++st.total;
  }
  st.reached_target = true;
  return st;
}

}  // namespace maxstp
