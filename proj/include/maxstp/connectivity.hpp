#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "maxstp/graph.hpp"

namespace maxstp {

struct MinCutReport {
  int lambda = 0;
  EdgeCut witness;
  std::optional<std::vector<EdgeCut>> all_min_cuts;
};

namespace detail {

// Unit-capacity max-flow on an undirected multigraph: every edge is a pair
// of opposite arcs of capacity 1 sharing residual state.
class UnitFlowNetwork {
 public:
  explicit UnitFlowNetwork(const Multigraph& g) : g_(g), adj_(g.vertex_count()) {
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edges()[i];
      adj_[g.vertex_index(e.u)].push_back(static_cast<int>(2 * i));
      adj_[g.vertex_index(e.v)].push_back(static_cast<int>(2 * i + 1));
    }
  }

  // Arc 2i goes u->v, arc 2i+1 goes v->u for edge index i.
  int head(int arc) const {
    const Edge& e = g_.edges()[arc / 2];
    return g_.vertex_index(arc % 2 == 0 ? e.v : e.u);
  }

  int max_flow(int s, int t, std::vector<char>& source_side) {
    const std::size_t m = g_.edge_count();
    // flow[i] in {-1,0,1}: direction of the unit on edge i (1 = u->v).
    std::vector<int> flow(m, 0);
    auto residual = [&](int arc) { return arc % 2 == 0 ? flow[arc / 2] < 1 : flow[arc / 2] > -1; };
    int value = 0;
    std::vector<int> via(g_.vertex_count());
    for (;;) {
      std::fill(via.begin(), via.end(), -2);
      via[s] = -1;
      std::deque<int> q{s};
      while (!q.empty() && via[t] == -2) {
        int x = q.front();
        q.pop_front();
        for (int arc : adj_[x]) {
          int y = head(arc);
          if (via[y] != -2 || !residual(arc)) continue;
          via[y] = arc;
          q.push_back(y);
        }
      }
      if (via[t] == -2) break;
      for (int y = t; y != s;) {
        int arc = via[y];
        flow[arc / 2] += arc % 2 == 0 ? 1 : -1;
        const Edge& e = g_.edges()[arc / 2];
        y = g_.vertex_index(arc % 2 == 0 ? e.u : e.v);
      }
      ++value;
    }
    source_side.assign(g_.vertex_count(), 0);
    for (std::size_t i = 0; i < via.size(); ++i) source_side[i] = via[i] != -2;
    return value;
  }

 private:
  const Multigraph& g_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace detail

// Global minimum edge cut via max-flow from the smallest vertex to every
// other vertex in ascending order; the first target attaining the minimum
// supplies the witness.
inline std::pair<int, EdgeCut> edge_connectivity(const Multigraph& g) {
  if (g.vertex_count() < 2) throw PreconditionError("edge connectivity needs at least two vertices");
  if (!is_connected(g)) throw PreconditionError("edge connectivity of a disconnected graph");
  detail::UnitFlowNetwork net(g);
  int best = std::numeric_limits<int>::max();
  IdSet best_side;
  std::vector<char> side;
  for (int t = 1; t < static_cast<int>(g.vertex_count()); ++t) {
    int f = net.max_flow(0, t, side);
    if (f < best) {
      best = f;
      best_side.clear();
      for (std::size_t i = 0; i < side.size(); ++i) {
        if (side[i]) best_side.push_back(g.vertices()[i]);
      }
    }
  }
  EdgeCut cut = cut_of_bipartition(g, best_side);
  if (static_cast<int>(cut.size()) != best) throw InvariantViolation("max-flow witness does not match flow value");
  return {best, std::move(cut)};
}

inline MinCutReport min_cut_report(const Multigraph& g) {
  auto [lambda, witness] = edge_connectivity(g);
  return {lambda, std::move(witness), std::nullopt};
}

inline void sort_cuts(std::vector<EdgeCut>& cuts) {
  std::sort(cuts.begin(), cuts.end(), [](const EdgeCut& a, const EdgeCut& b) { return a.cut_edges < b.cut_edges; });
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
}

// Exhaustive scan of the 2^(n-1) - 1 bipartitions. Requires a connected
// graph on at least two vertices.
inline std::vector<EdgeCut> enumerate_min_cuts_bruteforce(const Multigraph& g, long long budget) {
  const int n = static_cast<int>(g.vertex_count());
  if (n < 2) throw PreconditionError("min cut enumeration needs at least two vertices");
  if (n - 1 >= 62 || (1LL << (n - 1)) > budget) {
    throw BudgetExceeded("bipartition enumeration needs 2^" + std::to_string(n - 1) + " evaluations");
  }
  std::vector<int> ui(g.edge_count()), vi(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    ui[i] = g.vertex_index(g.edges()[i].u);
    vi[i] = g.vertex_index(g.edges()[i].v);
  }
  // Bit i of `mask` places vertex index i+1 on side_b; vertex index 0 stays on side_a.
  const std::uint64_t full = (std::uint64_t{1} << (n - 1)) - 1;
  int best = std::numeric_limits<int>::max();
  std::vector<std::uint64_t> best_masks;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    int c = 0;
    for (std::size_t i = 0; i < ui.size(); ++i) {
      bool bu = ui[i] > 0 && ((mask >> (ui[i] - 1)) & 1);
      bool bv = vi[i] > 0 && ((mask >> (vi[i] - 1)) & 1);
      c += bu != bv;
    }
    if (c < best) {
      best = c;
      best_masks.clear();
    }
    if (c == best) best_masks.push_back(mask);
  }
  std::vector<EdgeCut> cuts;
  for (std::uint64_t mask : best_masks) {
    IdSet side_a;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || !((mask >> (i - 1)) & 1)) side_a.push_back(g.vertices()[i]);
    }
    cuts.push_back(cut_of_bipartition(g, side_a));
  }
  sort_cuts(cuts);
  return cuts;
}

// All minimum cuts of a graph with lambda(g) edge-disjoint spanning trees.
// Each minimum cut then meets every tree exactly once, so its sides are the
// two components of T1 - e for the unique edge e it shares with T1.
inline std::vector<EdgeCut> enumerate_min_cuts_via_packing(const Multigraph& g, std::span<const SpanningTree> packing) {
  auto [lambda, witness] = edge_connectivity(g);
  if (static_cast<int>(packing.size()) != lambda) {
    throw PreconditionError("packing size " + std::to_string(packing.size()) + " differs from lambda " +
                            std::to_string(lambda));
  }
  for (std::size_t i = 0; i < packing.size(); ++i) {
    if (!is_spanning_tree(g, packing[i].edge_ids)) throw PreconditionError("packing member is not a spanning tree");
    for (std::size_t j = 0; j < i; ++j) {
      if (!disjoint(packing[i].edge_ids, packing[j].edge_ids)) throw PreconditionError("packing trees share an edge");
    }
  }
  const IdSet& t1 = packing.front().edge_ids;
  std::vector<EdgeCut> cuts;
  for (int e : t1) {
    IdSet rest = without(t1, e);
    Multigraph forest = g.spanning_subgraph(rest);
    auto comps = connected_components(forest);
    EdgeCut cut = cut_of_bipartition(g, comps.front());
    if (static_cast<int>(cut.size()) == lambda) cuts.push_back(std::move(cut));
  }
  sort_cuts(cuts);
  return cuts;
}

}  // namespace maxstp
