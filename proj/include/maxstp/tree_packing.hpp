#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "maxstp/connectivity.hpp"
#include "maxstp/graph.hpp"
#include "maxstp/matroid_union.hpp"

namespace maxstp {

struct TreePacking {
  std::vector<SpanningTree> trees;
  auto operator<=>(const TreePacking&) const = default;
};

// A partition with fewer than k*(r-1) crossing edges: no k disjoint spanning trees exist.
struct TutteCertificate {
  VertexPartition partition;
  int cross_edge_count = 0;
  int k = 0;
  auto operator<=>(const TutteCertificate&) const = default;
};

using PackResult = std::variant<TreePacking, TutteCertificate>;

namespace detail {

// k forests over the edges of a graph. Forest membership changes invalidate
// a per-forest rooted representation that is rebuilt on demand.
class ForestExchange {
 public:
  ForestExchange(const Multigraph& g, int k) : g_(g), k_(k), members_(k), cache_(k) {
    ends_.reserve(g.edge_count());
    for (const Edge& e : g.edges()) ends_.push_back({g.vertex_index(e.u), g.vertex_index(e.v)});
  }

  int element_count() const { return static_cast<int>(ends_.size()); }
  int set_count() const { return k_; }

  bool can_insert(int j, int x) {
    const Rooted& r = rooted(j);
    return r.root[ends_[x].first] != r.root[ends_[x].second];
  }

  // Edges on the forest path between the endpoints of x.
  std::vector<int> exchanges(int j, int x) {
    const Rooted& r = rooted(j);
    int a = ends_[x].first;
    int b = ends_[x].second;
    std::vector<int> path;
    while (a != b) {
      if (r.depth[a] >= r.depth[b]) {
        path.push_back(r.up_edge[a]);
        a = r.parent[a];
      } else {
        path.push_back(r.up_edge[b]);
        b = r.parent[b];
      }
    }
    return path;
  }

  void insert(int j, int x) {
    members_[j].push_back(x);
    cache_[j].valid = false;
  }

  void erase(int j, int x) {
    std::erase(members_[j], x);
    cache_[j].valid = false;
  }

 private:
  struct Rooted {
    bool valid = false;
    std::vector<int> root, parent, depth, up_edge;
  };

  const Rooted& rooted(int j) {
    Rooted& r = cache_[j];
    if (r.valid) return r;
    const std::size_t n = g_.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int x : members_[j]) {
      adj[ends_[x].first].push_back({ends_[x].second, x});
      adj[ends_[x].second].push_back({ends_[x].first, x});
    }
    r.root.assign(n, -1);
    r.parent.assign(n, -1);
    r.depth.assign(n, 0);
    r.up_edge.assign(n, -1);
    std::vector<int> stack;
    for (std::size_t s = 0; s < n; ++s) {
      if (r.root[s] >= 0) continue;
      r.root[s] = static_cast<int>(s);
      stack.push_back(static_cast<int>(s));
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, x] : adj[v]) {
          if (r.root[w] >= 0) continue;
          r.root[w] = static_cast<int>(s);
          r.parent[w] = v;
          r.depth[w] = r.depth[v] + 1;
          r.up_edge[w] = x;
          stack.push_back(w);
        }
      }
    }
    r.valid = true;
    return r;
  }

  const Multigraph& g_;
  int k_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<std::vector<int>> members_;
  std::vector<Rooted> cache_;
};

}  // namespace detail

inline bool verify_tutte_certificate(const Multigraph& g, const TutteCertificate& cert) {
  validate_partition(g, cert.partition);
  int r = static_cast<int>(cert.partition.parts.size());
  return count_cross_edges(g, cert.partition) < cert.k * (r - 1);
}

// k edge-disjoint spanning trees by matroid union over k copies of the cycle
// matroid, or a violating partition read off the blocked exchange set.
inline PackResult pack_trees(const Multigraph& g, int k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (!is_connected(g)) throw PreconditionError("cannot pack spanning trees in a disconnected graph");
  const int tree_size = static_cast<int>(g.vertex_count()) - 1;
  detail::ForestExchange oracle(g, k);
  PartitionState st = partition_into_independent_sets(oracle, k * tree_size);
  if (st.reached_target) {
    TreePacking packing;
    for (const auto& set : st.sets(k)) {
      SpanningTree t;
      for (int x : set) t.edge_ids.push_back(g.edges()[x].id);
      if (!is_spanning_tree(g, t.edge_ids)) throw InvariantViolation("packing produced a non-tree");
      packing.trees.push_back(std::move(t));
    }
    return packing;
  }
  // The blocked set is a flat; its spanning-subgraph components are the parts.
  IdSet blocked_ids;
  for (int x : st.blocked) blocked_ids.push_back(g.edges()[x].id);
  TutteCertificate cert;
  cert.partition.parts = connected_components(g.spanning_subgraph(blocked_ids));
  cert.cross_edge_count = count_cross_edges(g, cert.partition);
  cert.k = k;
  if (!verify_tutte_certificate(g, cert)) throw InvariantViolation("extracted Tutte certificate does not verify");
  return cert;
}

struct StpNumber {
  int sigma = 0;
  TreePacking packing;
  // Proof that sigma + 1 trees do not exist (absent for a single vertex).
  std::optional<TutteCertificate> next_certificate;
};

inline StpNumber stp_number(const Multigraph& g) {
  if (!is_connected(g)) throw PreconditionError("cannot pack spanning trees in a disconnected graph");
  StpNumber out;
  if (g.vertex_count() == 1) return out;
  const int bound = static_cast<int>(g.edge_count() / (g.vertex_count() - 1));
  for (int k = 1; k <= bound; ++k) {
    PackResult r = pack_trees(g, k);
    if (auto* cert = std::get_if<TutteCertificate>(&r)) {
      out.next_certificate = *cert;
      return out;
    }
    out.sigma = k;
    out.packing = std::get<TreePacking>(std::move(r));
  }
  // Singleton partition: |E| < (bound+1)(|V|-1).
  TutteCertificate cert;
  for (int v : g.vertices()) cert.partition.parts.push_back({v});
  cert.cross_edge_count = static_cast<int>(g.edge_count());
  cert.k = bound + 1;
  out.next_certificate = cert;
  return out;
}

}  // namespace maxstp
