#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maxstp/element_set.hpp"
#include "maxstp/error.hpp"

namespace maxstp {

struct Edge {
  int id;
  int u;  // u < v after construction
  int v;

  auto operator<=>(const Edge&) const = default;
};

// Undirected loop-free multigraph. Vertices and edges carry opaque integer
// ids; parallel edges are distinguished by id. Immutable once built.
class Multigraph {
 public:
  Multigraph() = default;

  Multigraph(IdSet vertices, std::vector<Edge> edges) : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
      throw InputError("duplicate vertex id");
    }
    for (Edge& e : edges_) {
      if (e.u == e.v) throw InputError("loop edge " + std::to_string(e.id) + " at vertex " + std::to_string(e.u));
      if (!has_vertex(e.u) || !has_vertex(e.v)) {
        throw InputError("edge " + std::to_string(e.id) + " has an endpoint outside the vertex set");
      }
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i - 1].id == edges_[i].id) throw InputError("duplicate edge id " + std::to_string(edges_[i].id));
    }
  }

  std::span<const int> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  IdSet edge_ids() const {
    IdSet ids;
    ids.reserve(edges_.size());
    for (const Edge& e : edges_) ids.push_back(e.id);
    return ids;
  }

  bool has_vertex(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

  int vertex_index(int v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) throw InputError("unknown vertex " + std::to_string(v));
    return static_cast<int>(it - vertices_.begin());
  }

  bool has_edge(int id) const { return find_edge(id) != edges_.end(); }

  int edge_index(int id) const {
    auto it = find_edge(id);
    if (it == edges_.end()) throw InputError("unknown edge " + std::to_string(id));
    return static_cast<int>(it - edges_.begin());
  }

  const Edge& edge(int id) const { return edges_[edge_index(id)]; }

  // Subgraph induced by a vertex subset; edge ids are preserved.
  Multigraph induced(std::span<const int> vertex_subset) const {
    IdSet vs = normalized(IdSet(vertex_subset.begin(), vertex_subset.end()));
    std::vector<Edge> es;
    for (const Edge& e : edges_) {
      if (contains(vs, e.u) && contains(vs, e.v)) es.push_back(e);
    }
    return Multigraph(std::move(vs), std::move(es));
  }

  // Same vertex set, only the listed edges.
  Multigraph spanning_subgraph(std::span<const int> edge_ids) const {
    IdSet keep = normalized(IdSet(edge_ids.begin(), edge_ids.end()));
    std::vector<Edge> es;
    for (const Edge& e : edges_) {
      if (contains(keep, e.id)) es.push_back(e);
    }
    return Multigraph(vertices_, std::move(es));
  }

  Multigraph without_edges(std::span<const int> edge_ids) const {
    IdSet drop = normalized(IdSet(edge_ids.begin(), edge_ids.end()));
    std::vector<Edge> es;
    for (const Edge& e : edges_) {
      if (!contains(drop, e.id)) es.push_back(e);
    }
    return Multigraph(vertices_, std::move(es));
  }

  bool operator==(const Multigraph&) const = default;

 private:
  std::vector<Edge>::const_iterator find_edge(int id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id, [](const Edge& e, int x) { return e.id < x; });
    if (it != edges_.end() && it->id == id) return it;
    return edges_.end();
  }

  IdSet vertices_;
  std::vector<Edge> edges_;
};

// A bipartition (side_a, side_b) of the vertex set with its crossing edges.
// side_a holds the smallest vertex id whenever a cut is produced by this library.
struct EdgeCut {
  IdSet side_a;
  IdSet side_b;
  IdSet cut_edges;

  std::size_t size() const { return cut_edges.size(); }
  auto operator<=>(const EdgeCut&) const = default;
};

struct SpanningTree {
  IdSet edge_ids;
  auto operator<=>(const SpanningTree&) const = default;
};

struct VertexPartition {
  std::vector<IdSet> parts;
  auto operator<=>(const VertexPartition&) const = default;
};

// Vertices 1..vertex_count; edge ids 0.. in list order.
inline Multigraph build_graph(int vertex_count, std::span<const std::pair<int, int>> edge_list) {
  if (vertex_count < 1) throw InputError("vertex_count must be positive");
  IdSet vs(vertex_count);
  std::iota(vs.begin(), vs.end(), 1);
  std::vector<Edge> es;
  es.reserve(edge_list.size());
  int id = 0;
  for (auto [u, v] : edge_list) es.push_back({id++, u, v});
  return Multigraph(std::move(vs), std::move(es));
}

inline Multigraph build_graph(int vertex_count, std::initializer_list<std::pair<int, int>> edge_list) {
  return build_graph(vertex_count, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

namespace detail {

// Component label (dense, by first appearance in vertex order) per vertex index.
inline std::vector<int> component_labels(const Multigraph& g, int* count = nullptr) {
  DisjointSets dsu(g.vertex_count());
  for (const Edge& e : g.edges()) dsu.unite(g.vertex_index(e.u), g.vertex_index(e.v));
  std::vector<int> root_label(g.vertex_count(), -1);
  std::vector<int> label(g.vertex_count());
  int next = 0;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    int r = dsu.find(static_cast<int>(i));
    if (root_label[r] < 0) root_label[r] = next++;
    label[i] = root_label[r];
  }
  if (count) *count = next;
  return label;
}

}  // namespace detail

// Maximal connected vertex classes, ordered by smallest contained vertex id.
inline std::vector<IdSet> connected_components(const Multigraph& g) {
  int count = 0;
  auto label = detail::component_labels(g, &count);
  std::vector<IdSet> comps(count);
  // Vertices are visited in ascending order, so each part is already sorted
  // and parts come out ordered by their smallest member.
  for (std::size_t i = 0; i < g.vertex_count(); ++i) comps[label[i]].push_back(g.vertices()[i]);
  return comps;
}

inline int component_count(const Multigraph& g) {
  int count = 0;
  detail::component_labels(g, &count);
  return count;
}

inline bool is_connected(const Multigraph& g) { return g.vertex_count() > 0 && component_count(g) == 1; }

inline void validate_partition(const Multigraph& g, const VertexPartition& p) {
  IdSet all;
  for (const IdSet& part : p.parts) {
    if (part.empty()) throw InputError("partition has an empty part");
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw InputError("partition parts overlap");
  if (!std::equal(all.begin(), all.end(), g.vertices().begin(), g.vertices().end())) {
    throw InputError("partition does not cover the vertex set");
  }
}

// Index of the part containing each vertex (by vertex index).
inline std::vector<int> part_of_vertex(const Multigraph& g, const VertexPartition& p) {
  std::vector<int> part(g.vertex_count(), -1);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (int v : p.parts[i]) part[g.vertex_index(v)] = static_cast<int>(i);
  }
  return part;
}

inline int count_cross_edges(const Multigraph& g, const VertexPartition& p) {
  auto part = part_of_vertex(g, p);
  int n = 0;
  for (const Edge& e : g.edges()) {
    if (part[g.vertex_index(e.u)] != part[g.vertex_index(e.v)]) ++n;
  }
  return n;
}

// One vertex per part (the part's smallest vertex id), edges inside parts
// dropped, and at most one edge per pair of parts (the lowest-id one).
inline Multigraph contract_parts(const Multigraph& g, const VertexPartition& p) {
  validate_partition(g, p);
  auto part = part_of_vertex(g, p);
  IdSet reps;
  for (const IdSet& s : p.parts) reps.push_back(*std::min_element(s.begin(), s.end()));
  std::vector<std::pair<int, int>> seen;
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    int a = part[g.vertex_index(e.u)];
    int b = part[g.vertex_index(e.v)];
    if (a == b) continue;
    std::pair<int, int> key = std::minmax(a, b);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    es.push_back({e.id, reps[a], reps[b]});
  }
  return Multigraph(std::move(reps), std::move(es));
}

inline EdgeCut cut_of_bipartition(const Multigraph& g, std::span<const int> side_a) {
  IdSet a = normalized(IdSet(side_a.begin(), side_a.end()));
  for (int v : a) g.vertex_index(v);
  if (a.empty() || a.size() >= g.vertex_count()) throw InputError("side_a must be a nonempty proper subset of V");
  IdSet b = set_difference(g.vertices(), a);
  if (b.front() < a.front()) std::swap(a, b);
  EdgeCut cut{std::move(a), std::move(b), {}};
  for (const Edge& e : g.edges()) {
    if (contains(cut.side_a, e.u) != contains(cut.side_a, e.v)) cut.cut_edges.push_back(e.id);
  }
  return cut;
}

inline bool is_spanning_tree(const Multigraph& g, std::span<const int> edge_ids) {
  IdSet ids = normalized(IdSet(edge_ids.begin(), edge_ids.end()));
  if (ids.size() != edge_ids.size()) return false;
  if (g.vertex_count() == 0 || ids.size() + 1 != g.vertex_count()) return false;
  DisjointSets dsu(g.vertex_count());
  for (int id : ids) {
    const Edge& e = g.edge(id);
    if (!dsu.unite(g.vertex_index(e.u), g.vertex_index(e.v))) return false;
  }
  return true;  // |V|-1 acyclic edges span
}

}  // namespace maxstp
