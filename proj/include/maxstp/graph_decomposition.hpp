#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxstp/connectivity.hpp"
#include "maxstp/graph.hpp"
#include "maxstp/tree_packing.hpp"

namespace maxstp {

enum class StpTag {
  isolated_vertex,     // one vertex, no edges
  irreducible_slack,   // k <= sigma < lambda
  irreducible_higher,  // k < sigma = lambda
  reducible,           // sigma = lambda = k
};

inline std::string_view to_string(StpTag t) {
  switch (t) {
    case StpTag::isolated_vertex: return "ISOLATED_VERTEX";
    case StpTag::irreducible_slack: return "IRREDUCIBLE_SLACK";
    case StpTag::irreducible_higher: return "IRREDUCIBLE_HIGHER";
    case StpTag::reducible: return "REDUCIBLE";
  }
  return "?";
}

inline StpTag stp_tag_from_string(std::string_view s) {
  for (StpTag t : {StpTag::isolated_vertex, StpTag::irreducible_slack, StpTag::irreducible_higher, StpTag::reducible}) {
    if (to_string(t) == s) return t;
  }
  throw InputError("unknown class tag " + std::string(s));
}

struct StpClass {
  StpTag tag = StpTag::isolated_vertex;
  int k = 0;
  bool operator==(const StpClass&) const = default;
};

inline bool is_irreducible(const StpClass& c) { return c.tag != StpTag::reducible; }

struct MaxStpVerdict {
  bool answer = false;
  int k = 0;       // sigma
  int lambda = 0;
  TreePacking witness;
  EdgeCut min_cut;
  std::optional<TutteCertificate> next_certificate;  // no sigma+1 trees
};

inline MaxStpVerdict is_max_stp(const Multigraph& g) {
  auto [lambda, cut] = edge_connectivity(g);
  StpNumber s = stp_number(g);
  return {s.sigma == lambda, s.sigma, lambda, std::move(s.packing), std::move(cut), std::move(s.next_certificate)};
}

namespace detail {

struct Profile {
  StpClass cls;
  int sigma = 0;
  int lambda = 0;
  TreePacking packing;
};

inline StpClass class_from_numbers(int sigma, int lambda, int k) {
  if (k > sigma) {
    throw PreconditionError("k=" + std::to_string(k) + " exceeds the spanning tree packing number " +
                            std::to_string(sigma));
  }
  if (sigma < lambda) return {StpTag::irreducible_slack, k};
  if (k < sigma) return {StpTag::irreducible_higher, k};
  return {StpTag::reducible, k};
}

inline Profile profile(const Multigraph& g, int k) {
  if (g.vertex_count() == 1) {
    if (g.edge_count() != 0) throw InvariantViolation("single vertex with edges");
    return {{StpTag::isolated_vertex, k}, 0, 0, {}};
  }
  auto [lambda, cut] = edge_connectivity(g);
  StpNumber s = stp_number(g);
  return {class_from_numbers(s.sigma, lambda, k), s.sigma, lambda, std::move(s.packing)};
}

}  // namespace detail

inline StpClass classify(const Multigraph& g, int k) {
  if (!is_connected(g)) throw PreconditionError("classify expects a connected graph");
  return detail::profile(g, k).cls;
}

// Union of two vertex-disjoint graphs plus crossing join edges. Edge ids of
// the result are sequential: g1's edges, then g2's, then the join edges.
inline Multigraph k_join(const Multigraph& g1, const Multigraph& g2, std::span<const std::pair<int, int>> join_edges) {
  if (!disjoint(g1.vertices(), g2.vertices())) throw InputError("k_join needs disjoint vertex sets");
  if (join_edges.empty()) throw InputError("k_join needs at least one join edge");
  IdSet vs = set_union(g1.vertices(), g2.vertices());
  std::vector<Edge> es;
  int id = 0;
  for (const Edge& e : g1.edges()) es.push_back({id++, e.u, e.v});
  for (const Edge& e : g2.edges()) es.push_back({id++, e.u, e.v});
  for (auto [a, b] : join_edges) {
    bool crosses = (g1.has_vertex(a) && g2.has_vertex(b)) || (g2.has_vertex(a) && g1.has_vertex(b));
    if (!crosses) {
      throw InputError("join edge (" + std::to_string(a) + "," + std::to_string(b) + ") does not cross the two graphs");
    }
    es.push_back({id++, a, b});
  }
  return Multigraph(std::move(vs), std::move(es));
}

inline Multigraph k_join(const Multigraph& g1, const Multigraph& g2, std::initializer_list<std::pair<int, int>> join) {
  return k_join(g1, g2, std::span<const std::pair<int, int>>(join.begin(), join.size()));
}

struct TTreeEdge {
  int child_a = 0;  // node ids
  int child_b = 0;
  EdgeCut cut;
  bool operator==(const TTreeEdge&) const = default;
};

struct TTree {
  std::vector<int> vertices;  // child node ids
  std::vector<TTreeEdge> edges;
  bool operator==(const TTree&) const = default;
};

struct DecompositionNode {
  int id = 0;
  IdSet vertices;
  StpClass cls;
  int sigma = 0;
  int lambda = 0;
  std::vector<int> children;
  std::optional<TTree> t_tree;
  bool operator==(const DecompositionNode&) const = default;
};

struct MaxStpDecomposition {
  int k = 0;
  std::vector<int> irreducibles;  // leaf node ids, preorder
  int root = 0;
  std::vector<DecompositionNode> nodes;  // indexed by id, preorder
  bool operator==(const MaxStpDecomposition&) const = default;
};

namespace detail {

class Decomposer {
 public:
  Decomposer(const Multigraph& g, int k) : g_(g), k_(k) {}

  MaxStpDecomposition run() {
    MaxStpDecomposition d;
    d.k = k_;
    d.root = build(IdSet(g_.vertices().begin(), g_.vertices().end()), d);
    for (const auto& n : d.nodes) {
      if (!n.t_tree) d.irreducibles.push_back(n.id);
    }
    return d;
  }

 private:
  int build(IdSet vertices, MaxStpDecomposition& d) {
    const int id = static_cast<int>(d.nodes.size());
    d.nodes.push_back({});
    Multigraph h = g_.induced(vertices);
    Profile p = profile(h, k_);
    d.nodes[id].id = id;
    d.nodes[id].vertices = std::move(vertices);
    d.nodes[id].cls = p.cls;
    d.nodes[id].sigma = p.sigma;
    d.nodes[id].lambda = p.lambda;
    if (p.cls.tag != StpTag::reducible) return id;

    std::vector<EdgeCut> cuts = enumerate_min_cuts_via_packing(h, p.packing.trees);
    IdSet removed;
    for (const EdgeCut& c : cuts) {
      if (!disjoint(removed, c.cut_edges)) throw InvariantViolation("minimum cuts of a reducible node overlap");
      removed = set_union(removed, c.cut_edges);
    }
    std::vector<IdSet> parts = connected_components(h.without_edges(removed));
    if (parts.size() < 2) throw InvariantViolation("deleting the minimum cuts left the node connected");
    Multigraph contracted = contract_parts(h, VertexPartition{parts});
    if (contracted.edge_count() + 1 != parts.size() || !is_connected(contracted)) {
      throw InvariantViolation("contracting the components of a reducible node did not give a tree");
    }
    if (cuts.size() != contracted.edge_count()) {
      throw InvariantViolation("minimum cuts do not correspond one-to-one with contracted tree edges");
    }
    std::vector<int> part_of(h.vertex_count());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (int v : parts[i]) part_of[h.vertex_index(v)] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> cut_pairs;
    for (const EdgeCut& c : cuts) {
      std::optional<std::pair<int, int>> pair;
      for (int e : c.cut_edges) {
        const Edge& ed = h.edge(e);
        std::pair<int, int> pe = std::minmax(part_of[h.vertex_index(ed.u)], part_of[h.vertex_index(ed.v)]);
        if (pair && *pair != pe) throw InvariantViolation("a minimum cut joins more than two components");
        pair = pe;
      }
      if (std::find(cut_pairs.begin(), cut_pairs.end(), *pair) != cut_pairs.end()) {
        throw InvariantViolation("two minimum cuts join the same pair of components");
      }
      cut_pairs.push_back(*pair);
    }

    std::vector<int> child_ids;
    for (IdSet& part : parts) child_ids.push_back(build(std::move(part), d));
    TTree t;
    t.vertices = child_ids;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      t.edges.push_back({child_ids[cut_pairs[i].first], child_ids[cut_pairs[i].second], std::move(cuts[i])});
    }
    d.nodes[id].children = std::move(child_ids);
    d.nodes[id].t_tree = std::move(t);
    return id;
  }

  const Multigraph& g_;
  int k_;
};

}  // namespace detail

// The unique max-STP decomposition (irreducible leaves, rooted tree, T-trees).
inline MaxStpDecomposition decompose(const Multigraph& g) {
  MaxStpVerdict v = is_max_stp(g);
  if (!v.answer) {
    throw PreconditionError("graph is not max-STP: sigma=" + std::to_string(v.k) + " lambda=" + std::to_string(v.lambda));
  }
  return detail::Decomposer(g, v.k).run();
}

inline bool verify_decomposition(const Multigraph& g, const MaxStpDecomposition& d) {
  try {
    return decompose(g) == d;
  } catch (const PreconditionError&) {
    return false;
  }
}

// True iff every candidate edge set is a minimum edge cut of g.
inline bool check_order_independence(const Multigraph& g, std::span<const IdSet> joins) {
  const int lambda = edge_connectivity(g).first;
  for (const IdSet& j : joins) {
    IdSet edges = normalized(j);
    for (int e : edges) {
      if (!g.has_edge(e)) return false;
    }
    if (static_cast<int>(edges.size()) != lambda) return false;
    if (is_connected(g.without_edges(edges))) return false;
  }
  return true;
}

// Structural check of a proposed (graph, decomposition) pair: at every
// internal node the node graph's minimum cuts are exactly the T-tree labels
// (compared as vertex bipartitions) and the children are the components left
// after deleting them; every leaf is k-irreducible in g.
inline bool check_reconstruction_validity(const Multigraph& g, const MaxStpDecomposition& d,
                                          long long budget = kDefaultBudget) {
  for (const DecompositionNode& node : d.nodes) {
    for (int v : node.vertices) {
      if (!g.has_vertex(v)) return false;
    }
    Multigraph h = g.induced(node.vertices);
    if (!is_connected(h)) return false;
    if (!node.t_tree) {
      if (h.vertex_count() == 1) continue;
      StpNumber s = stp_number(h);
      if (s.sigma < d.k) return false;
      if (detail::class_from_numbers(s.sigma, edge_connectivity(h).first, d.k).tag == StpTag::reducible) return false;
      continue;
    }
    if (h.vertex_count() < 2) return false;
    auto [lambda, witness] = edge_connectivity(h);
    if (lambda != d.k) return false;
    StpNumber s = stp_number(h);
    std::vector<EdgeCut> cuts = s.sigma == lambda ? enumerate_min_cuts_via_packing(h, s.packing.trees)
                                                  : enumerate_min_cuts_bruteforce(h, budget);
    std::vector<IdSet> actual, claimed;
    for (const EdgeCut& c : cuts) actual.push_back(c.side_a);
    for (const TTreeEdge& te : node.t_tree->edges) {
      if (!is_subset(te.cut.side_a, node.vertices) || te.cut.side_a.empty() ||
          te.cut.side_a.size() >= node.vertices.size()) {
        return false;
      }
      IdSet a = te.cut.side_a;
      if (a.front() != node.vertices.front()) a = set_difference(node.vertices, a);
      claimed.push_back(std::move(a));
    }
    std::sort(actual.begin(), actual.end());
    std::sort(claimed.begin(), claimed.end());
    if (actual != claimed) return false;
    IdSet removed;
    for (const EdgeCut& c : cuts) removed = set_union(removed, c.cut_edges);
    std::vector<IdSet> parts = connected_components(h.without_edges(removed));
    std::vector<IdSet> children;
    for (int c : node.children) {
      if (c < 0 || c >= static_cast<int>(d.nodes.size())) return false;
      children.push_back(d.nodes[c].vertices);
    }
    std::sort(children.begin(), children.end());
    if (parts != children) return false;
  }
  return true;
}

// The rooted tree R in DOT.
inline std::string decomposition_tree_dot(const MaxStpDecomposition& d) {
  std::ostringstream os;
  os << "digraph R {\n  node [shape=box];\n";
  for (const DecompositionNode& n : d.nodes) {
    os << "  n" << n.id << " [label=\"" << n.id << ": " << to_string(n.cls.tag) << "\\n|V|=" << n.vertices.size();
    if (n.cls.tag == StpTag::irreducible_higher) os << " (" << n.sigma << "-reducible)";
    os << "\"];\n";
  }
  for (const DecompositionNode& n : d.nodes) {
    for (int c : n.children) os << "  n" << n.id << " -> n" << c << ";\n";
  }
  os << "}\n";
  return os.str();
}

// The T-tree of one internal node in DOT; tree edges are labelled with their cut edge ids.
inline std::string t_tree_dot(const MaxStpDecomposition& d, int node_id) {
  const DecompositionNode& n = d.nodes.at(node_id);
  if (!n.t_tree) throw InputError("node " + std::to_string(node_id) + " has no T-tree");
  std::ostringstream os;
  os << "graph T" << node_id << " {\n";
  for (int c : n.t_tree->vertices) os << "  n" << c << " [label=\"" << c << "\"];\n";
  for (const TTreeEdge& e : n.t_tree->edges) {
    os << "  n" << e.child_a << " -- n" << e.child_b << " [label=\"";
    for (std::size_t i = 0; i < e.cut.cut_edges.size(); ++i) os << (i ? "," : "") << e.cut.cut_edges[i];
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace maxstp
