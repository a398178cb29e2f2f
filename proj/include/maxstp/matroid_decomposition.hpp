#pragma once

#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "maxstp/matroid.hpp"
#include "maxstp/matroid_packing.hpp"

namespace maxstp {

struct Hyperedge {
  int cocircuit_id = 0;        // index into the node's cocircuit list
  std::vector<int> incident;   // crux component indices
  bool operator==(const Hyperedge&) const = default;
};

// Vertices are the crux components (by index, ordered by smallest element);
// one hyperedge per minimum cocircuit.
struct AssemblyHypergraph {
  std::vector<IdSet> vertices;
  std::vector<Hyperedge> hyperedges;
  bool operator==(const AssemblyHypergraph&) const = default;
};

struct Crux {
  MatroidPtr view;                    // M with every minimum cocircuit deleted
  std::vector<Cocircuit> cocircuits;  // the minimum cocircuits
  int k = 0;
  BasePacking packing;
};

class DisconnectedMatroid : public PreconditionError {
 public:
  explicit DisconnectedMatroid(std::vector<IdSet> components)
      : PreconditionError(describe(components)), components_(std::move(components)) {}
  const std::vector<IdSet>& components() const { return components_; }

 private:
  static std::string describe(const std::vector<IdSet>& comps) {
    std::ostringstream os;
    os << "matroid is disconnected into " << comps.size() << " components:";
    for (const IdSet& c : comps) {
      os << " {";
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
      os << "}";
    }
    return os.str();
  }
  std::vector<IdSet> components_;
};

inline Crux crux(const MatroidPtr& m) {
  MaxBpVerdict v = is_max_bp(*m, 0);
  if (!v.answer) throw PreconditionError("crux needs sigma = lambda");
  Crux c;
  c.cocircuits = min_cocircuits(*m, v.packing);
  c.k = v.k;
  c.packing = std::move(v.packing);
  IdSet all;
  for (const Cocircuit& cc : c.cocircuits) all = set_union(all, cc.elements);
  c.view = delete_elements(m, all);
  return c;
}

inline std::vector<IdSet> crux_components(const Crux& c) {
  if (c.view->size() == 0) return {};
  return connected_components_matroid(*c.view);
}

inline int delta(const MatroidPtr& m) { return static_cast<int>(crux_components(crux(m)).size()); }

namespace detail {

// Component of M|(crux ∪ C) containing C, as crux component indices.
inline std::vector<int> absorbed_components(const MatroidPtr& m, const IdSet& crux_ground,
                                            const std::vector<IdSet>& comps, const Cocircuit& c) {
  MatroidPtr l = restrict_to(m, set_union(crux_ground, c.elements));
  const IdSet* home = nullptr;
  std::vector<IdSet> l_comps = connected_components_matroid(*l);
  for (const IdSet& lc : l_comps) {
    if (contains(lc, c.elements.front())) home = &lc;
  }
  if (!is_subset(c.elements, *home)) throw InvariantViolation("a minimum cocircuit is split across components");
  std::vector<int> incident;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!disjoint(comps[i], *home)) {
      if (!is_subset(comps[i], *home)) throw InvariantViolation("a crux component is split by a cocircuit");
      incident.push_back(static_cast<int>(i));
    }
  }
  return incident;
}

inline AssemblyHypergraph assemble(const MatroidPtr& m, const Crux& c, std::vector<IdSet> comps) {
  AssemblyHypergraph h;
  for (std::size_t j = 0; j < c.cocircuits.size(); ++j) {
    h.hyperedges.push_back({static_cast<int>(j), absorbed_components(m, c.view->ground(), comps, c.cocircuits[j])});
  }
  h.vertices = std::move(comps);
  return h;
}

}  // namespace detail

inline AssemblyHypergraph assembly_hypergraph(const MatroidPtr& m) {
  Crux c = crux(m);
  std::vector<IdSet> comps = crux_components(c);
  if (comps.empty()) throw PreconditionError("empty crux: the assembly hypergraph has no vertices");
  return detail::assemble(m, c, std::move(comps));
}

struct MatroidDecompositionNode {
  int id = 0;
  IdSet elements;
  int rank = 0;
  int sigma = 0;
  bool reducible = false;
  int k = 0;
  std::vector<Cocircuit> cocircuits;         // reducible nodes only
  std::optional<AssemblyHypergraph> assembly;  // reducible nodes with a nonempty crux
  std::vector<int> children;
  // Rank-1 reducible node whose single cocircuit is the whole ground set:
  // empty crux, no children, yet connected.
  bool parallel_class_terminal = false;
  bool operator==(const MatroidDecompositionNode&) const = default;
};

struct MatroidDecomposition {
  int k = 0;
  int root = 0;
  std::vector<int> irreducibles;
  std::vector<MatroidDecompositionNode> nodes;  // preorder
  bool operator==(const MatroidDecomposition&) const = default;
};

namespace detail {

class MatroidDecomposer {
 public:
  MatroidDecomposer(MatroidPtr m, int k) : m_(std::move(m)), k_(k) {}

  MatroidDecomposition run() {
    MatroidDecomposition d;
    d.k = k_;
    d.root = build(m_->ground(), d);
    for (const auto& n : d.nodes) {
      if (!n.reducible) d.irreducibles.push_back(n.id);
    }
    return d;
  }

 private:
  int build(const IdSet& elements, MatroidDecomposition& d) {
    const int id = static_cast<int>(d.nodes.size());
    d.nodes.push_back({});
    MatroidPtr node = restrict_to(m_, elements);
    MaxBpVerdict v = is_max_bp(*node, 0);
    if (v.k < k_) throw InvariantViolation("a decomposition node has fewer than k disjoint bases");
    MatroidDecompositionNode rec;
    rec.id = id;
    rec.elements = elements;
    rec.rank = node->rank();
    rec.sigma = v.k;
    rec.k = k_;
    rec.reducible = v.k == k_ && v.answer;
    if (!rec.reducible) {
      d.nodes[id] = std::move(rec);
      return id;
    }
    Crux c;
    c.cocircuits = min_cocircuits(*node, v.packing);
    c.k = v.k;
    IdSet all;
    for (const Cocircuit& cc : c.cocircuits) all = set_union(all, cc.elements);
    c.view = delete_elements(node, all);
    std::vector<IdSet> comps = crux_components(c);
    const int ell = static_cast<int>(c.cocircuits.size());
    int child_rank = 0;
    for (const IdSet& comp : comps) child_rank += m_->rank(comp);
    if (child_rank != rec.rank - ell) {
      throw InvariantViolation("crux component ranks sum to " + std::to_string(child_rank) + ", expected " +
                               std::to_string(rec.rank - ell));
    }
    rec.cocircuits = c.cocircuits;
    rec.parallel_class_terminal = comps.empty() && rec.rank == 1;
    if (!comps.empty()) rec.assembly = assemble(node, c, comps);
    d.nodes[id] = std::move(rec);
    std::vector<int> children;
    for (const IdSet& comp : comps) children.push_back(build(comp, d));
    d.nodes[id].children = std::move(children);
    return id;
  }

  MatroidPtr m_;
  int k_;
};

}  // namespace detail

// Recursive decomposition of a connected loop-free matroid into k-irreducible
// pieces, k = sigma(m): reducible nodes split into their crux components.
inline MatroidDecomposition decompose_matroid(const MatroidPtr& m) {
  if (m->size() == 0 || m->rank() == 0) throw PreconditionError("decomposition needs a matroid of positive rank");
  detail::require_loop_free(*m);
  std::vector<IdSet> comps = connected_components_matroid(*m);
  if (comps.size() > 1) throw DisconnectedMatroid(std::move(comps));
  int k = sigma(*m).sigma;
  return detail::MatroidDecomposer(m, k).run();
}

struct ComponentwiseDecomposition {
  std::vector<IdSet> components;
  std::vector<MatroidDecomposition> decompositions;
  int sigma = 0;                // min over components
  std::optional<int> lambda;    // min over components, when every cogirth is known
};

// Convenience for disconnected inputs: each connected component on its own.
// sigma and lambda of a direct sum are the minima over its components.
inline ComponentwiseDecomposition decompose_matroid_components(const MatroidPtr& m,
                                                               long long budget = kDefaultCogirthBudget) {
  detail::require_loop_free(*m);
  ComponentwiseDecomposition out;
  out.components = connected_components_matroid(*m);
  out.sigma = std::numeric_limits<int>::max();
  int lambda = std::numeric_limits<int>::max();
  bool lambda_known = true;
  for (const IdSet& comp : out.components) {
    MatroidPtr part = restrict_to(m, comp);
    MaxBpVerdict v = is_max_bp(*part, budget);
    out.sigma = std::min(out.sigma, v.k);
    if (v.lambda) {
      lambda = std::min(lambda, *v.lambda);
    } else {
      lambda_known = false;
    }
    out.decompositions.push_back(decompose_matroid(part));
  }
  if (lambda_known) out.lambda = lambda;
  return out;
}

// Every minimum cocircuit C_i stays a minimum cocircuit after deleting any other C_j.
inline bool check_lemma_cocircuit_survival(const MatroidPtr& m) {
  Crux c = crux(m);
  if (c.cocircuits.size() < 2) return true;
  for (std::size_t j = 0; j < c.cocircuits.size(); ++j) {
    MatroidPtr rest = delete_elements(m, c.cocircuits[j].elements);
    // k disjoint bases of M \ C_j force its cogirth to be at least k.
    packing_after_deletion(m, c.packing, c.cocircuits[j]);
    const int r = rest->rank();
    for (std::size_t i = 0; i < c.cocircuits.size(); ++i) {
      if (i == j) continue;
      IdSet hyper = set_difference(rest->ground(), c.cocircuits[i].elements);
      if (rest->rank(hyper) != r - 1) return false;
      if (closure(*rest, hyper) != hyper) return false;
      if (static_cast<int>(c.cocircuits[i].size()) != c.k) return false;
    }
  }
  return true;
}

inline std::string matroid_decomposition_dot(const MatroidDecomposition& d) {
  std::ostringstream os;
  os << "digraph R {\n  node [shape=box];\n";
  for (const auto& n : d.nodes) {
    os << "  n" << n.id << " [label=\"" << n.id << ": " << (n.reducible ? "reducible" : "irreducible")
       << "\\n|E|=" << n.elements.size() << " rank=" << n.rank;
    if (n.reducible) os << " l=" << n.cocircuits.size();
    if (n.parallel_class_terminal) os << "\\nparallel class";
    os << "\"];\n";
  }
  for (const auto& n : d.nodes) {
    for (int c : n.children) os << "  n" << n.id << " -> n" << c << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace maxstp
