#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxstp/connectivity.hpp"
#include "maxstp/graph.hpp"
#include "maxstp/graph_decomposition.hpp"
#include "maxstp/matroid.hpp"
#include "maxstp/matroid_decomposition.hpp"
#include "maxstp/matroid_packing.hpp"
#include "maxstp/protocol.hpp"
#include "maxstp/tree_packing.hpp"

// JSON forms of graphs, matroids, certificates and decompositions.
// nlohmann::json keeps object keys sorted, so dumps are byte-stable.
namespace maxstp {

using json = nlohmann::json;

inline void to_json(json& j, const Multigraph& g) {
  j = json::object();
  j["vertices"] = std::vector<int>(g.vertices().begin(), g.vertices().end());
  json es = json::array();
  for (const Edge& e : g.edges()) es.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}});
  j["edges"] = std::move(es);
}

inline void from_json(const json& j, Multigraph& g) {
  IdSet vs = j.at("vertices").get<IdSet>();
  std::vector<Edge> es;
  for (const json& e : j.at("edges")) es.push_back({e.at("id").get<int>(), e.at("u").get<int>(), e.at("v").get<int>()});
  g = Multigraph(std::move(vs), std::move(es));
}

inline void to_json(json& j, const EdgeCut& c) {
  j = {{"side_a", c.side_a}, {"side_b", c.side_b}, {"cut_edges", c.cut_edges}};
}

inline void from_json(const json& j, EdgeCut& c) {
  c.side_a = j.at("side_a").get<IdSet>();
  c.side_b = j.at("side_b").get<IdSet>();
  c.cut_edges = j.at("cut_edges").get<IdSet>();
}

inline void to_json(json& j, const TreePacking& p) {
  j = json::array();
  for (const SpanningTree& t : p.trees) j.push_back(t.edge_ids);
}

inline void to_json(json& j, const TutteCertificate& c) {
  j = {{"partition", c.partition.parts}, {"cross_edge_count", c.cross_edge_count}, {"k", c.k}};
}

inline void to_json(json& j, const StpClass& c) { j = {{"tag", std::string(to_string(c.tag))}, {"k", c.k}}; }

inline void from_json(const json& j, StpClass& c) {
  c.tag = stp_tag_from_string(j.at("tag").get<std::string>());
  c.k = j.at("k").get<int>();
}

inline void to_json(json& j, const MaxStpDecomposition& d) {
  json nodes = json::array();
  for (const DecompositionNode& n : d.nodes) {
    json node = {{"id", n.id},           {"vertices", n.vertices}, {"class", n.cls},
                 {"sigma", n.sigma},     {"lambda", n.lambda},     {"children", n.children}};
    if (n.t_tree) {
      json edges = json::array();
      for (const TTreeEdge& e : n.t_tree->edges) edges.push_back({{"a", e.child_a}, {"b", e.child_b}, {"cut", e.cut}});
      node["t_tree"] = {{"vertices", n.t_tree->vertices}, {"edges", std::move(edges)}};
    } else {
      node["t_tree"] = nullptr;
    }
    nodes.push_back(std::move(node));
  }
  j = {{"k", d.k}, {"root", d.root}, {"irreducibles", d.irreducibles}, {"nodes", std::move(nodes)}};
}

inline void from_json(const json& j, MaxStpDecomposition& d) {
  d.k = j.at("k").get<int>();
  d.root = j.at("root").get<int>();
  d.irreducibles = j.at("irreducibles").get<std::vector<int>>();
  d.nodes.clear();
  for (const json& node : j.at("nodes")) {
    DecompositionNode n;
    n.id = node.at("id").get<int>();
    n.vertices = node.at("vertices").get<IdSet>();
    n.cls = node.at("class").get<StpClass>();
    n.sigma = node.at("sigma").get<int>();
    n.lambda = node.at("lambda").get<int>();
    n.children = node.at("children").get<std::vector<int>>();
    const json& t = node.at("t_tree");
    if (!t.is_null()) {
      TTree tree;
      tree.vertices = t.at("vertices").get<std::vector<int>>();
      for (const json& e : t.at("edges")) {
        tree.edges.push_back({e.at("a").get<int>(), e.at("b").get<int>(), e.at("cut").get<EdgeCut>()});
      }
      n.t_tree = std::move(tree);
    }
    d.nodes.push_back(std::move(n));
  }
}

inline json matroid_to_json(const MatroidOracle& m) {
  if (auto* g = dynamic_cast<const GraphicMatroid*>(&m)) return {{"type", "graphic"}, {"graph", g->graph()}};
  if (auto* u = dynamic_cast<const UniformMatroid*>(&m)) return {{"type", "uniform"}, {"r", u->r()}, {"n", u->size()}};
  if (auto* b = dynamic_cast<const Gf2Matroid*>(&m)) return {{"type", "gf2"}, {"matrix", b->rows()}};
  if (auto* t = dynamic_cast<const TransversalMatroid*>(&m)) {
    return {{"type", "transversal"}, {"sets", t->sets()}, {"ground", t->size()}};
  }
  throw InputError("matroid kind '" + m.kind() + "' has no file form");
}

inline MatroidPtr matroid_from_json(const json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "graphic") return std::make_shared<GraphicMatroid>(j.at("graph").get<Multigraph>());
    if (type == "uniform") return std::make_shared<UniformMatroid>(j.at("r").get<int>(), j.at("n").get<int>());
    if (type == "gf2") return std::make_shared<Gf2Matroid>(j.at("matrix").get<std::vector<std::vector<int>>>());
    if (type == "transversal") {
      return std::make_shared<TransversalMatroid>(j.at("sets").get<std::vector<IdSet>>(), j.at("ground").get<int>());
    }
    throw InputError("unknown matroid type '" + type + "'");
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed matroid: ") + e.what());
  }
}

inline Multigraph graph_from_json(const json& j) {
  try {
    return j.get<Multigraph>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed graph: ") + e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline Multigraph read_graph_file(const std::string& path) { return graph_from_json(read_json_file(path)); }
inline MatroidPtr read_matroid_file(const std::string& path) { return matroid_from_json(read_json_file(path)); }

inline MaxStpDecomposition decomposition_from_json(const json& j) {
  try {
    return j.get<MaxStpDecomposition>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed decomposition: ") + e.what());
  }
}

inline void to_json(json& j, const Cocircuit& c) { j = c.elements; }

inline void to_json(json& j, const AssemblyHypergraph& h) {
  json edges = json::array();
  for (const Hyperedge& e : h.hyperedges) edges.push_back({{"cocircuit", e.cocircuit_id}, {"incident", e.incident}});
  j = {{"vertices", h.vertices}, {"hyperedges", std::move(edges)}};
}

inline void from_json(const json& j, AssemblyHypergraph& h) {
  h.vertices = j.at("vertices").get<std::vector<IdSet>>();
  h.hyperedges.clear();
  for (const json& e : j.at("hyperedges")) {
    h.hyperedges.push_back({e.at("cocircuit").get<int>(), e.at("incident").get<std::vector<int>>()});
  }
}

inline void to_json(json& j, const MatroidDecomposition& d) {
  json nodes = json::array();
  for (const MatroidDecompositionNode& n : d.nodes) {
    json node = {{"id", n.id},
                 {"elements", n.elements},
                 {"rank", n.rank},
                 {"sigma", n.sigma},
                 {"reducible", n.reducible},
                 {"k", n.k},
                 {"cocircuits", n.cocircuits},
                 {"children", n.children},
                 {"parallel_class_terminal", n.parallel_class_terminal}};
    node["assembly"] = n.assembly ? json(*n.assembly) : json(nullptr);
    nodes.push_back(std::move(node));
  }
  j = {{"k", d.k}, {"root", d.root}, {"irreducibles", d.irreducibles}, {"nodes", std::move(nodes)}};
}

inline void from_json(const json& j, MatroidDecomposition& d) {
  d.k = j.at("k").get<int>();
  d.root = j.at("root").get<int>();
  d.irreducibles = j.at("irreducibles").get<std::vector<int>>();
  d.nodes.clear();
  for (const json& node : j.at("nodes")) {
    MatroidDecompositionNode n;
    n.id = node.at("id").get<int>();
    n.elements = node.at("elements").get<IdSet>();
    n.rank = node.at("rank").get<int>();
    n.sigma = node.at("sigma").get<int>();
    n.reducible = node.at("reducible").get<bool>();
    n.k = node.at("k").get<int>();
    for (const json& c : node.at("cocircuits")) n.cocircuits.push_back({c.get<IdSet>()});
    n.children = node.at("children").get<std::vector<int>>();
    n.parallel_class_terminal = node.at("parallel_class_terminal").get<bool>();
    if (!node.at("assembly").is_null()) n.assembly = node.at("assembly").get<AssemblyHypergraph>();
    d.nodes.push_back(std::move(n));
  }
}

inline void to_json(json& j, const BasePacking& p) { j = p.bases; }

inline void to_json(json& j, const EdmondsCertificate& c) { j = {{"x", c.x}, {"k", c.k}}; }

inline void to_json(json& j, const SimulationReport& r) {
  json failures = json::array();
  for (const FailureRecord& f : r.failures_logged) failures.push_back({{"failed", f.failed}, {"surviving_tree", nullptr}});
  j = {{"trials", r.trials}, {"survivals", r.survivals}, {"failures_logged", std::move(failures)},
       {"seed", r.seed},     {"t", r.t}};
}

// Two-space indented dump with a trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace maxstp
