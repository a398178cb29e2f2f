// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failures.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "maxstp/fixtures.hpp"
#include "maxstp/io.hpp"
#include "maxstp/maxstp.hpp"
#include "oracles.hpp"

using namespace maxstp;

namespace {

// Collects failed expectations of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    if (!(actual == expected)) {
      std::ostringstream os;
      os << what << " (got " << actual << ", expected " << expected << ")";
      failures_.push_back(os.str());
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

bool is_k4_leaf(const DecompositionNode& n) {
  return !n.t_tree && n.vertices.size() == 4 && n.cls.tag == StpTag::irreducible_slack;
}

std::vector<int> degrees(const TTree& t) {
  std::vector<int> deg;
  for (int v : t.vertices) {
    int d = 0;
    for (const TTreeEdge& e : t.edges) d += (e.child_a == v) + (e.child_b == v);
    deg.push_back(d);
  }
  std::sort(deg.begin(), deg.end());
  return deg;
}

void criterion_1(Check& c) {
  Multigraph g = fixtures::fig1();
  MaxStpVerdict v = is_max_stp(g);
  c.equal(v.lambda, 2, "lambda");
  c.equal(v.k, 2, "sigma");
  c.expect(v.answer, "max-STP");
  IdSet used;
  for (const SpanningTree& t : v.witness.trees) {
    c.expect(is_spanning_tree(g, t.edge_ids), "packing member is a spanning tree");
    c.expect(disjoint(used, t.edge_ids), "packing trees are disjoint");
    used = set_union(used, t.edge_ids);
  }
  c.equal(used.size(), std::size_t{14}, "edges used by the 2-packing");
  auto brute = enumerate_min_cuts_bruteforce(g, kDefaultBudget);
  c.equal(brute.size(), std::size_t{1}, "minimum cuts (exhaustive)");
  c.equal(oracle::min_cut_edge_sets(g).size(), std::size_t{1}, "minimum cuts (oracle)");
  c.expect(enumerate_min_cuts_via_packing(g, v.witness.trees) == brute, "packing cuts equal exhaustive cuts");
  MaxStpDecomposition d = decompose(g);
  c.equal(d.irreducibles.size(), std::size_t{2}, "leaves");
  for (int id : d.irreducibles) c.expect(is_k4_leaf(d.nodes[id]), "leaf is a K4");
}

void criterion_2(Check& c) {
  Multigraph l = fixtures::fig3l(), r = fixtures::fig3r();
  c.equal(enumerate_min_cuts_bruteforce(l, kDefaultBudget).size(), std::size_t{2}, "FIG3L minimum cuts");
  c.equal(enumerate_min_cuts_bruteforce(r, kDefaultBudget).size(), std::size_t{1}, "FIG3R minimum cuts");
  std::vector<IdSet> joins{{18, 19}, {20, 21}};
  c.expect(check_order_independence(l, joins), "FIG3L joins are order-independent");
  c.expect(!check_order_independence(r, joins), "FIG3R joins are not order-independent");
  MaxStpDecomposition dl = decompose(l), dr = decompose(r);
  for (const auto* d : {&dl, &dr}) {
    c.equal(d->irreducibles.size(), std::size_t{3}, "leaves");
    for (int id : d->irreducibles) c.expect(is_k4_leaf(d->nodes[id]), "leaf is a K4");
  }
  c.equal(dl.nodes[dl.root].children.size(), std::size_t{3}, "FIG3L root degree");
  c.equal(dr.nodes[dr.root].children.size(), std::size_t{2}, "FIG3R root degree");
}

void criterion_3(Check& c) {
  MaxStpDecomposition d = decompose(fixtures::fig4());
  c.equal(d.irreducibles.size(), std::size_t{4}, "leaves");
  for (int id : d.irreducibles) c.expect(is_k4_leaf(d.nodes[id]), "leaf is a K4");
  const DecompositionNode& root = d.nodes[d.root];
  c.equal(root.children.size(), std::size_t{2}, "root children");
  int inner_count = 0;
  for (int ch : root.children) {
    const DecompositionNode& n = d.nodes[ch];
    if (!n.t_tree) continue;
    ++inner_count;
    c.equal(n.children.size(), std::size_t{3}, "inner node children");
    c.expect(degrees(*n.t_tree) == std::vector<int>{1, 1, 2}, "inner T-tree is a 3-vertex path");
    for (int g : n.children) c.expect(!d.nodes[g].t_tree, "inner node children are leaves");
  }
  c.equal(inner_count, 1, "inner nodes below the root");
  c.expect(root.t_tree && degrees(*root.t_tree) == std::vector<int>{1, 1}, "root T-tree is a 2-vertex tree");
}

void criterion_4(Check& c) {
  std::mt19937 rng(2024);
  const int graphs = 250;
  int max_stp = 0;
  for (int i = 0; i < graphs; ++i) {
    Multigraph g = oracle::random_connected_multigraph(rng, 8, 16);
    const std::string tag = "graph " + std::to_string(i);
    StpNumber s = stp_number(g);
    const int lambda = edge_connectivity(g).first;
    const int brute_sigma = oracle::sigma(g);
    const int brute_lambda = oracle::lambda(g);
    c.equal(s.sigma, brute_sigma, tag + ": sigma vs exhaustive");
    c.equal(lambda, brute_lambda, tag + ": lambda vs exhaustive");
    c.expect(s.sigma <= lambda, tag + ": sigma <= lambda");
    c.expect(s.sigma >= lambda / 2, tag + ": sigma >= floor(lambda/2)");
    c.expect(s.next_certificate && verify_tutte_certificate(g, *s.next_certificate), tag + ": Tutte certificate");
    PackResult over = pack_trees(g, s.sigma + 1);
    if (auto* cert = std::get_if<TutteCertificate>(&over)) {
      c.expect(verify_tutte_certificate(g, *cert), tag + ": pack_trees certificate");
    } else {
      c.expect(false, tag + ": pack_trees found sigma+1 trees");
    }
    GraphicMatroid m(g);
    BasePackingNumber bp = sigma(m);
    c.equal(bp.sigma, brute_sigma, tag + ": matroid sigma vs exhaustive");
    c.expect(verify_edmonds_certificate(m, bp.next_certificate), tag + ": Edmonds certificate");
    max_stp += s.sigma == lambda;
  }
  c.note(std::to_string(graphs) + " graphs, " + std::to_string(max_stp) + " max-STP");
}

struct MatroidCase {
  std::string name;
  MatroidPtr m;
  std::optional<Multigraph> graph;  // set for cycle matroids of connected graphs
};

// Exhaustive sigma and minimum cocircuits. Large cycle matroids use the
// vertex-bipartition oracle, since their minimum cocircuits are minimum cuts.
std::pair<int, std::pair<int, std::set<IdSet>>> brute_matroid(const MatroidCase& mc) {
  if (mc.graph && mc.m->size() > 16) {
    return {oracle::sigma(*mc.graph), {oracle::lambda(*mc.graph), oracle::min_cut_edge_sets(*mc.graph)}};
  }
  return {oracle::sigma(*mc.m), oracle::min_rank_dropping_sets(*mc.m)};
}

void check_max_bp_instance(Check& c, const MatroidCase& mc) {
  auto [brute_sigma, drops] = brute_matroid(mc);
  auto [brute_lambda, brute_cocircuits] = drops;
  MaxBpVerdict v = is_max_bp(*mc.m);
  c.equal(v.k, brute_sigma, mc.name + ": sigma");
  c.expect(v.answer == (brute_sigma == brute_lambda), mc.name + ": is_max_bp verdict");
  if (v.lambda) c.equal(*v.lambda, brute_lambda, mc.name + ": cogirth");
  if (!v.answer) return;
  std::vector<Cocircuit> cs = min_cocircuits(*mc.m, v.packing);
  std::set<IdSet> fast;
  for (const Cocircuit& x : cs) fast.insert(x.elements);
  c.expect(fast == brute_cocircuits, mc.name + ": minimum cocircuits equal exhaustive enumeration");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) c.expect(disjoint(cs[i].elements, cs[j].elements), mc.name + ": disjoint");
  }
  for (const Cocircuit& x : cs) {
    if (x.elements == mc.m->ground()) continue;
    MatroidPtr rest = delete_elements(mc.m, x.elements);
    BasePacking p = packing_after_deletion(mc.m, v.packing, x);
    bool ok = static_cast<int>(p.bases.size()) == v.k;
    for (std::size_t i = 0; i < p.bases.size(); ++i) {
      ok = ok && is_base(*rest, p.bases[i]);
      for (std::size_t j = 0; j < i; ++j) ok = ok && disjoint(p.bases[i], p.bases[j]);
    }
    c.expect(ok, mc.name + ": k disjoint bases survive deleting a minimum cocircuit");
    c.expect(sigma(*rest).sigma >= v.k, mc.name + ": sigma after deletion");
  }
}

void criterion_5(Check& c) {
  std::vector<MatroidCase> cases;
  auto graphic = [&](std::string name, Multigraph g) { cases.push_back({name, fixtures::graphic(g), g}); };
  graphic("K4", fixtures::k4());
  graphic("C5", fixtures::c5());
  graphic("PETERSEN", fixtures::petersen());
  graphic("TREEPAR(2,P3)", fixtures::treepar_path(2, 3));
  graphic("TREEPAR(3,P4)", fixtures::treepar_path(3, 4));
  graphic("FIG1", fixtures::fig1());
  graphic("FIG3L", fixtures::fig3l());
  graphic("FIG3R", fixtures::fig3r());
  graphic("FIG4", fixtures::fig4());
  graphic("FIG5A", fixtures::fig5a());
  cases.push_back({"FANO", fixtures::fano(), std::nullopt});
  cases.push_back({"TRANSVERSAL(3x2)", fixtures::uniform_partition_transversal(3, 2), std::nullopt});
  cases.push_back({"U(1,3)", fixtures::uniform(1, 3), std::nullopt});
  cases.push_back({"U(2,4)", fixtures::uniform(2, 4), std::nullopt});
  std::mt19937 rng(2025);
  for (int i = 0; i < 120; ++i) {
    const int rows = std::uniform_int_distribution<int>(1, 5)(rng);
    const int cols = std::uniform_int_distribution<int>(rows, 12)(rng);
    cases.push_back({"gf2 #" + std::to_string(i),
                     std::make_shared<Gf2Matroid>(oracle::random_gf2_rows(rng, rows, cols)), std::nullopt});
  }
  int max_bp = 0;
  for (const MatroidCase& mc : cases) {
    check_max_bp_instance(c, mc);
    max_bp += is_max_bp(*mc.m).answer;
  }
  c.note(std::to_string(cases.size()) + " matroids, " + std::to_string(max_bp) + " max-bp");
}

// Sum of child ranks against rank minus the number of minimum cocircuits.
int audit_rank_bookkeeping(Check& c, const std::string& name, const MatroidDecomposition& d) {
  int audited = 0;
  for (const MatroidDecompositionNode& n : d.nodes) {
    if (!n.reducible) continue;
    int sum = 0;
    for (int ch : n.children) sum += d.nodes[ch].rank;
    c.equal(sum, n.rank - static_cast<int>(n.cocircuits.size()), name + " node " + std::to_string(n.id));
    ++audited;
  }
  return audited;
}

void criterion_6(Check& c) {
  std::vector<std::pair<std::string, MatroidPtr>> ms{
      {"FIG1", fixtures::graphic(fixtures::fig1())},   {"FIG3L", fixtures::graphic(fixtures::fig3l())},
      {"FIG3R", fixtures::graphic(fixtures::fig3r())}, {"FIG4", fixtures::graphic(fixtures::fig4())},
      {"FIG5A", fixtures::graphic(fixtures::fig5a())}, {"TREEPAR(2,P3)", fixtures::graphic(fixtures::treepar_path(2, 3))},
      {"U(1,3)", fixtures::uniform(1, 3)},             {"FANO", fixtures::fano()}};
  std::mt19937 rng(2026);
  for (int i = 0; i < 150; ++i) {
    const int rows = std::uniform_int_distribution<int>(1, 4)(rng);
    const int cols = std::uniform_int_distribution<int>(rows + 1, 10)(rng);
    ms.push_back({"gf2 #" + std::to_string(i), std::make_shared<Gf2Matroid>(oracle::random_gf2_rows(rng, rows, cols))});
  }
  for (int i = 0; i < 100; ++i) {
    ms.push_back({"graphic #" + std::to_string(i), fixtures::graphic(oracle::random_connected_multigraph(rng, 8, 16))});
  }
  int decomposed = 0, audited = 0;
  for (const auto& [name, m] : ms) {
    if (connected_components_matroid(*m).size() > 1) {
      for (const MatroidDecomposition& d : decompose_matroid_components(m).decompositions) {
        audited += audit_rank_bookkeeping(c, name, d);
        ++decomposed;
      }
      continue;
    }
    audited += audit_rank_bookkeeping(c, name, decompose_matroid(m));
    ++decomposed;
  }
  c.note(std::to_string(decomposed) + " decompositions, " + std::to_string(audited) + " reducible nodes");
  c.expect(audited > 50, "enough reducible nodes audited");
}

void criterion_7(Check& c) {
  for (auto [name, g] : {std::pair{"FIG1", fixtures::fig1()}, std::pair{"FIG3L", fixtures::fig3l()},
                         std::pair{"FIG4", fixtures::fig4()}}) {
    MaxStpDecomposition gd = decompose(g);
    MatroidDecomposition md = decompose_matroid(fixtures::graphic(g));
    c.equal(md.irreducibles.size(), gd.irreducibles.size(), std::string(name) + ": leaf count");
    std::set<IdSet> graph_leaves, matroid_leaves;
    for (int id : gd.irreducibles) graph_leaves.insert(g.induced(gd.nodes[id].vertices).edge_ids());
    for (int id : md.irreducibles) matroid_leaves.insert(md.nodes[id].elements);
    c.expect(graph_leaves == matroid_leaves, std::string(name) + ": leaf edge sets");
    // Each T-tree edge {A, B} must be a hyperedge on the crux components with
    // the edge sets of A and B; compared as sets of (cut, incident edge sets).
    std::set<std::pair<IdSet, std::set<IdSet>>> t_edges, hyperedges;
    for (const DecompositionNode& n : gd.nodes) {
      if (!n.t_tree) continue;
      for (const TTreeEdge& e : n.t_tree->edges) {
        t_edges.insert({e.cut.cut_edges,
                        {g.induced(gd.nodes[e.child_a].vertices).edge_ids(), g.induced(gd.nodes[e.child_b].vertices).edge_ids()}});
      }
    }
    for (const MatroidDecompositionNode& n : md.nodes) {
      if (!n.assembly) continue;
      for (const Hyperedge& h : n.assembly->hyperedges) {
        std::set<IdSet> inc;
        for (int i : h.incident) inc.insert(n.assembly->vertices[i]);
        hyperedges.insert({n.cocircuits[h.cocircuit_id].elements, inc});
      }
    }
    c.expect(t_edges == hyperedges, std::string(name) + ": hyperedge incidences match T-tree edges");
  }
}

void criterion_8(Check& c) {
  Multigraph g = fixtures::petersen();
  const int sigma_fast = stp_number(g).sigma, lambda_fast = edge_connectivity(g).first;
  c.equal(lambda_fast, 3, "lambda");
  c.equal(sigma_fast, 1, "sigma");
  c.equal(oracle::lambda(g), 3, "lambda (exhaustive)");
  c.equal(oracle::sigma(g), 1, "sigma (exhaustive)");
  c.expect(sigma_fast >= lambda_fast / 2, "sigma >= floor(lambda/2)");
  if (lambda_fast > 2 * sigma_fast) c.note("flag: lambda <= 2 sigma does not hold here (3 > 2)");
}

void criterion_9(Check& c) {
  Multigraph g = fixtures::fig1();
  Ubb u = ubb_from_packing(stp_number(g).packing);
  c.equal(u.t, 1, "t");
  c.equal(binomial(static_cast<long long>(g.edge_count()), u.t), 14LL, "single-edge failure sets");
  UbbVerdict v = verify_ubb(g, u, kDefaultBudget);
  c.expect(v.ok, "exhaustive UBB check");
  SimulationReport a = simulate_failures(g, u, 1000, 7);
  SimulationReport b = simulate_failures(g, u, 1000, 7);
  c.equal(a.survivals, 1000LL, "survivals");
  c.expect(dump(json(a)) == dump(json(b)), "reports are byte-identical");
}

void criterion_10(Check& c) {
  MatroidPtr t = fixtures::uniform_partition_transversal(3, 2);
  MaxBpVerdict v = is_max_bp(*t);
  c.equal(v.k, 2, "sigma");
  c.expect(v.lambda && *v.lambda == 2, "lambda = 2");
  c.equal(oracle::sigma(*t), 2, "sigma (exhaustive)");
  c.equal(oracle::min_rank_dropping_sets(*t).first, 2, "lambda (exhaustive)");
  Crux x = crux(t);
  c.equal(x.view->size(), std::size_t{0}, "crux size");
  c.equal(delta(t), 0, "delta");
  c.expect(connected_components_matroid(*t).size() == 3 && !oracle::connected(*t), "reported disconnected");
  MatroidDecomposition d = decompose_matroid(fixtures::uniform(1, 3));
  c.equal(d.nodes.size(), std::size_t{1}, "U(1,3) nodes");
  c.expect(d.nodes[0].reducible && d.nodes[0].parallel_class_terminal && d.nodes[0].children.empty(),
           "U(1,3) is a parallel-class terminal node");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"FIG1 numbers, full 2-packing, single cut, two K4 leaves", criterion_1},
      {"FIG3L vs FIG3R cuts, order independence, root degree", criterion_2},
      {"FIG4 decomposition structure", criterion_3},
      {"random graphs: sigma and lambda against exhaustive search", criterion_4},
      {"matroids: minimum cocircuits and max-bp against exhaustive search", criterion_5},
      {"rank bookkeeping at every reducible node", criterion_6},
      {"graph and cycle-matroid decompositions agree", criterion_7},
      {"Petersen lambda 3, sigma 1", criterion_8},
      {"FIG1 tolerates every single edge failure", criterion_9},
      {"transversal 3x2 and U(1,3) edge cases", criterion_10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    std::string error;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && c.failures().empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
    for (const std::string& n : c.notes()) std::cout << " [" << n << "]";
    std::cout << "\n";
    if (!error.empty()) std::cout << "      exception: " << error << "\n";
    for (std::size_t k = 0; k < c.failures().size() && k < 10; ++k) std::cout << "      " << c.failures()[k] << "\n";
  }
  return failed;
}
