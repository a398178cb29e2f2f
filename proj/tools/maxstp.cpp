// Command-line front end: graph and matroid analyses with JSON reports.
//
// Exit codes: 0 success, 1 property failure (the report carries the
// certificate), 2 input error, 3 budget exceeded, 4 internal error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "maxstp/io.hpp"
#include "maxstp/maxstp.hpp"

namespace {

using namespace maxstp;

enum Exit { kOk = 0, kPropertyFailure = 1, kInputError = 2, kBudget = 3, kInternal = 4 };

struct Options {
  std::string file;
  std::string json_out;
  std::string dot_dir;
  long long budget = kDefaultBudget;
  std::optional<int> k;
  std::optional<int> t;
  long long trials = 1000;
  std::uint64_t seed = 0;
};

void emit(const Options& opt, const json& j) {
  if (opt.json_out.empty()) {
    std::cout << dump(j);
    return;
  }
  std::ofstream out(opt.json_out, std::ios::binary);
  if (!out) throw InputError("cannot write " + opt.json_out);
  out << dump(j);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

// Components of a disconnected graph as a Tutte certificate for one tree.
json disconnected_report(const Multigraph& g) {
  TutteCertificate cert{VertexPartition{connected_components(g)}, 0, 1};
  return {{"connected", false}, {"certificate", cert}};
}

int cmd_analyze(const Options& opt) {
  Multigraph g = read_graph_file(opt.file);
  if (g.vertex_count() < 2) throw InputError("analysis needs at least two vertices");
  if (!is_connected(g)) {
    emit(opt, disconnected_report(g));
    return kPropertyFailure;
  }
  MaxStpVerdict v = is_max_stp(g);
  json classes = json::array();
  if (opt.k) {
    if (*opt.k < 1 || *opt.k > v.k) throw InputError("--k must lie in 1..sigma = " + std::to_string(v.k));
    classes.push_back(detail::class_from_numbers(v.k, v.lambda, *opt.k));
  } else {
    for (int k = 1; k <= v.k; ++k) classes.push_back(detail::class_from_numbers(v.k, v.lambda, k));
  }
  json j = {{"connected", true},
            {"vertex_count", g.vertex_count()},
            {"edge_count", g.edge_count()},
            {"lambda", v.lambda},
            {"sigma", v.k},
            {"max_stp", v.answer},
            {"packing", v.witness},
            {"min_cut", v.min_cut},
            {"classes", std::move(classes)}};
  j["next_certificate"] = v.next_certificate ? json(*v.next_certificate) : json(nullptr);
  emit(opt, j);
  return kOk;
}

int cmd_decompose(const Options& opt) {
  Multigraph g = read_graph_file(opt.file);
  if (g.vertex_count() < 2) throw InputError("decomposition needs at least two vertices");
  if (!is_connected(g)) {
    emit(opt, disconnected_report(g));
    return kPropertyFailure;
  }
  MaxStpVerdict v = is_max_stp(g);
  if (!v.answer) {
    json j = {{"max_stp", false}, {"sigma", v.k}, {"lambda", v.lambda}, {"min_cut", v.min_cut}};
    j["certificate"] = v.next_certificate ? json(*v.next_certificate) : json(nullptr);
    emit(opt, j);
    return kPropertyFailure;
  }
  MaxStpDecomposition d = decompose(g);
  if (!opt.dot_dir.empty()) {
    std::filesystem::path dir(opt.dot_dir);
    std::filesystem::create_directories(dir);
    write_text(dir / "R.dot", decomposition_tree_dot(d));
    for (const DecompositionNode& n : d.nodes) {
      if (n.t_tree) write_text(dir / ("T" + std::to_string(n.id) + ".dot"), t_tree_dot(d, n.id));
    }
  }
  emit(opt, {{"max_stp", true}, {"decomposition", d}});
  return kOk;
}

int cmd_pack(const Options& opt) {
  Multigraph g = read_graph_file(opt.file);
  if (g.vertex_count() < 2) throw InputError("packing needs at least two vertices");
  if (opt.k) {
    if (*opt.k < 1) throw InputError("--k must be at least 1");
    PackResult r = pack_trees(g, *opt.k);
    if (auto* cert = std::get_if<TutteCertificate>(&r)) {
      emit(opt, {{"k", *opt.k}, {"packing", nullptr}, {"certificate", *cert}});
      return kPropertyFailure;
    }
    emit(opt, {{"k", *opt.k}, {"packing", std::get<TreePacking>(r)}, {"certificate", nullptr}});
    return kOk;
  }
  StpNumber s = stp_number(g);
  json j = {{"sigma", s.sigma}, {"packing", s.packing}};
  j["next_certificate"] = s.next_certificate ? json(*s.next_certificate) : json(nullptr);
  emit(opt, j);
  return kOk;
}

int cmd_cuts(const Options& opt) {
  Multigraph g = read_graph_file(opt.file);
  if (g.vertex_count() < 2) throw InputError("cuts need at least two vertices");
  if (!is_connected(g)) {
    emit(opt, disconnected_report(g));
    return kPropertyFailure;
  }
  MaxStpVerdict v = is_max_stp(g);
  std::vector<EdgeCut> cuts = v.answer ? enumerate_min_cuts_via_packing(g, v.witness.trees)
                                       : enumerate_min_cuts_bruteforce(g, opt.budget);
  emit(opt, {{"lambda", v.lambda}, {"method", v.answer ? "packing" : "exhaustive"}, {"cuts", cuts}});
  return kOk;
}

int cmd_matroid_analyze(const Options& opt) {
  MatroidPtr m = read_matroid_file(opt.file);
  if (m->rank() == 0) throw InputError("matroid has rank 0");
  if (!loops(*m).empty()) throw InputError("matroid has a loop");
  MaxBpVerdict v = is_max_bp(*m, opt.budget);
  std::vector<IdSet> comps = connected_components_matroid(*m);
  json j = {{"size", m->size()},
            {"rank", m->rank()},
            {"sigma", v.k},
            {"max_bp", v.answer},
            {"packing", v.packing},
            {"lambda_upper_bound", v.lambda_upper_bound},
            {"confidence", std::string(to_string(v.confidence))},
            {"connected", comps.size() == 1},
            {"components", comps}};
  j["lambda"] = v.lambda ? json(*v.lambda) : json(nullptr);
  j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  if (v.answer) {
    Crux c = crux(m);
    std::vector<IdSet> crux_comps = crux_components(c);
    j["cocircuits"] = c.cocircuits;
    j["delta"] = crux_comps.size();
    j["crux"] = c.view->ground();
    // An empty crux means M is the union of its minimum cocircuits, which
    // separates M only when there are at least two of them.
    if (crux_comps.empty()) {
      j["notes"] = {comps.size() == 1 ? "empty crux, yet connected: a single parallel class"
                                      : "empty crux: the minimum cocircuits are the components"};
    }
  } else {
    j["cocircuits"] = json::array();
    j["delta"] = nullptr;
    j["crux"] = nullptr;
  }
  emit(opt, j);
  return v.confidence == Confidence::confirmed ? kOk : kBudget;
}

int cmd_matroid_decompose(const Options& opt) {
  MatroidPtr m = read_matroid_file(opt.file);
  if (m->rank() == 0) throw InputError("matroid has rank 0");
  if (!loops(*m).empty()) throw InputError("matroid has a loop");
  try {
    MatroidDecomposition d = decompose_matroid(m);
    emit(opt, {{"connected", true}, {"decomposition", d}});
    return kOk;
  } catch (const DisconnectedMatroid& e) {
    emit(opt, {{"connected", false}, {"components", e.components()}});
    return kPropertyFailure;
  }
}

Ubb ubb_for(const Multigraph& g, const Options& opt) {
  if (g.vertex_count() < 2) throw InputError("UBB needs at least two vertices");
  if (!is_connected(g)) throw InputError("UBB needs a connected graph");
  Ubb u = ubb_from_packing(stp_number(g).packing);
  if (opt.t) u.t = *opt.t;
  if (u.t < 0 || u.t >= static_cast<int>(g.edge_count())) {
    throw InputError("--t must satisfy 0 <= t < |E| = " + std::to_string(g.edge_count()));
  }
  return u;
}

int cmd_ubb_verify(const Options& opt) {
  Multigraph g = read_graph_file(opt.file);
  Ubb u = ubb_for(g, opt);
  UbbVerdict v = verify_ubb(g, u, opt.budget);
  json trees = json::array();
  for (const SpanningTree& t : u.trees) trees.push_back(t.edge_ids);
  json j = {{"ok", v.ok}, {"t", u.t}, {"trees", std::move(trees)}, {"mode", "exhaustive"}};
  j["counterexample"] = v.counterexample ? json(*v.counterexample) : json(nullptr);
  emit(opt, j);
  return v.ok ? kOk : kPropertyFailure;
}

int cmd_ubb_simulate(const Options& opt) {
  Multigraph g = read_graph_file(opt.file);
  Ubb u = ubb_for(g, opt);
  if (opt.trials < 1) throw InputError("--trials must be at least 1");
  emit(opt, simulate_failures(g, u, opt.trials, opt.seed));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning tree packing, edge connectivity and max-STP decomposition"};
  app.require_subcommand(1);
  Options opt;
  int (*handler)(const Options&) = nullptr;

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", opt.file, "input JSON file")->required(); };
  auto add_json_out = [&](CLI::App* sub) { sub->add_option("--json-out", opt.json_out, "write the JSON report here"); };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", opt.budget, "evaluation budget for exhaustive searches")->capture_default_str();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "lambda, sigma, max-STP verdict and classes");
  add_file(analyze);
  add_json_out(analyze);
  analyze->add_option("--k", opt.k, "classify for this k only");
  analyze->callback([&] { handler = cmd_analyze; });

  CLI::App* decomp = app.add_subcommand("decompose", "max-STP decomposition");
  add_file(decomp);
  add_json_out(decomp);
  decomp->add_option("--dot", opt.dot_dir, "write R.dot and T<id>.dot files into this directory");
  decomp->callback([&] { handler = cmd_decompose; });

  CLI::App* pack = app.add_subcommand("pack", "disjoint spanning trees");
  add_file(pack);
  add_json_out(pack);
  pack->add_option("--k", opt.k, "pack exactly k trees instead of a maximum packing");
  pack->callback([&] { handler = cmd_pack; });

  CLI::App* cuts = app.add_subcommand("cuts", "all minimum edge cuts");
  add_file(cuts);
  add_json_out(cuts);
  add_budget(cuts);
  cuts->callback([&] { handler = cmd_cuts; });

  CLI::App* matroid = app.add_subcommand("matroid", "matroid analyses");
  matroid->require_subcommand(1);
  CLI::App* m_analyze = matroid->add_subcommand("analyze", "sigma, cogirth, minimum cocircuits, crux");
  add_file(m_analyze);
  add_json_out(m_analyze);
  add_budget(m_analyze);
  m_analyze->callback([&] { handler = cmd_matroid_analyze; });
  CLI::App* m_decomp = matroid->add_subcommand("decompose", "recursive crux decomposition");
  add_file(m_decomp);
  add_json_out(m_decomp);
  add_budget(m_decomp);
  m_decomp->callback([&] { handler = cmd_matroid_decompose; });

  CLI::App* ubb = app.add_subcommand("ubb", "fault tolerance of a tree packing");
  ubb->require_subcommand(1);
  CLI::App* u_verify = ubb->add_subcommand("verify", "check every t-set of failed edges");
  add_file(u_verify);
  add_json_out(u_verify);
  add_budget(u_verify);
  u_verify->add_option("--t", opt.t, "failures to tolerate (default sigma - 1)");
  u_verify->callback([&] { handler = cmd_ubb_verify; });
  CLI::App* u_sim = ubb->add_subcommand("simulate", "seeded random failure trials");
  add_file(u_sim);
  add_json_out(u_sim);
  add_budget(u_sim);
  u_sim->add_option("--t", opt.t, "failures per trial (default sigma - 1)");
  u_sim->add_option("--trials", opt.trials, "number of trials")->capture_default_str();
  u_sim->add_option("--seed", opt.seed, "PRNG seed")->capture_default_str();
  u_sim->callback([&] { handler = cmd_ubb_simulate; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return handler(opt);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
