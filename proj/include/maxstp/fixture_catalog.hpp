#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maxstp/fixtures.hpp"
#include "maxstp/io.hpp"

namespace maxstp::fixtures {

// File name (without .json) and contents of every shipped fixture.
inline std::vector<std::pair<std::string, json>> catalog() {
  std::vector<std::pair<std::string, json>> out;
  auto graph = [&](std::string name, const Multigraph& g) { out.emplace_back(std::move(name), json(g)); };
  auto matroid = [&](std::string name, const MatroidPtr& m) { out.emplace_back(std::move(name), matroid_to_json(*m)); };
  graph("k4", k4());
  graph("c5", c5());
  graph("petersen", petersen());
  graph("treepar2_p3", treepar_path(2, 3));
  graph("treepar3_p4", treepar_path(3, 4));
  graph("fig1", fig1());
  graph("fig3l", fig3l());
  graph("fig3r", fig3r());
  graph("fig4", fig4());
  graph("fig5a", fig5a());
  matroid("fig1_graphic", graphic(fig1()));
  matroid("fig3l_graphic", graphic(fig3l()));
  matroid("fig4_graphic", graphic(fig4()));
  matroid("fano", fano());
  matroid("transversal_3x2", uniform_partition_transversal(3, 2));
  matroid("u1_3", uniform(1, 3));
  matroid("u2_4", uniform(2, 4));
  return out;
}

}  // namespace maxstp::fixtures
