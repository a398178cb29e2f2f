#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "maxstp/graph.hpp"
#include "maxstp/matroid.hpp"

// Canonical example graphs and matroids. Vertex ids are 1-based; edge ids
// follow list order from 0.
namespace maxstp::fixtures {

using EdgeList = std::vector<std::pair<int, int>>;

// All six edges of a K4 on first..first+3.
inline void add_k4(EdgeList& es, int first) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) es.push_back({first + i, first + j});
  }
}

inline Multigraph k4() {
  EdgeList es;
  add_k4(es, 1);
  return build_graph(4, es);
}

inline Multigraph cycle(int n) {
  EdgeList es;
  for (int i = 1; i <= n; ++i) es.push_back({i, i % n + 1});
  return build_graph(n, es);
}

inline Multigraph c5() { return cycle(5); }

// Outer 5-cycle 1..5, spokes i -- i+5, inner pentagram on 6..10.
inline Multigraph petersen() {
  EdgeList es;
  for (int i = 1; i <= 5; ++i) es.push_back({i, i % 5 + 1});
  for (int i = 1; i <= 5; ++i) es.push_back({i, i + 5});
  for (int i = 0; i < 5; ++i) es.push_back({6 + i, 6 + (i + 2) % 5});
  return build_graph(10, es);
}

// Tree on vertex_count vertices with every edge replaced by k parallels.
inline Multigraph treepar(int k, int vertex_count, const EdgeList& tree) {
  EdgeList es;
  for (auto e : tree) {
    for (int i = 0; i < k; ++i) es.push_back(e);
  }
  return build_graph(vertex_count, es);
}

inline EdgeList path_edges(int n) {
  EdgeList es;
  for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
  return es;
}

inline Multigraph treepar_path(int k, int n) { return treepar(k, n, path_edges(n)); }

// K4{1..4} and K4{5..8} joined by (1,5), (2,6).
inline Multigraph fig1() {
  EdgeList es;
  add_k4(es, 1);
  add_k4(es, 5);
  es.push_back({1, 5});
  es.push_back({2, 6});
  return build_graph(8, es);
}

inline const EdgeList kFig1Join{{1, 5}, {2, 6}};
inline const EdgeList kFig3Join2Left{{5, 9}, {6, 10}};
inline const EdgeList kFig3Join2Right{{2, 9}, {5, 10}};
inline const EdgeList kFig4Join{{3, 13}, {11, 14}};

inline EdgeList three_k4s() {
  EdgeList es;
  add_k4(es, 1);
  add_k4(es, 5);
  add_k4(es, 9);
  return es;
}

// Blocks a{1..4}, b{5..8}, c{9..12}; c hangs off b only.
inline EdgeList fig3l_edges() {
  EdgeList es = three_k4s();
  es.insert(es.end(), kFig1Join.begin(), kFig1Join.end());
  es.insert(es.end(), kFig3Join2Left.begin(), kFig3Join2Left.end());
  return es;
}

inline Multigraph fig3l() { return build_graph(12, fig3l_edges()); }

// Same blocks; c attaches to both a and b.
inline Multigraph fig3r() {
  EdgeList es = three_k4s();
  es.insert(es.end(), kFig1Join.begin(), kFig1Join.end());
  es.insert(es.end(), kFig3Join2Right.begin(), kFig3Join2Right.end());
  return build_graph(12, es);
}

// fig3l plus d{13..16} attached to a and c.
inline Multigraph fig4() {
  EdgeList es = fig3l_edges();
  add_k4(es, 13);
  es.insert(es.end(), kFig4Join.begin(), kFig4Join.end());
  return build_graph(16, es);
}

// K4s a-b-c in a chain, d attached to b and c by one edge each. The a-b and
// d joins are cuts of the whole graph; the b-c join only becomes one inside
// b+c. Same T-tree shapes as fig4 under a different root.
inline Multigraph fig5a() {
  EdgeList es = three_k4s();
  add_k4(es, 13);
  es.insert(es.end(), {{1, 5}, {2, 6}, {7, 9}, {8, 10}, {6, 13}, {11, 14}});
  return build_graph(16, es);
}

// Fano plane: the seven nonzero columns of length 3, column i = binary of i+1.
inline std::vector<std::vector<int>> fano_rows() {
  std::vector<std::vector<int>> rows(3, std::vector<int>(7));
  for (int c = 0; c < 7; ++c) {
    for (int r = 0; r < 3; ++r) rows[r][c] = ((c + 1) >> r) & 1;
  }
  return rows;
}

inline MatroidPtr fano() { return std::make_shared<Gf2Matroid>(fano_rows()); }

// Transversal matroid of `parts` disjoint blocks of `size` consecutive elements.
inline MatroidPtr uniform_partition_transversal(int parts, int size) {
  std::vector<IdSet> sets;
  for (int p = 0; p < parts; ++p) {
    IdSet s;
    for (int i = 0; i < size; ++i) s.push_back(p * size + i);
    sets.push_back(s);
  }
  return std::make_shared<TransversalMatroid>(sets, parts * size);
}

inline MatroidPtr graphic(Multigraph g) { return std::make_shared<GraphicMatroid>(std::move(g)); }
inline MatroidPtr uniform(int r, int n) { return std::make_shared<UniformMatroid>(r, n); }

}  // namespace maxstp::fixtures
