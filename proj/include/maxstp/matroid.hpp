#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maxstp/element_set.hpp"
#include "maxstp/error.hpp"
#include "maxstp/graph.hpp"

namespace maxstp {

// A matroid seen only through its rank function. Every derived notion
// (independence, closure, circuits, cocircuits, connectivity) is computed
// from rank, so a new matroid class only needs rank_of.
class MatroidOracle {
 public:
  explicit MatroidOracle(IdSet ground) : ground_(normalized(std::move(ground))) {}
  virtual ~MatroidOracle() = default;

  const IdSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }

  int rank(std::span<const int> subset) const {
    if (is_normalized(subset)) {
      check_members(subset);
      return rank_of(subset);
    }
    IdSet s = normalized(IdSet(subset.begin(), subset.end()));
    check_members(s);
    return rank_of(s);
  }

  int rank() const { return rank_of(ground_); }

  virtual std::string kind() const = 0;

 protected:
  // subset is sorted, duplicate-free and inside the ground set.
  virtual int rank_of(std::span<const int> subset) const = 0;

 private:
  void check_members(std::span<const int> s) const {
    if (!is_subset(s, ground_)) {
      for (int x : s) {
        if (!contains(ground_, x)) throw InputError("element " + std::to_string(x) + " is not in the ground set");
      }
    }
  }

  IdSet ground_;

  friend class RestrictedMatroid;
};

using MatroidPtr = std::shared_ptr<const MatroidOracle>;

// Cycle matroid of a multigraph; elements are edge ids.
class GraphicMatroid final : public MatroidOracle {
 public:
  explicit GraphicMatroid(Multigraph g) : MatroidOracle(g.edge_ids()), g_(std::move(g)) {}

  const Multigraph& graph() const { return g_; }
  std::string kind() const override { return "graphic"; }

 protected:
  int rank_of(std::span<const int> subset) const override {
    DisjointSets dsu(g_.vertex_count());
    int r = 0;
    for (int id : subset) {
      const Edge& e = g_.edge(id);
      r += dsu.unite(g_.vertex_index(e.u), g_.vertex_index(e.v));
    }
    return r;
  }

 private:
  Multigraph g_;
};

// U_{r,n} on elements 0..n-1.
class UniformMatroid final : public MatroidOracle {
 public:
  UniformMatroid(int r, int n) : MatroidOracle(iota_set(n)), r_(r) {
    if (r < 0 || n < 0 || r > n) throw InputError("uniform matroid needs 0 <= r <= n");
  }

  int r() const { return r_; }
  std::string kind() const override { return "uniform"; }

 protected:
  int rank_of(std::span<const int> subset) const override { return std::min(static_cast<int>(subset.size()), r_); }

 private:
  static IdSet iota_set(int n) {
    IdSet s(std::max(n, 0));
    std::iota(s.begin(), s.end(), 0);
    return s;
  }
  int r_;
};

// Column matroid of a binary matrix; element i is column i. At most 64 rows.
class Gf2Matroid final : public MatroidOracle {
 public:
  explicit Gf2Matroid(const std::vector<std::vector<int>>& rows)
      : MatroidOracle(column_ids(rows)), rows_(rows), columns_(pack_columns(rows)) {}

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::uint64_t column(int i) const { return columns_.at(i); }
  std::string kind() const override { return "gf2"; }

 protected:
  int rank_of(std::span<const int> subset) const override {
    // XOR basis keyed by leading bit.
    std::uint64_t basis[64] = {};
    int r = 0;
    for (int c : subset) {
      std::uint64_t v = columns_[c];
      for (int bit = 63; bit >= 0 && v; --bit) {
        if (!((v >> bit) & 1)) continue;
        if (!basis[bit]) {
          basis[bit] = v;
          ++r;
          v = 0;
        } else {
          v ^= basis[bit];
        }
      }
    }
    return r;
  }

 private:
  static IdSet column_ids(const std::vector<std::vector<int>>& rows) {
    if (rows.size() > 64) throw InputError("gf2 matrix with more than 64 rows");
    std::size_t n = rows.empty() ? 0 : rows.front().size();
    for (const auto& row : rows) {
      if (row.size() != n) throw InputError("gf2 matrix rows differ in length");
      for (int b : row) {
        if (b != 0 && b != 1) throw InputError("gf2 matrix entries must be 0 or 1");
      }
    }
    IdSet s(n);
    std::iota(s.begin(), s.end(), 0);
    return s;
  }

  static std::vector<std::uint64_t> pack_columns(const std::vector<std::vector<int>>& rows) {
    std::size_t n = rows.empty() ? 0 : rows.front().size();
    std::vector<std::uint64_t> cols(n, 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (rows[r][c]) cols[c] |= std::uint64_t{1} << r;
      }
    }
    return cols;
  }

  std::vector<std::vector<int>> rows_;
  std::vector<std::uint64_t> columns_;
};

// Transversal matroid of a set system over elements 0..n-1: rank(X) is the
// size of a maximum matching between X and the sets.
class TransversalMatroid final : public MatroidOracle {
 public:
  TransversalMatroid(std::vector<IdSet> sets, int n) : MatroidOracle(iota_set(n)), sets_(std::move(sets)), member_of_(n) {
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      sets_[i] = normalized(std::move(sets_[i]));
      for (int x : sets_[i]) {
        if (x < 0 || x >= n) throw InputError("transversal set member " + std::to_string(x) + " outside 0..n-1");
        member_of_[x].push_back(static_cast<int>(i));
      }
    }
  }

  const std::vector<IdSet>& sets() const { return sets_; }
  std::string kind() const override { return "transversal"; }

 protected:
  int rank_of(std::span<const int> subset) const override {
    std::vector<int> match_of_set(sets_.size(), -1);
    int r = 0;
    for (int x : subset) {
      std::vector<char> visited(sets_.size(), 0);
      if (augment(x, match_of_set, visited)) ++r;
    }
    return r;
  }

 private:
  bool augment(int x, std::vector<int>& match_of_set, std::vector<char>& visited) const {
    for (int s : member_of_[x]) {
      if (visited[s]) continue;
      visited[s] = 1;
      if (match_of_set[s] < 0 || augment(match_of_set[s], match_of_set, visited)) {
        match_of_set[s] = x;
        return true;
      }
    }
    return false;
  }

  static IdSet iota_set(int n) {
    if (n < 0) throw InputError("negative ground size");
    IdSet s(n);
    std::iota(s.begin(), s.end(), 0);
    return s;
  }

  std::vector<IdSet> sets_;
  std::vector<std::vector<int>> member_of_;
};

// Restriction M|Y (equivalently the deletion M \ (E - Y)), sharing the base oracle.
class RestrictedMatroid final : public MatroidOracle {
 public:
  RestrictedMatroid(MatroidPtr base, IdSet keep) : MatroidOracle(std::move(keep)), base_(std::move(base)) {
    if (!is_subset(ground(), base_->ground())) throw InputError("restriction to elements outside the ground set");
  }

  const MatroidPtr& base() const { return base_; }
  std::string kind() const override { return base_->kind(); }

 protected:
  int rank_of(std::span<const int> subset) const override { return base_->rank_of(subset); }

 private:
  MatroidPtr base_;
};

inline MatroidPtr restrict_to(const MatroidPtr& m, std::span<const int> keep) {
  IdSet k = normalized(IdSet(keep.begin(), keep.end()));
  if (!is_subset(k, m->ground())) throw InputError("restriction to elements outside the ground set");
  if (auto r = std::dynamic_pointer_cast<const RestrictedMatroid>(m)) {
    return std::make_shared<RestrictedMatroid>(r->base(), std::move(k));
  }
  return std::make_shared<RestrictedMatroid>(m, std::move(k));
}

// M \ X.
inline MatroidPtr delete_elements(const MatroidPtr& m, std::span<const int> x) {
  IdSet drop = normalized(IdSet(x.begin(), x.end()));
  if (!is_subset(drop, m->ground())) throw InputError("deleting elements outside the ground set");
  if (drop.empty()) return m;
  return restrict_to(m, set_difference(m->ground(), drop));
}

struct Cocircuit {
  IdSet elements;
  std::size_t size() const { return elements.size(); }
  auto operator<=>(const Cocircuit&) const = default;
};

inline bool is_independent(const MatroidOracle& m, std::span<const int> x) {
  IdSet s = normalized(IdSet(x.begin(), x.end()));
  return m.rank(s) == static_cast<int>(s.size());
}

inline bool is_base(const MatroidOracle& m, std::span<const int> b) {
  return is_independent(m, b) && static_cast<int>(b.size()) == m.rank();
}

inline IdSet closure(const MatroidOracle& m, std::span<const int> x) {
  IdSet s = normalized(IdSet(x.begin(), x.end()));
  const int r = m.rank(s);
  IdSet out;
  for (int e : m.ground()) {
    if (contains(s, e) || m.rank(with(s, e)) == r) out.push_back(e);
  }
  return out;
}

// Lexicographically first base by the greedy algorithm.
inline IdSet greedy_base(const MatroidOracle& m) {
  IdSet b;
  for (int e : m.ground()) {
    IdSet t = with(b, e);
    if (m.rank(t) == static_cast<int>(t.size())) b = std::move(t);
  }
  return b;
}

inline Cocircuit fundamental_cocircuit(const MatroidOracle& m, std::span<const int> base, int x) {
  IdSet b = normalized(IdSet(base.begin(), base.end()));
  if (!is_base(m, b)) throw InputError("fundamental_cocircuit needs a base");
  if (!contains(b, x)) throw InputError("element is not in the base");
  return {set_difference(m.ground(), closure(m, without(b, x)))};
}

// Unique circuit in B + e for e outside the base B.
inline IdSet fundamental_circuit(const MatroidOracle& m, std::span<const int> base, int e) {
  IdSet b(base.begin(), base.end());
  IdSet circuit{e};
  if (m.rank(IdSet{e}) == 0) return circuit;
  IdSet be = with(b, e);
  const int r = static_cast<int>(b.size());
  for (int y : b) {
    if (m.rank(without(be, y)) == r) circuit.push_back(y);
  }
  return normalized(std::move(circuit));
}

// Finest direct-sum decomposition: union-find over the fundamental circuits
// of a base. Loops and coloops come out as singletons. Ordered by smallest element.
inline std::vector<IdSet> connected_components_matroid(const MatroidOracle& m) {
  const IdSet& ground = m.ground();
  IdSet b = greedy_base(m);
  DisjointSets dsu(ground.size());
  auto idx = [&](int e) { return static_cast<int>(std::lower_bound(ground.begin(), ground.end(), e) - ground.begin()); };
  for (int e : ground) {
    if (contains(b, e)) continue;
    for (int y : fundamental_circuit(m, b, e)) dsu.unite(idx(e), idx(y));
  }
  std::vector<IdSet> comps;
  std::vector<int> label(ground.size(), -1);
  for (std::size_t i = 0; i < ground.size(); ++i) {
    int r = dsu.find(static_cast<int>(i));
    if (label[r] < 0) {
      label[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[label[r]].push_back(ground[i]);
  }
  return comps;
}

inline bool is_connected_matroid(const MatroidOracle& m) {
  return m.size() <= 1 || connected_components_matroid(m).size() == 1;
}

inline IdSet loops(const MatroidOracle& m) {
  IdSet out;
  for (int e : m.ground()) {
    if (m.rank(IdSet{e}) == 0) out.push_back(e);
  }
  return out;
}

}  // namespace maxstp
