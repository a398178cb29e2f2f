#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "maxstp/graph.hpp"
#include "maxstp/tree_packing.hpp"

namespace maxstp {

// Uncovering-by-bases: every t-subset of edges misses at least one tree.
struct Ubb {
  std::vector<SpanningTree> trees;
  int t = 0;
};

// k disjoint trees tolerate any k-1 failures: k-1 edges meet at most k-1 of them.
inline Ubb ubb_from_packing(const TreePacking& packing) {
  if (packing.trees.empty()) throw PreconditionError("empty packing");
  return {packing.trees, static_cast<int>(packing.trees.size()) - 1};
}

inline void validate_trees(const Multigraph& g, std::span<const SpanningTree> trees) {
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (!is_spanning_tree(g, trees[i].edge_ids)) {
      throw InputError("collection member " + std::to_string(i) + " is not a spanning tree");
    }
  }
}

// Index of the first tree disjoint from `failed`, if any.
inline std::optional<int> surviving_tree(std::span<const SpanningTree> trees, std::span<const int> failed) {
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (disjoint(trees[i].edge_ids, failed)) return static_cast<int>(i);
  }
  return std::nullopt;
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays exact; saturate well above any usable budget.
    if (r > (1LL << 62) / (n - k + i)) return 1LL << 62;
    r = r * (n - k + i) / i;
  }
  return r;
}

struct UbbVerdict {
  bool ok = true;
  std::optional<IdSet> counterexample;  // lexicographically first uncovered t-set
};

// Exhaustive check over all t-subsets of edge ids in lexicographic order.
inline UbbVerdict verify_ubb(const Multigraph& g, const Ubb& ubb, long long budget) {
  validate_trees(g, ubb.trees);
  const int m = static_cast<int>(g.edge_count());
  if (ubb.t < 0 || ubb.t >= m) throw InputError("t must satisfy 0 <= t < |E|");
  const long long count = binomial(m, ubb.t);
  if (count > budget) {
    throw BudgetExceeded("exhaustive UBB check needs C(" + std::to_string(m) + "," + std::to_string(ubb.t) +
                         ") subsets; use sampled mode");
  }
  IdSet ids = g.edge_ids();
  std::vector<int> pick(ubb.t);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    IdSet failed;
    for (int i : pick) failed.push_back(ids[i]);
    if (!surviving_tree(ubb.trees, failed)) return {false, std::move(failed)};
    int i = ubb.t - 1;
    while (i >= 0 && pick[i] == m - ubb.t + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < ubb.t; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {};
}

struct KTreeViolation {
  int w = 0;
  int i = 0;
  int j = 0;
  bool operator==(const KTreeViolation&) const = default;
};

namespace detail {

// Parent pointers of a spanning tree rooted at a chosen vertex.
struct TreePaths {
  std::vector<int> parent;       // by vertex index; -1 at the root
  std::vector<int> parent_edge;  // edge id to the parent
};

inline TreePaths root_tree(const Multigraph& g, const SpanningTree& t, int root) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int id : t.edge_ids) {
    const Edge& e = g.edge(id);
    adj[g.vertex_index(e.u)].push_back({g.vertex_index(e.v), id});
    adj[g.vertex_index(e.v)].push_back({g.vertex_index(e.u), id});
  }
  TreePaths p{std::vector<int>(n, -2), std::vector<int>(n, -1)};
  int r = g.vertex_index(root);
  p.parent[r] = -1;
  std::vector<int> stack{r};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, id] : adj[v]) {
      if (p.parent[w] != -2) continue;
      p.parent[w] = v;
      p.parent_edge[w] = id;
      stack.push_back(w);
    }
  }
  return p;
}

}  // namespace detail

// For every w != root and every pair i < j, the root-w paths in trees i and j
// share no internal vertex and no edge. First violation by (w, i, j).
inline std::optional<KTreeViolation> check_k_tree_condition(const Multigraph& g, std::span<const SpanningTree> trees,
                                                            int root) {
  validate_trees(g, trees);
  if (!g.has_vertex(root)) throw InputError("root is not a vertex");
  std::vector<detail::TreePaths> rooted;
  for (const SpanningTree& t : trees) rooted.push_back(detail::root_tree(g, t, root));
  const int r = g.vertex_index(root);
  for (std::size_t wi = 0; wi < g.vertex_count(); ++wi) {
    if (static_cast<int>(wi) == r) continue;
    std::vector<IdSet> internal(trees.size()), edges(trees.size());
    for (std::size_t i = 0; i < trees.size(); ++i) {
      int v = static_cast<int>(wi);
      while (v != r) {
        edges[i].push_back(rooted[i].parent_edge[v]);
        v = rooted[i].parent[v];
        if (v != r) internal[i].push_back(v);
      }
      internal[i] = normalized(std::move(internal[i]));
      edges[i] = normalized(std::move(edges[i]));
    }
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i + 1; j < trees.size(); ++j) {
        if (!disjoint(internal[i], internal[j]) || !disjoint(edges[i], edges[j])) {
          return KTreeViolation{g.vertices()[wi], static_cast<int>(i), static_cast<int>(j)};
        }
      }
    }
  }
  return std::nullopt;
}

// Seeded stream contract: trial i draws from std::mt19937_64 seeded with
// splitmix64(seed ^ splitmix64(i)); bounded integers use rejection sampling
// on raw 64-bit outputs. Both pieces are fully specified, so the stream is
// identical on every conforming platform.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(trial)));
}

// Uniform integer in [0, bound).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

// t distinct edge ids, uniformly, by a partial Fisher-Yates shuffle.
inline IdSet sample_failures(std::mt19937_64& rng, IdSet ids, int t) {
  for (int i = 0; i < t; ++i) {
    std::size_t j = i + uniform_below(rng, ids.size() - i);
    std::swap(ids[i], ids[j]);
  }
  ids.resize(t);
  return normalized(std::move(ids));
}

struct FailureRecord {
  IdSet failed;
  std::optional<int> surviving_tree;  // always empty: only non-survivals are logged
  bool operator==(const FailureRecord&) const = default;
};

struct SimulationReport {
  long long trials = 0;
  long long survivals = 0;
  std::vector<FailureRecord> failures_logged;
  std::uint64_t seed = 0;
  int t = 0;
  bool operator==(const SimulationReport&) const = default;
};

inline SimulationReport simulate_failures(const Multigraph& g, const Ubb& ubb, long long trials, std::uint64_t seed) {
  validate_trees(g, ubb.trees);
  if (trials < 1) throw InputError("trials must be at least 1");
  if (ubb.t < 0 || ubb.t >= static_cast<int>(g.edge_count())) throw InputError("t must satisfy 0 <= t < |E|");
  SimulationReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.t = ubb.t;
  const IdSet ids = g.edge_ids();
  for (long long i = 0; i < trials; ++i) {
    std::mt19937_64 rng = trial_stream(seed, static_cast<std::uint64_t>(i));
    IdSet failed = sample_failures(rng, ids, ubb.t);
    if (surviving_tree(ubb.trees, failed)) {
      ++rep.survivals;
    } else {
      rep.failures_logged.push_back({std::move(failed), std::nullopt});
    }
  }
  return rep;
}

// Sampled mode: no-counterexample-found over `trials` seeded draws.
inline UbbVerdict verify_ubb_sampled(const Multigraph& g, const Ubb& ubb, long long trials, std::uint64_t seed) {
  SimulationReport rep = simulate_failures(g, ubb, trials, seed);
  if (rep.failures_logged.empty()) return {};
  return {false, rep.failures_logged.front().failed};
}

}  // namespace maxstp
