#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <span>
#include <vector>

namespace maxstp {

// Sets of vertex ids, edge ids and matroid elements are kept as sorted,
// duplicate-free vectors. The helpers below assume (and preserve) that form.
using IdSet = std::vector<int>;

inline IdSet normalized(IdSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool is_normalized(std::span<const int> s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] >= s[i]) return false;
  }
  return true;
}

inline bool contains(std::span<const int> s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline IdSet set_union(std::span<const int> a, std::span<const int> b) {
  IdSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IdSet set_difference(std::span<const int> a, std::span<const int> b) {
  IdSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IdSet set_intersection(std::span<const int> a, std::span<const int> b) {
  IdSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool disjoint(std::span<const int> a, std::span<const int> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return false;
    }
  }
  return true;
}

inline bool is_subset(std::span<const int> a, std::span<const int> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline IdSet with(std::span<const int> s, int x) {
  IdSet out(s.begin(), s.end());
  out.insert(std::lower_bound(out.begin(), out.end(), x), x);
  return out;
}

inline IdSet without(std::span<const int> s, int x) {
  IdSet out;
  out.reserve(s.size());
  for (int y : s) {
    if (y != x) out.push_back(y);
  }
  return out;
}

// Union-find over dense indices 0..n-1 with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false when x and y were already joined.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace maxstp
