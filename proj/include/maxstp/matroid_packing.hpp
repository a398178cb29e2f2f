#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "maxstp/matroid.hpp"
#include "maxstp/matroid_union.hpp"

namespace maxstp {

inline constexpr long long kDefaultCogirthBudget = 1LL << 22;

struct BasePacking {
  std::vector<IdSet> bases;
  auto operator<=>(const BasePacking&) const = default;
};

// k*rank(X) + |E - X| < k*rank(M): no k disjoint bases exist.
struct EdmondsCertificate {
  IdSet x;
  int k = 0;
  auto operator<=>(const EdmondsCertificate&) const = default;
};

using BasePackResult = std::variant<BasePacking, EdmondsCertificate>;

namespace detail {

class RankExchange {
 public:
  RankExchange(const MatroidOracle& m, int k) : m_(m), k_(k), members_(k) {}

  int element_count() const { return static_cast<int>(m_.size()); }
  int set_count() const { return k_; }

  bool can_insert(int j, int x) {
    IdSet s = with(members_[j], element(x));
    return m_.rank(s) == static_cast<int>(s.size());
  }

  std::vector<int> exchanges(int j, int x) {
    std::vector<int> out;
    IdSet s = with(members_[j], element(x));
    const int target = static_cast<int>(members_[j].size());
    for (int y : members_[j]) {
      if (m_.rank(without(s, y)) == target) out.push_back(index(y));
    }
    return out;
  }

  void insert(int j, int x) { members_[j] = with(members_[j], element(x)); }
  void erase(int j, int x) { members_[j] = without(members_[j], element(x)); }

 private:
  int element(int x) const { return m_.ground()[x]; }
  int index(int e) const {
    const IdSet& g = m_.ground();
    return static_cast<int>(std::lower_bound(g.begin(), g.end(), e) - g.begin());
  }

  const MatroidOracle& m_;
  int k_;
  std::vector<IdSet> members_;
};

inline void require_loop_free(const MatroidOracle& m) {
  IdSet l = loops(m);
  if (!l.empty()) throw PreconditionError("matroid has a loop at element " + std::to_string(l.front()));
}

}  // namespace detail

inline bool verify_edmonds_certificate(const MatroidOracle& m, const EdmondsCertificate& cert) {
  IdSet x = normalized(cert.x);
  const long long lhs = static_cast<long long>(cert.k) * m.rank(x) + static_cast<long long>(m.size() - x.size());
  return lhs < static_cast<long long>(cert.k) * m.rank();
}

// k disjoint bases by matroid partition over rank oracles, or an Edmonds
// certificate taken from the blocked exchange set.
inline BasePackResult pack_bases(const MatroidOracle& m, int k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  detail::require_loop_free(m);
  detail::RankExchange oracle(m, k);
  PartitionState st = partition_into_independent_sets(oracle, k * m.rank());
  if (st.reached_target) {
    BasePacking p;
    for (const auto& set : st.sets(k)) {
      IdSet b;
      for (int x : set) b.push_back(m.ground()[x]);
      if (!is_base(m, b)) throw InvariantViolation("packing produced a non-base");
      p.bases.push_back(std::move(b));
    }
    return p;
  }
  EdmondsCertificate cert;
  for (int x : st.blocked) cert.x.push_back(m.ground()[x]);
  cert.k = k;
  if (!verify_edmonds_certificate(m, cert)) throw InvariantViolation("extracted Edmonds certificate does not verify");
  return cert;
}

struct BasePackingNumber {
  int sigma = 0;
  BasePacking packing;
  EdmondsCertificate next_certificate;  // no sigma+1 disjoint bases
};

inline BasePackingNumber sigma(const MatroidOracle& m) {
  if (m.rank() == 0) throw PreconditionError("base packing number of a rank-0 matroid is unbounded");
  detail::require_loop_free(m);
  BasePackingNumber out;
  const int bound = static_cast<int>(m.size()) / m.rank();
  for (int k = 1; k <= bound; ++k) {
    BasePackResult r = pack_bases(m, k);
    if (auto* cert = std::get_if<EdmondsCertificate>(&r)) {
      out.next_certificate = *cert;
      return out;
    }
    out.sigma = k;
    out.packing = std::get<BasePacking>(std::move(r));
  }
  out.next_certificate = {{}, bound + 1};  // |E| < (bound+1) * rank(M)
  return out;
}

inline std::vector<Cocircuit> fundamental_cocircuits(const MatroidOracle& m, std::span<const int> base) {
  std::vector<Cocircuit> out;
  for (int x : base) out.push_back(fundamental_cocircuit(m, base, x));
  return out;
}

struct CogirthResult {
  int lambda = 0;
  Cocircuit witness;
};

// Smallest rank-dropping set, by increasing size then lexicographically.
// Each evaluated subset counts against the budget.
inline CogirthResult cogirth_bruteforce(const MatroidOracle& m, long long budget = kDefaultCogirthBudget) {
  const int r = m.rank();
  if (r == 0) throw PreconditionError("a rank-0 matroid has no cocircuits");
  const IdSet& ground = m.ground();
  const int n = static_cast<int>(ground.size());
  long long upper = n;
  IdSet b = greedy_base(m);
  for (const Cocircuit& c : fundamental_cocircuits(m, b)) upper = std::min<long long>(upper, c.size());

  long long evaluations = 0;
  for (int s = 1; s <= n; ++s) {
    std::vector<int> pick(s);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      if (++evaluations > budget) {
        throw BudgetExceeded("cogirth enumeration exceeded " + std::to_string(budget) + " rank evaluations", upper);
      }
      IdSet chosen;
      for (int i : pick) chosen.push_back(ground[i]);
      if (m.rank(set_difference(ground, chosen)) < r) return {s, {std::move(chosen)}};
      int i = s - 1;
      while (i >= 0 && pick[i] == n - s + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw InvariantViolation("no rank-dropping set found");
}

enum class Confidence { confirmed, unconfirmed };

inline std::string_view to_string(Confidence c) { return c == Confidence::confirmed ? "confirmed" : "unconfirmed"; }

struct MaxBpVerdict {
  bool answer = false;
  int k = 0;  // sigma
  BasePacking packing;
  std::optional<Cocircuit> witness;  // a cocircuit of size k, when answer is true
  // Cogirth, when known exactly. Positive answers always know it; negative
  // ones only after the brute-force enumeration completes within budget.
  std::optional<int> lambda;
  int lambda_upper_bound = 0;  // smallest fundamental cocircuit of the first base
  Confidence confidence = Confidence::confirmed;
};

// sigma = lambda iff some fundamental cocircuit of the first packed base has
// exactly sigma elements: a minimum cocircuit of size sigma meets each of the
// sigma disjoint bases once, so it is the fundamental cocircuit of its
// element in B1.
inline MaxBpVerdict is_max_bp(const MatroidOracle& m, long long budget = kDefaultCogirthBudget) {
  BasePackingNumber s = sigma(m);
  MaxBpVerdict v;
  v.k = s.sigma;
  v.packing = std::move(s.packing);
  const IdSet& b1 = v.packing.bases.front();
  v.lambda_upper_bound = static_cast<int>(m.size());
  for (int x : b1) {
    Cocircuit c = fundamental_cocircuit(m, b1, x);
    v.lambda_upper_bound = std::min(v.lambda_upper_bound, static_cast<int>(c.size()));
    if (!v.witness && static_cast<int>(c.size()) == v.k) v.witness = std::move(c);
  }
  if (v.witness) {
    v.answer = true;
    v.lambda = v.k;
    return v;
  }
  try {
    v.lambda = cogirth_bruteforce(m, budget).lambda;
    v.confidence = Confidence::confirmed;
  } catch (const BudgetExceeded&) {
    v.confidence = Confidence::unconfirmed;
  }
  return v;
}

// All minimum cocircuits of a matroid with sigma = lambda = k, read off the
// fundamental cocircuits of the first base of a k-packing.
inline std::vector<Cocircuit> min_cocircuits(const MatroidOracle& m, const BasePacking& packing) {
  if (packing.bases.empty()) throw PreconditionError("min_cocircuits needs a nonempty packing");
  const int k = static_cast<int>(packing.bases.size());
  for (std::size_t i = 0; i < packing.bases.size(); ++i) {
    if (!is_base(m, packing.bases[i])) throw PreconditionError("packing member is not a base");
    for (std::size_t j = 0; j < i; ++j) {
      if (!disjoint(packing.bases[i], packing.bases[j])) throw PreconditionError("packing bases overlap");
    }
  }
  std::vector<Cocircuit> out;
  for (const Cocircuit& c : fundamental_cocircuits(m, packing.bases.front())) {
    if (static_cast<int>(c.size()) == k) out.push_back(c);
  }
  if (out.empty()) throw PreconditionError("no cocircuit of size sigma: the matroid is not max-bp");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!disjoint(out[i].elements, out[j].elements)) throw InvariantViolation("minimum cocircuits overlap");
    }
    for (const IdSet& b : packing.bases) {
      if (set_intersection(out[i].elements, b).size() != 1) {
        throw InvariantViolation("minimum cocircuit does not meet a packed base exactly once");
      }
    }
  }
  return out;
}

// Strip the unique element of C from each base: k disjoint bases of M \ C.
inline BasePacking packing_after_deletion(const MatroidPtr& m, const BasePacking& packing, const Cocircuit& c) {
  MatroidPtr rest = delete_elements(m, c.elements);
  BasePacking out;
  for (const IdSet& b : packing.bases) {
    IdSet hit = set_intersection(b, c.elements);
    if (hit.size() != 1) throw PreconditionError("cocircuit does not meet a base exactly once");
    IdSet stripped = without(b, hit.front());
    if (!is_base(*rest, stripped)) throw InvariantViolation("stripped base is not a base of the deletion");
    out.bases.push_back(std::move(stripped));
  }
  return out;
}

}  // namespace maxstp
