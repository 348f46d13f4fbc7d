#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "treesec/errors.hpp"
#include "treesec/rational.hpp"
#include "treesec/tree.hpp"

namespace treesec {

namespace detail {
inline std::vector<Rational> checked_nonnegative(std::vector<Rational> v, const char* what) {
  for (const Rational& x : v)
    if (x < 0) throw NegativeValue(std::string(what) + " entries must be nonnegative");
  return v;
}
}  // namespace detail

// Penetration costs, entry i belonging to edge i (1-based).
class CostVector {
 public:
  CostVector() = default;
  explicit CostVector(std::vector<Rational> v) : v_(detail::checked_nonnegative(std::move(v), "cost")) {}

  int size() const { return static_cast<int>(v_.size()); }
  const Rational& operator[](int i) const {
    if (i < 1 || i > size()) throw IndexOutOfRange("edge index " + std::to_string(i) + " out of range");
    return v_[i - 1];
  }
  const std::vector<Rational>& values() const { return v_; }
  bool operator==(const CostVector&) const = default;

 private:
  std::vector<Rational> v_;
};

// Prizes, entry i belonging to non-root vertex i. The root's prize is 0 and
// is never stored.
class PrizeVector {
 public:
  PrizeVector() = default;
  explicit PrizeVector(std::vector<Rational> v) : v_(detail::checked_nonnegative(std::move(v), "prize")) {}

  int size() const { return static_cast<int>(v_.size()); }
  const Rational& operator[](int i) const {
    if (i < 1 || i > size()) throw IndexOutOfRange("vertex index " + std::to_string(i) + " out of range");
    return v_[i - 1];
  }
  const std::vector<Rational>& values() const { return v_; }
  bool operator==(const PrizeVector&) const = default;

 private:
  std::vector<Rational> v_;
};

inline bool all_unit(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 1; });
}

// A system attack: a set of edge indices forming a rooted subtree. Stored
// sorted and deduplicated.
struct Attack {
  std::vector<int> edges;

  Attack() = default;
  explicit Attack(std::vector<int> e) : edges(std::move(e)) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  int size() const { return static_cast<int>(edges.size()); }
  bool empty() const { return edges.empty(); }

  bool operator==(const Attack&) const = default;
  // Fewest edges first, then lexicographic on the sorted index sequence.
  bool operator<(const Attack& other) const {
    if (edges.size() != other.edges.size()) return edges.size() < other.edges.size();
    return edges < other.edges;
  }
};

// A concrete assignment of costs to edges and prizes to vertices.
struct SecuritySystem {
  RootedTree tree;
  CostVector costs;
  PrizeVector prizes;

  SecuritySystem() = default;
  SecuritySystem(RootedTree t, CostVector c, PrizeVector p)
      : tree(std::move(t)), costs(std::move(c)), prizes(std::move(p)) {
    if (costs.size() != tree.size() || prizes.size() != tree.size())
      throw LengthMismatch("costs and prizes must have one entry per non-root vertex");
  }

  bool unit_costs() const { return all_unit(costs.values()); }
  bool unit_prizes() const { return all_unit(prizes.values()); }

  bool operator==(const SecuritySystem&) const = default;
};

// The unassigned description: a tree plus the cost and prize multisets.
// Multisets are stored sorted ascending.
struct Model {
  RootedTree tree;
  std::vector<Rational> cost_multiset;
  std::vector<Rational> prize_multiset;

  Model() = default;
  Model(RootedTree t, std::vector<Rational> costs, std::vector<Rational> prizes)
      : tree(std::move(t)),
        cost_multiset(detail::checked_nonnegative(std::move(costs), "cost")),
        prize_multiset(detail::checked_nonnegative(std::move(prizes), "prize")) {
    if (static_cast<int>(cost_multiset.size()) != tree.size() ||
        static_cast<int>(prize_multiset.size()) != tree.size())
      throw LengthMismatch("multisets must have one entry per non-root vertex");
    std::sort(cost_multiset.begin(), cost_multiset.end());
    std::sort(prize_multiset.begin(), prize_multiset.end());
  }

  bool unit_costs() const { return all_unit(cost_multiset); }
  bool unit_prizes() const { return all_unit(prize_multiset); }

  bool operator==(const Model&) const = default;
};

// Forgets the assignment, keeping the multisets.
inline Model model_of(const SecuritySystem& ss) {
  return Model(ss.tree, ss.costs.values(), ss.prizes.values());
}

inline void check_attack(const SecuritySystem& ss, const Attack& a) {
  if (!is_rooted_subtree(ss.tree, a.edges))
    throw NotARootedSubtree("edge set is not closed under taking parents");
}

inline Rational attack_cost(const SecuritySystem& ss, const Attack& a) {
  check_attack(ss, a);
  Rational total = 0;
  for (int e : a.edges) total += ss.costs[e];
  return total;
}

inline Rational attack_prize(const SecuritySystem& ss, const Attack& a) {
  check_attack(ss, a);
  Rational total = 0;
  for (int e : a.edges) total += ss.prizes[e];
  return total;
}

}  // namespace treesec
