#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treesec/errors.hpp"
#include "treesec/model.hpp"
#include "treesec/profile.hpp"
#include "treesec/rational.hpp"
#include "treesec/tree.hpp"

namespace treesec {

struct SolverLimits {
  int max_enum_n = 20;             // exhaustive enumeration guard
  BigInt budget_ceiling = 1000000; // scaled integer budget guard for the DP
};

struct MaxPrizeResult {
  Rational value;
  Attack witness;
};

namespace detail {

// Depth-first include/exclude walk over rooted subtrees. Candidates start as
// the root edges in index order; including an edge appends the head's child
// edges. The exclude branch runs first, so the empty attack is emitted first
// and the order is deterministic. emit receives the current edge stack (in
// discovery order) plus running cost and prize sums.
template <class Emit>
void scan_attacks(const RootedTree& t, const CostVector* costs, const PrizeVector* prizes,
                  std::optional<int> max_edges, Emit&& emit) {
  std::vector<int> candidates = t.children(0);
  std::vector<int> stack;
  Rational cost = 0, prize = 0;
  const int limit = max_edges ? std::min(*max_edges, t.size()) : t.size();

  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == candidates.size()) {
      emit(const_cast<const std::vector<int>&>(stack), cost, prize);
      return;
    }
    const int e = candidates[pos];
    self(self, pos + 1);  // exclude e; its child edges never join the frontier
    if (static_cast<int>(stack.size()) < limit) {
      stack.push_back(e);
      if (costs) cost += (*costs)[e];
      if (prizes) prize += (*prizes)[e];
      const size_t old_size = candidates.size();
      for (int ch : t.children(e)) candidates.push_back(ch);
      self(self, pos + 1);
      candidates.resize(old_size);
      if (costs) cost -= (*costs)[e];
      if (prizes) prize -= (*prizes)[e];
      stack.pop_back();
    }
  };
  rec(rec, 0);
}

inline void check_enum_guard(const RootedTree& t, const SolverLimits& limits) {
  if (t.size() > limits.max_enum_n)
    throw TooLarge("tree has " + std::to_string(t.size()) + " edges, enumeration guard is " +
                   std::to_string(limits.max_enum_n));
}

// Bottom-up knapsack over the tree with integer edge weights. tables_[v][w]
// holds the best prize sum of a subtree rooted at v (v included) whose edges
// below v weigh at most w, for w up to min(W, total weight below v).
class KnapEngine {
 public:
  KnapEngine(const RootedTree& t, const PrizeVector& prizes, std::vector<long long> weights, long long W)
      : tree_(&t), prizes_(&prizes), weights_(std::move(weights)), W_(W) {
    tables_.resize(t.vertex_count());
    std::vector<int> order = t.bfs_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int v = *it;
      std::vector<Rational> table{own_prize(v)};
      for (int c : t.children(v)) table = merge(table, tables_[c], weights_[c - 1], W_);
      tables_[v] = std::move(table);
    }
  }

  // Best prize using total weight <= w.
  const Rational& value_at(long long w) const {
    const auto& table = tables_[0];
    return table[std::min<long long>(w, static_cast<long long>(table.size()) - 1)];
  }

  // Some attack realizing value_at(w); child-exclusion is preferred on ties,
  // so the result is deterministic.
  Attack reconstruct(long long w) const {
    std::vector<int> edges;
    walk(0, w, edges);
    return Attack(std::move(edges));
  }

 private:
  static const Rational& val(const std::vector<Rational>& table, long long w) {
    return table[std::min<long long>(w, static_cast<long long>(table.size()) - 1)];
  }

  static std::vector<Rational> merge(const std::vector<Rational>& base, const std::vector<Rational>& child,
                                     long long w_e, long long W) {
    if (w_e > W) return base;
    const long long cap_b = static_cast<long long>(base.size()) - 1;
    const long long cap_c = static_cast<long long>(child.size()) - 1;
    const long long cap = std::min(W, cap_b + w_e + cap_c);
    std::vector<Rational> out(cap + 1);
    for (long long w = 0; w <= cap; ++w) out[w] = base[std::min(w, cap_b)];
    for (long long a = 0; a <= cap_b; ++a) {
      if (a + w_e > cap) break;
      for (long long b = 0; b <= cap_c; ++b) {
        const long long w = a + w_e + b;
        if (w > cap) break;
        Rational cand = base[a] + child[b];
        if (cand > out[w]) out[w] = std::move(cand);
      }
    }
    for (long long w = 1; w <= cap; ++w)
      if (out[w - 1] > out[w]) out[w] = out[w - 1];
    return out;
  }

  Rational own_prize(int v) const { return v == 0 ? Rational(0) : (*prizes_)[v]; }

  // Recompute the forward merges of v to recover which children were taken
  // and with what budget split.
  void walk(int v, long long w, std::vector<int>& edges) const {
    const auto& kids = tree_->children(v);
    std::vector<std::vector<Rational>> inter;
    inter.reserve(kids.size() + 1);
    inter.push_back({own_prize(v)});
    for (int c : kids) inter.push_back(merge(inter.back(), tables_[c], weights_[c - 1], W_));
    long long budget = w;
    for (size_t i = kids.size(); i >= 1; --i) {
      const int c = kids[i - 1];
      const Rational& target = val(inter[i], budget);
      if (val(inter[i - 1], budget) == target) continue;  // child excluded
      const long long w_e = weights_[c - 1];
      const long long cap_prev = static_cast<long long>(inter[i - 1].size()) - 1;
      const long long cap_c = static_cast<long long>(tables_[c].size()) - 1;
      bool found = false;
      for (long long a = 0; a <= std::min(cap_prev, budget) && !found; ++a) {
        const long long room = budget - a - w_e;
        if (room < 0) break;
        for (long long b = 0; b <= std::min(cap_c, room); ++b) {
          if (inter[i - 1][a] + tables_[c][b] == target) {
            edges.push_back(c);
            walk(c, b, edges);
            budget = a;
            found = true;
            break;
          }
        }
      }
      if (!found) throw Unreachable("knapsack reconstruction lost its target value");
    }
  }

  const RootedTree* tree_;
  const PrizeVector* prizes_;
  std::vector<long long> weights_;
  long long W_;
  std::vector<std::vector<Rational>> tables_;
};

}  // namespace detail

// Every rooted subtree of the tree, the empty attack first, in the fixed
// depth-first order. Optionally capped at max_edges edges per attack.
inline std::vector<Attack> enumerate_attacks(const RootedTree& t, std::optional<int> max_edges = {},
                                             const SolverLimits& limits = {}) {
  detail::check_enum_guard(t, limits);
  std::vector<Attack> out;
  detail::scan_attacks(t, nullptr, nullptr, max_edges,
                       [&](const std::vector<int>& edges, const Rational&, const Rational&) {
                         out.push_back(Attack(edges));
                       });
  return out;
}

// Exhaustive maxp: the best prize over rooted subtrees of cost at most B.
// Ties prefer fewer edges, then the lexicographically least edge set.
inline MaxPrizeResult maxp_bruteforce(const SecuritySystem& ss, const Rational& B,
                                      const SolverLimits& limits = {}) {
  if (B < 0) throw NegativeValue("budgets are nonnegative");
  detail::check_enum_guard(ss.tree, limits);
  Rational best = 0;
  std::vector<int> witness;
  bool have = false;
  detail::scan_attacks(ss.tree, &ss.costs, &ss.prizes, {},
                       [&](const std::vector<int>& edges, const Rational& cost, const Rational& prize) {
                         if (cost > B) return;
                         if (have && prize < best) return;
                         std::vector<int> sorted = edges;
                         std::sort(sorted.begin(), sorted.end());
                         if (!have || prize > best || sorted.size() < witness.size() ||
                             (sorted.size() == witness.size() && sorted < witness)) {
                           best = prize;
                           witness = std::move(sorted);
                           have = true;
                         }
                       });
  return {best, Attack(std::move(witness))};
}

namespace detail {

inline MaxPrizeProfile profile_bruteforce(const SecuritySystem& ss, const SolverLimits& limits) {
  check_enum_guard(ss.tree, limits);
  // Best (prize, attack) per exact cost, then a strictly-increasing sweep.
  std::map<Rational, std::pair<Rational, std::vector<int>>> per_cost;
  scan_attacks(ss.tree, &ss.costs, &ss.prizes, {},
               [&](const std::vector<int>& edges, const Rational& cost, const Rational& prize) {
                 auto it = per_cost.find(cost);
                 if (it == per_cost.end()) {
                   std::vector<int> sorted = edges;
                   std::sort(sorted.begin(), sorted.end());
                   per_cost.emplace(cost, std::make_pair(prize, std::move(sorted)));
                   return;
                 }
                 auto& [best, wit] = it->second;
                 if (prize < best) return;
                 std::vector<int> sorted = edges;
                 std::sort(sorted.begin(), sorted.end());
                 if (prize > best || sorted.size() < wit.size() ||
                     (sorted.size() == wit.size() && sorted < wit)) {
                   best = prize;
                   wit = std::move(sorted);
                 }
               });
  std::vector<ProfilePoint> pts;
  for (auto& [cost, entry] : per_cost) {
    auto& [prize, wit] = entry;
    if (!pts.empty() && prize <= pts.back().value) continue;
    pts.push_back({cost, prize, Attack(std::move(wit))});
  }
  return MaxPrizeProfile::from_points(std::move(pts));
}

inline MaxPrizeProfile profile_unitcost(const SecuritySystem& ss) {
  const int n = ss.tree.size();
  KnapEngine engine(ss.tree, ss.prizes, std::vector<long long>(n, 1), n);
  std::vector<ProfilePoint> pts;
  for (int m = 0; m <= n; ++m) {
    const Rational& v = engine.value_at(m);
    if (!pts.empty() && v <= pts.back().value) continue;
    pts.push_back({Rational(m), v, engine.reconstruct(m)});
  }
  return MaxPrizeProfile::from_points(std::move(pts));
}

}  // namespace detail

// Full breakpoint sequence of B -> maxp(B). Unit-cost systems go through the
// quadratic DP regardless of size; everything else is enumerated under the
// guard.
inline MaxPrizeProfile maxp_profile(const SecuritySystem& ss, const SolverLimits& limits = {}) {
  if (ss.unit_costs()) return detail::profile_unitcost(ss);
  return detail::profile_bruteforce(ss, limits);
}

// Unit-cost maxp at integer budget m via the subtree-size DP.
inline MaxPrizeResult maxp_unitcost_dp(const SecuritySystem& ss, int m) {
  if (!ss.unit_costs()) throw NotUnitCost("all penetration costs must equal 1");
  const int n = ss.tree.size();
  if (m < 0 || m > n) throw IndexOutOfRange("edge budget " + std::to_string(m) + " out of range");
  detail::KnapEngine engine(ss.tree, ss.prizes, std::vector<long long>(n, 1), m);
  return {engine.value_at(m), engine.reconstruct(m)};
}

// Rational-cost maxp: costs are scaled by the lcm D of their denominators
// and a pseudo-polynomial DP runs over integer budgets up to
// min(floor(B*D), total scaled cost), which must stay under the ceiling.
inline MaxPrizeResult maxp_integer_dp(const SecuritySystem& ss, const Rational& B,
                                      const SolverLimits& limits = {}) {
  if (B < 0) throw NegativeValue("budgets are nonnegative");
  const int n = ss.tree.size();
  const BigInt D = denominator_lcm(ss.costs.values());
  BigInt total = 0;
  std::vector<BigInt> scaled(n);
  for (int i = 1; i <= n; ++i) {
    scaled[i - 1] = numerator(Rational(ss.costs[i] * D));
    total += scaled[i - 1];
  }
  BigInt W_big = floor_to_int(B * D);
  if (W_big > total) W_big = total;
  if (W_big > limits.budget_ceiling)
    throw BudgetCeilingExceeded("scaled budget " + W_big.str() + " exceeds ceiling " +
                                limits.budget_ceiling.str());
  const long long W = W_big.convert_to<long long>();
  std::vector<long long> weights(n);
  for (int i = 0; i < n; ++i)
    weights[i] = scaled[i] > W ? W + 1 : scaled[i].convert_to<long long>();
  detail::KnapEngine engine(ss.tree, ss.prizes, std::move(weights), W);
  return {engine.value_at(W), engine.reconstruct(W)};
}

// Budgeted maxp with automatic solver choice: exhaustive under the guard,
// else the unit-cost DP, else the scaled integer DP.
inline MaxPrizeResult solve_maxp(const SecuritySystem& ss, const Rational& B,
                                 const SolverLimits& limits = {}) {
  if (B < 0) throw NegativeValue("budgets are nonnegative");
  if (ss.tree.size() <= limits.max_enum_n) return maxp_bruteforce(ss, B, limits);
  if (ss.unit_costs()) {
    const BigInt m = std::min(BigInt(ss.tree.size()), floor_to_int(B));
    return maxp_unitcost_dp(ss, m.convert_to<int>());
  }
  return maxp_integer_dp(ss, B, limits);
}

}  // namespace treesec
