#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "treesec/errors.hpp"
#include "treesec/model.hpp"
#include "treesec/profile.hpp"
#include "treesec/solver.hpp"
#include "treesec/taxonomy.hpp"

namespace treesec {

// Assigns the largest costs and smallest prizes nearest the root: vertices
// in BFS order (ties by input index) receive costs descending and prizes
// ascending. Along every root-to-leaf path costs never increase and prizes
// never decrease, so no swap move improves the result.
inline SecuritySystem good_ss(const Model& model) {
  const int n = model.tree.size();
  std::vector<Rational> costs_desc = model.cost_multiset;  // stored ascending
  std::reverse(costs_desc.begin(), costs_desc.end());
  const std::vector<Rational>& prizes_asc = model.prize_multiset;

  std::vector<Rational> c(n), p(n);
  int pos = 0;
  for (int v : model.tree.bfs_order()) {
    if (v == 0) continue;
    c[v - 1] = costs_desc[pos];
    p[v - 1] = prizes_asc[pos];
    ++pos;
  }
  return SecuritySystem(model.tree, CostVector(std::move(c)), PrizeVector(std::move(p)));
}

struct NeighborMove {
  enum Kind { PrizeSwap, CostSwap } kind;
  // PrizeSwap: the two vertex endpoints of an edge (first may be the root).
  // CostSwap: the two edge indices of an incident parent/child edge pair.
  int first;
  int second;
};

// All single-swap neighbors: one prize swap per tree edge (swapping with the
// root's fixed zero prize leaves the system unchanged but is still emitted),
// and one cost swap per incident edge pair.
inline std::vector<std::pair<NeighborMove, SecuritySystem>> neighbors(const SecuritySystem& ss) {
  std::vector<std::pair<NeighborMove, SecuritySystem>> out;
  const int n = ss.tree.size();
  for (int v = 1; v <= n; ++v) {
    const int u = ss.tree.parent(v);
    SecuritySystem next = ss;
    if (u != 0) {
      std::vector<Rational> p = ss.prizes.values();
      std::swap(p[u - 1], p[v - 1]);
      next = SecuritySystem(ss.tree, ss.costs, PrizeVector(std::move(p)));
    }
    out.push_back({NeighborMove{NeighborMove::PrizeSwap, u, v}, std::move(next)});
  }
  for (int w = 1; w <= n; ++w) {
    const int v = ss.tree.parent(w);
    if (v == 0) continue;
    std::vector<Rational> c = ss.costs.values();
    std::swap(c[v - 1], c[w - 1]);
    out.push_back({NeighborMove{NeighborMove::CostSwap, v, w},
                   SecuritySystem(ss.tree, CostVector(std::move(c)), ss.prizes)});
  }
  return out;
}

struct ImprovementResult {
  bool improved = false;
  std::optional<Rational> witness_budget;  // a budget where the candidate is strictly lower
};

namespace detail {
inline void check_same_model(const SecuritySystem& a, const SecuritySystem& b) {
  if (!(a.tree == b.tree)) throw MultisetMismatch("security systems live on different trees");
  auto sorted = [](const std::vector<Rational>& v) {
    std::vector<Rational> s = v;
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sorted(a.costs.values()) != sorted(b.costs.values()) ||
      sorted(a.prizes.values()) != sorted(b.prizes.values()))
    throw MultisetMismatch("security systems realize different multisets");
}
}  // namespace detail

// Whether candidate is an improvement over baseline: maxp never larger, and
// strictly smaller at some budget (returned as the witness).
inline ImprovementResult is_improved(const SecuritySystem& candidate, const SecuritySystem& baseline,
                                     const SolverLimits& limits = {}) {
  detail::check_same_model(candidate, baseline);
  ProfileComparison cmp = profile_leq(maxp_profile(candidate, limits), maxp_profile(baseline, limits));
  if (cmp.order == ProfileOrder::FirstLower) return {true, cmp.first_lower_at};
  return {false, {}};
}

// True when no neighbor improves on the system.
inline bool is_good(const SecuritySystem& ss, const SolverLimits& limits = {}) {
  const MaxPrizeProfile base = maxp_profile(ss, limits);
  for (const auto& [move, next] : neighbors(ss)) {
    if (next == ss) continue;
    if (profile_leq(maxp_profile(next, limits), base).order == ProfileOrder::FirstLower) return false;
  }
  return true;
}

namespace detail {
inline std::vector<Rational> ascending(const std::vector<Rational>& multiset) { return multiset; }
inline std::vector<Rational> descending(const std::vector<Rational>& multiset) {
  std::vector<Rational> v = multiset;
  std::reverse(v.begin(), v.end());
  return v;
}

// Places values[i] (1-based canonical position) onto the input-indexed slot.
inline std::vector<Rational> by_canonical(const TreeClass& cls, const std::vector<Rational>& values) {
  std::vector<Rational> out(values.size());
  for (size_t i = 1; i <= values.size(); ++i) out[cls.canonical_to_input[i] - 1] = values[i - 1];
  return out;
}
}  // namespace detail

// Rooted path: costs descending from the root, prizes ascending.
inline SecuritySystem optimal_ss_path(const Model& model) {
  const TreeClass cls = classify(model.tree);
  if (cls.tag != TreeTag::RootedPath) throw WrongTreeClass("tree is not a rooted path");
  return SecuritySystem(model.tree,
                        CostVector(detail::by_canonical(cls, detail::descending(model.cost_multiset))),
                        PrizeVector(detail::by_canonical(cls, detail::ascending(model.prize_multiset))));
}

// Rooted star: the i-th smallest cost shares an edge with the i-th smallest
// prize; ties fall back to index order.
inline SecuritySystem optimal_ss_star(const Model& model) {
  if (model.tree.depth() > 1) throw WrongTreeClass("tree is not a rooted star");
  return SecuritySystem(model.tree, CostVector(model.cost_multiset), PrizeVector(model.prize_multiset));
}

// Depth-2 tree with a single branching level-1 vertex, unit costs: prizes
// ascending along the canonical order (the branching vertex takes the
// smallest prize, its leaves take the largest).
inline SecuritySystem optimal_ss_caterpillar_p(const Model& model) {
  const TreeClass cls = classify(model.tree);
  if (cls.tag != TreeTag::Rooted3Caterpillar) throw WrongTreeClass("tree is not a rooted 3-caterpillar");
  if (!model.unit_costs()) throw NotUnitCost("all penetration costs must equal 1");
  return SecuritySystem(model.tree, CostVector(model.cost_multiset),
                        PrizeVector(detail::by_canonical(cls, detail::ascending(model.prize_multiset))));
}

// Depth-2 tree whose level-1 vertices each have at most one child, unit
// costs: level-1 prizes ascend with the index while the leaf under u_i takes
// the (n+k+1-i)-th smallest prize, pairing small parents with large leaves.
inline SecuritySystem optimal_ss_spider_p(const Model& model) {
  const TreeClass cls = classify(model.tree);
  if (cls.tag != TreeTag::Rooted4Spider) throw WrongTreeClass("tree is not a rooted 4-spider");
  if (!model.unit_costs()) throw NotUnitCost("all penetration costs must equal 1");
  const int n = model.tree.size();
  const int k = cls.k;
  const std::vector<Rational>& sorted = model.prize_multiset;
  std::vector<Rational> canonical(n);
  for (int i = 1; i <= n; ++i) canonical[i - 1] = i <= k ? sorted[i - 1] : sorted[n + k - i];
  return SecuritySystem(model.tree, CostVector(model.cost_multiset),
                        PrizeVector(detail::by_canonical(cls, canonical)));
}

// Unit prizes: costs descending along the canonical caterpillar order (the
// branching edge takes the largest cost).
inline SecuritySystem optimal_ss_caterpillar_c(const Model& model) {
  const TreeClass cls = classify(model.tree);
  if (cls.tag != TreeTag::Rooted3Caterpillar) throw WrongTreeClass("tree is not a rooted 3-caterpillar");
  if (!model.unit_prizes()) throw NotUnitPrize("all prizes must equal 1");
  return SecuritySystem(model.tree,
                        CostVector(detail::by_canonical(cls, detail::descending(model.cost_multiset))),
                        PrizeVector(model.prize_multiset));
}

// Unit prizes: level-1 costs descend with the index; the leaf edge under u_i
// takes the (n+k+1-i)-th largest cost, pairing large parents with small leaves.
inline SecuritySystem optimal_ss_spider_c(const Model& model) {
  const TreeClass cls = classify(model.tree);
  if (cls.tag != TreeTag::Rooted4Spider) throw WrongTreeClass("tree is not a rooted 4-spider");
  if (!model.unit_prizes()) throw NotUnitPrize("all prizes must equal 1");
  const int n = model.tree.size();
  const int k = cls.k;
  const std::vector<Rational> sorted = detail::descending(model.cost_multiset);
  std::vector<Rational> canonical(n);
  for (int i = 1; i <= n; ++i) canonical[i - 1] = i <= k ? sorted[i - 1] : sorted[n + k - i];
  return SecuritySystem(model.tree, CostVector(detail::by_canonical(cls, canonical)),
                        PrizeVector(model.prize_multiset));
}

// True iff the root edges carry exactly the largest costs of the multiset.
// When the prizes are all positive and the costs pairwise distinct this is
// necessary for optimality. Outside that domain it can reject optimal
// assignments — a zero prize makes burying a top cost harmless, and tied
// costs let an optimal assignment repeat a tied value on the root edges
// while a larger cost sits deeper — so callers filtering by this check must
// rescan unfiltered when it prunes everything.
inline bool check_level1_necessity(const SecuritySystem& ss) {
  std::vector<Rational> all = ss.costs.values();
  std::sort(all.begin(), all.end(), std::greater<>());
  std::vector<Rational> root_edges;
  for (int v : ss.tree.children(0)) root_edges.push_back(ss.costs[v]);
  std::sort(root_edges.begin(), root_edges.end(), std::greater<>());
  all.resize(root_edges.size());
  return all == root_edges;
}

}  // namespace treesec
