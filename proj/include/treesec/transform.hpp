#pragma once

#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "treesec/errors.hpp"
#include "treesec/model.hpp"
#include "treesec/rational.hpp"
#include "treesec/tree.hpp"

namespace treesec {

namespace detail {

// Incremental named-tree builder used by the expansion transforms.
class TreeBuilder {
 public:
  explicit TreeBuilder(const std::string& root_name) {
    names_.push_back(root_name);
    used_.insert(root_name);
  }

  int add_vertex(int parent, const std::string& preferred_name, Rational cost, Rational prize) {
    std::string name = preferred_name;
    while (!used_.insert(name).second) name += "_";
    parents_.push_back(parent);
    names_.push_back(std::move(name));
    costs_.push_back(std::move(cost));
    prizes_.push_back(std::move(prize));
    return static_cast<int>(parents_.size());
  }

  SecuritySystem build() {
    return SecuritySystem(RootedTree::from_parents(parents_, names_), CostVector(costs_),
                          PrizeVector(prizes_));
  }

 private:
  std::vector<int> parents_;
  std::vector<std::string> names_;
  std::vector<Rational> costs_;
  std::vector<Rational> prizes_;
  std::unordered_set<std::string> used_;
};

}  // namespace detail

struct PModelResult {
  SecuritySystem ss;             // unit costs
  std::vector<int> vertex_map;   // input vertex index -> output vertex index
};

// Expands every cost-k edge into a path of k unit-cost edges whose interior
// vertices carry prize 0; the original head keeps its prize at the end of
// the path. Costs must be positive integers.
inline PModelResult to_pmodel(const SecuritySystem& ss) {
  const int n = ss.tree.size();
  for (int i = 1; i <= n; ++i) {
    if (!is_integer(ss.costs[i])) throw NonIntegerCost("cost of edge " + ss.tree.name(i) + " is not an integer");
    if (ss.costs[i] == 0)
      throw ZeroCost("edge into " + ss.tree.name(i) + " has cost 0; contract it before expanding");
  }
  detail::TreeBuilder builder(ss.tree.name(0));
  std::vector<int> vmap(n + 1, 0);
  for (int v : ss.tree.bfs_order()) {
    if (v == 0) continue;
    const long long k = floor_to_int(ss.costs[v]).convert_to<long long>();
    int tail = vmap[ss.tree.parent(v)];
    for (long long j = 1; j < k; ++j)
      tail = builder.add_vertex(tail, ss.tree.name(v) + "." + std::to_string(j), 1, 0);
    vmap[v] = builder.add_vertex(tail, ss.tree.name(v), 1, ss.prizes[v]);
  }
  return {builder.build(), std::move(vmap)};
}

struct CModelResult {
  SecuritySystem ss;             // unit prizes plus zero-prize structural vertices
  std::vector<int> vertex_map;   // input vertex index -> output vertex index
  std::vector<int> edge_map;     // input edge index -> output edge carrying its cost
};

// Expands every prize-k vertex into a chain of k unit-prize vertices joined
// by zero-cost edges; the original edge cost enters the chain. A prize-0
// vertex keeps a single structural vertex with prize 0. Prizes must be
// nonnegative integers.
inline CModelResult to_cmodel(const SecuritySystem& ss) {
  const int n = ss.tree.size();
  for (int i = 1; i <= n; ++i)
    if (!is_integer(ss.prizes[i]))
      throw NonIntegerPrize("prize of vertex " + ss.tree.name(i) + " is not an integer");
  detail::TreeBuilder builder(ss.tree.name(0));
  std::vector<int> vmap(n + 1, 0), emap(n + 1, 0);
  for (int v : ss.tree.bfs_order()) {
    if (v == 0) continue;
    const long long k = floor_to_int(ss.prizes[v]).convert_to<long long>();
    int tail = vmap[ss.tree.parent(v)];
    if (k == 0) {
      vmap[v] = builder.add_vertex(tail, ss.tree.name(v), ss.costs[v], 0);
      emap[v] = vmap[v];
      continue;
    }
    for (long long j = 1; j < k; ++j) {
      tail = builder.add_vertex(tail, ss.tree.name(v) + "." + std::to_string(j), j == 1 ? ss.costs[v] : 0, 1);
      if (j == 1) emap[v] = tail;
    }
    vmap[v] = builder.add_vertex(tail, ss.tree.name(v), k == 1 ? ss.costs[v] : 0, 1);
    if (k == 1) emap[v] = vmap[v];
  }
  return {builder.build(), std::move(vmap), std::move(emap)};
}

namespace detail {
// Root-preserving containment by names: same root, every vertex present with
// the same parent.
inline void check_subtree_of(const RootedTree& tree, const RootedTree& supertree) {
  if (tree.name(0) != supertree.name(0))
    throw NotARootedSubtreeOfSupertree("root names differ: " + tree.name(0) + " vs " + supertree.name(0));
  for (int v = 1; v <= tree.size(); ++v) {
    const int sv = supertree.index_of(tree.name(v));
    if (sv <= 0)
      throw NotARootedSubtreeOfSupertree("vertex " + tree.name(v) + " is missing from the supertree");
    if (supertree.name(supertree.parent(sv)) != tree.name(tree.parent(v)))
      throw NotARootedSubtreeOfSupertree("vertex " + tree.name(v) + " has a different parent in the supertree");
  }
}
}  // namespace detail

// Extends a unit-cost model to a supertree, padding the prize multiset with
// zeros. Extending any fixed assignment with zeros on the new vertices keeps
// its profile, but the padded model also admits reassignments that move real
// prizes onto the new vertices, so model-level properties (such as having no
// optimal assignment) do not transfer in general.
inline Model pad_zero_prizes(const Model& model, const RootedTree& supertree) {
  if (!model.unit_costs()) throw NotUnitCost("padding with zero prizes needs a unit-cost model");
  detail::check_subtree_of(model.tree, supertree);
  const int extra = supertree.size() - model.tree.size();
  std::vector<Rational> prizes = model.prize_multiset;
  prizes.insert(prizes.end(), extra, Rational(0));
  return Model(supertree, std::vector<Rational>(supertree.size(), 1), std::move(prizes));
}

// Extends a unit-prize model to a supertree, padding the cost multiset with
// the stand-in for an unaffordable edge: one more than the original edge
// count. Extending a fixed assignment that way keeps its profile below the
// blocking cost, but as with pad_zero_prizes a reassignment may relocate the
// blockers, so a missing optimum does not transfer in general.
inline Model pad_infinite_costs(const Model& model, const RootedTree& supertree) {
  if (!model.unit_prizes()) throw NotUnitPrize("padding with blocking costs needs a unit-prize model");
  detail::check_subtree_of(model.tree, supertree);
  const int extra = supertree.size() - model.tree.size();
  std::vector<Rational> costs = model.cost_multiset;
  costs.insert(costs.end(), extra, Rational(model.tree.size() + 1));
  return Model(supertree, std::move(costs), std::vector<Rational>(supertree.size(), 1));
}

}  // namespace treesec
