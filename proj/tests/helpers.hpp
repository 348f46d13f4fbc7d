#pragma once

#include <random>
#include <utility>
#include <vector>

#include "treesec/treesec.hpp"

namespace th {

using namespace treesec;

// r -> {u1, u2}, u3 under u1.
inline RootedTree cherry_tail() { return RootedTree::from_parents({0, 0, 1}); }

// The two smallest branching trees without universally optimal assignments:
// two root branches carrying one and two leaves, and a three-edge leg next
// to a bare root leaf.
inline RootedTree t2_shape() { return RootedTree::from_parents({0, 0, 1, 2, 2}); }
inline RootedTree t3_shape() { return RootedTree::from_parents({0, 0, 2, 3}); }

// Two legs of length l hanging from the root, numbered level by level.
inline RootedTree twin_path(int l) {
  std::vector<int> parents{0, 0};
  for (int j = 2; j <= l; ++j) {
    parents.push_back(2 * j - 3);
    parents.push_back(2 * j - 2);
  }
  return RootedTree::from_parents(parents);
}

inline SecuritySystem ss_of(const RootedTree& t, std::vector<Rational> costs,
                            std::vector<Rational> prizes) {
  return SecuritySystem(t, CostVector(std::move(costs)), PrizeVector(std::move(prizes)));
}

inline Model model_on(const RootedTree& t, std::vector<Rational> costs, std::vector<Rational> prizes) {
  return Model(t, std::move(costs), std::move(prizes));
}

inline std::vector<Rational> units(int n) { return std::vector<Rational>(n, 1); }

// Uniform random tree: each vertex attaches to an earlier one.
inline RootedTree random_tree(std::mt19937& rng, int n) {
  std::vector<int> parents(n, 0);
  for (int i = 2; i <= n; ++i) parents[i - 1] = std::uniform_int_distribution<int>(0, i - 1)(rng);
  return RootedTree::from_parents(parents);
}

inline std::vector<Rational> random_ints(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<Rational> out(n);
  for (auto& x : out) x = d(rng);
  return out;
}

inline std::vector<Rational> random_rationals(std::mt19937& rng, int n, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(0, max_num), den(1, max_den);
  std::vector<Rational> out(n);
  for (auto& x : out) x = Rational(num(rng), den(rng));
  return out;
}

// Every parent vector with parent[i] < i: covers each rooted tree shape on n
// non-root vertices at least once.
template <class Fn>
void for_each_tree(int n, Fn&& fn) {
  std::vector<int> parents(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      fn(RootedTree::from_parents(parents));
      return;
    }
    for (int p = 0; p < i; ++p) {
      parents[i - 1] = p;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
}

}  // namespace th
