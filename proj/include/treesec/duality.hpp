#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "treesec/errors.hpp"
#include "treesec/model.hpp"
#include "treesec/rational.hpp"
#include "treesec/tree.hpp"

namespace treesec {

// The map x -> a*x + b applied componentwise, with a > 0. These maps form a
// group: vectors reachable from one another describe the same family of
// systems up to affine rescaling.
struct AffineMap {
  Rational a = 1;
  Rational b = 0;

  AffineMap() = default;
  AffineMap(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a <= 0) throw NegativeValue("affine scale must be positive");
  }

  static AffineMap identity() { return {}; }

  Rational operator()(const Rational& x) const { return a * x + b; }

  AffineMap inverse() const { return {1 / a, -b / a}; }

  // this after other: x -> this(other(x)).
  AffineMap after(const AffineMap& other) const { return {a * other.a, a * other.b + b}; }

  bool operator==(const AffineMap&) const = default;
};

struct AffineImage {
  std::vector<Rational> values;
  bool nonnegative = true;  // whether the image stayed in the valid domain
};

inline AffineImage apply_affine(const AffineMap& map, std::span<const Rational> xs) {
  AffineImage out;
  out.values.reserve(xs.size());
  for (const Rational& x : xs) {
    out.values.push_back(map(x));
    if (out.values.back() < 0) out.nonnegative = false;
  }
  return out;
}

// The unique map with y = map(x), if any. Two distinct coordinates pin the
// map down; constant vectors leave only the shift.
inline std::optional<AffineMap> same_class(std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != y.size()) throw LengthMismatch("vectors must have equal length");
  if (x.empty()) return AffineMap::identity();
  size_t j = 1;
  while (j < x.size() && x[j] == x[0]) ++j;
  if (j == x.size()) {
    for (size_t i = 1; i < y.size(); ++i)
      if (y[i] != y[0]) return std::nullopt;
    return AffineMap(1, y[0] - x[0]);
  }
  const Rational a = (y[j] - y[0]) / (x[j] - x[0]);
  if (a <= 0) return std::nullopt;
  const Rational b = y[0] - a * x[0];
  const AffineMap map(a, b);
  for (size_t i = 0; i < x.size(); ++i)
    if (map(x[i]) != y[i]) return std::nullopt;
  return map;
}

struct ScaledPrizes {
  PrizeVector prizes;  // entries in [0, 1]
  AffineMap map;       // the scaling that was applied
};

// Divides by the maximum entry (identity on the zero or empty vector), so
// the result lies in [0,1] with maximum 1.
inline ScaledPrizes scale_prizes(const PrizeVector& p) {
  Rational mx = 0;
  for (const Rational& x : p.values()) mx = std::max(mx, x);
  if (mx == 0) return {p, AffineMap::identity()};
  AffineMap map(1 / mx, 0);
  std::vector<Rational> scaled;
  scaled.reserve(p.values().size());
  for (const Rational& x : p.values()) scaled.push_back(map(x));
  return {PrizeVector(std::move(scaled)), map};
}

// Least budget whose best attack captures exactly m vertices in a unit-prize
// system: the cheapest rooted subtree with m edges, via a min-plus tree DP.
inline Rational b_threshold(const SecuritySystem& ss, int m) {
  if (!ss.unit_prizes()) throw NotUnitPrize("all prizes must equal 1");
  const int n = ss.tree.size();
  if (m < 0 || m > n) throw Unreachable("no rooted subtree has " + std::to_string(m) + " edges");

  // tables[v][j]: min cost of a subtree rooted at v with exactly j edges
  // below v. Every j up to the subtree size is achievable.
  std::vector<std::vector<Rational>> tables(ss.tree.vertex_count());
  std::vector<int> order = ss.tree.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    std::vector<Rational> table{Rational(0)};
    for (int c : ss.tree.children(v)) {
      const std::vector<Rational>& child = tables[c];
      std::vector<Rational> merged(table.size() + child.size());
      std::vector<char> init(merged.size(), 0);
      for (size_t j = 0; j < table.size(); ++j) {
        if (!init[j] || table[j] < merged[j]) {
          merged[j] = table[j];  // child excluded
          init[j] = 1;
        }
        for (size_t jc = 0; jc < child.size(); ++jc) {
          const size_t idx = j + 1 + jc;
          Rational cand = table[j] + ss.costs[c] + child[jc];
          if (!init[idx] || cand < merged[idx]) {
            merged[idx] = std::move(cand);
            init[idx] = 1;
          }
        }
      }
      table = std::move(merged);
    }
    tables[v] = std::move(table);
  }
  return tables[0][m];
}

// P-model to C-model duality on a scaled system: costs become one minus the
// prize of the head, prizes become 1.
inline SecuritySystem dual_p_to_c(const SecuritySystem& ss) {
  if (!ss.unit_costs()) throw NotUnitCost("the dual of a P-model needs unit costs");
  std::vector<Rational> costs;
  costs.reserve(ss.tree.size());
  for (const Rational& p : ss.prizes.values()) {
    if (p > 1) throw NotScaled("prizes must lie in [0, 1]; scale them first");
    costs.push_back(1 - p);
  }
  return SecuritySystem(ss.tree, CostVector(std::move(costs)),
                        PrizeVector(std::vector<Rational>(ss.tree.size(), 1)));
}

// C-model to P-model duality: costs are scaled into [0,1] by their maximum,
// then prizes become one minus the scaled cost.
inline SecuritySystem dual_c_to_p(const SecuritySystem& ss) {
  if (!ss.unit_prizes()) throw NotUnitPrize("the dual of a C-model needs unit prizes");
  Rational mx = 0;
  for (const Rational& c : ss.costs.values()) mx = std::max(mx, c);
  std::vector<Rational> prizes;
  prizes.reserve(ss.tree.size());
  for (const Rational& c : ss.costs.values()) prizes.push_back(mx == 0 ? Rational(1) : 1 - c / mx);
  return SecuritySystem(ss.tree, CostVector(std::vector<Rational>(ss.tree.size(), 1)),
                        PrizeVector(std::move(prizes)));
}

}  // namespace treesec
