#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "treesec/errors.hpp"
#include "treesec/tree.hpp"

namespace treesec {

enum class TreeTag {
  RootedPath,
  RootedStar,
  Rooted3Caterpillar,
  Rooted4Spider,
  Other,
};

inline const char* tree_tag_name(TreeTag t) {
  switch (t) {
    case TreeTag::RootedPath: return "rooted-path";
    case TreeTag::RootedStar: return "rooted-star";
    case TreeTag::Rooted3Caterpillar: return "rooted-3-caterpillar";
    case TreeTag::Rooted4Spider: return "rooted-4-spider";
    case TreeTag::Other: return "other";
  }
  return "other";
}

// Classification result. For the four recognized shapes, to_canonical maps
// input vertex indices to the canonical labelling (position i of the
// canonical order holds the input index of canonical vertex i), and k is the
// number of level-1 vertices for caterpillars and spiders.
struct TreeClass {
  TreeTag tag = TreeTag::Other;
  int k = 0;
  std::vector<int> canonical_to_input;  // size n+1, entry 0 is the root
  std::vector<int> input_to_canonical;  // size n+1, entry 0 is the root

  bool recognized() const { return tag != TreeTag::Other; }
};

namespace detail {
inline TreeClass with_order(TreeTag tag, int k, const RootedTree& t, std::vector<int> canonical) {
  TreeClass c;
  c.tag = tag;
  c.k = k;
  c.canonical_to_input = std::move(canonical);
  c.input_to_canonical.assign(t.vertex_count(), 0);
  for (int i = 0; i < t.vertex_count(); ++i) c.input_to_canonical[c.canonical_to_input[i]] = i;
  return c;
}
}  // namespace detail

// Precedence: path, then star, then 3-caterpillar, then 4-spider, then other.
inline TreeClass classify(const RootedTree& t) {
  const int n = t.size();
  std::vector<int> canonical{0};

  // Path: every vertex has at most one child, the root exactly one (or n=0).
  bool path = t.out_degree(0) <= 1;
  for (int v = 1; v <= n && path; ++v) path = t.out_degree(v) <= 1;
  if (path) {
    int v = 0;
    while (t.out_degree(v) == 1) {
      v = t.children(v)[0];
      canonical.push_back(v);
    }
    return detail::with_order(TreeTag::RootedPath, 0, t, std::move(canonical));
  }

  if (t.depth() == 1) {
    for (int v = 1; v <= n; ++v) canonical.push_back(v);
    return detail::with_order(TreeTag::RootedStar, 0, t, std::move(canonical));
  }

  if (t.depth() == 2 && t.out_degree(0) >= 2) {
    std::vector<int> branching, childless;
    for (int v : t.children(0))
      (t.out_degree(v) > 0 ? branching : childless).push_back(v);
    const int k = t.out_degree(0);
    if (branching.size() == 1) {
      // 3-caterpillar: the single branching level-1 vertex is u1, the other
      // level-1 vertices follow, then its children.
      canonical.push_back(branching[0]);
      for (int v : childless) canonical.push_back(v);
      for (int v : t.children(branching[0])) canonical.push_back(v);
      return detail::with_order(TreeTag::Rooted3Caterpillar, k, t, std::move(canonical));
    }
    bool single_children = true;
    for (int v : branching) single_children = single_children && t.out_degree(v) == 1;
    if (branching.size() >= 2 && single_children) {
      // 4-spider: branching level-1 vertices first (u1..u_{n-k}), childless
      // level-1 vertices next, and the leaf under u_i takes index k+i.
      for (int v : branching) canonical.push_back(v);
      for (int v : childless) canonical.push_back(v);
      for (int v : branching) canonical.push_back(t.children(v)[0]);
      return detail::with_order(TreeTag::Rooted4Spider, k, t, std::move(canonical));
    }
  }

  TreeClass c;
  c.tag = TreeTag::Other;
  return c;
}

enum class Pattern { T2, T3 };

// The two obstruction trees.
inline RootedTree pattern_tree(Pattern p) {
  if (p == Pattern::T2) return RootedTree::from_parents({0, 0, 1, 2, 2});
  return RootedTree::from_parents({0, 0, 2, 3});
}

namespace detail {
// Injective embedding of pattern below tree vertex tv mapping pv to tv,
// sending children to distinct children.
inline bool embed_from(const RootedTree& pattern, const RootedTree& tree, int pv, int tv,
                       std::vector<int>& phi) {
  phi[pv] = tv;
  const auto& pkids = pattern.children(pv);
  const auto& tkids = tree.children(tv);
  if (pkids.empty()) return true;
  if (pkids.size() > tkids.size()) {
    phi[pv] = -1;
    return false;
  }
  std::vector<char> used(tkids.size(), 0);
  auto match = [&](auto&& self, size_t i) -> bool {
    if (i == pkids.size()) return true;
    for (size_t j = 0; j < tkids.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      if (embed_from(pattern, tree, pkids[i], tkids[j], phi) && self(self, i + 1)) return true;
      used[j] = 0;
      phi[pkids[i]] = -1;
    }
    return false;
  };
  if (match(match, 0)) return true;
  phi[pv] = -1;
  return false;
}
}  // namespace detail

// Root-preserving, parent-preserving injective embedding of the pattern into
// the tree; returns pattern-index -> tree-index when one exists.
inline std::optional<std::vector<int>> contains_rooted_pattern(const RootedTree& tree, Pattern p) {
  const RootedTree pat = pattern_tree(p);
  std::vector<int> phi(pat.vertex_count(), -1);
  if (detail::embed_from(pat, tree, 0, 0, phi)) return phi;
  return std::nullopt;
}

inline bool forbidden_free(const RootedTree& tree) {
  return !contains_rooted_pattern(tree, Pattern::T2) && !contains_rooted_pattern(tree, Pattern::T3);
}

}  // namespace treesec
