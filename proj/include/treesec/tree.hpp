#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "treesec/errors.hpp"

namespace treesec {

// Rooted directed tree, edges pointing away from the root. Non-root vertices
// are indexed 1..n; the edge entering vertex i is edge i (its head). Index 0
// is the root. Vertex names are carried along for I/O and reporting only.
class RootedTree {
 public:
  RootedTree() : RootedTree(std::vector<int>{}, {}) {}

  // parent[i-1] is the parent of vertex i (0 = root). Names, when given,
  // list the root first and then vertices 1..n.
  static RootedTree from_parents(const std::vector<int>& parents, std::vector<std::string> names = {}) {
    return RootedTree(parents, std::move(names));
  }

  int size() const { return static_cast<int>(parent_.size()) - 1; }  // n
  int vertex_count() const { return static_cast<int>(parent_.size()); }

  int parent(int v) const {
    check_vertex(v);
    if (v == 0) throw IndexOutOfRange("the root has no parent");
    return parent_[v];
  }

  const std::vector<int>& children(int v) const {
    check_vertex(v);
    return children_[v];
  }

  int out_degree(int v) const { return static_cast<int>(children(v).size()); }

  int level(int v) const {
    check_vertex(v);
    return level_[v];
  }

  int depth() const { return depth_; }

  const std::string& name(int v) const {
    check_vertex(v);
    return names_[v];
  }

  // Index of the vertex with the given name, or -1.
  int index_of(std::string_view name) const {
    for (int v = 0; v < vertex_count(); ++v)
      if (names_[v] == name) return v;
    return -1;
  }

  // Vertices ordered by (level, index); the root comes first.
  std::vector<int> bfs_order() const {
    std::vector<int> order(vertex_count());
    for (int v = 0; v < vertex_count(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return level_[a] < level_[b]; });
    return order;
  }

  bool operator==(const RootedTree& other) const {
    return parent_ == other.parent_ && names_ == other.names_;
  }

 private:
  RootedTree(const std::vector<int>& parents, std::vector<std::string> names) {
    const int n = static_cast<int>(parents.size());
    parent_.assign(n + 1, -1);
    for (int i = 1; i <= n; ++i) {
      int p = parents[i - 1];
      if (p < 0 || p > n) throw IndexOutOfRange("parent index " + std::to_string(p) + " out of range");
      parent_[i] = p;
    }
    if (names.empty()) {
      names_.reserve(n + 1);
      names_.emplace_back("r");
      for (int i = 1; i <= n; ++i) names_.push_back("u" + std::to_string(i));
    } else {
      if (static_cast<int>(names.size()) != n + 1)
        throw LengthMismatch("expected " + std::to_string(n + 1) + " vertex names");
      names_ = std::move(names);
    }

    level_.assign(n + 1, -1);
    level_[0] = 0;
    for (int i = 1; i <= n; ++i) {
      // Walk to a vertex with a known level; -2 marks the current chain.
      std::vector<int> chain;
      int v = i;
      while (level_[v] < 0) {
        if (level_[v] == -2) throw CycleDetected("cycle through vertex " + names_[v]);
        level_[v] = -2;
        chain.push_back(v);
        v = parent_[v];
      }
      int base = level_[v];
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) level_[*it] = ++base;
    }
    depth_ = 0;
    for (int v = 0; v <= n; ++v) depth_ = std::max(depth_, level_[v]);

    children_.assign(n + 1, {});
    for (int i = 1; i <= n; ++i) children_[parent_[i]].push_back(i);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      throw IndexOutOfRange("vertex index " + std::to_string(v) + " out of range");
  }

  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> level_;
  std::vector<std::string> names_;
  int depth_ = 0;
};

// Builds a tree from named (parent, child) pairs. The i-th pair becomes edge
// i with head vertex i, so input order fixes the vertex indexing.
inline RootedTree validate_tree(const std::vector<std::pair<std::string, std::string>>& edges,
                                const std::string& root) {
  const int n = static_cast<int>(edges.size());
  std::unordered_map<std::string, int> index;
  index.emplace(root, 0);
  for (int i = 0; i < n; ++i) {
    const std::string& head = edges[i].second;
    if (head == root) throw CycleDetected("root " + root + " appears as the head of an edge");
    if (!index.emplace(head, i + 1).second) throw MultipleParents("vertex " + head + " has two parents");
  }
  if (n > 0) {
    bool seen = false;
    for (const auto& [tail, head] : edges) seen = seen || tail == root || head == root;
    if (!seen) throw UnknownRoot("root " + root + " does not appear in the edge list");
  }
  std::vector<int> parents(n);
  std::vector<std::string> names;
  names.reserve(n + 1);
  names.push_back(root);
  for (int i = 0; i < n; ++i) {
    auto it = index.find(edges[i].first);
    if (it == index.end())
      throw UnreachableVertex("vertex " + edges[i].first + " is not reachable from the root");
    parents[i] = it->second;
    names.push_back(edges[i].second);
  }
  return RootedTree::from_parents(parents, std::move(names));
}

// True when the edge set is closed under taking parent edges, i.e. it forms
// a rooted subtree. Indices are edge indices 1..n; duplicates are ignored.
inline bool is_rooted_subtree(const RootedTree& tree, std::span<const int> edge_indices) {
  std::vector<char> in(tree.vertex_count(), 0);
  for (int e : edge_indices) {
    if (e < 1 || e > tree.size()) throw IndexOutOfRange("edge index " + std::to_string(e) + " out of range");
    in[e] = 1;
  }
  for (int e = 1; e <= tree.size(); ++e) {
    if (!in[e]) continue;
    int p = tree.parent(e);
    if (p != 0 && !in[p]) return false;
  }
  return true;
}

// Path r -> u1 -> ... -> un.
inline RootedTree make_path(int n) {
  std::vector<int> parents(n);
  for (int i = 1; i <= n; ++i) parents[i - 1] = i - 1;
  return RootedTree::from_parents(parents);
}

// Star with all of u1..un attached to the root.
inline RootedTree make_star(int n) {
  return RootedTree::from_parents(std::vector<int>(n, 0));
}

}  // namespace treesec
