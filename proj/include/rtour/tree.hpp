#pragma once

#include "rtour/vertex_set.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace rtour {

/// Orientation of the edge between a vertex and its parent.
enum class EdgeDir : unsigned char {
  AwayFromParent, ///< parent -> child
  TowardParent,   ///< child -> parent
};

/// Rooted tree with an orientation on every edge.
///
/// Out-directed trees have every edge AwayFromParent, in-directed trees every
/// edge TowardParent; a single vertex is both.
class OrientedTree {
public:
  OrientedTree() : OrientedTree(std::vector<int>{-1}, std::vector<EdgeDir>{EdgeDir::AwayFromParent}) {}
  /// parent[v] == -1 marks the root; dir[root] is ignored. Throws
  /// PreconditionError unless the parent links form a single rooted tree.
  OrientedTree(std::vector<int> parent, std::vector<EdgeDir> dir);

  int size() const noexcept { return static_cast<int>(parent_.size()); }
  int root() const noexcept { return root_; }
  int parent(int v) const noexcept { return parent_[static_cast<std::size_t>(v)]; }
  EdgeDir dir(int v) const noexcept { return dir_[static_cast<std::size_t>(v)]; }
  const std::vector<int> &children(int v) const noexcept { return children_[static_cast<std::size_t>(v)]; }
  const std::vector<int> &parents() const noexcept { return parent_; }
  const std::vector<EdgeDir> &dirs() const noexcept { return dir_; }

  /// True when the tree has the edge u -> v.
  bool has_edge(int u, int v) const noexcept;
  int underlying_degree(int v) const noexcept;
  int out_degree(int v) const noexcept;
  int in_degree(int v) const noexcept;

  bool is_out_directed() const noexcept;
  bool is_in_directed() const noexcept;
  bool is_directed() const noexcept { return is_out_directed() || is_in_directed(); }

  /// Breadth-first order from the root, children in stored order.
  std::vector<int> bfs_order() const;
  /// Depth-first preorder from the root.
  std::vector<int> dfs_preorder() const;
  /// Directed edges as (tail, head).
  std::vector<std::pair<int, int>> edges() const;
  /// Distance from the root.
  std::vector<int> depths() const;

  /// Same shape with every edge flipped.
  OrientedTree reversed() const;

  friend bool operator==(const OrientedTree &a, const OrientedTree &b) {
    return a.parent_ == b.parent_ && a.dir_ == b.dir_;
  }

private:
  std::vector<int> parent_;
  std::vector<EdgeDir> dir_;
  std::vector<std::vector<int>> children_;
  int root_ = 0;
};

enum class TreeMode { UniformOriented, OutDirected, InDirected };

/// Uniform labelled tree on m vertices from a Prüfer sequence, rooted at 0;
/// the mode decides edge directions (fair coins, all away, all toward).
OrientedTree random_oriented_tree(int m, TreeMode mode, std::uint64_t seed);

/// Random tree with at most `max_leaves` leaves, built from random paths
/// hung on a growing skeleton, rooted at 0. Test-instance generator for the
/// leaf-bounded splits.
OrientedTree random_tree_with_leaf_budget(int m, int max_leaves, TreeMode mode,
                                          std::uint64_t seed);

/// v0 -> v1 -> ... -> v(m-1), rooted at v0.
OrientedTree directed_path(int m);
/// Root 0 with m-1 out-leaves.
OrientedTree out_star(int m);

/// Parent/direction arrays for a tree given as undirected edges, rooted at
/// `root`; orientation taken from `arcs` (each pair is tail -> head).
OrientedTree tree_from_arcs(int m, const std::vector<std::pair<int, int>> &arcs, int root);

VertexSet leaves(const OrientedTree &t);
VertexSet branching_vertices(const OrientedTree &t);
int leaf_count(const OrientedTree &t);

/// Number of descendants of each vertex, counting the vertex itself.
std::vector<int> descendant_counts(const OrientedTree &t);

/// Exact positive rational p/q.
struct Rational {
  long long num = 1;
  long long den = 1;
};

/// A subtree of some larger tree, re-indexed from 0 with the original ids.
struct Subtree {
  OrientedTree tree;
  std::vector<int> to_original; ///< local id -> id in the source tree
};

/// Induced subtree on `vertices` (must be connected in t), rooted at `root`.
Subtree extract_subtree(const OrientedTree &t, const std::vector<int> &vertices, int root);

/// Vertices whose descendant count exceeds m / k. Contains the root, has at
/// most k leaves, and every component of the rest has order at most m / k.
std::vector<int> k_core_vertices(const OrientedTree &t, Rational k);
Subtree k_core(const OrientedTree &t, Rational k);

} // namespace rtour
