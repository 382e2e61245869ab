#include "rtour/tree.hpp"

#include "rtour/error.hpp"
#include "rtour/rng.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace rtour {

OrientedTree::OrientedTree(std::vector<int> parent, std::vector<EdgeDir> dir)
    : parent_(std::move(parent)), dir_(std::move(dir)) {
  const int m = size();
  if (m < 1)
    throw PreconditionError("tree must have at least one vertex");
  if (dir_.size() != parent_.size())
    throw PreconditionError("tree: parent and direction arrays differ in length");
  children_.assign(static_cast<std::size_t>(m), {});
  root_ = -1;
  for (int v = 0; v < m; ++v) {
    const int p = parent_[static_cast<std::size_t>(v)];
    if (p == -1) {
      if (root_ != -1)
        throw PreconditionError("tree has more than one root");
      root_ = v;
      dir_[static_cast<std::size_t>(v)] = EdgeDir::AwayFromParent;
    } else if (p < 0 || p >= m || p == v) {
      throw PreconditionError("tree: invalid parent of vertex " + std::to_string(v));
    } else {
      children_[static_cast<std::size_t>(p)].push_back(v);
    }
  }
  if (root_ == -1)
    throw PreconditionError("tree has no root");
  if (static_cast<int>(bfs_order().size()) != m)
    throw PreconditionError("tree: parent links contain a cycle");
}

bool OrientedTree::has_edge(int u, int v) const noexcept {
  if (u == v || u < 0 || v < 0 || u >= size() || v >= size())
    return false;
  if (parent(v) == u)
    return dir(v) == EdgeDir::AwayFromParent;
  if (parent(u) == v)
    return dir(u) == EdgeDir::TowardParent;
  return false;
}

int OrientedTree::underlying_degree(int v) const noexcept {
  return static_cast<int>(children(v).size()) + (parent(v) == -1 ? 0 : 1);
}

int OrientedTree::out_degree(int v) const noexcept {
  int d = parent(v) != -1 && dir(v) == EdgeDir::TowardParent ? 1 : 0;
  for (int c : children(v))
    d += dir(c) == EdgeDir::AwayFromParent;
  return d;
}

int OrientedTree::in_degree(int v) const noexcept {
  return underlying_degree(v) - out_degree(v);
}

bool OrientedTree::is_out_directed() const noexcept {
  for (int v = 0; v < size(); ++v)
    if (v != root_ && dir(v) != EdgeDir::AwayFromParent)
      return false;
  return true;
}

bool OrientedTree::is_in_directed() const noexcept {
  for (int v = 0; v < size(); ++v)
    if (v != root_ && dir(v) != EdgeDir::TowardParent)
      return false;
  return true;
}

std::vector<int> OrientedTree::bfs_order() const {
  std::vector<int> order{root_};
  order.reserve(parent_.size());
  for (std::size_t i = 0; i < order.size() && order.size() <= parent_.size(); ++i)
    for (int c : children(order[i]))
      order.push_back(c);
  return order;
}

std::vector<int> OrientedTree::dfs_preorder() const {
  std::vector<int> order, stack{root_};
  order.reserve(parent_.size());
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto &ch = children(v);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it)
      stack.push_back(*it);
  }
  return order;
}

std::vector<std::pair<int, int>> OrientedTree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < size(); ++v) {
    const int p = parent(v);
    if (p == -1)
      continue;
    if (dir(v) == EdgeDir::AwayFromParent)
      out.emplace_back(p, v);
    else
      out.emplace_back(v, p);
  }
  return out;
}

std::vector<int> OrientedTree::depths() const {
  std::vector<int> d(parent_.size(), 0);
  for (int v : bfs_order())
    if (parent(v) != -1)
      d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(parent(v))] + 1;
  return d;
}

OrientedTree OrientedTree::reversed() const {
  std::vector<EdgeDir> flipped = dir_;
  for (int v = 0; v < size(); ++v)
    if (v != root_)
      flipped[static_cast<std::size_t>(v)] = dir(v) == EdgeDir::AwayFromParent
                                                 ? EdgeDir::TowardParent
                                                 : EdgeDir::AwayFromParent;
  return OrientedTree(parent_, std::move(flipped));
}

namespace {

// Roots an undirected adjacency structure at `root` by BFS.
std::vector<int> parents_from_adjacency(const std::vector<std::vector<int>> &adj, int root) {
  std::vector<int> parent(adj.size(), -2);
  parent[static_cast<std::size_t>(root)] = -1;
  std::vector<int> queue{root};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int w : adj[static_cast<std::size_t>(queue[i])])
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = queue[i];
        queue.push_back(w);
      }
  if (queue.size() != adj.size())
    throw PreconditionError("edge list does not form a connected tree");
  return parent;
}

std::vector<EdgeDir> directions_for(const std::vector<int> &parent, TreeMode mode, SplitMix64 &rng) {
  std::vector<EdgeDir> dir(parent.size(), EdgeDir::AwayFromParent);
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (parent[v] == -1)
      continue;
    switch (mode) {
    case TreeMode::OutDirected:
      break;
    case TreeMode::InDirected:
      dir[v] = EdgeDir::TowardParent;
      break;
    case TreeMode::UniformOriented:
      dir[v] = rng.coin() ? EdgeDir::AwayFromParent : EdgeDir::TowardParent;
      break;
    }
  }
  return dir;
}

} // namespace

OrientedTree random_oriented_tree(int m, TreeMode mode, std::uint64_t seed) {
  if (m < 1)
    throw PreconditionError("random_oriented_tree: m must be at least 1");
  SplitMix64 rng(seed);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
  auto link = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };
  if (m == 2) {
    link(0, 1);
  } else if (m > 2) {
    std::vector<int> code(static_cast<std::size_t>(m - 2));
    for (int &x : code)
      x = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    std::vector<int> degree(static_cast<std::size_t>(m), 1);
    for (int x : code)
      ++degree[static_cast<std::size_t>(x)];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves_heap;
    for (int v = 0; v < m; ++v)
      if (degree[static_cast<std::size_t>(v)] == 1)
        leaves_heap.push(v);
    for (int x : code) {
      const int leaf = leaves_heap.top();
      leaves_heap.pop();
      link(leaf, x);
      if (--degree[static_cast<std::size_t>(x)] == 1)
        leaves_heap.push(x);
    }
    const int u = leaves_heap.top();
    leaves_heap.pop();
    link(u, leaves_heap.top());
  }
  auto parent = parents_from_adjacency(adj, 0);
  auto dir = directions_for(parent, mode, rng);
  return OrientedTree(std::move(parent), std::move(dir));
}

OrientedTree random_tree_with_leaf_budget(int m, int max_leaves, TreeMode mode,
                                          std::uint64_t seed) {
  if (m < 1)
    throw PreconditionError("random_tree_with_leaf_budget: m must be at least 1");
  if (m > 1 && max_leaves < 2)
    throw PreconditionError("random_tree_with_leaf_budget: a tree on 2+ vertices has 2+ leaves");
  SplitMix64 rng(seed);
  // Shape vertices in creation order; relabelled at the end.
  std::vector<int> shape_parent{-1};
  std::vector<int> degree{0};
  if (m > 1) {
    const int legs = static_cast<int>(
        rng.between(1, std::min<std::int64_t>(max_leaves - 1, m - 1)));
    // Random composition of m - 1 into `legs` positive parts.
    auto cuts = sample_without_replacement(rng, m - 2, legs - 1);
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> lengths;
    int prev = 0;
    for (int c : cuts) {
      lengths.push_back(c + 1 - prev);
      prev = c + 1;
    }
    lengths.push_back(m - 1 - prev);
    for (std::size_t leg = 0; leg < lengths.size(); ++leg) {
      int attach = 0;
      if (leg > 0) {
        // Attaching at a non-leaf adds one leaf; the root with degree 1 is a
        // leaf too, but hanging a path there keeps the count unchanged.
        std::vector<int> spots;
        for (int v = 0; v < static_cast<int>(degree.size()); ++v)
          if (degree[static_cast<std::size_t>(v)] >= 2 || v == 0)
            spots.push_back(v);
        attach = spots[rng.below(spots.size())];
      }
      for (int s = 0; s < lengths[leg]; ++s) {
        const int v = static_cast<int>(shape_parent.size());
        shape_parent.push_back(attach);
        degree.push_back(1);
        ++degree[static_cast<std::size_t>(attach)];
        attach = v;
      }
    }
  }
  // Relabel every non-root vertex by a random permutation of 1..m-1.
  std::vector<int> label(static_cast<std::size_t>(m), 0);
  if (m > 1) {
    auto perm = sample_without_replacement(rng, m - 1, m - 1);
    for (int v = 1; v < m; ++v)
      label[static_cast<std::size_t>(v)] = perm[static_cast<std::size_t>(v - 1)] + 1;
  }
  std::vector<int> parent(static_cast<std::size_t>(m), -1);
  for (int v = 1; v < m; ++v)
    parent[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] =
        label[static_cast<std::size_t>(shape_parent[static_cast<std::size_t>(v)])];
  auto dir = directions_for(parent, mode, rng);
  return OrientedTree(std::move(parent), std::move(dir));
}

OrientedTree directed_path(int m) {
  if (m < 1)
    throw PreconditionError("directed_path: m must be at least 1");
  std::vector<int> parent(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v)
    parent[static_cast<std::size_t>(v)] = v - 1;
  return OrientedTree(std::move(parent), std::vector<EdgeDir>(static_cast<std::size_t>(m), EdgeDir::AwayFromParent));
}

OrientedTree out_star(int m) {
  if (m < 1)
    throw PreconditionError("out_star: m must be at least 1");
  std::vector<int> parent(static_cast<std::size_t>(m), 0);
  parent[0] = -1;
  return OrientedTree(std::move(parent), std::vector<EdgeDir>(static_cast<std::size_t>(m), EdgeDir::AwayFromParent));
}

OrientedTree tree_from_arcs(int m, const std::vector<std::pair<int, int>> &arcs, int root) {
  if (m < 1 || root < 0 || root >= m)
    throw PreconditionError("tree_from_arcs: bad vertex count or root");
  if (static_cast<int>(arcs.size()) != m - 1)
    throw PreconditionError("tree_from_arcs: a tree on m vertices has m-1 edges");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
  for (auto [a, b] : arcs) {
    if (a < 0 || b < 0 || a >= m || b >= m || a == b)
      throw PreconditionError("tree_from_arcs: edge endpoint out of range");
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto &list : adj)
    std::sort(list.begin(), list.end());
  auto parent = parents_from_adjacency(adj, root);
  std::vector<EdgeDir> dir(static_cast<std::size_t>(m), EdgeDir::AwayFromParent);
  for (auto [a, b] : arcs)
    if (parent[static_cast<std::size_t>(a)] == b)
      dir[static_cast<std::size_t>(a)] = EdgeDir::TowardParent;
  return OrientedTree(std::move(parent), std::move(dir));
}

VertexSet leaves(const OrientedTree &t) {
  VertexSet s(t.size());
  if (t.size() == 1)
    return s;
  for (int v = 0; v < t.size(); ++v)
    if (t.underlying_degree(v) == 1)
      s.insert(v);
  return s;
}

VertexSet branching_vertices(const OrientedTree &t) {
  VertexSet s(t.size());
  for (int v = 0; v < t.size(); ++v)
    if (t.underlying_degree(v) >= 3)
      s.insert(v);
  return s;
}

int leaf_count(const OrientedTree &t) {
  // A single vertex counts as one leaf so that lf(T) >= 1 always.
  return t.size() == 1 ? 1 : leaves(t).size();
}

std::vector<int> descendant_counts(const OrientedTree &t) {
  std::vector<int> count(static_cast<std::size_t>(t.size()), 1);
  const auto order = t.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (t.parent(*it) != -1)
      count[static_cast<std::size_t>(t.parent(*it))] += count[static_cast<std::size_t>(*it)];
  return count;
}

Subtree extract_subtree(const OrientedTree &t, const std::vector<int> &vertices, int root) {
  std::vector<int> local(static_cast<std::size_t>(t.size()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  if (root < 0 || root >= t.size() || local[static_cast<std::size_t>(root)] == -1)
    throw PreconditionError("extract_subtree: root not in vertex list");
  std::vector<std::pair<int, int>> arcs;
  for (auto [a, b] : t.edges()) {
    const int la = local[static_cast<std::size_t>(a)], lb = local[static_cast<std::size_t>(b)];
    if (la != -1 && lb != -1)
      arcs.emplace_back(la, lb);
  }
  return Subtree{tree_from_arcs(static_cast<int>(vertices.size()), arcs,
                                local[static_cast<std::size_t>(root)]),
                 vertices};
}

std::vector<int> k_core_vertices(const OrientedTree &t, Rational k) {
  if (k.num <= k.den || k.den <= 0)
    throw PreconditionError("k_core: k must be a rational greater than 1");
  const auto desc = descendant_counts(t);
  const long long m = t.size();
  std::vector<int> core;
  // desc > m / k  <=>  desc * num > m * den
  for (int v : t.bfs_order())
    if (static_cast<long long>(desc[static_cast<std::size_t>(v)]) * k.num > m * k.den)
      core.push_back(v);
  return core;
}

Subtree k_core(const OrientedTree &t, Rational k) {
  return extract_subtree(t, k_core_vertices(t, k), t.root());
}

} // namespace rtour
