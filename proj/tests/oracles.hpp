#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the data types, so agreement is meaningful.

#include "rtour/tournament.hpp"
#include "rtour/tree.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

namespace oracle {

using rtour::Color;
using rtour::ColoredTournament;
using rtour::EdgeDir;
using rtour::OrientedTree;
using rtour::Tournament;
using rtour::Vertex;

inline bool edge_ok(const ColoredTournament &g, std::optional<Color> c, Vertex a, Vertex b) {
  if (!g.has_edge(a, b))
    return false;
  return !c || g.color(a, b) == *c;
}

/// Arcs of the tree as (tail, head), read straight from parent/dir.
inline std::vector<std::pair<int, int>> arcs(const OrientedTree &t) {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < t.size(); ++v) {
    const int p = t.parent(v);
    if (p < 0)
      continue;
    if (t.dir(v) == EdgeDir::AwayFromParent)
      out.emplace_back(p, v);
    else
      out.emplace_back(v, p);
  }
  return out;
}

/// Tries every injective map [m] -> [n] in lexicographic order, dropping a
/// partial map as soon as an arc between assigned vertices is missing.
inline std::optional<std::vector<Vertex>> brute_embed(const ColoredTournament &g, const OrientedTree &t,
                                                      std::optional<Color> c) {
  const int n = g.n(), m = t.size();
  if (m > n)
    return std::nullopt;
  const auto as = arcs(t);
  std::vector<Vertex> map(static_cast<std::size_t>(m), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto consistent = [&](int i) {
    for (auto [a, b] : as)
      if (std::max(a, b) == i &&
          !edge_ok(g, c, map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
        return false;
    return true;
  };
  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == m)
      return true;
    for (Vertex v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)])
        continue;
      map[static_cast<std::size_t>(i)] = v;
      if (!consistent(i))
        continue;
      used[static_cast<std::size_t>(v)] = true;
      if (go(i + 1))
        return true;
      used[static_cast<std::size_t>(v)] = false;
    }
    return false;
  };
  if (go(0))
    return map;
  return std::nullopt;
}

/// Descendants of each vertex (itself included) by a separate BFS per vertex.
inline std::vector<int> bfs_descendants(const OrientedTree &t) {
  std::vector<int> out(static_cast<std::size_t>(t.size()));
  for (int v = 0; v < t.size(); ++v) {
    int count = 0;
    std::queue<int> q;
    q.push(v);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      ++count;
      for (int y = 0; y < t.size(); ++y)
        if (t.parent(y) == x)
          q.push(y);
    }
    out[static_cast<std::size_t>(v)] = count;
  }
  return out;
}

/// Longest directed path (vertex count) by exhaustive DFS; n <= ~10.
inline int brute_longest_path(const ColoredTournament &g, Color c) {
  const int n = g.n();
  if (n == 0)
    return 0;
  int best = 1;
  std::vector<bool> on(static_cast<std::size_t>(n), false);
  std::function<void(Vertex, int)> dfs = [&](Vertex v, int len) {
    best = std::max(best, len);
    for (Vertex w = 0; w < n; ++w)
      if (!on[static_cast<std::size_t>(w)] && g.has_edge(v, w) && g.color(v, w) == c) {
        on[static_cast<std::size_t>(w)] = true;
        dfs(w, len + 1);
        on[static_cast<std::size_t>(w)] = false;
      }
  };
  for (Vertex s = 0; s < n; ++s) {
    on[static_cast<std::size_t>(s)] = true;
    dfs(s, 1);
    on[static_cast<std::size_t>(s)] = false;
  }
  return best;
}

/// Smallest e(A, B) over all disjoint A, B of size exactly k, by trying every
/// pair of subsets; n <= ~12.
inline long long brute_min_cross(const Tournament &g, int k) {
  const int n = g.n();
  long long best = -1;
  for (unsigned a = 0; a < (1U << n); ++a) {
    if (__builtin_popcount(a) != k)
      continue;
    for (unsigned b = 0; b < (1U << n); ++b) {
      if ((a & b) || __builtin_popcount(b) != k)
        continue;
      long long e = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if ((a >> i & 1U) && (b >> j & 1U) && g.has_edge(i, j))
            ++e;
      if (best < 0 || e < best)
        best = e;
    }
  }
  return best;
}

/// Every colouring of every tournament on n vertices (n <= 4) containing a
/// monochromatic copy of t? Pure enumeration, no pruning.
inline bool brute_every_coloring_has(const Tournament &g, const OrientedTree &t) {
  const int n = g.n();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g.has_edge(i, j))
        edges.emplace_back(i, j);
  for (unsigned long long mask = 0; mask < (1ULL << edges.size()); ++mask) {
    ColoredTournament c(g);
    for (std::size_t e = 0; e < edges.size(); ++e)
      c.set_color(edges[e].first, edges[e].second, (mask >> e & 1ULL) ? Color::Blue : Color::Red);
    if (!brute_embed(c, t, Color::Red) && !brute_embed(c, t, Color::Blue))
      return false;
  }
  return true;
}

} // namespace oracle
