#include "rtour/generators.hpp"

#include "rtour/error.hpp"
#include "rtour/rng.hpp"
#include "rtour/tournament_algorithms.hpp"

#include <cmath>

namespace rtour {

Tournament random_tournament(int n, std::uint64_t seed) {
  if (n < 1)
    throw PreconditionError("random_tournament: n must be at least 1");
  Tournament g(n);
  SplitMix64 rng(seed);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (!rng.coin())
        g.orient(j, i);
  return g;
}

Tournament transitive_tournament(int n) {
  if (n < 1)
    throw PreconditionError("transitive_tournament: n must be at least 1");
  return Tournament(n);
}

Tournament reverse(const Tournament &g) {
  Tournament r(g.n());
  for (Vertex i = 0; i < g.n(); ++i)
    for (Vertex j = i + 1; j < g.n(); ++j)
      if (g.has_edge(i, j))
        r.orient(j, i);
      else
        r.orient(i, j);
  return r;
}

ColoredTournament reverse(const ColoredTournament &g) {
  return ColoredTournament(reverse(g.base()),
                           [&](Vertex i, Vertex j) { return g.color(j, i); });
}

ColoredTournament random_coloring(Tournament g, std::uint64_t seed) {
  ColoredTournament c(std::move(g));
  SplitMix64 rng(seed);
  for (Vertex i = 0; i < c.n(); ++i)
    for (Vertex j = 0; j < c.n(); ++j)
      if (i != j && c.has_edge(i, j) && rng.coin())
        c.set_color(i, j, Color::Blue);
  return c;
}

void color_blocks_along(ColoredTournament &g, const std::vector<Vertex> &order, int group) {
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      const Vertex u = order[a], v = order[b];
      const bool same = static_cast<int>(a) / group == static_cast<int>(b) / group;
      const Color c = same ? Color::Blue : Color::Red;
      if (g.has_edge(u, v))
        g.set_color(u, v, c);
      else
        g.set_color(v, u, c);
    }
}

ColoredTournament block_coloring(int n) {
  if (n < 2)
    throw PreconditionError("block_coloring: n must be at least 2");
  const int side = n - 1;
  ColoredTournament g(transitive_tournament(side * side));
  std::vector<Vertex> order(static_cast<std::size_t>(side * side));
  for (int i = 0; i < side * side; ++i)
    order[static_cast<std::size_t>(i)] = i;
  color_blocks_along(g, order, side);
  return g;
}

IntervalPartition interval_partition(const Tournament &g) {
  const int n = g.n();
  if (n < 4)
    throw PreconditionError("interval_coloring: n must be at least 4");
  IntervalPartition part;
  part.block_size = static_cast<int>(std::ceil(std::log2(static_cast<double>(n)) / 2.0));
  part.blocks.emplace_back();

  VertexSet remaining = VertexSet::full(n);
  // Stop as soon as |R| < sqrt(n), i.e. |R|^2 < n.
  while (static_cast<long long>(remaining.size()) * remaining.size() >= n) {
    auto chain = transitive_subtournament(g, remaining);
    chain.resize(static_cast<std::size_t>(part.block_size));
    for (Vertex v : chain)
      remaining.erase(v);
    part.blocks.push_back(std::move(chain));
  }
  part.blocks[0] = remaining.to_vector();
  return part;
}

ColoredTournament interval_coloring(const Tournament &g) {
  const auto part = interval_partition(g);
  const int n = g.n();
  std::vector<int> block_of(static_cast<std::size_t>(n), 0);
  for (std::size_t b = 0; b < part.blocks.size(); ++b)
    for (Vertex v : part.blocks[b])
      block_of[static_cast<std::size_t>(v)] = static_cast<int>(b);

  ColoredTournament c(g);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || !g.has_edge(u, v))
        continue;
      const int bu = block_of[static_cast<std::size_t>(u)];
      const int bv = block_of[static_cast<std::size_t>(v)];
      if (bu != bv)
        c.set_color(u, v, bu < bv ? Color::Blue : Color::Red);
      else if (bu == 0)
        c.set_color(u, v, u < v ? Color::Blue : Color::Red);
    }
  const int group = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(part.block_size))));
  for (std::size_t b = 1; b < part.blocks.size(); ++b)
    color_blocks_along(c, part.blocks[b], group);
  return c;
}

} // namespace rtour
