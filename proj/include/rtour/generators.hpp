#pragma once

#include "rtour/tournament.hpp"

#include <cstdint>
#include <vector>

namespace rtour {

/// Each unordered pair {i < j} is oriented by one fair coin from
/// SplitMix64(seed), pairs visited in row-major order.
Tournament random_tournament(int n, std::uint64_t seed);

/// i -> j exactly when i < j.
Tournament transitive_tournament(int n);

Tournament reverse(const Tournament &g);
/// Flips every edge, keeping its colour.
ColoredTournament reverse(const ColoredTournament &g);

/// Uniform independent colouring, one coin per edge.
ColoredTournament random_coloring(Tournament g, std::uint64_t seed);

/// Transitive tournament on (n-1)^2 vertices cut into n-1 consecutive blocks
/// of size n-1; edges inside a block blue, all others red. Neither colour has
/// a directed path on n vertices.
ColoredTournament block_coloring(int n);

/// Block scheme applied along a given transitive order: consecutive groups of
/// `group` vertices, intra-group edges blue, the rest red.
void color_blocks_along(ColoredTournament &g, const std::vector<Vertex> &order, int group);

/// Partition used by interval_coloring. blocks[0] is the remainder A0 (may be
/// empty); blocks[i], i >= 1, is listed in its transitive order.
struct IntervalPartition {
  int block_size = 0;
  std::vector<std::vector<Vertex>> blocks;
};

/// Greedily extracts disjoint transitive subtournaments of order
/// ceil(log2(n) / 2) until fewer than sqrt(n) vertices remain.
IntervalPartition interval_partition(const Tournament &g);

/// Colouring with no long monochromatic path: each extracted block gets the
/// block scheme with groups of ceil(sqrt(block size)); an edge from block i to
/// block j is blue when i < j and red when i > j. The remainder A0 counts as
/// block 0 and is coloured forward-blue / backward-red by vertex id, which
/// keeps both colour classes acyclic.
ColoredTournament interval_coloring(const Tournament &g);

} // namespace rtour
