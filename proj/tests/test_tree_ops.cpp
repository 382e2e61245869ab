#include "oracles.hpp"

#include "rtour/error.hpp"
#include "rtour/rng.hpp"
#include "rtour/splits.hpp"
#include "rtour/tree.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

using namespace rtour;

namespace {

std::vector<int> iota(int from, int to) {
  std::vector<int> v;
  for (int i = from; i < to; ++i)
    v.push_back(i);
  return v;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

OrientedTree spider(int legs, int len) {
  std::vector<std::pair<int, int>> arcs;
  int next = 1;
  for (int l = 0; l < legs; ++l) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      arcs.emplace_back(prev, next);
      prev = next++;
    }
  }
  return tree_from_arcs(next, arcs, 0);
}

int max_leaves_for(int m, double alpha) { return std::max(1, static_cast<int>(std::floor(std::pow(m, alpha) + 1e-9))); }

} // namespace

TEST(RandomTree, SingleVertexAndDeterminism) {
  const auto one = random_oriented_tree(1, TreeMode::UniformOriented, 3);
  EXPECT_EQ(one.size(), 1);
  EXPECT_EQ(one.root(), 0);
  EXPECT_THROW(random_oriented_tree(0, TreeMode::UniformOriented, 3), PreconditionError);
  for (std::uint64_t s = 0; s < 20; ++s)
    EXPECT_EQ(random_oriented_tree(30, TreeMode::UniformOriented, s),
              random_oriented_tree(30, TreeMode::UniformOriented, s));
}

TEST(RandomTree, ModesFixDirections) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    EXPECT_TRUE(random_oriented_tree(25, TreeMode::OutDirected, s).is_out_directed());
    EXPECT_TRUE(random_oriented_tree(25, TreeMode::InDirected, s).is_in_directed());
    EXPECT_EQ(random_oriented_tree(25, TreeMode::UniformOriented, s).root(), 0);
  }
  int away = 0;
  for (std::uint64_t s = 0; s < 400; ++s)
    away += random_oriented_tree(2, TreeMode::UniformOriented, s).dir(1) == EdgeDir::AwayFromParent;
  EXPECT_GT(away, 150);
  EXPECT_LT(away, 250);
}

TEST(RandomTree, LeafCountDistributionMatchesExactEnumeration) {
  // Exact distribution over the 8^6 Prüfer sequences: a labelled tree's leaf
  // count is 8 minus the number of distinct labels in its sequence.
  constexpr int m = 8;
  std::array<double, m + 1> exact{};
  for (int code = 0; code < 262144; ++code) {
    int seen = 0, c = code;
    for (int i = 0; i < m - 2; ++i) {
      seen |= 1 << (c % m);
      c /= m;
    }
    ++exact[static_cast<std::size_t>(m - __builtin_popcount(static_cast<unsigned>(seen)))];
  }
  constexpr int samples = 10'000;
  std::array<double, m + 1> observed{};
  for (int s = 0; s < samples; ++s)
    ++observed[static_cast<std::size_t>(
        leaf_count(random_oriented_tree(m, TreeMode::UniformOriented, derive_seed(1, "prufer", static_cast<std::uint64_t>(s)))))];
  // Pool the sparse tail (7 leaves only arises from constant sequences).
  double chi = 0;
  int cells = 0;
  double e_tail = 0, o_tail = 0;
  for (int l = 2; l <= m; ++l) {
    const double e = exact[static_cast<std::size_t>(l)] / 262144.0 * samples;
    if (l >= 6) {
      e_tail += e;
      o_tail += observed[static_cast<std::size_t>(l)];
      continue;
    }
    chi += (observed[static_cast<std::size_t>(l)] - e) * (observed[static_cast<std::size_t>(l)] - e) / e;
    ++cells;
  }
  chi += (o_tail - e_tail) * (o_tail - e_tail) / e_tail;
  ++cells;
  // cells = 5, so 4 degrees of freedom; the p = 0.001 critical value is 18.47.
  EXPECT_EQ(cells, 5);
  EXPECT_LT(chi, 18.47);
}

TEST(LeafBudgetTree, RespectsTheBudget) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const int m = 1 + static_cast<int>(s * 7 % 300);
    const int lf = m == 1 ? 1 : 2 + static_cast<int>(s % 4);
    const auto t = random_tree_with_leaf_budget(m, lf, TreeMode::OutDirected, s);
    EXPECT_EQ(t.size(), m);
    EXPECT_TRUE(t.is_out_directed());
    EXPECT_LE(leaf_count(t), lf);
  }
  EXPECT_THROW(random_tree_with_leaf_budget(5, 1, TreeMode::OutDirected, 0), PreconditionError);
}

TEST(Leaves, PathAndStar) {
  for (int n = 2; n < 10; ++n) {
    EXPECT_EQ(leaf_count(directed_path(n)), 2);
    EXPECT_TRUE(branching_vertices(directed_path(n)).empty());
  }
  const auto star = out_star(4);
  EXPECT_EQ(leaves(star), VertexSet(4, {1, 2, 3}));
  EXPECT_EQ(branching_vertices(star), VertexSet(4, {0}));
}

TEST(Leaves, BranchingIsBoundedByLeaves) {
  for (int s = 0; s < 10'000; ++s) {
    const int m = 1 + s % 200;
    const auto t = random_oriented_tree(m, TreeMode::UniformOriented, derive_seed(2, "branch", static_cast<std::uint64_t>(s)));
    EXPECT_LE(branching_vertices(t).size(), std::max(leaf_count(t) - 1, 0));
  }
}

TEST(Descendants, AgreesWithPerVertexSearch) {
  for (int s = 0; s < 300; ++s) {
    const auto t = random_oriented_tree(1 + s % 80, TreeMode::UniformOriented, derive_seed(3, "desc", static_cast<std::uint64_t>(s)));
    EXPECT_EQ(descendant_counts(t), oracle::bfs_descendants(t));
  }
}

TEST(KCore, OutPathOfNine) {
  const auto t = directed_path(9);
  EXPECT_EQ(sorted(k_core_vertices(t, {3, 1})), iota(0, 6));
}

TEST(KCore, StarKeepsOnlyTheRoot) {
  EXPECT_EQ(k_core_vertices(out_star(9), {3, 1}), std::vector<int>{0});
}

TEST(KCore, LargeKKeepsEverything) {
  for (int s = 0; s < 50; ++s) {
    const auto t = random_oriented_tree(1 + s % 30, TreeMode::UniformOriented, static_cast<std::uint64_t>(s));
    EXPECT_EQ(sorted(k_core_vertices(t, {t.size() + 1, 1})), iota(0, t.size()));
  }
}

TEST(KCore, CoreProperties) {
  for (int s = 0; s < 300; ++s) {
    const int m = 2 + s % 150;
    const auto t = random_oriented_tree(m, TreeMode::UniformOriented, derive_seed(4, "core", static_cast<std::uint64_t>(s)));
    const Rational k{2 + s % 5, 1};
    const auto core = k_core(t, k);
    EXPECT_EQ(core.to_original.front(), t.root());
    EXPECT_LE(leaf_count(core.tree), k.num);
    const auto desc = oracle::bfs_descendants(t);
    for (int v : core.to_original)
      EXPECT_GT(static_cast<long long>(desc[static_cast<std::size_t>(v)]) * k.num, static_cast<long long>(m) * k.den);
  }
}

TEST(ExtractSubtree, KeepsOrientation) {
  const auto t = tree_from_arcs(4, {{0, 1}, {2, 1}, {2, 3}}, 0);
  const auto sub = extract_subtree(t, {1, 2, 3}, 2);
  EXPECT_EQ(sub.to_original, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(sub.tree.root(), 1);
  EXPECT_TRUE(sub.tree.has_edge(1, 0));
  EXPECT_TRUE(sub.tree.has_edge(1, 2));
  EXPECT_THROW(extract_subtree(t, {0, 3}, 0), PreconditionError);
}

TEST(TreeSplit, OutPathOfSixteen) {
  const auto t = directed_path(16);
  const auto s = tree_split(t, 2, 0.25);
  const auto v = validate_tree_split(t, s, 2, 0.25);
  EXPECT_TRUE(v.ok) << v.clause;
  EXPECT_LE(s.parts.size(), 8U);
  for (const auto &p : s.parts)
    EXPECT_LE(p.vertices.size(), 24U);
}

TEST(TreeSplit, SingleVertex) {
  const OrientedTree t;
  const auto s = tree_split(t, 2, 0.25);
  ASSERT_EQ(s.parts.size(), 1U);
  EXPECT_TRUE(s.leaf_tree[0]);
  EXPECT_TRUE(validate_tree_split(t, s, 2, 0.25).ok);
}

TEST(TreeSplit, Preconditions) {
  EXPECT_THROW(tree_split(tree_from_arcs(3, {{1, 0}, {1, 2}}, 0), 2, 0.25), PreconditionError);
  EXPECT_THROW(tree_split(out_star(20), 2, 0.25), PreconditionError);
  EXPECT_THROW(tree_split(directed_path(20), 1.5, 0.25), PreconditionError);
  EXPECT_THROW(tree_split(directed_path(20), 2, 0.3), PreconditionError);
}

TEST(TreeSplit, ValidatorCatchesTampering) {
  const auto t = random_tree_with_leaf_budget(300, 2, TreeMode::OutDirected, 5);
  auto s = tree_split(t, 2, 1.0 / 6);
  ASSERT_TRUE(validate_tree_split(t, s, 2, 1.0 / 6).ok);
  ASSERT_GE(s.parts.size(), 2U);
  auto broken = s;
  broken.parts[1].vertices.push_back(broken.parts[0].vertices.front());
  EXPECT_FALSE(validate_tree_split(t, broken, 2, 1.0 / 6).ok);
}

TEST(TreeSplit, Fuzz) {
  for (int s = 0; s < 150; ++s) {
    // Below 64 vertices floor(m^(1/6)) is 1 and no tree on 2+ vertices fits.
    const int m = 64 + static_cast<int>(derive_seed(6, "m", static_cast<std::uint64_t>(s)) % 1937);
    const auto t = random_tree_with_leaf_budget(m, max_leaves_for(m, 1.0 / 6), TreeMode::OutDirected,
                                                derive_seed(6, "tree", static_cast<std::uint64_t>(s)));
    for (double c : {2.0, 3.0}) {
      const auto split = tree_split(t, c, 1.0 / 6);
      const auto v = validate_tree_split(t, split, c, 1.0 / 6);
      ASSERT_TRUE(v.ok) << "m=" << m << " c=" << c << ": " << v.clause;
      std::vector<std::vector<int>> parts;
      for (const auto &p : split.parts)
        parts.push_back(p.vertices);
      EXPECT_TRUE(validate_quotient(t, parts, split.quotient).ok);
    }
  }
}

TEST(PathSplit, OutPathOfSixteen) {
  const auto t = directed_path(16);
  const auto s = path_split(t, 0.25);
  EXPECT_TRUE(validate_path_split(t, s, 0.25).ok);
  ASSERT_EQ(s.parts.size(), 4U);
  EXPECT_EQ(std::count(s.junction.begin(), s.junction.end(), true), 2);
  EXPECT_EQ(s.parts[0], std::vector<int>{0});
}

TEST(PathSplit, RootWithTwoChildrenStandsAlone) {
  // Two out-paths 0 -> 1 -> ... -> 7 and 0 -> 8 -> ... -> 15; the root has
  // underlying degree 2 and only two leaves hang below it.
  std::vector<int> parent(16);
  for (int v = 0; v < 16; ++v)
    parent[static_cast<std::size_t>(v)] = v == 0 ? -1 : v == 8 ? 0 : v - 1;
  const OrientedTree t(parent, std::vector<EdgeDir>(16, EdgeDir::AwayFromParent));
  const auto s = path_split(t, 0.25);
  EXPECT_TRUE(validate_path_split(t, s, 0.25).ok);
  ASSERT_EQ(s.parts[0], std::vector<int>{0});
  EXPECT_TRUE(s.junction[0]);
}

TEST(PathSplit, SingleVertex) {
  const OrientedTree t;
  const auto s = path_split(t, 0.25);
  ASSERT_EQ(s.parts.size(), 1U);
  EXPECT_TRUE(validate_path_split(t, s, 0.25).ok);
}

TEST(PathSplit, Fuzz) {
  for (int s = 0; s < 150; ++s) {
    // Below 64 vertices floor(m^(1/6)) is 1 and no tree on 2+ vertices fits.
    const int m = 64 + static_cast<int>(derive_seed(7, "m", static_cast<std::uint64_t>(s)) % 1937);
    const auto t = random_tree_with_leaf_budget(m, max_leaves_for(m, 1.0 / 6), TreeMode::OutDirected,
                                                derive_seed(7, "tree", static_cast<std::uint64_t>(s)));
    const auto split = path_split(t, 1.0 / 6);
    const auto v = validate_path_split(t, split, 1.0 / 6);
    ASSERT_TRUE(v.ok) << "m=" << m << ": " << v.clause;
    EXPECT_TRUE(validate_quotient(t, split.parts, split.quotient).ok);
  }
}

TEST(CoreSplit, OutPathOfNine) {
  const auto t = directed_path(9);
  const auto s = core_split(t, {3, 1});
  ASSERT_EQ(s.layers.size(), 3U);
  ASSERT_EQ(s.layers[0].size(), 1U);
  EXPECT_EQ(sorted(s.layers[0][0].vertices), iota(0, 6));
  ASSERT_EQ(s.layers[1].size(), 1U);
  EXPECT_EQ(sorted(s.layers[1][0].vertices), iota(6, 8));
  ASSERT_EQ(s.layers[2].size(), 1U);
  EXPECT_EQ(s.layers[2][0].vertices, std::vector<int>{8});
  EXPECT_TRUE(validate_core_split(t, s, {3, 1}).ok);
}

TEST(CoreSplit, SmallTreeIsOneLayer) {
  const auto t = random_oriented_tree(4, TreeMode::UniformOriented, 2);
  const auto s = core_split(t, {5, 1});
  ASSERT_EQ(s.layers.size(), 1U);
  EXPECT_EQ(sorted(s.layers[0][0].vertices), iota(0, 4));
}

TEST(CoreSplit, Fuzz) {
  for (int s = 0; s < 100; ++s) {
    const int m = 1 + static_cast<int>(derive_seed(8, "m", static_cast<std::uint64_t>(s)) % 5000);
    const auto t = random_oriented_tree(m, TreeMode::UniformOriented, derive_seed(8, "tree", static_cast<std::uint64_t>(s)));
    const long long k = std::max(2LL, static_cast<long long>(std::ceil(std::pow(m, 1.0 / 6) - 1e-9)));
    const auto split = core_split(t, {k, 1});
    const auto v = validate_core_split(t, split, {k, 1});
    ASSERT_TRUE(v.ok) << "m=" << m << ": " << v.clause;
    EXPECT_LE(split.layers.size(), 6U) << "m=" << m << " k=" << k;
  }
}

TEST(Dpl, OutPath) {
  const auto t = directed_path(6);
  const auto d = dpl(t);
  ASSERT_EQ(d.paths.size(), 1U);
  EXPECT_EQ(d.paths[0], iota(1, 6));
  ASSERT_TRUE(d.remainder);
  EXPECT_EQ(d.remainder->to_original, std::vector<int>{0});
  EXPECT_TRUE(validate_dpl(t, d).ok);
}

TEST(Dpl, Spider) {
  const auto t = spider(3, 2);
  const auto d = dpl(t);
  ASSERT_EQ(d.paths.size(), 3U);
  for (const auto &p : d.paths)
    EXPECT_EQ(p.size(), 2U);
  ASSERT_TRUE(d.remainder);
  EXPECT_EQ(d.remainder->to_original, std::vector<int>{0});
  EXPECT_TRUE(validate_dpl(t, d).ok);
}

TEST(Dpl, Singleton) {
  const OrientedTree t;
  const auto d = dpl(t);
  ASSERT_EQ(d.paths.size(), 1U);
  EXPECT_EQ(d.paths[0], std::vector<int>{0});
  EXPECT_FALSE(d.remainder);
  EXPECT_TRUE(validate_dpl(t, d).ok);
}

TEST(Dpl, Fuzz) {
  for (int s = 0; s < 300; ++s) {
    const auto t = random_oriented_tree(1 + s % 400, TreeMode::OutDirected, derive_seed(9, "dpl", static_cast<std::uint64_t>(s)));
    const auto v = validate_dpl(t, dpl(t));
    ASSERT_TRUE(v.ok) << v.clause;
  }
}

TEST(InOutSplit, InDirectedIsOneLayer) {
  const auto t = random_oriented_tree(20, TreeMode::InDirected, 4);
  const auto s = in_out_split(t);
  ASSERT_EQ(s.layers.size(), 1U);
  EXPECT_TRUE(validate_in_out_split(t, s).ok);
}

TEST(InOutSplit, AlternatingPath) {
  const auto t = tree_from_arcs(4, {{0, 1}, {2, 1}, {2, 3}}, 0);
  const auto s = in_out_split(t);
  ASSERT_EQ(s.layers.size(), 4U);
  for (int i = 0; i < 4; ++i) {
    ASSERT_EQ(s.layers[static_cast<std::size_t>(i)].size(), 1U);
    EXPECT_EQ(s.layers[static_cast<std::size_t>(i)][0].vertices, std::vector<int>{i});
  }
  EXPECT_TRUE(validate_in_out_split(t, s).ok);
}

TEST(InOutSplit, Fuzz) {
  for (int s = 0; s < 300; ++s) {
    const auto t = random_oriented_tree(1 + s % 500, TreeMode::UniformOriented, derive_seed(10, "io", static_cast<std::uint64_t>(s)));
    const auto v = validate_in_out_split(t, in_out_split(t));
    ASSERT_TRUE(v.ok) << v.clause;
  }
}

TEST(Validators, PartitionAndQuotient) {
  EXPECT_TRUE(validate_partition(3, {{0, 2}, {1}}).ok);
  EXPECT_FALSE(validate_partition(3, {{0, 2}}).ok);
  EXPECT_FALSE(validate_partition(3, {{0, 2}, {1, 2}}).ok);
  const auto t = directed_path(4);
  EXPECT_TRUE(validate_quotient(t, {{0, 1}, {2, 3}}, directed_path(2)).ok);
  EXPECT_FALSE(validate_quotient(t, {{0, 1}, {2, 3}}, directed_path(2).reversed()).ok);
}
