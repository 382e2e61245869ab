#include "oracles.hpp"

#include "rtour/embed.hpp"
#include "rtour/generators.hpp"
#include "rtour/oracle.hpp"
#include "rtour/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace rtour;

TEST(Arrow, SingleEdge) {
  const auto r = arrow_holds(transitive_tournament(2), directed_path(2), directed_path(2));
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.witness);
}

TEST(Arrow, TransitiveFourFailsForP3) {
  const auto g = transitive_tournament(4);
  const auto r = arrow_holds(g, directed_path(3), directed_path(3));
  ASSERT_FALSE(r.holds);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->base(), g);
  EXPECT_FALSE(exact_embed(*r.witness, directed_path(3), Color::Blue));
  EXPECT_FALSE(exact_embed(*r.witness, directed_path(3), Color::Red));
}

TEST(Arrow, BlockColouringIsAWitnessOnItsOwnHost) {
  // block_coloring(3) lives on transitive(4); its colouring avoids both.
  const auto b = block_coloring(3);
  EXPECT_EQ(b.base(), transitive_tournament(4));
  EXPECT_FALSE(exact_embed(b, directed_path(3), Color::Blue));
  EXPECT_FALSE(exact_embed(b, directed_path(3), Color::Red));
}

TEST(Arrow, EveryFiveVertexTournamentArrowsP3) {
  for (unsigned long long mask = 0; mask < 1024; ++mask)
    ASSERT_TRUE(arrow_holds(tournament_from_mask(5, mask), directed_path(3), directed_path(3)).holds) << mask;
}

TEST(Arrow, P2HoldsWheneverThereIsAnEdge) {
  for (int n = 2; n <= 5; ++n)
    for (unsigned long long mask = 0; mask < (1ULL << (n * (n - 1) / 2)); ++mask)
      EXPECT_TRUE(arrow_holds(tournament_from_mask(n, mask), directed_path(2), directed_path(2)).holds);
}

TEST(Arrow, AgreesWithPlainEnumeration) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int n = 3 + static_cast<int>(s % 2);
    const auto g = random_tournament(n, s);
    const auto t = random_oriented_tree(3, TreeMode::UniformOriented, s);
    const auto r = arrow_holds(g, t, t);
    EXPECT_EQ(r.holds, oracle::brute_every_coloring_has(g, t)) << "seed " << s;
    if (r.witness) {
      EXPECT_FALSE(exact_embed(*r.witness, t, Color::Blue));
      EXPECT_FALSE(exact_embed(*r.witness, t, Color::Red));
    }
  }
}

TEST(Arrow, AsymmetricTargets) {
  // Blue P2 or red P3: colour everything red in transitive(3) gives red P3;
  // the only escape is a colouring with no blue edge, so it always holds.
  EXPECT_TRUE(arrow_holds(transitive_tournament(3), directed_path(2), directed_path(3)).holds);
  EXPECT_FALSE(arrow_holds(transitive_tournament(2), directed_path(2), directed_path(3)).holds);
}

TEST(Arrow, BudgetIsLoud) {
  EXPECT_THROW(arrow_holds(random_tournament(7, 1), directed_path(4), directed_path(4), 50), BudgetExceeded);
}

TEST(Masks, RoundTripAndCanonicalForm) {
  for (unsigned long long mask = 0; mask < 64; ++mask)
    EXPECT_EQ(orientation_mask(tournament_from_mask(4, mask)), mask);
  EXPECT_EQ(tournament_from_mask(4, 63), transitive_tournament(4));
  // Every transitive labelling has the same canonical mask.
  const auto t = orientation_mask(transitive_tournament(4));
  EXPECT_EQ(canonical_mask(4, t), canonical_mask(4, orientation_mask(reverse(transitive_tournament(4)))));
  // Four-vertex tournaments fall into four isomorphism classes.
  std::set<unsigned long long> classes;
  for (unsigned long long mask = 0; mask < 64; ++mask)
    classes.insert(canonical_mask(4, mask));
  EXPECT_EQ(classes.size(), 4U);
}

TEST(Ramsey, SmallPaths) {
  const auto p2 = oriented_ramsey_number(directed_path(2), 6);
  ASSERT_TRUE(p2.value);
  EXPECT_EQ(*p2.value, 2);
  const auto p3 = oriented_ramsey_number(directed_path(3), 6);
  ASSERT_TRUE(p3.value);
  EXPECT_EQ(*p3.value, 5);
  ASSERT_TRUE(p3.witness);
  EXPECT_EQ(p3.witness->n(), 4);
  EXPECT_FALSE(exact_embed(*p3.witness, directed_path(3), Color::Red));
  EXPECT_FALSE(exact_embed(*p3.witness, directed_path(3), Color::Blue));
}

TEST(Ramsey, DedupAgrees) {
  const auto raw = oriented_ramsey_number(directed_path(3), 6, 2'000'000'000, false);
  const auto dedup = oriented_ramsey_number(directed_path(3), 6, 2'000'000'000, true);
  EXPECT_EQ(raw.value, dedup.value);
  EXPECT_LT(dedup.tournaments_checked, raw.tournaments_checked);
}

TEST(Ramsey, MaxNGivesALowerBound) {
  const auto r = oriented_ramsey_number(directed_path(3), 4);
  EXPECT_FALSE(r.value);
  EXPECT_EQ(r.lower_bound, 5);
  EXPECT_FALSE(r.budget_exceeded);
}

TEST(Ramsey, OutStarOnThree) {
  // A monochromatic out-star on 3 needs a vertex with two out-edges of one
  // colour, i.e. out-degree at least 3 somewhere in the tournament.
  const auto r = oriented_ramsey_number(out_star(3), 8, 2'000'000'000, true);
  ASSERT_TRUE(r.value);
  EXPECT_EQ(*r.value, 6);
  // Five vertices: the regular tournament has every out-degree 2, so a
  // colouring with one red and one blue out-edge per vertex escapes.
  Tournament reg(5);
  for (int i = 0; i < 5; ++i)
    for (int d = 1; d <= 2; ++d)
      reg.orient(i, (i + d) % 5);
  EXPECT_FALSE(arrow_holds(reg, out_star(3), out_star(3)).holds);
}

TEST(Ramsey, MonotoneForP3) {
  for (unsigned long long mask = 0; mask < (1ULL << 15); mask += 37)
    EXPECT_TRUE(arrow_holds(tournament_from_mask(6, mask), directed_path(3), directed_path(3)).holds);
}

TEST(LongestPaths, BlockColouring) {
  for (int n = 2; n <= 8; ++n) {
    const auto r = longest_mono_paths(block_coloring(n));
    EXPECT_EQ(r.red.order, n - 1);
    EXPECT_EQ(r.blue.order, n - 1);
    EXPECT_TRUE(r.red.exact && r.blue.exact);
  }
}

TEST(LongestPaths, AllRedTransitive) {
  const auto r = longest_mono_paths(ColoredTournament(transitive_tournament(6)));
  EXPECT_EQ(r.red.order, 6);
  EXPECT_EQ(r.blue.order, 1);
}

TEST(LongestPaths, AgreeWithBruteForce) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const int n = 1 + static_cast<int>(s % 10);
    const auto g = random_coloring(random_tournament(n, s), derive_seed(s, "lp", 0));
    const auto r = longest_mono_paths(g);
    EXPECT_TRUE(r.red.exact);
    EXPECT_EQ(r.red.order, oracle::brute_longest_path(g, Color::Red));
    EXPECT_EQ(r.blue.order, oracle::brute_longest_path(g, Color::Blue));
  }
}

TEST(LongestPaths, IntervalColouringIsExactAndBounded) {
  const auto g = interval_coloring(random_tournament(256, 12));
  const auto r = longest_mono_paths(g);
  EXPECT_TRUE(r.red.exact);
  EXPECT_TRUE(r.blue.exact);
  const double bound = 3.0 * 256 / std::sqrt(8.0);
  EXPECT_LE(r.red.order, bound);
  EXPECT_LE(r.blue.order, bound);
  EXPECT_GE(r.red.order, 1);
}

TEST(Topological, CyclesAreDetected) {
  Tournament c(3);
  c.orient(2, 0);
  EXPECT_FALSE(topological_order(c.view()));
  const auto order = topological_order(transitive_tournament(5).view());
  ASSERT_TRUE(order);
  EXPECT_EQ(*order, (std::vector<Vertex>{0, 1, 2, 3, 4}));
}
