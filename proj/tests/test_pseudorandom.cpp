#include "oracles.hpp"

#include "rtour/error.hpp"
#include "rtour/generators.hpp"
#include "rtour/pseudorandom.hpp"
#include "rtour/rng.hpp"

#include <gtest/gtest.h>

using namespace rtour;

namespace {

PseudorandomnessParams params(double eps, int k) {
  PseudorandomnessParams p;
  p.epsilon = eps;
  p.k = k;
  return p;
}

} // namespace

TEST(Params, Validation) {
  EXPECT_THROW(params(0.0, 2).validate(), PreconditionError);
  EXPECT_THROW(params(0.5, 2).validate(), PreconditionError);
  EXPECT_THROW(params(0.25, 0).validate(), PreconditionError);
  PseudorandomnessParams p;
  p.sigma = 4;
  EXPECT_EQ(p.resolve_k(1024), 40);
  EXPECT_EQ(p.resolve_k(512), 36);
}

TEST(CheckExhaustive, TransitiveIsRefutedByTheTopAndBottomHalves) {
  const auto r = check_exhaustive(transitive_tournament(8), params(0.1, 4));
  ASSERT_EQ(r.verdict, PseudoVerdict::Refuted);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->edges, 0);
  EXPECT_EQ(r.witness->a, VertexSet(8, {4, 5, 6, 7}));
  EXPECT_EQ(r.witness->b, VertexSet(8, {0, 1, 2, 3}));
  EXPECT_TRUE(witness_is_valid(transitive_tournament(8), params(0.1, 4), *r.witness));
}

TEST(CheckExhaustive, VacuousWhenKExceedsHalf) {
  const auto r = check_exhaustive(random_tournament(9, 1), params(0.25, 5));
  EXPECT_EQ(r.verdict, PseudoVerdict::CertifiedExhaustive);
  EXPECT_FALSE(r.witness);
}

TEST(CheckExhaustive, ThreeCycleSingletons) {
  Tournament g(3);
  g.orient(2, 0);
  const auto r = check_exhaustive(g, params(0.4, 1));
  ASSERT_EQ(r.verdict, PseudoVerdict::Refuted);
  ASSERT_TRUE(r.witness);
  const Vertex u = r.witness->a.first(), v = r.witness->b.first();
  EXPECT_TRUE(g.has_edge(v, u));
  EXPECT_EQ(r.witness->edges, 0);
}

TEST(CheckExhaustive, BudgetIsLoud) {
  EXPECT_THROW(check_exhaustive(random_tournament(40, 1), params(0.25, 10), 1000), BudgetExceeded);
}

TEST(CheckExhaustive, MinimumAgreesWithBruteForce) {
  for (int s = 0; s < 40; ++s) {
    const int n = 8 + s % 3;
    const int k = 2 + s % 2;
    const auto g = random_tournament(n, derive_seed(5, "exh", static_cast<std::uint64_t>(s)));
    const auto r = check_exhaustive(g, params(0.3, k));
    ASSERT_TRUE(r.min_density);
    EXPECT_EQ(r.min_density->first, oracle::brute_min_cross(g, k));
    EXPECT_EQ(r.min_density->second, static_cast<long long>(k) * k);
    const bool refuted = oracle::brute_min_cross(g, k) < 0.3 * k * k;
    EXPECT_EQ(r.verdict == PseudoVerdict::Refuted, refuted);
    if (r.witness)
      EXPECT_TRUE(witness_is_valid(g, params(0.3, k), *r.witness));
  }
}

TEST(CheckExhaustive, MonotoneInEpsilonAndK) {
  for (int s = 0; s < 30; ++s) {
    const auto g = random_tournament(10, derive_seed(6, "mono", static_cast<std::uint64_t>(s)));
    for (int k = 1; k <= 4; ++k) {
      const bool cert = check_exhaustive(g, params(0.3, k)).verdict != PseudoVerdict::Refuted;
      if (!cert)
        continue;
      EXPECT_NE(check_exhaustive(g, params(0.2, k)).verdict, PseudoVerdict::Refuted);
      EXPECT_NE(check_exhaustive(g, params(0.3, k + 1)).verdict, PseudoVerdict::Refuted);
    }
  }
}

TEST(CheckSampled, ZeroTrialsIsAnEmptyCertificate) {
  const auto r = check_sampled(random_tournament(64, 1), params(0.25, 4), 0, 1);
  EXPECT_EQ(r.verdict, PseudoVerdict::CertifiedSampled);
  EXPECT_EQ(r.trials, 0);
  EXPECT_FALSE(r.min_density);
}

TEST(CheckSampled, RefutationImpliesExhaustiveRefutation) {
  // Sampling can only find witnesses that exist, so a sampled refutation must
  // carry a valid witness and agree with the exhaustive verdict.
  int refuted = 0;
  for (int s = 0; s < 60; ++s) {
    const auto g = random_tournament(12, derive_seed(7, "cross", static_cast<std::uint64_t>(s)));
    const auto p = params(0.1, 3);
    const auto r = check_sampled(g, p, 300, static_cast<std::uint64_t>(s));
    if (r.verdict != PseudoVerdict::Refuted)
      continue;
    ++refuted;
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(witness_is_valid(g, p, *r.witness)) << "seed " << s;
    EXPECT_EQ(check_exhaustive(g, p).verdict, PseudoVerdict::Refuted) << "seed " << s;
  }
  EXPECT_GT(refuted, 0);
}

TEST(CheckSampled, RandomTournamentIsCertified) {
  PseudorandomnessParams p;
  const auto r = check_sampled(random_tournament(1024, 3), p, 10'000, 9);
  EXPECT_EQ(r.k, 40);
  EXPECT_EQ(r.verdict, PseudoVerdict::CertifiedSampled);
  EXPECT_EQ(r.trials, 10'000);
  ASSERT_TRUE(r.min_density);
  EXPECT_GE(r.min_density_value(), 0.25);
}

TEST(CheckSampled, TransitiveIsRefutedQuickly) {
  PseudorandomnessParams p;
  const auto g = transitive_tournament(1024);
  const auto r = check_sampled(g, p, 10'000, 9);
  ASSERT_EQ(r.verdict, PseudoVerdict::Refuted);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(witness_is_valid(g, p, *r.witness));
  EXPECT_LE(r.trials, 256);
}

TEST(CheckSampled, ThreadCountDoesNotChangeTheReport) {
  PseudorandomnessParams p;
  p.epsilon = 0.45;
  const auto g = random_tournament(128, 4);
  const auto a = check_sampled(g, p, 3000, 11, 1);
  const auto b = check_sampled(g, p, 3000, 11, 4);
  EXPECT_EQ(a.verdict, b.verdict);
  EXPECT_EQ(a.trials, b.trials);
  EXPECT_EQ(a.min_density, b.min_density);
  if (a.witness && b.witness) {
    EXPECT_EQ(a.witness->a, b.witness->a);
    EXPECT_EQ(a.witness->b, b.witness->b);
  }
}

TEST(WitnessIsValid, RejectsBadWitnesses) {
  const auto g = transitive_tournament(8);
  const auto p = params(0.1, 4);
  EXPECT_FALSE(witness_is_valid(g, p, {VertexSet(8, {0, 1, 2, 3}), VertexSet(8, {4, 5, 6, 7}), 16}));
  EXPECT_FALSE(witness_is_valid(g, p, {VertexSet(8, {5, 6, 7}), VertexSet(8, {0, 1, 2}), 0}));
  EXPECT_FALSE(witness_is_valid(g, p, {VertexSet(8, {4, 5, 6, 7}), VertexSet(8, {0, 1, 2, 4}), 0}));
}
