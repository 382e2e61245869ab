#pragma once

#include "rtour/tournament.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace rtour {

/// (epsilon, k)-pseudorandomness: every pair of disjoint sets A, B with
/// |A|, |B| >= k has e(A, B) >= epsilon |A||B|. When k is not given it is
/// ceil(sigma * log2 n).
struct PseudorandomnessParams {
  double epsilon = 0.25;
  std::optional<int> k;
  double sigma = 4.0;

  /// Throws PreconditionError unless 0 < epsilon < 1/2, k >= 1, sigma > 0.
  void validate() const;
  int resolve_k(int n) const;
};

enum class PseudoVerdict { CertifiedExhaustive, CertifiedSampled, Refuted };
std::string_view to_string(PseudoVerdict v) noexcept;

struct PseudoWitness {
  VertexSet a;
  VertexSet b;
  long long edges = 0; ///< e(A, B)
};

struct PseudoReport {
  PseudoVerdict verdict = PseudoVerdict::CertifiedSampled;
  std::optional<PseudoWitness> witness; ///< present exactly when refuted
  long long trials = 0;                 ///< pairs examined
  int k = 0;
  /// Smallest e(A,B) / (|A||B|) seen, as numerator and denominator.
  std::optional<std::pair<long long, long long>> min_density;

  double min_density_value() const {
    return min_density ? static_cast<double>(min_density->first) / static_cast<double>(min_density->second)
                       : 0.0;
  }
};

/// Default cap on the number of k-subsets A that check_exhaustive visits.
constexpr long long kDefaultExhaustiveBudget = 20'000'000;

/// Exact check over pairs of size exactly k. For a fixed A the worst B is the
/// k vertices outside A with the fewest in-neighbours in A, so only the
/// C(n, k) choices of A are enumerated (in lexicographic order).
///
/// Size exactly k suffices: for |A|, |B| >= k, e(A, B) / (|A||B|) is the mean
/// of e(A', B') / k^2 over all k-subsets A' of A and B' of B, so it is at least
/// the smallest such value.
///
/// The witness (when refuted) minimises e(A, B); among ties it takes the
/// first A in lexicographic order and the lowest-id B. k > n/2 certifies
/// vacuously. Throws BudgetExceeded when C(n, k) exceeds `budget`.
PseudoReport check_exhaustive(const Tournament &g, const PseudorandomnessParams &p,
                              long long budget = kDefaultExhaustiveBudget);

/// Seeded sampling over `trials` pairs. Even-numbered trials draw sizes
/// uniformly from [k, n/2] and vertices uniformly without replacement.
/// Odd-numbered trials take two windows of the same random sizes from the
/// vertex order sorted by out-degree: B from the top half, A from the bottom
/// half, where violations concentrate (a transitive tournament is never
/// caught by the uniform pairs alone).
///
/// Trials run in fixed chunks with seeds derived from (seed, chunk index),
/// so the report does not depend on `threads` (0 = hardware concurrency).
/// The first violating trial in index order is the witness; min_density and
/// trials cover the trials up to and including it. n < 2k gives a vacuous
/// certificate with zero trials.
PseudoReport check_sampled(const Tournament &g, const PseudorandomnessParams &p, long long trials,
                           std::uint64_t seed, int threads = 0);

/// Independent recount: disjoint, both sides >= k, e(A,B) < epsilon |A||B|,
/// and the stored edge count is right.
bool witness_is_valid(const Tournament &g, const PseudorandomnessParams &p, const PseudoWitness &w);

} // namespace rtour
