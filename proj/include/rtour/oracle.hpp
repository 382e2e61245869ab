#pragma once

#include "rtour/tournament.hpp"
#include "rtour/tree.hpp"

#include <optional>
#include <vector>

namespace rtour {

/// Default node budget of the colouring search.
constexpr long long kDefaultArrowBudget = 50'000'000;

struct ArrowResult {
  bool holds = true;
  /// A colouring with no blue S and no red T; present iff holds is false.
  std::optional<ColoredTournament> witness;
  /// Partial colourings visited by the search.
  long long colorings_checked = 0;
};

/// Does every red/blue colouring of G contain a blue S or a red T? Edges are
/// coloured in id order (pairs i < j lexicographically) and a branch is cut
/// as soon as the edges coloured so far contain a blue S or a red T. When
/// S == T the first edge is fixed red. Throws BudgetExceeded when the search
/// visits more than `budget` partial colourings.
ArrowResult arrow_holds(const Tournament &g, const OrientedTree &s, const OrientedTree &t,
                        long long budget = kDefaultArrowBudget);

/// Orientation mask of a tournament: bit e set iff the e-th pair (i < j,
/// lexicographic) is oriented i -> j.
unsigned long long orientation_mask(const Tournament &g);
Tournament tournament_from_mask(int n, unsigned long long mask);
/// Smallest mask over all relabellings; used to skip isomorphic copies.
unsigned long long canonical_mask(int n, unsigned long long mask);

struct RamseyResult {
  /// Exact value when found within max_n and the budget.
  std::optional<int> value;
  /// Every N below this fails (a witness was found), so the number is at
  /// least this.
  int lower_bound = 1;
  /// Tournament and colouring showing lower_bound - 1 fails.
  std::optional<ColoredTournament> witness;
  long long tournaments_checked = 0;
  long long colorings_checked = 0;
  /// True when the search stopped at lower_bound because the budget ran out.
  bool budget_exceeded = false;
};

/// First N >= |H| for which every tournament on N vertices arrows H,
/// enumerating all 2^C(N,2) orientation masks (only canonical ones with
/// `dedup`). `budget` bounds the total colouring nodes.
RamseyResult oriented_ramsey_number(const OrientedTree &h, int max_n, long long budget = 2'000'000'000,
                                    bool dedup = false);

/// Order of a longest directed path in a digraph, with exactness flag:
/// exact by dynamic programming over a topological order when acyclic, by
/// subset dynamic programming for n <= 20, otherwise a greedy lower bound.
/// A digraph with vertices but no edges has longest path order 1.
struct PathOrder {
  int order = 0;
  bool exact = true;
};

PathOrder longest_path_order(DigraphRef view);

struct MonoPathOrders {
  PathOrder red;
  PathOrder blue;
};

MonoPathOrders longest_mono_paths(const ColoredTournament &g);

/// Topological order of the digraph, or nullopt when it has a cycle.
std::optional<std::vector<Vertex>> topological_order(DigraphRef view);

} // namespace rtour
