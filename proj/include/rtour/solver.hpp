#pragma once

#include "rtour/embed.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rtour {

struct SolverConfig {
  double epsilon = 0.25;
  double sigma = 4.0;
  double alpha = 1.0 / 6.0;
  /// Medium-cycle constant; ceil(128 / eps^2) when unset. b = 8a.
  std::optional<double> a;
  /// Node budget of the exact fallback, per colour.
  long long exact_budget = 2'000'000;
  /// Node budget of each search inside a strategy.
  long long search_budget = 200'000;
  int mindegree_trials = 64;
  std::uint64_t seed = 0;
  bool exact_fallback = true;

  double resolved_a() const;
  double b() const { return 8.0 * resolved_a(); }
  /// Sparse-colour threshold eps^2 / 32.
  double delta_sparse() const { return epsilon * epsilon / 32.0; }
  /// Mindegree-pair density eps^2 / (32 * 6).
  double delta_pair() const { return epsilon * epsilon / 192.0; }
  /// Throws PreconditionError unless everything is positive and alpha <= 1/6.
  void validate() const;
};

enum class SolveStatus {
  Found,
  /// The exact fallback refuted both colours.
  NotFound,
  /// Every strategy failed and the exact fallback was skipped or ran out of budget.
  Unknown,
};

std::string_view to_string(SolveStatus s) noexcept;

struct TraceEvent {
  std::string strategy;
  std::string event;  ///< "enter", "skip", "fail", "success"
  std::string detail;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<Embedding> embedding; ///< colour set, validated
  std::string strategy;               ///< the rung that succeeded
  std::vector<TraceEvent> trace;
};

/// Tries, in order and each in red then blue: the sparse-colour shortcut,
/// greedy embedding in the min-degree core of a colour, interval buckets of
/// a low-outdegree ordering (directed T with few leaves), red-blue pairs
/// from long cycles of the other colour (same T), the in-out split over a
/// mindegree pair, and finally exact search within the budget. Strategy
/// failures are recorded in the trace. Every returned embedding has passed
/// validate_embedding.
SolveResult find_monochromatic_tree(const ColoredTournament &g, const OrientedTree &t,
                                    const SolverConfig &cfg = {});

/// Same colouring with red and blue exchanged.
ColoredTournament swap_colors(const ColoredTournament &g);

} // namespace rtour
