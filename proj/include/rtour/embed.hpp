#pragma once

#include "rtour/error.hpp"
#include "rtour/tournament.hpp"
#include "rtour/tree.hpp"
#include "rtour/verdict.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rtour {

/// Injective map from the vertices of a pattern tree into a host. When
/// `color` is set every host edge used by the copy has that colour.
struct Embedding {
  std::vector<Vertex> map; ///< pattern vertex -> host vertex
  std::optional<Color> color;
};

/// Independent check: right length, injective, in range, and every pattern
/// edge u -> v lands on a host edge map(u) -> map(v) of the required colour.
Verdict validate_embedding(const ColoredTournament &g, const OrientedTree &t, const Embedding &e);
Verdict validate_embedding(DigraphRef host, const OrientedTree &t, const std::vector<Vertex> &map);

/// Raised when a construction meets a set that breaks pseudorandomness.
class PseudorandomnessViolation : public Error {
public:
  PseudorandomnessViolation(const std::string &what_arg, VertexSet witness)
      : Error(what_arg), witness_(std::move(witness)) {}
  const VertexSet &witness() const noexcept { return witness_; }

private:
  VertexSet witness_;
};

/// Copy of a directed tree inside a transitive order: the i-th vertex of a
/// depth-first preorder goes to hosts[i] (out-directed), or to
/// hosts[m-1-i] (in-directed). Throws PreconditionError when T is not
/// directed or hosts is too short.
std::vector<Vertex> embed_in_transitive(const OrientedTree &t, const std::vector<Vertex> &hosts);

/// Greedy placement in breadth-first pattern order: the root goes to the
/// first candidate that works, every other vertex to the lowest unused
/// neighbour of its parent's image (out-neighbour for a tree edge pointing
/// away from the parent, in-neighbour otherwise) inside `allowed`.
/// Returns nullopt and sets *stuck to the pattern vertex that could not be
/// placed when every tried root fails. `max_roots` caps the roots tried.
std::optional<std::vector<Vertex>> greedy_place(DigraphRef view, const OrientedTree &t,
                                                const VertexSet &allowed,
                                                const VertexSet &root_candidates,
                                                int max_roots = 1, int *stuck = nullptr);

/// Like greedy_place, but each vertex takes the candidate that leaves the
/// most unused neighbours in the directions its own children need (leaves
/// take the lowest), and roots are tried best-first by the same score.
std::optional<std::vector<Vertex>> guided_place(DigraphRef view, const OrientedTree &t, const VertexSet &allowed,
                                                const VertexSet &root_candidates, int max_roots = 1);

/// Greedy embedding of T in colour `color` inside U, root at the lowest
/// vertex of U. Succeeds whenever every vertex of U has at least m colour
/// out- and in-neighbours in U; otherwise may throw EmbeddingError naming
/// the stuck pattern vertex.
Embedding greedy_min_degree_embed(const ColoredTournament &g, const VertexSet &u, const OrientedTree &t,
                                  Color color);

/// Red tree in a set with few blue edges: drops X+ and X- (vertices with red
/// out- resp. in-degree below (3 eps / 4)|U| inside U) and embeds T
/// greedily in what is left. Throws PreconditionError when U has more than
/// (eps^2 / 32)|U|^2 blue edges or m > (eps / 4)|U|, and
/// PseudorandomnessViolation with X+ or X- when one of them reaches
/// (eps / 4)|U| vertices.
Embedding find_red_tree_in_sparse_blue(const ColoredTournament &g, const VertexSet &u,
                                       const OrientedTree &t, double epsilon);

/// Colour cycle of length at least d + 1, where d >= 1 is the minimum colour
/// out-degree inside U: a greedy maximal path from the lowest vertex of U,
/// closed at the earliest out-neighbour of its last vertex. Listed so that
/// each vertex points to the next and the last to the first. Throws
/// EmbeddingError naming a vertex of U without colour out-neighbours in U.
std::vector<Vertex> long_cycle(const ColoredTournament &g, Color color, const VertexSet &u);

/// Either an ordering u_1..u_|U| in which every u_i has at most `threshold`
/// colour out-neighbours among later vertices, or, when peeling gets stuck,
/// the remaining set, whose minimum colour out-degree exceeds threshold.
struct OrderingResult {
  std::vector<Vertex> order;
  std::optional<VertexSet> dense;
};

OrderingResult low_outdegree_ordering(const ColoredTournament &g, Color color, const VertexSet &u,
                                      int threshold);

/// Disjoint (A, B) in which every vertex of A has at least k colour
/// out-neighbours in B and every vertex of B at least k colour
/// in-neighbours in A.
struct MindegreePair {
  VertexSet a;
  VertexSet b;
  int k = 0;
  Color color = Color::Red;
};

Verdict validate_mindegree_pair(const ColoredTournament &g, const MindegreePair &p);

/// Random bipartitions (seeded, up to max_trials) until e(X, Y) >=
/// (delta / 4)|U|^2, then repeatedly deletes vertices with fewer than
/// k = ceil((delta / 4)|U|) colour edges across. Throws PreconditionError
/// when U spans fewer than delta |U|^2 colour edges and ProbabilisticFailure
/// when no trial leaves a non-empty pair.
MindegreePair mindegree_pair(const ColoredTournament &g, Color color, const VertexSet &u, double delta,
                             std::uint64_t seed, int max_trials = 64);

/// Default node budget of exact_embed.
constexpr long long kDefaultNodeBudget = 20'000'000;

struct ExactOptions {
  long long budget = kDefaultNodeBudget;
  const VertexSet *allowed = nullptr;         ///< host vertices that may be used
  const VertexSet *root_candidates = nullptr; ///< where the pattern root may go
};

/// Complete backtracking search in breadth-first pattern order with degree
/// pruning. nullopt means no copy exists; BudgetExceeded means the search
/// was cut off and the answer is unknown.
std::optional<std::vector<Vertex>> exact_place(DigraphRef view, const OrientedTree &t,
                                               const ExactOptions &opt = {});

/// Copy of T in the host, in colour `color` or in the whole tournament.
std::optional<Embedding> exact_embed(const ColoredTournament &g, const OrientedTree &t,
                                     std::optional<Color> color,
                                     long long budget = kDefaultNodeBudget);

} // namespace rtour
