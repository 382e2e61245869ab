#pragma once

#include "rtour/embed.hpp"
#include "rtour/splits.hpp"

#include <functional>
#include <utility>
#include <variant>
#include <vector>

namespace rtour {

// ---------------------------------------------------------------------------
// Auxiliary digraphs over disjoint vertex parts.

enum class AuxRule {
  /// ij blue when at least `count` vertices of part i have a blue
  /// out-neighbour in part j.
  BlueOutCount,
  /// ij blue when at least (1 - eps/4) k vertices of part i have at least
  /// (eps/2) k blue out-neighbours in part j.
  PairDensity,
  /// For i < j the edge ij is red. For i > j it is blue when every
  /// W_i in part i and W_j in part j with |W_i|, |W_j| >= `subset` have a
  /// blue edge from W_i to W_j.
  LargeSubsets,
};

struct AuxRuleSpec {
  AuxRule rule = AuxRule::BlueOutCount;
  int count = 1;          ///< BlueOutCount
  double epsilon = 0.25;  ///< PairDensity
  int k = 1;              ///< PairDensity
  int subset = 1;         ///< LargeSubsets
  long long exact_budget = 200'000; ///< LargeSubsets: W_i choices checked exactly
  int samples = 2'000;              ///< LargeSubsets: sampled W_i above the budget
  std::uint64_t seed = 0;
};

/// Complete 2-coloured digraph on part indices.
struct AuxiliaryDigraph {
  std::vector<VertexSet> parts;
  std::vector<std::vector<Color>> color; ///< color[i][j] for i != j
  /// LargeSubsets only: false where the colour came from sampling.
  std::vector<std::vector<bool>> exact;

  int size() const noexcept { return static_cast<int>(parts.size()); }
  Color at(int i, int j) const noexcept {
    return color[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
};

/// Evaluates the rule for every ordered pair. Throws PreconditionError when
/// the parts overlap.
AuxiliaryDigraph build_aux_digraph(const ColoredTournament &g, const std::vector<VertexSet> &parts,
                                   const AuxRuleSpec &rule);
/// The rule's predicate for one ordered pair (i, j); `exact` reports whether
/// a LargeSubsets answer was certified exactly.
Color aux_edge_color(const ColoredTournament &g, const VertexSet &from, const VertexSet &to,
                     const AuxRuleSpec &rule, bool from_is_later, bool *exact = nullptr);

/// Pairs {i, j}, i < j, red in both directions, taken greedily in
/// lexicographic order; every uncovered pair has a blue direction.
std::vector<std::pair<int, int>> maximal_red_red_matching(const AuxiliaryDigraph &k);

// ---------------------------------------------------------------------------
// Paths through cycles.

/// Follows cycle 0 from its first listed vertex to the last vertex with a
/// colour out-neighbour in cycle 1, jumps to the lowest such neighbour,
/// follows cycle 1 to its last exit into cycle 2, and so on; the last cycle
/// is followed to its end. The result is a colour path of order at least
/// (#cycles) * r whose vertices appear in cycle-index order. Throws
/// PreconditionError when the cycles overlap or are not colour cycles, and
/// EmbeddingError with the cycle index when some cycle has fewer than r
/// exits into the next.
std::vector<Vertex> lift_path_through_cycles(const ColoredTournament &g, Color color,
                                             const std::vector<std::vector<Vertex>> &cycles, int r);

// ---------------------------------------------------------------------------
// Red-blue pairs.

/// Disjoint sets A_i, B_i of size k with every edge between A_i and B_i red and
/// pairwise disjoint blue paths P_i with P_i covering A_i.
struct RedBluePairs {
  std::vector<std::pair<VertexSet, VertexSet>> pairs;
  int k = 0;
  std::vector<std::vector<Vertex>> blue_paths;
};

Verdict validate_red_blue_pairs(const ColoredTournament &g, const RedBluePairs &p);

enum class CycleMode { Medium, LongChords };

/// Thrown in LongChords mode when a blue chord closes a cycle of length at
/// least a * scale.
class ChordWitness : public Error {
public:
  ChordWitness(const std::string &what_arg, int cycle, Vertex from, Vertex to)
      : Error(what_arg), cycle_(cycle), from_(from), to_(to) {}
  int cycle() const noexcept { return cycle_; }
  Vertex from() const noexcept { return from_; }
  Vertex to() const noexcept { return to_; }

private:
  int cycle_;
  Vertex from_, to_;
};

/// Medium mode (cycle lengths in [a L, 8 a L]): builds H with the
/// BlueOutCount rule at ceil(a L / 4); if a maximal red-red matching covers
/// at most half of the cycles, lifts a Hamiltonian path of the uncovered
/// ones to a blue path, otherwise each matched pair (i, j) yields A from
/// cycle i and B from cycle j, the vertices without blue out-neighbours in
/// the other cycle, cut to a common size and listed along the cycle.
///
/// LongChords mode (cycle lengths > 8 a L): checks that every blue chord
/// closes a cycle shorter than a L, then takes A = v_1..v_(h-2k) and
/// B = v_(h-k)..v_(r-k), h = floor(r/2), k = ceil(a L), cut into consecutive
/// blocks of k.
///
/// `scale` is L (m^(2 alpha) in the solver), `a` the medium-cycle constant.
std::variant<RedBluePairs, std::vector<Vertex>>
red_blue_pairs_from_cycles(const ColoredTournament &g, const std::vector<std::vector<Vertex>> &cycles,
                           CycleMode mode, double a, double scale);

// ---------------------------------------------------------------------------
// Candidate sets and assembly.

/// Per split part: candidate hosts D_i for its root and the region the part
/// is embedded in.
struct CandidateSets {
  std::vector<VertexSet> d;
  std::vector<VertexSet> region;
};

Verdict validate_candidate_sets(const CandidateSets &c);

/// Pieces of a path-split with the start-vertex as root.
std::vector<Piece> pieces_of(const PathSplit &s);

/// Embeds one part with its root at `root_host`, using only vertices of
/// `free`. Returns the hosts of the part's vertices in the order of
/// Piece::vertices, or nullopt.
using LocalEmbedder =
    std::function<std::optional<std::vector<Vertex>>(int part, Vertex root_host, const VertexSet &free)>;

/// Top-down greedy assembly: the root part goes to the first candidate of
/// D_0 the local embedder accepts, every later part to the first unused
/// colour neighbour (in the direction of the tree edge) of its parent's image
/// inside its own D_i. Parts must be listed parents first. Throws
/// EmbeddingError with the index of a part that cannot be placed.
Embedding assemble_from_candidates(const ColoredTournament &g, const OrientedTree &t,
                                   const std::vector<Piece> &parts, const CandidateSets &c, Color color,
                                   const LocalEmbedder &local);

/// Candidate sets of the tree-split lift over red-blue pairs: part i lives in
/// A_(host[i]) and B_(host[i]). Bottom-up, X_s holds the vertices of A_i
/// with a colour out-neighbour in the candidate set of the s-th child part,
/// Y the vertices of B_i with at least |T_i| + slack colour out-neighbours
/// in every X_s (in A_i for a leaf-tree), and D_i the vertices of A_i with at
/// least |T_i| colour out-neighbours in Y.
struct PairLift {
  CandidateSets candidates;
  std::vector<VertexSet> a_side, b_side; ///< A and B of each part's host pair
  std::vector<VertexSet> y;
  std::vector<std::vector<VertexSet>> x; ///< x[i][s] for the s-th child part of i
};

PairLift pair_lift_candidates(const ColoredTournament &g, const OrientedTree &t, const TreeSplit &split,
                              const RedBluePairs &pairs, const std::vector<int> &host, Color color,
                              int slack = 0);

/// Local embedder for PairLift: even levels of a part in its D_i (A side),
/// odd levels in Y (B side), extending-leaves in the X set of their child.
LocalEmbedder pair_lift_embedder(const ColoredTournament &g, const OrientedTree &t, const TreeSplit &split,
                                 const PairLift &lift, Color color);

/// Budgeted depth-first search for a colour path with `order` vertices that
/// starts at `start`, stays in `allowed` and ends at a vertex accepted by
/// `end_ok`. Throws BudgetExceeded when the node budget runs out.
std::optional<std::vector<Vertex>> find_color_path(DigraphRef view, Vertex start, int order,
                                                   const VertexSet &allowed,
                                                   const std::function<bool(Vertex)> &end_ok,
                                                   long long budget);

// ---------------------------------------------------------------------------
// In/out layers over a mindegree pair.

/// Embeds a (directed) piece inside `allowed` with its root in `roots`.
using SubtreeEmbedder = std::function<std::optional<std::vector<Vertex>>(
    DigraphRef view, const OrientedTree &piece, const VertexSet &allowed, const VertexSet &roots)>;

/// Lowest-id greedy placement over the first 16 roots, then guided placement
/// over the 16 best-scored roots, then exact search within the node budget.
SubtreeEmbedder default_subtree_embedder(long long budget = 200'000);

/// In-directed layers of the in-out split go into A, out-directed layers
/// into B; each piece is rooted at a colour out-neighbour (odd to even
/// layer) or in-neighbour (even to odd) of its parent's image. Throws
/// PreconditionError when k < m + the largest piece, and EmbeddingError with
/// the 1-based layer index when a piece cannot be placed.
Embedding inout_embed(const ColoredTournament &g, const MindegreePair &pair, const OrientedTree &t,
                      Color color, const SubtreeEmbedder &embed_piece);

} // namespace rtour
