#pragma once

#include "rtour/tree.hpp"
#include "rtour/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rtour {

/// Connected piece of a tree: its top vertex and its vertex list.
struct Piece {
  int root = 0;
  std::vector<int> vertices;
};
using Forest = std::vector<Piece>;

/// Partition of an out-directed tree into subtrees, each entered only at its
/// root and left only through extending-leaves of out-degree one on even
/// levels.
struct TreeSplit {
  std::vector<Piece> parts;     ///< in creation order; parts[0] holds the root
  OrientedTree quotient;        ///< out-directed tree on part indices
  std::vector<bool> leaf_tree;  ///< parts with no extending-leaves
};

/// Two-stage construction: stage 1 grows a part from its root until it has at
/// least m^(c*alpha) vertices (or takes all descendants when there are at
/// most that many), stage 2 absorbs the children of every extending-leaf on
/// an odd level or with out-degree other than one. Extending-leaves are
/// always processed lowest id first. Throws PreconditionError unless T is
/// out-directed with at most m^alpha leaves, c >= 2 and 0 < alpha <= 1/(2c).
TreeSplit tree_split(const OrientedTree &t, double c, double alpha);
Verdict validate_tree_split(const OrientedTree &t, const TreeSplit &s, double c, double alpha);

/// Partition of an out-directed tree into directed subpaths.
struct PathSplit {
  std::vector<std::vector<int>> parts; ///< each listed from start to end vertex
  OrientedTree quotient;
  std::vector<bool> junction;          ///< part is a single leaf, branching vertex or the root
};

/// Every junction (leaf, branching vertex or the root) becomes its own part; the
/// junction-free stretches between them are cut top-down into chunks of
/// floor(m^(3 alpha)) vertices, the last chunk possibly shorter. Throws
/// PreconditionError unless T is out-directed with at most m^alpha leaves
/// and 0 < alpha <= 1/4.
PathSplit path_split(const OrientedTree &t, double alpha);
Verdict validate_path_split(const OrientedTree &t, const PathSplit &s, double alpha);

/// Layers F1..Fl of iterated k-cores: F1 is the k-core of T, and F(i+1)
/// holds the k-core of every tree left after removing F1..Fi.
struct CoreSplit {
  std::vector<Forest> layers;
};

CoreSplit core_split(const OrientedTree &t, Rational k);
/// Checks the partition, that F1 is one tree through the root, and that each
/// tree of F_i has order at most ceil(m / k^(i-1)) and at most k leaves.
Verdict validate_core_split(const OrientedTree &t, const CoreSplit &s, Rational k);

/// Directed paths ending at the non-root leaves, each starting just below the
/// last branching vertex (or the root) above its leaf, plus what remains.
struct DplResult {
  std::vector<std::vector<int>> paths;
  std::optional<Subtree> remainder; ///< empty when T is a single vertex
};

DplResult dpl(const OrientedTree &t);
Verdict validate_dpl(const OrientedTree &t, const DplResult &d);

/// Alternating layers: F1 is the root with everything that reaches it along
/// in-edges, F2 everything reachable by out-edges from the roots of the
/// trees left over, and so on. Odd layers are in-directed forests, even
/// layers out-directed.
struct InOutSplit {
  std::vector<Forest> layers;
};

InOutSplit in_out_split(const OrientedTree &t);
Verdict validate_in_out_split(const OrientedTree &t, const InOutSplit &s);

/// Contracting each part to one vertex must give `quotient` edge for edge.
Verdict validate_quotient(const OrientedTree &t, const std::vector<std::vector<int>> &parts,
                          const OrientedTree &quotient);

/// Checks that `parts` cover [0, m) exactly once.
Verdict validate_partition(int m, const std::vector<std::vector<int>> &parts);

} // namespace rtour
