#include "rtour/splits.hpp"

#include "rtour/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace rtour {

namespace {

constexpr long double kSlack = 1e-9L;

long double power(long double base, long double e) { return std::pow(base, e); }

std::string str(int v) { return std::to_string(v); }

void require_out_directed(const OrientedTree &t, const char *who) {
  if (!t.is_out_directed())
    throw PreconditionError(std::string(who) + ": tree must be out-directed");
}

void require_leaf_bound(const OrientedTree &t, double alpha, const char *who) {
  const long double bound = power(t.size(), alpha);
  if (static_cast<long double>(leaf_count(t)) > bound + kSlack)
    throw PreconditionError(std::string(who) + ": tree has " + str(leaf_count(t)) +
                            " leaves, more than m^alpha");
}

std::vector<int> descendants_of(const OrientedTree &t, int v) {
  std::vector<int> out{v};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int c : t.children(out[i]))
      out.push_back(c);
  return out;
}

std::vector<int> owner_map(int m, const std::vector<std::vector<int>> &parts) {
  std::vector<int> owner(static_cast<std::size_t>(m), -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int v : parts[p])
      owner[static_cast<std::size_t>(v)] = static_cast<int>(p);
  return owner;
}

std::vector<std::vector<int>> vertex_lists(const std::vector<Piece> &pieces) {
  std::vector<std::vector<int>> out;
  out.reserve(pieces.size());
  for (const auto &p : pieces)
    out.push_back(p.vertices);
  return out;
}

OrientedTree out_tree_from_parents(std::vector<int> parent) {
  std::vector<EdgeDir> dir(parent.size(), EdgeDir::AwayFromParent);
  return OrientedTree(std::move(parent), std::move(dir));
}

// A piece is connected with top vertex `root` when every other member has its
// tree parent inside the piece and the root's parent is outside.
bool piece_is_rooted_subtree(const OrientedTree &t, const Piece &p, const std::vector<int> &owner,
                             int id) {
  if (owner[static_cast<std::size_t>(p.root)] != id)
    return false;
  const int rp = t.parent(p.root);
  if (rp != -1 && owner[static_cast<std::size_t>(rp)] == id)
    return false;
  for (int v : p.vertices)
    if (v != p.root && (t.parent(v) == -1 || owner[static_cast<std::size_t>(t.parent(v))] != id))
      return false;
  return true;
}

} // namespace

Verdict validate_partition(int m, const std::vector<std::vector<int>> &parts) {
  std::vector<int> seen(static_cast<std::size_t>(m), 0);
  for (const auto &part : parts) {
    if (part.empty())
      return Verdict::fail("partition: empty part");
    for (int v : part) {
      if (v < 0 || v >= m)
        return Verdict::fail("partition: vertex " + str(v) + " out of range");
      if (seen[static_cast<std::size_t>(v)]++)
        return Verdict::fail("partition: vertex " + str(v) + " appears twice");
    }
  }
  for (int v = 0; v < m; ++v)
    if (!seen[static_cast<std::size_t>(v)])
      return Verdict::fail("partition: vertex " + str(v) + " not covered");
  return Verdict::pass();
}

Verdict validate_quotient(const OrientedTree &t, const std::vector<std::vector<int>> &parts,
                          const OrientedTree &quotient) {
  if (quotient.size() != static_cast<int>(parts.size()))
    return Verdict::fail("quotient: order differs from part count");
  const auto owner = owner_map(t.size(), parts);
  std::set<std::pair<int, int>> contracted;
  for (auto [a, b] : t.edges()) {
    const int pa = owner[static_cast<std::size_t>(a)], pb = owner[static_cast<std::size_t>(b)];
    if (pa == pb)
      continue;
    if (!contracted.emplace(pa, pb).second)
      return Verdict::fail("quotient: parts " + str(pa) + " and " + str(pb) + " joined twice");
  }
  const auto qe = quotient.edges();
  if (qe.size() != contracted.size())
    return Verdict::fail("quotient: edge count differs from contracted tree");
  for (auto e : qe)
    if (!contracted.count(e))
      return Verdict::fail("quotient: edge " + str(e.first) + "->" + str(e.second) +
                           " has no tree edge behind it");
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// tree-split

TreeSplit tree_split(const OrientedTree &t, double c, double alpha) {
  if (c < 2.0 || alpha <= 0.0 || alpha * 2.0 * c > 1.0 + 1e-12)
    throw PreconditionError("tree_split: need c >= 2 and 0 < alpha <= 1/(2c)");
  require_out_directed(t, "tree_split");
  require_leaf_bound(t, alpha, "tree_split");

  const int m = t.size();
  const long double big = power(m, static_cast<long double>(c) * alpha);
  const auto desc = descendant_counts(t);
  std::vector<int> owner(static_cast<std::size_t>(m), -1);
  std::vector<int> level(static_cast<std::size_t>(m), 0);
  std::vector<int> qparent;
  TreeSplit out;

  // Extending-leaves of the union of finished parts, lowest id first.
  std::set<int> pending;
  int next_root = t.root();
  while (next_root != -1) {
    const int v = next_root;
    const int id = static_cast<int>(out.parts.size());
    qparent.push_back(t.parent(v) == -1 ? -1 : owner[static_cast<std::size_t>(t.parent(v))]);
    Piece piece{v, {}};
    std::set<int> ext;
    auto absorb = [&](int x) {
      owner[static_cast<std::size_t>(x)] = id;
      piece.vertices.push_back(x);
      if (!t.children(x).empty())
        ext.insert(x);
    };
    auto expand = [&](int x) {
      ext.erase(x);
      for (int ch : t.children(x)) {
        level[static_cast<std::size_t>(ch)] = level[static_cast<std::size_t>(x)] + 1;
        absorb(ch);
      }
    };

    level[static_cast<std::size_t>(v)] = 0;
    if (static_cast<long double>(desc[static_cast<std::size_t>(v)]) <= big + kSlack) {
      for (int x : descendants_of(t, v)) {
        owner[static_cast<std::size_t>(x)] = id;
        piece.vertices.push_back(x);
      }
      ext.clear();
    } else {
      absorb(v);
      while (static_cast<long double>(piece.vertices.size()) < big - kSlack && !ext.empty())
        expand(*ext.begin());
      for (;;) {
        int bad = -1;
        for (int x : ext)
          if (level[static_cast<std::size_t>(x)] % 2 == 1 || t.children(x).size() != 1) {
            bad = x;
            break;
          }
        if (bad == -1)
          break;
        expand(bad);
      }
    }
    out.leaf_tree.push_back(ext.empty());
    out.parts.push_back(std::move(piece));
    pending.insert(ext.begin(), ext.end());

    next_root = -1;
    if (!pending.empty()) {
      const int leaf = *pending.begin();
      pending.erase(pending.begin());
      next_root = t.children(leaf).front();
    }
  }
  out.quotient = out_tree_from_parents(std::move(qparent));
  return out;
}

Verdict validate_tree_split(const OrientedTree &t, const TreeSplit &s, double c, double alpha) {
  const int m = t.size();
  const auto lists = vertex_lists(s.parts);
  if (auto v = validate_partition(m, lists); !v)
    return v;
  if (s.leaf_tree.size() != s.parts.size())
    return Verdict::fail("leaf-tree flags do not match part count");
  const auto owner = owner_map(m, lists);
  for (std::size_t i = 0; i < s.parts.size(); ++i)
    if (!piece_is_rooted_subtree(t, s.parts[i], owner, static_cast<int>(i)))
      return Verdict::fail("part " + str(static_cast<int>(i)) + " is not a subtree rooted at its root");
  if (auto v = validate_quotient(t, lists, s.quotient); !v)
    return v;
  if (!s.quotient.is_out_directed() || s.quotient.root() != owner[static_cast<std::size_t>(t.root())])
    return Verdict::fail("quotient is not out-directed from the root part");

  const long double big = power(m, static_cast<long double>(c) * alpha);
  std::vector<int> in_edges(s.parts.size(), 0);
  for (auto [a, b] : t.edges()) {
    const int pa = owner[static_cast<std::size_t>(a)], pb = owner[static_cast<std::size_t>(b)];
    if (pa == pb)
      continue;
    const auto &part_b = s.parts[static_cast<std::size_t>(pb)];
    // (i) one in-edge, into the root.
    if (++in_edges[static_cast<std::size_t>(pb)] > 1 || b != part_b.root)
      return Verdict::fail("(i) part " + str(pb) + " entered other than once at its root");
    // (ii) out-edges only from extending-leaves: no out-neighbour inside the part.
    for (int ch : t.children(a))
      if (owner[static_cast<std::size_t>(ch)] == pa)
        return Verdict::fail("(ii) vertex " + str(a) + " of part " + str(pa) +
                             " leaves its part but is not an extending-leaf");
    // (iii) even level, out-degree one.
    int depth = 0;
    for (int x = a; x != s.parts[static_cast<std::size_t>(pa)].root; x = t.parent(x))
      ++depth;
    if (depth % 2 != 0)
      return Verdict::fail("(iii) extending-leaf " + str(a) + " on an odd level");
    if (t.out_degree(a) != 1)
      return Verdict::fail("(iii) extending-leaf " + str(a) + " has out-degree " + str(t.out_degree(a)));
  }
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    bool has_ext = false;
    for (int v : s.parts[i].vertices)
      for (int ch : t.children(v))
        if (owner[static_cast<std::size_t>(ch)] != static_cast<int>(i))
          has_ext = true;
    if (has_ext == s.leaf_tree[i])
      return Verdict::fail("leaf-tree flag of part " + str(static_cast<int>(i)) + " is wrong");
    // (iv)
    if (static_cast<long double>(s.parts[i].vertices.size()) > 6.0L * big + kSlack)
      return Verdict::fail("(iv) part " + str(static_cast<int>(i)) + " has " +
                           str(static_cast<int>(s.parts[i].vertices.size())) + " vertices");
  }
  // (v)
  if (static_cast<long double>(s.parts.size()) >
      2.0L * power(m, 1.0L - static_cast<long double>(c) * alpha) + kSlack)
    return Verdict::fail("(v) " + str(static_cast<int>(s.parts.size())) + " parts");
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// path-split

namespace {

bool is_junction(const OrientedTree &t, int v) {
  const int d = t.underlying_degree(v);
  return d <= 1 || d >= 3;
}

// A root with two children is a junction too: the stretch through it would
// not be a directed path.
bool path_junction(const OrientedTree &t, int v) { return v == t.root() || is_junction(t, v); }

} // namespace

PathSplit path_split(const OrientedTree &t, double alpha) {
  if (alpha <= 0.0 || alpha > 0.25 + 1e-12)
    throw PreconditionError("path_split: need 0 < alpha <= 1/4");
  require_out_directed(t, "path_split");
  require_leaf_bound(t, alpha, "path_split");

  const int m = t.size();
  const int cap = std::max(1, static_cast<int>(std::floor(power(m, 3.0L * alpha) + kSlack)));
  std::vector<int> owner(static_cast<std::size_t>(m), -1);
  std::vector<int> qparent;
  PathSplit out;
  auto splits_here = [&](int v) { return path_junction(t, v); };
  for (int v : t.bfs_order()) {
    if (owner[static_cast<std::size_t>(v)] != -1)
      continue;
    const int id = static_cast<int>(out.parts.size());
    qparent.push_back(t.parent(v) == -1 ? -1 : owner[static_cast<std::size_t>(t.parent(v))]);
    std::vector<int> part;
    if (splits_here(v)) {
      part.push_back(v);
      owner[static_cast<std::size_t>(v)] = id;
      out.junction.push_back(true);
    } else {
      int x = v;
      while (static_cast<int>(part.size()) < cap && !splits_here(x)) {
        part.push_back(x);
        owner[static_cast<std::size_t>(x)] = id;
        x = t.children(x).front();
      }
      out.junction.push_back(false);
    }
    out.parts.push_back(std::move(part));
  }
  out.quotient = out_tree_from_parents(std::move(qparent));
  return out;
}

Verdict validate_path_split(const OrientedTree &t, const PathSplit &s, double alpha) {
  const int m = t.size();
  if (auto v = validate_partition(m, s.parts); !v)
    return v;
  if (s.junction.size() != s.parts.size())
    return Verdict::fail("junction flags do not match part count");
  if (auto v = validate_quotient(t, s.parts, s.quotient); !v)
    return v;
  const auto owner = owner_map(m, s.parts);
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    const auto &p = s.parts[i];
    const int id = static_cast<int>(i);
    for (std::size_t j = 0; j + 1 < p.size(); ++j)
      if (!t.has_edge(p[j], p[j + 1]))
        return Verdict::fail("part " + str(id) + " is not a directed path");
    bool has_junction = false;
    for (int v : p)
      has_junction = has_junction || path_junction(t, v);
    // (i)
    if (has_junction && p.size() != 1)
      return Verdict::fail("(i) part " + str(id) + " contains a junction but has " +
                           str(static_cast<int>(p.size())) + " vertices");
    if (has_junction != s.junction[i])
      return Verdict::fail("junction flag of part " + str(id) + " is wrong");
    // (iii)
    if (static_cast<long double>(p.size()) > power(m, 3.0L * alpha) + kSlack)
      return Verdict::fail("(iii) part " + str(id) + " is longer than m^(3 alpha)");
  }
  // (ii)
  std::vector<int> ins(s.parts.size(), 0), outs(s.parts.size(), 0);
  for (auto [a, b] : t.edges()) {
    const int pa = owner[static_cast<std::size_t>(a)], pb = owner[static_cast<std::size_t>(b)];
    if (pa == pb)
      continue;
    if (++ins[static_cast<std::size_t>(pb)] > 1 || b != s.parts[static_cast<std::size_t>(pb)].front())
      return Verdict::fail("(ii) part " + str(pb) + " entered other than once at its start-vertex");
    if (!s.junction[static_cast<std::size_t>(pa)] &&
        (++outs[static_cast<std::size_t>(pa)] > 1 || a != s.parts[static_cast<std::size_t>(pa)].back()))
      return Verdict::fail("(ii) part " + str(pa) + " left other than once from its end-vertex");
  }
  // (iv)
  if (static_cast<long double>(s.parts.size()) > 5.0L * power(m, 1.0L - 3.0L * alpha) + kSlack)
    return Verdict::fail("(iv) " + str(static_cast<int>(s.parts.size())) + " parts");
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// core-split

CoreSplit core_split(const OrientedTree &t, Rational k) {
  if (k.den <= 0 || k.num <= k.den)
    throw PreconditionError("core_split: k must be greater than 1");
  CoreSplit out;
  std::vector<bool> taken(static_cast<std::size_t>(t.size()), false);
  std::vector<int> roots{t.root()};
  while (!roots.empty()) {
    Forest layer;
    std::vector<int> next;
    for (int r : roots) {
      // Cores are closed upwards, so the tree left below r is all of r's
      // descendants.
      const auto members = descendants_of(t, r);
      const auto sub = extract_subtree(t, members, r);
      Piece piece{r, {}};
      for (int lv : k_core_vertices(sub.tree, k)) {
        const int v = sub.to_original[static_cast<std::size_t>(lv)];
        piece.vertices.push_back(v);
        taken[static_cast<std::size_t>(v)] = true;
      }
      for (int v : piece.vertices)
        for (int ch : t.children(v))
          if (!taken[static_cast<std::size_t>(ch)])
            next.push_back(ch);
      layer.push_back(std::move(piece));
    }
    out.layers.push_back(std::move(layer));
    roots = std::move(next);
  }
  return out;
}

Verdict validate_core_split(const OrientedTree &t, const CoreSplit &s, Rational k) {
  const int m = t.size();
  std::vector<Piece> all;
  for (const auto &layer : s.layers)
    all.insert(all.end(), layer.begin(), layer.end());
  const auto lists = vertex_lists(all);
  if (auto v = validate_partition(m, lists); !v)
    return v;
  if (s.layers.empty() || s.layers[0].size() != 1 || s.layers[0][0].root != t.root())
    return Verdict::fail("F1 is not a single tree through the root");
  const auto owner = owner_map(m, lists);
  int id = 0;
  long double scale = 1.0L;
  const long double kk = static_cast<long double>(k.num) / static_cast<long double>(k.den);
  for (std::size_t i = 0; i < s.layers.size(); ++i) {
    const long long bound = static_cast<long long>(std::ceil(m / scale - kSlack));
    for (const auto &piece : s.layers[i]) {
      if (!piece_is_rooted_subtree(t, piece, owner, id))
        return Verdict::fail("layer " + str(static_cast<int>(i + 1)) + " tree at " + str(piece.root) +
                             " is not connected");
      if (static_cast<long long>(piece.vertices.size()) > bound)
        return Verdict::fail("layer " + str(static_cast<int>(i + 1)) + " tree at " + str(piece.root) +
                             " has order " + str(static_cast<int>(piece.vertices.size())));
      const auto sub = extract_subtree(t, piece.vertices, piece.root);
      if (static_cast<long long>(leaf_count(sub.tree)) * k.den > k.num)
        return Verdict::fail("layer " + str(static_cast<int>(i + 1)) + " tree at " + str(piece.root) +
                             " has more than k leaves");
      ++id;
    }
    scale *= kk;
  }
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// disjoint paths layer

DplResult dpl(const OrientedTree &t) {
  require_out_directed(t, "dpl");
  DplResult out;
  if (t.size() == 1) {
    out.paths.push_back({t.root()});
    return out;
  }
  std::vector<bool> used(static_cast<std::size_t>(t.size()), false);
  for (int u = 0; u < t.size(); ++u) {
    if (u == t.root() || t.underlying_degree(u) != 1)
      continue;
    std::vector<int> path{u};
    int x = u;
    while (t.parent(x) != t.root() && t.underlying_degree(t.parent(x)) < 3) {
      x = t.parent(x);
      path.push_back(x);
    }
    std::reverse(path.begin(), path.end());
    for (int v : path)
      used[static_cast<std::size_t>(v)] = true;
    out.paths.push_back(std::move(path));
  }
  std::vector<int> rest;
  for (int v : t.bfs_order())
    if (!used[static_cast<std::size_t>(v)])
      rest.push_back(v);
  out.remainder = extract_subtree(t, rest, t.root());
  return out;
}

Verdict validate_dpl(const OrientedTree &t, const DplResult &d) {
  const int m = t.size();
  if (m == 1) {
    if (d.paths.size() == 1 && d.paths[0] == std::vector<int>{t.root()} && !d.remainder)
      return Verdict::pass();
    return Verdict::fail("single vertex: dpl must be the tree itself");
  }
  auto lists = d.paths;
  if (!d.remainder)
    return Verdict::fail("(ii) remainder missing");
  lists.push_back(d.remainder->to_original);
  if (auto v = validate_partition(m, lists); !v)
    return Verdict::fail("(i) " + v.clause);
  // (i)
  for (std::size_t i = 0; i < d.paths.size(); ++i) {
    const auto &p = d.paths[i];
    for (std::size_t j = 0; j + 1 < p.size(); ++j)
      if (!t.has_edge(p[j], p[j + 1]))
        return Verdict::fail("(i) path " + str(static_cast<int>(i)) + " is not a directed path");
    if (p.back() == t.root() || t.underlying_degree(p.back()) != 1)
      return Verdict::fail("(i) path " + str(static_cast<int>(i)) + " does not end at a non-root leaf");
  }
  // (ii)
  const auto &rem = d.remainder->tree;
  if (d.remainder->to_original[static_cast<std::size_t>(rem.root())] != t.root() || !rem.is_out_directed())
    return Verdict::fail("(ii) remainder is not out-directed from the root");
  // (iii)
  auto non_root_leaves = [](const OrientedTree &x) {
    int count = 0;
    for (int v = 0; v < x.size(); ++v)
      count += v != x.root() && x.underlying_degree(v) == 1;
    return count;
  };
  if (2 * non_root_leaves(rem) > non_root_leaves(t))
    return Verdict::fail("(iii) remainder keeps more than half of the non-root leaves");
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// in-out split

namespace {

std::vector<int> tree_neighbours(const OrientedTree &t, int v) {
  std::vector<int> nb = t.children(v);
  if (t.parent(v) != -1)
    nb.push_back(t.parent(v));
  return nb;
}

} // namespace

InOutSplit in_out_split(const OrientedTree &t) {
  const int m = t.size();
  std::vector<int> layer_of(static_cast<std::size_t>(m), -1);
  InOutSplit out;
  std::vector<int> roots{t.root()};
  for (int index = 1; !roots.empty(); ++index) {
    const bool in_layer = index % 2 == 1;
    Forest forest;
    for (int r : roots) {
      Piece piece{r, {r}};
      layer_of[static_cast<std::size_t>(r)] = index;
      for (std::size_t i = 0; i < piece.vertices.size(); ++i) {
        const int x = piece.vertices[i];
        for (int y : tree_neighbours(t, x)) {
          if (layer_of[static_cast<std::size_t>(y)] != -1)
            continue;
          if (in_layer ? t.has_edge(y, x) : t.has_edge(x, y)) {
            layer_of[static_cast<std::size_t>(y)] = index;
            piece.vertices.push_back(y);
          }
        }
      }
      forest.push_back(std::move(piece));
    }
    std::vector<int> next;
    for (const auto &piece : forest)
      for (int x : piece.vertices)
        for (int y : tree_neighbours(t, x))
          if (layer_of[static_cast<std::size_t>(y)] == -1)
            next.push_back(y);
    std::sort(next.begin(), next.end());
    out.layers.push_back(std::move(forest));
    roots = std::move(next);
  }
  return out;
}

Verdict validate_in_out_split(const OrientedTree &t, const InOutSplit &s) {
  const int m = t.size();
  std::vector<Piece> all;
  std::vector<int> layer_of_piece;
  for (std::size_t i = 0; i < s.layers.size(); ++i)
    for (const auto &p : s.layers[i]) {
      all.push_back(p);
      layer_of_piece.push_back(static_cast<int>(i + 1));
    }
  const auto lists = vertex_lists(all);
  if (auto v = validate_partition(m, lists); !v)
    return v;
  if (s.layers.empty() || s.layers[0].size() != 1 || s.layers[0][0].root != t.root())
    return Verdict::fail("F1 is not a single tree through the root");
  const auto owner = owner_map(m, lists);
  auto layer = [&](int v) { return layer_of_piece[static_cast<std::size_t>(owner[static_cast<std::size_t>(v)])]; };

  // Each piece: connected, and oriented toward (odd) / away from (even) its root.
  for (std::size_t p = 0; p < all.size(); ++p) {
    const auto &piece = all[p];
    const bool odd = layer_of_piece[p] % 2 == 1;
    std::vector<int> seen{piece.root};
    std::vector<bool> mark(static_cast<std::size_t>(m), false);
    mark[static_cast<std::size_t>(piece.root)] = true;
    for (std::size_t i = 0; i < seen.size(); ++i) {
      const int x = seen[i];
      for (int y : tree_neighbours(t, x)) {
        if (mark[static_cast<std::size_t>(y)] || owner[static_cast<std::size_t>(y)] != static_cast<int>(p))
          continue;
        if (odd ? !t.has_edge(y, x) : !t.has_edge(x, y))
          return Verdict::fail("layer " + str(layer_of_piece[p]) + " tree at " + str(piece.root) +
                               (odd ? " is not in-directed" : " is not out-directed"));
        mark[static_cast<std::size_t>(y)] = true;
        seen.push_back(y);
      }
    }
    if (seen.size() != piece.vertices.size())
      return Verdict::fail("layer " + str(layer_of_piece[p]) + " tree at " + str(piece.root) +
                           " is not connected");
  }
  for (auto [a, b] : t.edges()) {
    const int la = layer(a), lb = layer(b);
    if (la == lb) {
      if (owner[static_cast<std::size_t>(a)] != owner[static_cast<std::size_t>(b)])
        return Verdict::fail("edge " + str(a) + "->" + str(b) + " joins two trees of one layer");
      continue;
    }
    if (std::abs(la - lb) != 1)
      return Verdict::fail("edge " + str(a) + "->" + str(b) + " skips a layer");
    const int lo = std::min(la, lb);
    const bool forward = la == lo; // from F_lo to F_(lo+1)
    if (forward != (lo % 2 == 1))
      return Verdict::fail("edge " + str(a) + "->" + str(b) + " between layers " + str(la) + " and " +
                           str(lb) + " points the wrong way");
  }
  return Verdict::pass();
}

} // namespace rtour
