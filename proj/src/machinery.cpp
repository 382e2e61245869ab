#include "rtour/machinery.hpp"

#include "rtour/rng.hpp"
#include "rtour/tournament_algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

namespace rtour {

namespace {

std::string str(long long v) { return std::to_string(v); }

int ceil_int(double x) { return static_cast<int>(std::ceil(x - 1e-9)); }

long long binomial_capped(int n, int k, long long cap) {
  if (k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  long double value = 1;
  for (int i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value > static_cast<long double>(cap))
      return cap + 1;
  }
  return static_cast<long long>(std::llround(value));
}

// Some W in `from` of size s leaves at least s vertices of `to` without a
// blue in-neighbour from W.
bool has_blue_free_subsets(DigraphRef blue, const std::vector<Vertex> &w, const VertexSet &to, int s) {
  VertexSet rest = to;
  for (Vertex v : w)
    rest.subtract_words(blue.out_row(v));
  return rest.size() >= s;
}

} // namespace

Color aux_edge_color(const ColoredTournament &g, const VertexSet &from, const VertexSet &to,
                     const AuxRuleSpec &rule, bool from_is_later, bool *exact) {
  const auto blue = g.view(Color::Blue);
  if (exact)
    *exact = true;
  switch (rule.rule) {
  case AuxRule::BlueOutCount: {
    int count = 0;
    from.for_each([&](Vertex v) { count += blue.out_degree_in(v, to) > 0 ? 1 : 0; });
    return count >= rule.count ? Color::Blue : Color::Red;
  }
  case AuxRule::PairDensity: {
    const int need = ceil_int((1.0 - rule.epsilon / 4.0) * rule.k);
    const int degree = ceil_int(rule.epsilon / 2.0 * rule.k);
    int count = 0;
    from.for_each([&](Vertex v) { count += blue.out_degree_in(v, to) >= degree ? 1 : 0; });
    return count >= need ? Color::Blue : Color::Red;
  }
  case AuxRule::LargeSubsets: {
    if (!from_is_later)
      return Color::Red;
    const int s = rule.subset;
    const auto members = from.to_vector();
    const int n = static_cast<int>(members.size());
    if (s < 1 || n < s || to.size() < s)
      return Color::Blue;
    if (binomial_capped(n, s, rule.exact_budget) <= rule.exact_budget) {
      std::vector<int> comb(static_cast<std::size_t>(s));
      std::iota(comb.begin(), comb.end(), 0);
      std::vector<Vertex> w(static_cast<std::size_t>(s));
      for (;;) {
        for (int i = 0; i < s; ++i)
          w[static_cast<std::size_t>(i)] = members[static_cast<std::size_t>(comb[static_cast<std::size_t>(i)])];
        if (has_blue_free_subsets(blue, w, to, s))
          return Color::Red;
        int i = s - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - s + i)
          --i;
        if (i < 0)
          return Color::Blue;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < s; ++j)
          comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
    // Too many subsets: the lowest blue out-degrees first, then random picks.
    // A hit is a certificate; a miss is only sampled evidence.
    std::vector<Vertex> w = members;
    std::stable_sort(w.begin(), w.end(),
                     [&](Vertex x, Vertex y) { return blue.out_degree_in(x, to) < blue.out_degree_in(y, to); });
    w.resize(static_cast<std::size_t>(s));
    if (has_blue_free_subsets(blue, w, to, s))
      return Color::Red;
    SplitMix64 rng(rule.seed);
    for (int trial = 0; trial < rule.samples; ++trial) {
      const auto pick = sample_without_replacement(rng, n, s);
      for (int i = 0; i < s; ++i)
        w[static_cast<std::size_t>(i)] = members[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
      if (has_blue_free_subsets(blue, w, to, s))
        return Color::Red;
    }
    if (exact)
      *exact = false;
    return Color::Blue;
  }
  }
  return Color::Red;
}

AuxiliaryDigraph build_aux_digraph(const ColoredTournament &g, const std::vector<VertexSet> &parts,
                                   const AuxRuleSpec &rule) {
  const int t = static_cast<int>(parts.size());
  VertexSet seen(g.n());
  for (const auto &p : parts) {
    if (p.universe() != g.n())
      throw PreconditionError("build_aux_digraph: part over the wrong universe");
    if (p.intersects(seen))
      throw PreconditionError("build_aux_digraph: parts overlap");
    seen |= p;
  }
  AuxiliaryDigraph k;
  k.parts = parts;
  k.color.assign(static_cast<std::size_t>(t), std::vector<Color>(static_cast<std::size_t>(t), Color::Red));
  k.exact.assign(static_cast<std::size_t>(t), std::vector<bool>(static_cast<std::size_t>(t), true));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (i == j)
        continue;
      AuxRuleSpec r = rule;
      r.seed = derive_seed(rule.seed, "aux_edge", static_cast<std::uint64_t>(i) * 1'000'003ULL + j);
      bool exact = true;
      k.color[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          aux_edge_color(g, parts[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(j)], r, i > j,
                         &exact);
      k.exact[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = exact;
    }
  return k;
}

std::vector<std::pair<int, int>> maximal_red_red_matching(const AuxiliaryDigraph &k) {
  const int t = k.size();
  std::vector<bool> used(static_cast<std::size_t>(t), false);
  std::vector<std::pair<int, int>> m;
  for (int i = 0; i < t; ++i) {
    if (used[static_cast<std::size_t>(i)])
      continue;
    for (int j = i + 1; j < t; ++j) {
      if (used[static_cast<std::size_t>(j)])
        continue;
      if (k.at(i, j) == Color::Red && k.at(j, i) == Color::Red) {
        used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
        m.emplace_back(i, j);
        break;
      }
    }
  }
  return m;
}

std::vector<Vertex> lift_path_through_cycles(const ColoredTournament &g, Color color,
                                             const std::vector<std::vector<Vertex>> &cycles, int r) {
  if (cycles.empty())
    throw PreconditionError("lift_path_through_cycles: no cycles");
  if (r < 1)
    throw PreconditionError("lift_path_through_cycles: r must be at least 1");
  const auto view = g.view(color);
  VertexSet seen(g.n());
  std::vector<VertexSet> sets;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto &c = cycles[i];
    if (c.size() < 3)
      throw PreconditionError("lift_path_through_cycles: cycle " + str(static_cast<long long>(i)) +
                              " is shorter than 3");
    VertexSet s(g.n());
    for (std::size_t j = 0; j < c.size(); ++j) {
      const Vertex v = c[j];
      if (v < 0 || v >= g.n() || s.contains(v) || seen.contains(v))
        throw PreconditionError("lift_path_through_cycles: cycles are not disjoint");
      if (!view.has_edge(v, c[(j + 1) % c.size()]))
        throw PreconditionError("lift_path_through_cycles: cycle " + str(static_cast<long long>(i)) +
                                " is not a " + std::string(to_string(color)) + " cycle");
      s.insert(v);
    }
    seen |= s;
    sets.push_back(std::move(s));
  }

  std::vector<Vertex> path;
  std::size_t start = 0;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto &c = cycles[i];
    const std::size_t len = c.size();
    auto at = [&](std::size_t offset) { return c[(start + offset) % len]; };
    if (i + 1 == cycles.size()) {
      for (std::size_t o = 0; o < len; ++o)
        path.push_back(at(o));
      break;
    }
    const auto &next = sets[i + 1];
    int exits = 0;
    std::size_t last = 0;
    for (std::size_t o = 0; o < len; ++o)
      if (view.out_degree_in(at(o), next) > 0) {
        ++exits;
        last = o;
      }
    if (exits < r)
      throw EmbeddingError("lift_path_through_cycles: cycle " + str(static_cast<long long>(i)) + " has " +
                               str(exits) + " exits into the next, fewer than " + str(r),
                           static_cast<int>(i));
    for (std::size_t o = 0; o <= last; ++o)
      path.push_back(at(o));
    const Vertex w = (VertexSet::from_words(g.n(), view.out_row(at(last))) & next).first();
    const auto &nc = cycles[i + 1];
    start = static_cast<std::size_t>(std::find(nc.begin(), nc.end(), w) - nc.begin());
  }
  return path;
}

Verdict validate_red_blue_pairs(const ColoredTournament &g, const RedBluePairs &p) {
  const int n = g.n();
  if (p.blue_paths.size() != p.pairs.size())
    return Verdict::fail("one blue path per pair is required");
  VertexSet sets(n), paths(n);
  const auto blue = g.view(Color::Blue);
  for (std::size_t i = 0; i < p.pairs.size(); ++i) {
    const auto &[a, b] = p.pairs[i];
    const std::string tag = "pair " + str(static_cast<long long>(i));
    if (a.universe() != n || b.universe() != n)
      return Verdict::fail(tag + " uses the wrong universe");
    if (a.size() != p.k || b.size() != p.k)
      return Verdict::fail(tag + " does not have size k = " + str(p.k));
    if (a.intersects(b) || a.intersects(sets) || b.intersects(sets))
      return Verdict::fail(tag + " overlaps another set");
    sets |= a;
    sets |= b;
    bool red = true;
    a.for_each([&](Vertex u) {
      b.for_each([&](Vertex v) {
        if (g.has_edge(u, v) ? g.color(u, v) != Color::Red : g.color(v, u) != Color::Red)
          red = false;
      });
    });
    if (!red)
      return Verdict::fail(tag + " has a blue edge between A and B");
    const auto &path = p.blue_paths[i];
    VertexSet on(n);
    for (Vertex v : path) {
      if (v < 0 || v >= n || on.contains(v))
        return Verdict::fail(tag + " blue path repeats or leaves the range");
      on.insert(v);
    }
    if (!is_directed_path(blue, path))
      return Verdict::fail(tag + " path is not a blue path");
    if (on.intersects(paths))
      return Verdict::fail(tag + " path meets another path");
    paths |= on;
    if (!a.is_subset_of(on))
      return Verdict::fail(tag + " path does not cover A");
  }
  return Verdict::pass();
}

std::variant<RedBluePairs, std::vector<Vertex>>
red_blue_pairs_from_cycles(const ColoredTournament &g, const std::vector<std::vector<Vertex>> &cycles,
                           CycleMode mode, double a, double scale) {
  const double al = a * scale;
  const int n = g.n();
  const auto blue = g.view(Color::Blue);
  RedBluePairs out;

  if (mode == CycleMode::Medium) {
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      const double len = static_cast<double>(cycles[i].size());
      if (len < al - 1e-9 || len > 8.0 * al + 1e-9)
        throw PreconditionError("red_blue_pairs_from_cycles: cycle " + str(static_cast<long long>(i)) +
                                " is not medium");
    }
    const int threshold = ceil_int(al / 4.0);
    std::vector<VertexSet> parts;
    for (const auto &c : cycles)
      parts.emplace_back(n, std::span<const Vertex>(c));
    AuxRuleSpec rule;
    rule.rule = AuxRule::BlueOutCount;
    rule.count = threshold;
    const auto h = build_aux_digraph(g, parts, rule);
    const auto matching = maximal_red_red_matching(h);
    const int t = static_cast<int>(cycles.size());

    if (4 * static_cast<int>(matching.size()) <= t) {
      std::vector<bool> covered(static_cast<std::size_t>(t), false);
      for (auto [i, j] : matching)
        covered[static_cast<std::size_t>(i)] = covered[static_cast<std::size_t>(j)] = true;
      std::vector<int> rest;
      for (int i = 0; i < t; ++i)
        if (!covered[static_cast<std::size_t>(i)])
          rest.push_back(i);
      // Uncovered cycles pairwise have a blue direction in H.
      Tournament order(static_cast<int>(rest.size()));
      for (std::size_t x = 0; x < rest.size(); ++x)
        for (std::size_t y = x + 1; y < rest.size(); ++y)
          if (h.at(rest[x], rest[y]) != Color::Blue)
            order.orient(static_cast<Vertex>(y), static_cast<Vertex>(x));
      std::vector<std::vector<Vertex>> chain;
      for (Vertex v : hamiltonian_path(order))
        chain.push_back(cycles[static_cast<std::size_t>(rest[static_cast<std::size_t>(v)])]);
      return lift_path_through_cycles(g, Color::Blue, chain, threshold);
    }

    struct Raw {
      std::vector<Vertex> a, b;
      int path;
    };
    std::vector<Raw> raw;
    int k = n;
    for (auto [i, j] : matching) {
      const auto &ci = cycles[static_cast<std::size_t>(i)];
      const auto &cj = cycles[static_cast<std::size_t>(j)];
      Raw r{{}, {}, i};
      for (Vertex v : ci)
        if (blue.out_degree_in(v, parts[static_cast<std::size_t>(j)]) == 0)
          r.a.push_back(v);
      for (Vertex v : cj)
        if (blue.out_degree_in(v, parts[static_cast<std::size_t>(i)]) == 0)
          r.b.push_back(v);
      k = std::min({k, static_cast<int>(r.a.size()), static_cast<int>(r.b.size())});
      raw.push_back(std::move(r));
    }
    out.k = k;
    for (auto &r : raw) {
      r.a.resize(static_cast<std::size_t>(k));
      r.b.resize(static_cast<std::size_t>(k));
      out.pairs.emplace_back(VertexSet(n, std::span<const Vertex>(r.a)), VertexSet(n, std::span<const Vertex>(r.b)));
      out.blue_paths.push_back(cycles[static_cast<std::size_t>(r.path)]);
    }
    return out;
  }

  const int k = std::max(1, ceil_int(al));
  out.k = k;
  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    const auto &c = cycles[ci];
    const int r = static_cast<int>(c.size());
    if (static_cast<double>(r) <= 8.0 * al)
      throw PreconditionError("red_blue_pairs_from_cycles: cycle " + str(static_cast<long long>(ci)) +
                              " is not long");
    // A blue chord c[i] -> c[j] closes the cycle c[j] .. c[i] of length (i - j mod r) + 1.
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        if (i == j || j == (i + 1) % r || !blue.has_edge(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]))
          continue;
        const int closes = ((i - j) % r + r) % r + 1;
        if (closes >= k)
          throw ChordWitness("red_blue_pairs_from_cycles: blue chord " + str(c[static_cast<std::size_t>(i)]) +
                                 " -> " + str(c[static_cast<std::size_t>(j)]) + " closes a cycle of length " +
                                 str(closes),
                             static_cast<int>(ci), c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
      }
    const int h = r / 2;
    // 1-based A = 1..h-2k and B = h-k..r-k.
    const int a_len = h - 2 * k;
    const int b_first = h - k - 1;
    const int b_len = r - k - b_first;
    const int blocks = std::min(std::max(a_len, 0) / k, std::max(b_len, 0) / k);
    for (int s = 0; s < blocks; ++s) {
      VertexSet a(n), b(n);
      std::vector<Vertex> path;
      for (int x = 0; x < k; ++x) {
        const Vertex va = c[static_cast<std::size_t>(s * k + x)];
        a.insert(va);
        path.push_back(va);
        b.insert(c[static_cast<std::size_t>(b_first + s * k + x)]);
      }
      out.pairs.emplace_back(std::move(a), std::move(b));
      out.blue_paths.push_back(std::move(path));
    }
  }
  return out;
}

Verdict validate_candidate_sets(const CandidateSets &c) {
  if (c.d.size() != c.region.size())
    return Verdict::fail("candidate and region lists differ in length");
  for (std::size_t i = 0; i < c.d.size(); ++i) {
    if (c.d[i].empty())
      return Verdict::fail("part " + str(static_cast<long long>(i)) + " has no candidates");
    if (!c.d[i].is_subset_of(c.region[i]))
      return Verdict::fail("part " + str(static_cast<long long>(i)) + " has candidates outside its region");
  }
  return Verdict::pass();
}

std::vector<Piece> pieces_of(const PathSplit &s) {
  std::vector<Piece> out;
  for (const auto &p : s.parts)
    out.push_back(Piece{p.front(), p});
  return out;
}

Embedding assemble_from_candidates(const ColoredTournament &g, const OrientedTree &t,
                                   const std::vector<Piece> &parts, const CandidateSets &c, Color color,
                                   const LocalEmbedder &local) {
  const int m = t.size();
  const int q = static_cast<int>(parts.size());
  if (c.d.size() != parts.size() || c.region.size() != parts.size())
    throw PreconditionError("assemble_from_candidates: one candidate set per part is required");
  std::vector<int> owner(static_cast<std::size_t>(m), -1);
  for (int p = 0; p < q; ++p)
    for (int v : parts[static_cast<std::size_t>(p)].vertices)
      owner[static_cast<std::size_t>(v)] = p;
  if (q == 0 || owner[static_cast<std::size_t>(t.root())] != 0)
    throw PreconditionError("assemble_from_candidates: part 0 must hold the root");
  for (int p = 1; p < q; ++p) {
    const int r = parts[static_cast<std::size_t>(p)].root;
    if (t.parent(r) < 0 || owner[static_cast<std::size_t>(t.parent(r))] >= p)
      throw PreconditionError("assemble_from_candidates: parts are not listed parents first");
  }

  const auto view = g.view(color);
  std::vector<Vertex> map(static_cast<std::size_t>(m), -1);
  VertexSet free = VertexSet::full(g.n());
  for (int p = 0; p < q; ++p) {
    const auto &piece = parts[static_cast<std::size_t>(p)];
    VertexSet cand = c.d[static_cast<std::size_t>(p)] & free;
    if (p > 0) {
      const Vertex hp = map[static_cast<std::size_t>(t.parent(piece.root))];
      if (t.dir(piece.root) == EdgeDir::AwayFromParent)
        cand.intersect_words(view.out_row(hp));
      else
        cand.intersect_words(view.in_row(hp));
    }
    const auto root_pos = static_cast<std::size_t>(
        std::find(piece.vertices.begin(), piece.vertices.end(), piece.root) - piece.vertices.begin());
    bool placed = false;
    for (Vertex v = cand.first(); v != -1 && !placed; v = cand.next(v + 1)) {
      auto hosts = local(p, v, free);
      if (!hosts || hosts->size() != piece.vertices.size() || (*hosts)[root_pos] != v)
        continue;
      VertexSet mine(g.n());
      bool ok = true;
      for (Vertex h : *hosts) {
        if (!free.contains(h) || mine.contains(h))
          ok = false;
        else
          mine.insert(h);
      }
      if (!ok)
        continue;
      for (std::size_t i = 0; i < hosts->size(); ++i)
        map[static_cast<std::size_t>(piece.vertices[i])] = (*hosts)[i];
      free -= mine;
      placed = true;
    }
    if (!placed)
      throw EmbeddingError("assemble_from_candidates: part " + str(p) + " cannot be placed", p);
  }
  Embedding e{std::move(map), color};
  if (auto v = validate_embedding(g, t, e); !v)
    throw EmbeddingError("assemble_from_candidates: local embedder produced an invalid copy: " + v.clause, -1);
  return e;
}

namespace {

struct PartInfo {
  std::vector<int> owner;
  // For each part, its extending-leaves in vertex-list order and the part
  // each one leads to.
  std::vector<std::vector<std::pair<int, int>>> exits;
};

PartInfo part_info(const OrientedTree &t, const std::vector<Piece> &parts) {
  PartInfo info;
  info.owner.assign(static_cast<std::size_t>(t.size()), -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int v : parts[p].vertices)
      info.owner[static_cast<std::size_t>(v)] = static_cast<int>(p);
  info.exits.resize(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int v : parts[p].vertices)
      for (int c : t.children(v))
        if (info.owner[static_cast<std::size_t>(c)] != static_cast<int>(p))
          info.exits[p].emplace_back(v, info.owner[static_cast<std::size_t>(c)]);
  return info;
}

} // namespace

PairLift pair_lift_candidates(const ColoredTournament &g, const OrientedTree &t, const TreeSplit &split,
                              const RedBluePairs &pairs, const std::vector<int> &host, Color color, int slack) {
  const int q = static_cast<int>(split.parts.size());
  if (static_cast<int>(host.size()) != q)
    throw PreconditionError("pair_lift_candidates: one host pair per part is required");
  for (int h : host)
    if (h < 0 || h >= static_cast<int>(pairs.pairs.size()))
      throw PreconditionError("pair_lift_candidates: host pair out of range");
  const auto info = part_info(t, split.parts);
  const auto view = g.view(color);
  const int n = g.n();
  PairLift lift;
  lift.candidates.d.assign(static_cast<std::size_t>(q), VertexSet(n));
  lift.candidates.region.assign(static_cast<std::size_t>(q), VertexSet(n));
  lift.y.assign(static_cast<std::size_t>(q), VertexSet(n));
  lift.a_side.assign(static_cast<std::size_t>(q), VertexSet(n));
  lift.b_side.assign(static_cast<std::size_t>(q), VertexSet(n));
  lift.x.resize(static_cast<std::size_t>(q));
  for (int p = q - 1; p >= 0; --p) {
    const auto &[a, b] = pairs.pairs[static_cast<std::size_t>(host[static_cast<std::size_t>(p)])];
    const int size = static_cast<int>(split.parts[static_cast<std::size_t>(p)].vertices.size());
    auto &xs = lift.x[static_cast<std::size_t>(p)];
    for (auto [leaf, child] : info.exits[static_cast<std::size_t>(p)]) {
      (void)leaf;
      const auto &dc = lift.candidates.d[static_cast<std::size_t>(child)];
      VertexSet x(n);
      a.for_each([&](Vertex v) {
        if (view.out_degree_in(v, dc) > 0)
          x.insert(v);
      });
      xs.push_back(std::move(x));
    }
    VertexSet y(n);
    b.for_each([&](Vertex v) {
      bool ok = true;
      if (xs.empty())
        ok = view.out_degree_in(v, a) >= size + slack;
      for (const auto &x : xs)
        ok = ok && view.out_degree_in(v, x) >= size + slack;
      if (ok)
        y.insert(v);
    });
    VertexSet d(n);
    a.for_each([&](Vertex v) {
      if (view.out_degree_in(v, y) >= size)
        d.insert(v);
    });
    lift.y[static_cast<std::size_t>(p)] = std::move(y);
    lift.candidates.d[static_cast<std::size_t>(p)] = std::move(d);
    lift.candidates.region[static_cast<std::size_t>(p)] = a | b;
    lift.a_side[static_cast<std::size_t>(p)] = a;
    lift.b_side[static_cast<std::size_t>(p)] = b;
  }
  return lift;
}

LocalEmbedder pair_lift_embedder(const ColoredTournament &g, const OrientedTree &t, const TreeSplit &split,
                                 const PairLift &lift, Color color) {
  auto info = std::make_shared<PartInfo>(part_info(t, split.parts));
  auto depth = std::make_shared<std::vector<int>>(t.depths());
  return [&g, &t, &split, &lift, color, info, depth](int p, Vertex root_host,
                                                     const VertexSet &free) -> std::optional<std::vector<Vertex>> {
    const auto &piece = split.parts[static_cast<std::size_t>(p)];
    const auto &d = lift.candidates.d[static_cast<std::size_t>(p)];
    const auto &y = lift.y[static_cast<std::size_t>(p)];
    const auto &a = lift.a_side[static_cast<std::size_t>(p)];
    const auto &b = lift.b_side[static_cast<std::size_t>(p)];
    const auto view = g.view(color);
    const int base = (*depth)[static_cast<std::size_t>(piece.root)];
    std::vector<Vertex> host_of(static_cast<std::size_t>(t.size()), -1);
    VertexSet avail = free;
    if (!avail.contains(root_host))
      return std::nullopt;
    host_of[static_cast<std::size_t>(piece.root)] = root_host;
    avail.erase(root_host);
    // Which X set an extending-leaf must land in.
    std::vector<int> exit_index(static_cast<std::size_t>(t.size()), -1);
    const auto &exits = info->exits[static_cast<std::size_t>(p)];
    for (std::size_t s = 0; s < exits.size(); ++s)
      exit_index[static_cast<std::size_t>(exits[s].first)] = static_cast<int>(s);

    // Breadth-first inside the part.
    std::vector<int> queue{piece.root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      for (int c : t.children(u)) {
        if (info->owner[static_cast<std::size_t>(c)] != p)
          continue;
        const Vertex hu = host_of[static_cast<std::size_t>(u)];
        VertexSet cand = avail;
        if (t.dir(c) == EdgeDir::AwayFromParent)
          cand.intersect_words(view.out_row(hu));
        else
          cand.intersect_words(view.in_row(hu));
        const bool odd = ((*depth)[static_cast<std::size_t>(c)] - base) % 2 == 1;
        VertexSet preferred(g.n()), fallback(g.n());
        if (exit_index[static_cast<std::size_t>(c)] >= 0) {
          preferred = lift.x[static_cast<std::size_t>(p)][static_cast<std::size_t>(exit_index[static_cast<std::size_t>(c)])];
          fallback = a;
        } else if (odd) {
          preferred = y;
          fallback = b;
        } else {
          preferred = d;
          fallback = a;
        }
        Vertex pick = (cand & preferred).first();
        if (pick == -1)
          pick = (cand & fallback).first();
        if (pick == -1)
          return std::nullopt;
        host_of[static_cast<std::size_t>(c)] = pick;
        avail.erase(pick);
        queue.push_back(c);
      }
    }
    std::vector<Vertex> out;
    out.reserve(piece.vertices.size());
    for (int v : piece.vertices)
      out.push_back(host_of[static_cast<std::size_t>(v)]);
    return out;
  };
}

std::optional<std::vector<Vertex>> find_color_path(DigraphRef view, Vertex start, int order,
                                                   const VertexSet &allowed,
                                                   const std::function<bool(Vertex)> &end_ok, long long budget) {
  if (order < 1)
    throw PreconditionError("find_color_path: order must be at least 1");
  if (!allowed.contains(start))
    return std::nullopt;
  std::vector<Vertex> path{start};
  VertexSet used(allowed.universe());
  used.insert(start);
  long long nodes = 0;
  // Explicit stack of "next candidate to try" per depth.
  std::vector<Vertex> resume{0};
  while (!path.empty()) {
    if (static_cast<int>(path.size()) == order) {
      if (end_ok(path.back()))
        return path;
      used.erase(path.back());
      path.pop_back();
      resume.pop_back();
      continue;
    }
    VertexSet cand = allowed - used;
    cand.intersect_words(view.out_row(path.back()));
    const Vertex next = cand.next(resume.back());
    if (next == -1) {
      used.erase(path.back());
      path.pop_back();
      resume.pop_back();
      continue;
    }
    if (++nodes > budget)
      throw BudgetExceeded("find_color_path: node budget exhausted", nodes);
    resume.back() = next + 1;
    path.push_back(next);
    used.insert(next);
    resume.push_back(0);
  }
  return std::nullopt;
}

SubtreeEmbedder default_subtree_embedder(long long budget) {
  return [budget](DigraphRef view, const OrientedTree &piece, const VertexSet &allowed,
                  const VertexSet &roots) -> std::optional<std::vector<Vertex>> {
    if (auto map = greedy_place(view, piece, allowed, roots, 16))
      return map;
    if (auto map = guided_place(view, piece, allowed, roots, 16))
      return map;
    try {
      ExactOptions opt;
      opt.budget = budget;
      opt.allowed = &allowed;
      opt.root_candidates = &roots;
      return exact_place(view, piece, opt);
    } catch (const BudgetExceeded &) {
      return std::nullopt;
    }
  };
}

Embedding inout_embed(const ColoredTournament &g, const MindegreePair &pair, const OrientedTree &t, Color color,
                      const SubtreeEmbedder &embed_piece) {
  const auto split = in_out_split(t);
  std::size_t largest = 0;
  for (const auto &layer : split.layers)
    for (const auto &piece : layer)
      largest = std::max(largest, piece.vertices.size());
  if (static_cast<long long>(pair.k) < static_cast<long long>(t.size()) + static_cast<long long>(largest))
    throw PreconditionError("inout_embed: k = " + str(pair.k) + " is below m + largest piece = " +
                            str(t.size() + static_cast<long long>(largest)));
  const auto view = g.view(color);
  std::vector<Vertex> map(static_cast<std::size_t>(t.size()), -1);
  VertexSet free = pair.a | pair.b;
  for (std::size_t li = 0; li < split.layers.size(); ++li) {
    const int layer = static_cast<int>(li) + 1;
    const bool in_a = layer % 2 == 1;
    for (const auto &piece : split.layers[li]) {
      const auto sub = extract_subtree(t, piece.vertices, piece.root);
      VertexSet allowed = (in_a ? pair.a : pair.b) & free;
      VertexSet roots = allowed;
      if (layer > 1) {
        const Vertex hp = map[static_cast<std::size_t>(t.parent(piece.root))];
        if (in_a)
          roots.intersect_words(view.in_row(hp));
        else
          roots.intersect_words(view.out_row(hp));
      }
      auto hosts = embed_piece(view, sub.tree, allowed, roots);
      if (!hosts)
        throw EmbeddingError("inout_embed: layer " + str(layer) + " piece at " + str(piece.root) +
                                 " cannot be placed",
                             layer);
      for (std::size_t i = 0; i < hosts->size(); ++i) {
        map[static_cast<std::size_t>(sub.to_original[i])] = (*hosts)[i];
        free.erase((*hosts)[i]);
      }
    }
  }
  Embedding e{std::move(map), color};
  if (auto v = validate_embedding(g, t, e); !v)
    throw EmbeddingError("inout_embed: produced an invalid copy: " + v.clause, -1);
  return e;
}

} // namespace rtour
