#include "rtour/embed.hpp"

#include "rtour/rng.hpp"
#include "rtour/tournament_algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rtour {

namespace {

std::string str(long long v) { return std::to_string(v); }

} // namespace

Verdict validate_embedding(DigraphRef host, const OrientedTree &t, const std::vector<Vertex> &map) {
  if (static_cast<int>(map.size()) != t.size())
    return Verdict::fail("map covers " + str(static_cast<long long>(map.size())) + " of " + str(t.size()) +
                         " pattern vertices");
  std::vector<bool> used(static_cast<std::size_t>(host.n()), false);
  for (std::size_t v = 0; v < map.size(); ++v) {
    const Vertex h = map[v];
    if (h < 0 || h >= host.n())
      return Verdict::fail("pattern vertex " + str(static_cast<long long>(v)) + " maps outside the host");
    if (used[static_cast<std::size_t>(h)])
      return Verdict::fail("host vertex " + str(h) + " used twice");
    used[static_cast<std::size_t>(h)] = true;
  }
  for (auto [a, b] : t.edges())
    if (!host.has_edge(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
      return Verdict::fail("pattern edge " + str(a) + "->" + str(b) + " has no host edge " +
                           str(map[static_cast<std::size_t>(a)]) + "->" + str(map[static_cast<std::size_t>(b)]));
  return Verdict::pass();
}

Verdict validate_embedding(const ColoredTournament &g, const OrientedTree &t, const Embedding &e) {
  return validate_embedding(g.view(e.color), t, e.map);
}

std::vector<Vertex> embed_in_transitive(const OrientedTree &t, const std::vector<Vertex> &hosts) {
  const int m = t.size();
  if (!t.is_directed())
    throw PreconditionError("embed_in_transitive: tree must be directed");
  if (static_cast<int>(hosts.size()) < m)
    throw PreconditionError("embed_in_transitive: " + str(static_cast<long long>(hosts.size())) +
                            " hosts for a tree on " + str(m) + " vertices");
  const bool out = t.is_out_directed();
  std::vector<Vertex> map(static_cast<std::size_t>(m));
  const auto order = t.dfs_preorder();
  for (int i = 0; i < m; ++i)
    map[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] =
        hosts[static_cast<std::size_t>(out ? i : m - 1 - i)];
  return map;
}

std::optional<std::vector<Vertex>> greedy_place(DigraphRef view, const OrientedTree &t,
                                                const VertexSet &allowed,
                                                const VertexSet &root_candidates, int max_roots,
                                                int *stuck) {
  const auto order = t.bfs_order();
  std::vector<Vertex> map(static_cast<std::size_t>(t.size()), -1);
  int tried = 0;
  int last_stuck = t.root();
  for (Vertex r = root_candidates.first(); r != -1 && tried < max_roots; r = root_candidates.next(r + 1)) {
    if (!allowed.contains(r))
      continue;
    ++tried;
    VertexSet free = allowed;
    free.erase(r);
    map[static_cast<std::size_t>(t.root())] = r;
    bool ok = true;
    for (std::size_t i = 1; i < order.size(); ++i) {
      const int v = order[i];
      const Vertex hp = map[static_cast<std::size_t>(t.parent(v))];
      VertexSet cand = free;
      cand.intersect_words(t.dir(v) == EdgeDir::AwayFromParent ? view.out_row(hp) : view.in_row(hp));
      const Vertex h = cand.first();
      if (h == -1) {
        last_stuck = v;
        ok = false;
        break;
      }
      map[static_cast<std::size_t>(v)] = h;
      free.erase(h);
    }
    if (ok)
      return map;
  }
  if (stuck)
    *stuck = last_stuck;
  return std::nullopt;
}

std::optional<std::vector<Vertex>> guided_place(DigraphRef view, const OrientedTree &t, const VertexSet &allowed,
                                                const VertexSet &root_candidates, int max_roots) {
  const auto order = t.bfs_order();
  const int m = t.size();
  std::vector<char> wants_out(static_cast<std::size_t>(m), 0), wants_in(static_cast<std::size_t>(m), 0);
  for (int v = 0; v < m; ++v)
    if (v != t.root())
      (t.dir(v) == EdgeDir::AwayFromParent ? wants_out : wants_in)[static_cast<std::size_t>(t.parent(v))] = 1;
  // Room left for v's children if v goes to h; 0 for leaves.
  const auto score = [&](int v, Vertex h, const VertexSet &free) {
    int s = std::numeric_limits<int>::max();
    if (wants_out[static_cast<std::size_t>(v)])
      s = std::min(s, view.out_degree_in(h, free));
    if (wants_in[static_cast<std::size_t>(v)])
      s = std::min(s, view.in_degree_in(h, free));
    return s == std::numeric_limits<int>::max() ? 0 : s;
  };

  std::vector<std::pair<int, Vertex>> roots;
  (root_candidates & allowed).for_each([&](Vertex r) { roots.emplace_back(-score(t.root(), r, allowed), r); });
  std::stable_sort(roots.begin(), roots.end());
  std::vector<Vertex> map(static_cast<std::size_t>(m), -1);
  int tried = 0;
  for (const auto &[neg, r] : roots) {
    if (tried++ >= max_roots)
      break;
    VertexSet free = allowed;
    free.erase(r);
    map[static_cast<std::size_t>(t.root())] = r;
    bool ok = true;
    for (std::size_t i = 1; i < order.size(); ++i) {
      const int v = order[i];
      const Vertex hp = map[static_cast<std::size_t>(t.parent(v))];
      VertexSet cand = free;
      cand.intersect_words(t.dir(v) == EdgeDir::AwayFromParent ? view.out_row(hp) : view.in_row(hp));
      Vertex h = -1;
      int best = -1;
      cand.for_each([&](Vertex c) {
        const int sc = score(v, c, free);
        if (sc > best) {
          best = sc;
          h = c;
        }
      });
      if (h == -1) {
        ok = false;
        break;
      }
      map[static_cast<std::size_t>(v)] = h;
      free.erase(h);
    }
    if (ok)
      return map;
  }
  return std::nullopt;
}

Embedding greedy_min_degree_embed(const ColoredTournament &g, const VertexSet &u, const OrientedTree &t,
                                  Color color) {
  if (u.empty())
    throw PreconditionError("greedy_min_degree_embed: empty host set");
  int stuck = -1;
  auto map = greedy_place(g.view(color), t, u, VertexSet(g.n(), {u.first()}), 1, &stuck);
  if (!map)
    throw EmbeddingError("greedy embedding got stuck at pattern vertex " + str(stuck), stuck);
  return Embedding{std::move(*map), color};
}

Embedding find_red_tree_in_sparse_blue(const ColoredTournament &g, const VertexSet &u,
                                       const OrientedTree &t, double epsilon) {
  const long double size = u.size();
  long long blue = 0;
  const auto bview = g.view(Color::Blue);
  u.for_each([&](Vertex v) { blue += bview.out_degree_in(v, u); });
  if (static_cast<long double>(blue) > epsilon * epsilon / 32.0L * size * size)
    throw PreconditionError("find_red_tree_in_sparse_blue: U spans " + str(blue) +
                            " blue edges, more than (eps^2/32)|U|^2");
  if (static_cast<long double>(t.size()) > epsilon / 4.0L * size)
    throw PreconditionError("find_red_tree_in_sparse_blue: tree larger than (eps/4)|U|");

  const auto rview = g.view(Color::Red);
  const long double low = 3.0L * epsilon / 4.0L * size;
  VertexSet x_plus(g.n()), x_minus(g.n());
  u.for_each([&](Vertex v) {
    if (rview.out_degree_in(v, u) < low)
      x_plus.insert(v);
    if (rview.in_degree_in(v, u) < low)
      x_minus.insert(v);
  });
  const long double cap = epsilon / 4.0L * size;
  if (x_plus.size() >= cap)
    throw PseudorandomnessViolation("X+ has at least (eps/4)|U| vertices", x_plus);
  if (x_minus.size() >= cap)
    throw PseudorandomnessViolation("X- has at least (eps/4)|U| vertices", x_minus);
  const VertexSet rest = u - x_plus - x_minus;
  if (rest.empty())
    throw PseudorandomnessViolation("nothing left after removing X+ and X-", u);
  return greedy_min_degree_embed(g, rest, t, Color::Red);
}

std::vector<Vertex> long_cycle(const ColoredTournament &g, Color color, const VertexSet &u) {
  const auto view = g.view(color);
  int d = -1;
  Vertex sink = -1;
  u.for_each([&](Vertex v) {
    const int out = view.out_degree_in(v, u);
    if (d == -1 || out < d) {
      d = out;
      sink = v;
    }
  });
  if (d <= 0)
    throw EmbeddingError("long_cycle: vertex " + str(sink) + " has no colour out-neighbour in U", sink);

  std::vector<Vertex> path{u.first()};
  std::vector<int> position(static_cast<std::size_t>(g.n()), -1);
  position[static_cast<std::size_t>(path[0])] = 0;
  VertexSet off_path = u;
  off_path.erase(path[0]);
  for (;;) {
    const Vertex last = path.back();
    VertexSet next = off_path;
    next.intersect_words(view.out_row(last));
    if (next.empty())
      break;
    const Vertex w = next.first();
    position[static_cast<std::size_t>(w)] = static_cast<int>(path.size());
    path.push_back(w);
    off_path.erase(w);
  }
  VertexSet back = u - off_path;
  back.intersect_words(view.out_row(path.back()));
  int start = static_cast<int>(path.size());
  back.for_each([&](Vertex w) { start = std::min(start, position[static_cast<std::size_t>(w)]); });
  return {path.begin() + start, path.end()};
}

OrderingResult low_outdegree_ordering(const ColoredTournament &g, Color color, const VertexSet &u,
                                      int threshold) {
  const auto view = g.view(color);
  std::vector<int> degree(static_cast<std::size_t>(g.n()), 0);
  u.for_each([&](Vertex v) { degree[static_cast<std::size_t>(v)] = view.out_degree_in(v, u); });
  VertexSet remaining = u;
  OrderingResult out;
  // Lowest-id vertex whose out-degree in `remaining` is at most threshold.
  VertexSet ready(g.n());
  u.for_each([&](Vertex v) {
    if (degree[static_cast<std::size_t>(v)] <= threshold)
      ready.insert(v);
  });
  while (!remaining.empty()) {
    const Vertex v = ready.first();
    if (v == -1) {
      out.dense = remaining;
      return out;
    }
    ready.erase(v);
    remaining.erase(v);
    out.order.push_back(v);
    VertexSet preds = remaining;
    preds.intersect_words(view.in_row(v));
    preds.for_each([&](Vertex w) {
      if (--degree[static_cast<std::size_t>(w)] <= threshold)
        ready.insert(w);
    });
  }
  return out;
}

Verdict validate_mindegree_pair(const ColoredTournament &g, const MindegreePair &p) {
  if (p.a.intersects(p.b))
    return Verdict::fail("A and B overlap");
  if (p.a.empty() || p.b.empty())
    return Verdict::fail("empty side");
  const auto view = g.view(p.color);
  Verdict v;
  p.a.for_each([&](Vertex x) {
    if (v.ok && view.out_degree_in(x, p.b) < p.k)
      v = Verdict::fail("vertex " + str(x) + " of A has fewer than k out-neighbours in B");
  });
  p.b.for_each([&](Vertex y) {
    if (v.ok && view.in_degree_in(y, p.a) < p.k)
      v = Verdict::fail("vertex " + str(y) + " of B has fewer than k in-neighbours in A");
  });
  return v;
}

MindegreePair mindegree_pair(const ColoredTournament &g, Color color, const VertexSet &u, double delta,
                             std::uint64_t seed, int max_trials) {
  if (!(delta > 0.0 && delta <= 0.25))
    throw PreconditionError("mindegree_pair: delta must lie in (0, 1/4]");
  const auto view = g.view(color);
  const long double size = u.size();
  long long edges = 0;
  u.for_each([&](Vertex v) { edges += view.out_degree_in(v, u); });
  if (u.empty() || static_cast<long double>(edges) < delta * size * size)
    throw PreconditionError("mindegree_pair: U spans fewer than delta |U|^2 colour edges");
  const long double target = delta / 4.0L * size * size;
  const int k = static_cast<int>(std::ceil(delta / 4.0L * size - 1e-12L));

  for (int trial = 0; trial < max_trials; ++trial) {
    SplitMix64 rng(derive_seed(seed, "mindegree_pair", static_cast<std::uint64_t>(trial)));
    VertexSet x(g.n()), y(g.n());
    u.for_each([&](Vertex v) { (rng.coin() ? x : y).insert(v); });
    long long cross = 0;
    x.for_each([&](Vertex v) { cross += view.out_degree_in(v, y); });
    if (static_cast<long double>(cross) < target)
      continue;

    std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
    std::vector<Vertex> doomed;
    x.for_each([&](Vertex v) {
      if ((deg[static_cast<std::size_t>(v)] = view.out_degree_in(v, y)) < k)
        doomed.push_back(v);
    });
    y.for_each([&](Vertex v) {
      if ((deg[static_cast<std::size_t>(v)] = view.in_degree_in(v, x)) < k)
        doomed.push_back(v);
    });
    VertexSet a = x, b = y;
    while (!doomed.empty()) {
      const Vertex v = doomed.back();
      doomed.pop_back();
      const bool in_a = a.contains(v);
      if (!in_a && !b.contains(v))
        continue;
      VertexSet touched = in_a ? b : a;
      touched.intersect_words(in_a ? view.out_row(v) : view.in_row(v));
      (in_a ? a : b).erase(v);
      touched.for_each([&](Vertex w) {
        if (--deg[static_cast<std::size_t>(w)] == k - 1)
          doomed.push_back(w);
      });
    }
    if (!a.empty() && !b.empty())
      return MindegreePair{std::move(a), std::move(b), k, color};
  }
  throw ProbabilisticFailure("mindegree_pair: no good bipartition in " + str(max_trials) + " trials");
}

namespace {

class Backtracker {
public:
  Backtracker(DigraphRef view, const OrientedTree &t, const ExactOptions &opt)
      : view_(view), t_(t), opt_(opt), order_(t.bfs_order()),
        allowed_(opt.allowed ? *opt.allowed : VertexSet::full(view.n())),
        map_(static_cast<std::size_t>(t.size()), -1) {
    const int n = view.n();
    host_out_.assign(static_cast<std::size_t>(n), 0);
    host_in_.assign(static_cast<std::size_t>(n), 0);
    allowed_.for_each([&](Vertex v) {
      host_out_[static_cast<std::size_t>(v)] = view.out_degree_in(v, allowed_);
      host_in_[static_cast<std::size_t>(v)] = view.in_degree_in(v, allowed_);
    });
    for (int v = 0; v < t.size(); ++v) {
      pat_out_.push_back(t.out_degree(v));
      pat_in_.push_back(t.in_degree(v));
    }
  }

  std::optional<std::vector<Vertex>> run() {
    if (t_.size() > allowed_.size())
      return std::nullopt;
    VertexSet roots = allowed_;
    if (opt_.root_candidates)
      roots &= *opt_.root_candidates;
    free_ = allowed_;
    if (place(0, roots))
      return map_;
    return std::nullopt;
  }

private:
  bool fits(int v, Vertex h) const {
    return host_out_[static_cast<std::size_t>(h)] >= pat_out_[static_cast<std::size_t>(v)] &&
           host_in_[static_cast<std::size_t>(h)] >= pat_in_[static_cast<std::size_t>(v)];
  }

  bool place(std::size_t i, const VertexSet &candidates) {
    if (i == order_.size())
      return true;
    const int v = order_[i];
    for (Vertex h = candidates.first(); h != -1; h = candidates.next(h + 1)) {
      if (!free_.contains(h) || !fits(v, h))
        continue;
      if (++nodes_ > opt_.budget)
        throw BudgetExceeded("exact embedding search exceeded " + str(opt_.budget) + " nodes", nodes_);
      map_[static_cast<std::size_t>(v)] = h;
      free_.erase(h);
      if (i + 1 == order_.size() || place(i + 1, next_candidates(i + 1)))
        return true;
      free_.insert(h);
    }
    map_[static_cast<std::size_t>(v)] = -1;
    return false;
  }

  VertexSet next_candidates(std::size_t i) const {
    const int v = order_[i];
    const Vertex hp = map_[static_cast<std::size_t>(t_.parent(v))];
    VertexSet cand = free_;
    cand.intersect_words(t_.dir(v) == EdgeDir::AwayFromParent ? view_.out_row(hp) : view_.in_row(hp));
    return cand;
  }

  DigraphRef view_;
  const OrientedTree &t_;
  const ExactOptions &opt_;
  std::vector<int> order_;
  VertexSet allowed_;
  VertexSet free_;
  std::vector<Vertex> map_;
  std::vector<int> host_out_, host_in_, pat_out_, pat_in_;
  long long nodes_ = 0;
};

} // namespace

std::optional<std::vector<Vertex>> exact_place(DigraphRef view, const OrientedTree &t, const ExactOptions &opt) {
  return Backtracker(view, t, opt).run();
}

std::optional<Embedding> exact_embed(const ColoredTournament &g, const OrientedTree &t,
                                     std::optional<Color> color, long long budget) {
  ExactOptions opt;
  opt.budget = budget;
  auto map = exact_place(g.view(color), t, opt);
  if (!map)
    return std::nullopt;
  return Embedding{std::move(*map), color};
}

} // namespace rtour
