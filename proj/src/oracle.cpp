#include "rtour/oracle.hpp"

#include "rtour/embed.hpp"
#include "rtour/error.hpp"

#include <algorithm>
#include <numeric>

namespace rtour {

namespace {

std::vector<std::pair<Vertex, Vertex>> pair_list(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      pairs.emplace_back(i, j);
  return pairs;
}

class ArrowSearch {
public:
  ArrowSearch(const Tournament &g, const OrientedTree &s, const OrientedTree &t, long long budget)
      : g_(g), s_(s), t_(t), budget_(budget), n_(g.n()) {
    for (auto [i, j] : pair_list(n_))
      edges_.push_back(g.has_edge(i, j) ? std::pair{i, j} : std::pair{j, i});
    for (int c = 0; c < 2; ++c) {
      out_[c] = BitMatrix(n_);
      in_[c] = BitMatrix(n_);
    }
    colors_.assign(edges_.size(), Color::Red);
  }

  ArrowResult run() {
    ArrowResult r;
    const bool symmetric = s_ == t_;
    if (edges_.empty()) {
      r.colorings_checked = 1;
      if (!contains(Color::Blue, s_) && !contains(Color::Red, t_)) {
        r.holds = false;
        r.witness = ColoredTournament(g_);
      }
      return r;
    }
    bool found = extend(0, symmetric);
    r.colorings_checked = nodes_;
    if (found) {
      r.holds = false;
      ColoredTournament w(g_);
      for (std::size_t e = 0; e < edges_.size(); ++e)
        w.set_color(edges_[e].first, edges_[e].second, colors_[e]);
      r.witness = std::move(w);
    }
    return r;
  }

private:
  bool contains(Color c, const OrientedTree &pattern) const {
    if (pattern.size() > n_)
      return false;
    const auto view = DigraphRef{&out_[static_cast<int>(c)], &in_[static_cast<int>(c)]};
    return exact_place(view, pattern, ExactOptions{}).has_value();
  }

  // Returns true when a colouring avoiding blue S and red T completes.
  bool extend(std::size_t e, bool fix_red) {
    if (e == edges_.size())
      return true;
    const auto [u, v] = edges_[e];
    for (Color c : {Color::Red, Color::Blue}) {
      if (fix_red && c == Color::Blue)
        break;
      if (++nodes_ > budget_)
        throw BudgetExceeded("arrow_holds: colouring budget exhausted", nodes_);
      const int ci = static_cast<int>(c);
      out_[ci].set(u, v);
      in_[ci].set(v, u);
      colors_[e] = c;
      const bool dead = c == Color::Blue ? contains(Color::Blue, s_) : contains(Color::Red, t_);
      if (!dead && extend(e + 1, false))
        return true;
      out_[ci].reset(u, v);
      in_[ci].reset(v, u);
    }
    return false;
  }

  const Tournament &g_;
  const OrientedTree &s_;
  const OrientedTree &t_;
  long long budget_;
  int n_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<Color> colors_;
  BitMatrix out_[2];
  BitMatrix in_[2];
  long long nodes_ = 0;
};

} // namespace

ArrowResult arrow_holds(const Tournament &g, const OrientedTree &s, const OrientedTree &t, long long budget) {
  return ArrowSearch(g, s, t, budget).run();
}

unsigned long long orientation_mask(const Tournament &g) {
  if (g.n() > 11)
    throw PreconditionError("orientation_mask: at most 11 vertices fit in 64 bits");
  unsigned long long mask = 0;
  int e = 0;
  for (auto [i, j] : pair_list(g.n())) {
    if (g.has_edge(i, j))
      mask |= 1ULL << e;
    ++e;
  }
  return mask;
}

Tournament tournament_from_mask(int n, unsigned long long mask) {
  if (n > 11)
    throw PreconditionError("tournament_from_mask: at most 11 vertices fit in 64 bits");
  Tournament g(n);
  int e = 0;
  for (auto [i, j] : pair_list(n)) {
    if (!((mask >> e) & 1ULL))
      g.orient(j, i);
    ++e;
  }
  return g;
}

unsigned long long canonical_mask(int n, unsigned long long mask) {
  const auto pairs = pair_list(n);
  // index[i][j] of pair {i, j}
  std::vector<std::vector<int>> index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    index[static_cast<std::size_t>(pairs[e].first)][static_cast<std::size_t>(pairs[e].second)] = static_cast<int>(e);
    index[static_cast<std::size_t>(pairs[e].second)][static_cast<std::size_t>(pairs[e].first)] = static_cast<int>(e);
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  unsigned long long best = mask;
  do {
    unsigned long long m = 0;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      // Edge i -> j in the original becomes perm[i] -> perm[j].
      const auto [i, j] = pairs[e];
      const bool forward = (mask >> e) & 1ULL;
      const int pi = perm[static_cast<std::size_t>(i)], pj = perm[static_cast<std::size_t>(j)];
      const bool new_forward = forward == (pi < pj);
      if (new_forward)
        m |= 1ULL << index[static_cast<std::size_t>(pi)][static_cast<std::size_t>(pj)];
    }
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

RamseyResult oriented_ramsey_number(const OrientedTree &h, int max_n, long long budget, bool dedup) {
  if (max_n > 11)
    throw PreconditionError("oriented_ramsey_number: max_n above 11 is out of reach");
  RamseyResult r;
  r.lower_bound = h.size();
  for (int n = h.size(); n <= max_n; ++n) {
    const int pairs = n * (n - 1) / 2;
    const unsigned long long total = 1ULL << pairs;
    bool all_hold = true;
    for (unsigned long long mask = 0; mask < total; ++mask) {
      if (dedup && canonical_mask(n, mask) != mask)
        continue;
      const Tournament g = tournament_from_mask(n, mask);
      ++r.tournaments_checked;
      ArrowResult a;
      try {
        a = arrow_holds(g, h, h, budget - r.colorings_checked);
      } catch (const BudgetExceeded &ex) {
        r.colorings_checked += ex.nodes();
        r.budget_exceeded = true;
        return r;
      }
      r.colorings_checked += a.colorings_checked;
      if (!a.holds) {
        all_hold = false;
        r.witness = std::move(a.witness);
        break;
      }
    }
    if (all_hold) {
      r.value = n;
      r.lower_bound = n;
      return r;
    }
    r.lower_bound = n + 1;
  }
  return r;
}

std::optional<std::vector<Vertex>> topological_order(DigraphRef view) {
  const int n = view.n();
  std::vector<int> indeg(static_cast<std::size_t>(n));
  const VertexSet all = VertexSet::full(n);
  std::vector<Vertex> ready, order;
  for (Vertex v = 0; v < n; ++v) {
    indeg[static_cast<std::size_t>(v)] = view.in_degree_in(v, all);
    if (indeg[static_cast<std::size_t>(v)] == 0)
      ready.push_back(v);
  }
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    order.push_back(v);
    VertexSet::from_words(n, view.out_row(v)).for_each([&](Vertex w) {
      if (--indeg[static_cast<std::size_t>(w)] == 0)
        ready.push_back(w);
    });
  }
  if (static_cast<int>(order.size()) != n)
    return std::nullopt;
  return order;
}

PathOrder longest_path_order(DigraphRef view) {
  const int n = view.n();
  if (n == 0)
    return {0, true};
  if (auto order = topological_order(view)) {
    std::vector<int> best(static_cast<std::size_t>(n), 1);
    int top = 1;
    for (Vertex v : *order) {
      const int here = best[static_cast<std::size_t>(v)];
      top = std::max(top, here);
      VertexSet::from_words(n, view.out_row(v)).for_each([&](Vertex w) {
        best[static_cast<std::size_t>(w)] = std::max(best[static_cast<std::size_t>(w)], here + 1);
      });
    }
    return {top, true};
  }
  if (n <= 20) {
    // ends[mask]: vertices at which a path through exactly `mask` can end.
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    std::vector<std::uint32_t> out(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v)
      out[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(view.out_row(v)[0]);
    int top = 1;
    for (Vertex v = 0; v < n; ++v)
      ends[std::size_t{1} << v] = 1U << v;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      std::uint32_t e = ends[mask];
      if (!e)
        continue;
      top = std::max(top, std::popcount(mask));
      std::uint32_t reach = 0;
      while (e) {
        const int v = std::countr_zero(e);
        e &= e - 1;
        reach |= out[static_cast<std::size_t>(v)];
      }
      reach &= ~mask;
      while (reach) {
        const int w = std::countr_zero(reach);
        reach &= reach - 1;
        ends[mask | (1U << w)] |= 1U << w;
      }
    }
    return {top, true};
  }
  // Greedy walks from a few starts: a lower bound only.
  int top = 1;
  const int starts = std::min(n, 16);
  for (int s = 0; s < starts; ++s) {
    const Vertex start = static_cast<Vertex>(static_cast<long long>(s) * n / starts);
    VertexSet free = VertexSet::full(n);
    free.erase(start);
    Vertex cur = start;
    int len = 1;
    for (;;) {
      VertexSet cand = free;
      cand.intersect_words(view.out_row(cur));
      const Vertex next = cand.first();
      if (next == -1)
        break;
      free.erase(next);
      cur = next;
      ++len;
    }
    top = std::max(top, len);
  }
  return {top, false};
}

MonoPathOrders longest_mono_paths(const ColoredTournament &g) {
  return {longest_path_order(g.view(Color::Red)), longest_path_order(g.view(Color::Blue))};
}

} // namespace rtour
