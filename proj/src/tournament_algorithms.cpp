#include "rtour/tournament_algorithms.hpp"

#include "rtour/error.hpp"

namespace rtour {

namespace {

long long count_between(DigraphRef view, const VertexSet &a, const VertexSet &b) {
  long long total = 0;
  if (a.size() <= b.size())
    a.for_each([&](Vertex u) { total += view.out_degree_in(u, b); });
  else
    b.for_each([&](Vertex v) { total += view.in_degree_in(v, a); });
  return total;
}

void require_disjoint(const VertexSet &a, const VertexSet &b) {
  if (a.intersects(b))
    throw PreconditionError("edge_count: vertex sets overlap");
}

} // namespace

long long edge_count(const ColoredTournament &g, const VertexSet &a, const VertexSet &b,
                     std::optional<Color> filter) {
  require_disjoint(a, b);
  return count_between(g.view(filter), a, b);
}

long long edge_count(const Tournament &g, const VertexSet &a, const VertexSet &b) {
  require_disjoint(a, b);
  return count_between(g.view(), a, b);
}

std::vector<Vertex> hamiltonian_path(const Tournament &g) {
  std::vector<Vertex> path;
  path.reserve(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) {
    if (path.empty() || g.has_edge(v, path.front())) {
      path.insert(path.begin(), v);
      continue;
    }
    if (g.has_edge(path.back(), v)) {
      path.push_back(v);
      continue;
    }
    // path.front() -> v and v -> path.back(): some consecutive pair switches.
    std::size_t lo = 0, hi = path.size() - 1;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      if (g.has_edge(path[mid], v))
        lo = mid;
      else
        hi = mid;
    }
    path.insert(path.begin() + static_cast<std::ptrdiff_t>(hi), v);
  }
  return path;
}

std::vector<Vertex> transitive_subtournament(const Tournament &g, const VertexSet &within) {
  std::vector<Vertex> head, tail;
  VertexSet rest = within;
  while (!rest.empty()) {
    const Vertex v = rest.first();
    rest.erase(v);
    VertexSet outs = rest;
    outs.intersect_words(g.out_row(v));
    VertexSet ins = rest - outs;
    if (outs.size() >= ins.size()) {
      head.push_back(v);
      rest = std::move(outs);
    } else {
      tail.push_back(v);
      rest = std::move(ins);
    }
  }
  head.insert(head.end(), tail.rbegin(), tail.rend());
  return head;
}

std::vector<Vertex> transitive_subtournament(const Tournament &g) {
  return transitive_subtournament(g, VertexSet::full(g.n()));
}

bool is_directed_path(DigraphRef view, const std::vector<Vertex> &seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!view.has_edge(seq[i], seq[i + 1]))
      return false;
  return true;
}

bool is_transitive_order(const Tournament &g, const std::vector<Vertex> &seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (!g.has_edge(seq[i], seq[j]))
        return false;
  return true;
}

} // namespace rtour
