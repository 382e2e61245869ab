#include "rtour/pseudorandom.hpp"

#include "rtour/error.hpp"
#include "rtour/rng.hpp"
#include "rtour/tournament_algorithms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace rtour {

void PseudorandomnessParams::validate() const {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw PreconditionError("epsilon must lie in (0, 1/2)");
  if (k && *k < 1)
    throw PreconditionError("k must be at least 1");
  if (!(sigma > 0.0))
    throw PreconditionError("sigma must be positive");
}

int PseudorandomnessParams::resolve_k(int n) const {
  if (k)
    return *k;
  return std::max(1, static_cast<int>(std::ceil(sigma * std::log2(static_cast<double>(std::max(n, 1))) - 1e-9)));
}

std::string_view to_string(PseudoVerdict v) noexcept {
  switch (v) {
  case PseudoVerdict::CertifiedExhaustive:
    return "certified-exhaustive";
  case PseudoVerdict::CertifiedSampled:
    return "certified-sampled";
  case PseudoVerdict::Refuted:
    return "refuted";
  }
  return "unknown";
}

namespace {

bool violates(long long edges, long long a, long long b, double eps) {
  return static_cast<long double>(edges) < static_cast<long double>(eps) * a * b;
}

// edges/area < best_edges/best_area
bool smaller_density(long long edges, long long area, const std::optional<std::pair<long long, long long>> &best) {
  if (!best)
    return true;
  return static_cast<__int128>(edges) * best->second < static_cast<__int128>(best->first) * area;
}

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

} // namespace

PseudoReport check_exhaustive(const Tournament &g, const PseudorandomnessParams &p, long long budget) {
  p.validate();
  const int n = g.n();
  const int k = p.resolve_k(n);
  PseudoReport report;
  report.k = k;
  report.verdict = PseudoVerdict::CertifiedExhaustive;
  if (2 * k > n)
    return report;
  const long long sets = binomial_capped(n, k, budget);
  if (sets > budget)
    throw BudgetExceeded("check_exhaustive: C(" + std::to_string(n) + ", " + std::to_string(k) +
                             ") subsets exceed the budget; too large for exhaustive mode",
                         budget);

  const auto view = g.view();
  const long long area = static_cast<long long>(k) * k;
  std::vector<int> comb(static_cast<std::size_t>(k));
  std::iota(comb.begin(), comb.end(), 0);
  std::vector<std::pair<int, Vertex>> indeg;
  indeg.reserve(static_cast<std::size_t>(n));
  std::optional<PseudoWitness> best;
  for (;;) {
    VertexSet a(n);
    for (int v : comb)
      a.insert(v);
    indeg.clear();
    for (Vertex v = 0; v < n; ++v)
      if (!a.contains(v))
        indeg.emplace_back(view.in_degree_in(v, a), v);
    std::partial_sort(indeg.begin(), indeg.begin() + k, indeg.end());
    long long edges = 0;
    for (int i = 0; i < k; ++i)
      edges += indeg[static_cast<std::size_t>(i)].first;
    ++report.trials;
    if (smaller_density(edges, area, report.min_density)) {
      report.min_density = {edges, area};
      VertexSet b(n);
      for (int i = 0; i < k; ++i)
        b.insert(indeg[static_cast<std::size_t>(i)].second);
      best = PseudoWitness{a, b, edges};
    }
    // Next combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i)
      --i;
    if (i < 0)
      break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  if (best && violates(best->edges, k, k, p.epsilon)) {
    report.verdict = PseudoVerdict::Refuted;
    report.witness = std::move(best);
  }
  return report;
}

namespace {

constexpr long long kChunk = 256;

struct ChunkResult {
  long long examined = 0;
  std::optional<std::pair<long long, long long>> min_density;
  std::optional<PseudoWitness> witness;
};

ChunkResult run_chunk(const Tournament &g, const std::vector<Vertex> &by_score, int k, double eps,
                      std::uint64_t seed, long long chunk, long long first, long long last) {
  const int n = g.n();
  const int half = n / 2;
  SplitMix64 rng(derive_seed(seed, "check_sampled", static_cast<std::uint64_t>(chunk)));
  ChunkResult out;
  for (long long t = first; t < last; ++t) {
    const int sa = static_cast<int>(rng.between(k, half));
    const int sb = static_cast<int>(rng.between(k, half));
    VertexSet a(n), b(n);
    if (t % 2 == 0) {
      const auto pick = sample_without_replacement(rng, n, sa + sb);
      for (int i = 0; i < sa; ++i)
        a.insert(pick[static_cast<std::size_t>(i)]);
      for (int i = sa; i < sa + sb; ++i)
        b.insert(pick[static_cast<std::size_t>(i)]);
    } else {
      const int b_start = static_cast<int>(rng.between(0, half - sb));
      const int a_start = static_cast<int>(rng.between(half, n - sa));
      for (int i = 0; i < sb; ++i)
        b.insert(by_score[static_cast<std::size_t>(b_start + i)]);
      for (int i = 0; i < sa; ++i)
        a.insert(by_score[static_cast<std::size_t>(a_start + i)]);
    }
    const long long edges = edge_count(g, a, b);
    const long long area = static_cast<long long>(sa) * sb;
    ++out.examined;
    if (smaller_density(edges, area, out.min_density))
      out.min_density = {edges, area};
    if (violates(edges, sa, sb, eps)) {
      out.witness = PseudoWitness{std::move(a), std::move(b), edges};
      break;
    }
  }
  return out;
}

} // namespace

PseudoReport check_sampled(const Tournament &g, const PseudorandomnessParams &p, long long trials,
                           std::uint64_t seed, int threads) {
  p.validate();
  if (trials < 0)
    throw PreconditionError("check_sampled: trials must be non-negative");
  const int n = g.n();
  const int k = p.resolve_k(n);
  PseudoReport report;
  report.k = k;
  report.verdict = PseudoVerdict::CertifiedSampled;
  if (2 * k > n || trials == 0)
    return report;

  std::vector<Vertex> by_score(static_cast<std::size_t>(n));
  std::iota(by_score.begin(), by_score.end(), 0);
  std::stable_sort(by_score.begin(), by_score.end(),
                   [&](Vertex x, Vertex y) { return g.out_degree(x) > g.out_degree(y); });

  const long long chunks = (trials + kChunk - 1) / kChunk;
  std::vector<ChunkResult> results(static_cast<std::size_t>(chunks));
  std::atomic<long long> next{0};
  std::atomic<long long> first_bad{chunks};
  auto worker = [&] {
    for (;;) {
      const long long c = next.fetch_add(1);
      if (c >= chunks || c > first_bad.load())
        return;
      auto r = run_chunk(g, by_score, k, p.epsilon, seed, c, c * kChunk, std::min(trials, (c + 1) * kChunk));
      const bool bad = r.witness.has_value();
      results[static_cast<std::size_t>(c)] = std::move(r);
      if (bad) {
        long long cur = first_bad.load();
        while (c < cur && !first_bad.compare_exchange_weak(cur, c)) {
        }
      }
    }
  };
  int workers = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = static_cast<int>(std::min<long long>(workers, chunks));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < workers; ++i)
      pool.emplace_back(worker);
  }

  for (long long c = 0; c < chunks; ++c) {
    auto &r = results[static_cast<std::size_t>(c)];
    report.trials += r.examined;
    if (r.min_density && smaller_density(r.min_density->first, r.min_density->second, report.min_density))
      report.min_density = r.min_density;
    if (r.witness) {
      report.verdict = PseudoVerdict::Refuted;
      report.witness = std::move(r.witness);
      break;
    }
  }
  return report;
}

bool witness_is_valid(const Tournament &g, const PseudorandomnessParams &p, const PseudoWitness &w) {
  const int k = p.resolve_k(g.n());
  if (w.a.universe() != g.n() || w.b.universe() != g.n() || w.a.intersects(w.b))
    return false;
  const int sa = w.a.size(), sb = w.b.size();
  if (sa < k || sb < k)
    return false;
  long long edges = 0;
  w.a.for_each([&](Vertex u) {
    w.b.for_each([&](Vertex v) { edges += g.has_edge(u, v) ? 1 : 0; });
  });
  return edges == w.edges && violates(edges, sa, sb, p.epsilon);
}

} // namespace rtour
