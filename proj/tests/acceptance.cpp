// Acceptance suite: one PASS/FAIL line per criterion. Exits 0 once every
// criterion has run; --strict makes any FAIL a non-zero exit.

#include "oracles.hpp"

#include "rtour/embed.hpp"
#include "rtour/generators.hpp"
#include "rtour/oracle.hpp"
#include "rtour/pseudorandom.hpp"
#include "rtour/rng.hpp"
#include "rtour/solver.hpp"
#include "rtour/splits.hpp"
#include "rtour/tree.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

using namespace rtour;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string &name, const std::function<Outcome()> &body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception &e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  failures += !o.pass;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << name << ": " << o.detail << " ("
            << std::fixed << std::setprecision(1) << seconds_since(start) << " s)" << std::endl;
}

bool refutes_both(const ColoredTournament &g, const OrientedTree &s, const OrientedTree &t) {
  return !exact_embed(g, s, Color::Blue) && !exact_embed(g, t, Color::Red);
}

OrientedTree random_directed(int m, std::uint64_t seed) {
  return random_oriented_tree(m, seed % 2 ? TreeMode::OutDirected : TreeMode::InDirected, seed);
}

int min_out_degree(const ColoredTournament &g, Color c, const VertexSet &u) {
  int d = g.n();
  u.for_each([&](Vertex v) { d = std::min(d, g.view(c).out_degree_in(v, u)); });
  return d;
}

bool is_color_cycle(const ColoredTournament &g, Color c, const std::vector<Vertex> &cyc) {
  VertexSet seen(g.n());
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (seen.contains(cyc[i]) || !g.has_colored_edge(cyc[i], cyc[(i + 1) % cyc.size()], c))
      return false;
    seen.insert(cyc[i]);
  }
  return true;
}

Outcome ramsey_paths() {
  const auto start = Clock::now();
  const auto p2 = oriented_ramsey_number(directed_path(2), 6);
  const auto p3 = oriented_ramsey_number(directed_path(3), 6);
  const double wall = seconds_since(start);
  std::ostringstream d;
  d << "R(P2) = " << (p2.value ? std::to_string(*p2.value) : "?") << ", R(P3) = "
    << (p3.value ? std::to_string(*p3.value) : "?") << " (expected 2 and 5), " << p3.tournaments_checked
    << " tournaments, " << std::setprecision(2) << wall << " s < 60 s";
  return {p2.value == 2 && p3.value == 5 && wall < 60.0, d.str()};
}

Outcome tightness_witness() {
  const auto p3 = directed_path(3);
  const auto r = arrow_holds(transitive_tournament(4), p3, p3);
  const bool witness_ok = r.witness && r.witness->base() == transitive_tournament(4) && refutes_both(*r.witness, p3, p3);
  const auto block = block_coloring(3);
  const bool block_ok = block.base() == transitive_tournament(4) && refutes_both(block, p3, p3);
  std::ostringstream d;
  d << "holds = " << (r.holds ? "true" : "false") << ", search witness re-validated: " << (witness_ok ? "yes" : "no")
    << ", block colouring re-validated: " << (block_ok ? "yes" : "no");
  return {!r.holds && witness_ok && block_ok, d.str()};
}

Outcome block_lower_bound() {
  std::ostringstream d;
  bool ok = true;
  for (int n = 2; n <= 8; ++n) {
    const auto r = longest_mono_paths(block_coloring(n));
    ok = ok && r.red.exact && r.blue.exact && r.red.order == n - 1 && r.blue.order == n - 1;
    d << "n=" << n << ":(" << r.red.order << "," << r.blue.order << ") ";
  }
  return {ok, d.str() + "expected (n-1, n-1)"};
}

Outcome interval_bound() {
  const auto start = Clock::now();
  int runs = 0, within = 0, inexact = 0;
  std::ostringstream d;
  for (int n : {256, 1024, 4096}) {
    const double bound = 3.0 * n / std::sqrt(std::log2(n));
    int worst = 0;
    for (int s = 0; s < 20; ++s) {
      const auto g = interval_coloring(random_tournament(n, derive_seed(4, "interval", static_cast<std::uint64_t>(n * 100 + s))));
      const auto r = longest_mono_paths(g);
      const int longest = std::max(r.red.order, r.blue.order);
      inexact += !(r.red.exact && r.blue.exact);
      within += longest <= bound;
      worst = std::max(worst, longest);
      ++runs;
    }
    d << "N=" << n << " max " << worst << " <= " << std::fixed << std::setprecision(0) << bound << "; ";
  }
  const double wall = seconds_since(start);
  d << within << "/" << runs << " within, " << inexact << " inexact, " << std::setprecision(1) << wall << " s < 300 s";
  return {within == runs && inexact == 0 && wall < 300.0, d.str()};
}

Outcome split_suites() {
  int violations = 0;
  std::string first;
  auto note = [&](const std::string &what, int m, const Verdict &v) {
    if (v.ok)
      return;
    if (violations++ == 0)
      first = what + " m=" + std::to_string(m) + ": " + v.clause;
  };
  std::size_t max_core_layers = 0;
  for (int s = 0; s < 1000; ++s) {
    const auto us = static_cast<std::uint64_t>(s);
    // Trees qualify for the leaf bound m^(1/6) only from m = 64 on.
    const int m = 64 + static_cast<int>(derive_seed(5, "m", us) % 1937);
    const int lf = static_cast<int>(std::floor(std::pow(m, 1.0 / 6) + 1e-9));
    const auto out = random_tree_with_leaf_budget(m, lf, TreeMode::OutDirected, derive_seed(5, "out", us));
    for (double c : {2.0, 3.0})
      note("tree-split c=" + std::to_string(static_cast<int>(c)), m,
           validate_tree_split(out, tree_split(out, c, 1.0 / 6), c, 1.0 / 6));
    note("path-split", m, validate_path_split(out, path_split(out, 1.0 / 6), 1.0 / 6));

    const int mc = 1 + static_cast<int>(derive_seed(5, "mc", us) % 2000);
    const auto any = random_oriented_tree(mc, TreeMode::UniformOriented, derive_seed(5, "any", us));
    const long long k = std::max(2LL, static_cast<long long>(std::ceil(std::pow(mc, 1.0 / 6) - 1e-9)));
    const auto core = core_split(any, {k, 1});
    note("core-split", mc, validate_core_split(any, core, {k, 1}));
    if (core.layers.size() > 6)
      note("core-split layers", mc, Verdict::fail(std::to_string(core.layers.size()) + " layers > 6"));
    max_core_layers = std::max(max_core_layers, core.layers.size());

    const auto arb = random_oriented_tree(m, TreeMode::OutDirected, derive_seed(5, "dpl", us));
    note("dpl", m, validate_dpl(arb, dpl(arb)));
    note("in-out", mc, validate_in_out_split(any, in_out_split(any)));
  }
  std::ostringstream d;
  d << "5 validators x 1000 trees, " << violations << " violations, max core layers " << max_core_layers;
  if (violations)
    d << "; first: " << first;
  return {violations == 0, d.str()};
}

Outcome constructive_lemmas() {
  const double eps = 0.25;
  int sparse_ok = 0, sparse_runs = 0, certified = 0;
  std::string first;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const int n = 512;
    const auto base = random_tournament(n, derive_seed(6, "host", s));
    PseudorandomnessParams p;
    p.epsilon = eps;
    certified += check_sampled(base, p, 200, derive_seed(6, "cert", s)).verdict != PseudoVerdict::Refuted;
    // Blue edges sparsified below (eps^2 / 32) n^2 = 512.
    SplitMix64 rng(derive_seed(6, "blue", s));
    ColoredTournament g(base, [&](Vertex, Vertex) { return rng.below(1000) < 3 ? Color::Blue : Color::Red; });
    const int m = static_cast<int>(std::floor(eps * n / 4));
    const auto t = random_directed(m, s);
    ++sparse_runs;
    try {
      const auto e = find_red_tree_in_sparse_blue(g, VertexSet::full(n), t, eps);
      if (validate_embedding(g, t, e).ok && e.color == Color::Red)
        ++sparse_ok;
    } catch (const std::exception &e) {
      if (first.empty())
        first = e.what();
    }
  }

  int cycle_ok = 0, cycle_runs = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const int n = 8 + static_cast<int>(s % 120);
    const auto g = random_coloring(random_tournament(n, derive_seed(6, "lc", s)), derive_seed(6, "lcc", s));
    const Color c = s % 2 ? Color::Red : Color::Blue;
    const auto u = VertexSet::full(n);
    const int d = min_out_degree(g, c, u);
    if (d < 1)
      continue;
    ++cycle_runs;
    const auto cyc = long_cycle(g, c, u);
    cycle_ok += static_cast<int>(cyc.size()) >= d + 1 && is_color_cycle(g, c, cyc);
  }

  int pair_ok = 0;
  for (std::uint64_t s = 0; s < 500; ++s) {
    const auto g = random_coloring(random_tournament(256, derive_seed(6, "mp", s)), derive_seed(6, "mpc", s));
    try {
      const auto p = mindegree_pair(g, Color::Red, VertexSet::full(256), 0.1, s);
      pair_ok += validate_mindegree_pair(g, p).ok && !p.a.empty() && !p.b.empty();
    } catch (const std::exception &e) {
      if (first.empty())
        first = e.what();
    }
  }
  std::ostringstream d;
  d << "sparse-blue red tree of order 32: " << sparse_ok << "/" << sparse_runs << " (hosts sample-certified "
    << certified << "/200); long cycle >= d+1: " << cycle_ok << "/" << cycle_runs << "; mindegree pair: " << pair_ok
    << "/500";
  if (!first.empty())
    d << "; first error: " << first;
  return {sparse_ok == sparse_runs && cycle_ok == cycle_runs && pair_ok == 500 && cycle_runs > 0, d.str()};
}

Outcome oracle_equivalence() {
  int disagreements = 0, instances = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const int n = 2 + static_cast<int>(derive_seed(7, "n", s) % 11);
    const int m = 1 + static_cast<int>(derive_seed(7, "m", s) % 6);
    const auto g = random_coloring(random_tournament(n, derive_seed(7, "h", s)), derive_seed(7, "c", s));
    const auto t = random_oriented_tree(m, TreeMode::UniformOriented, derive_seed(7, "t", s));
    const std::optional<Color> c = s % 3 == 0 ? std::nullopt : std::optional<Color>(s % 3 == 1 ? Color::Red : Color::Blue);
    const auto e = exact_embed(g, t, c);
    const bool brute = oracle::brute_embed(g, t, c).has_value();
    disagreements += e.has_value() != brute || (e && !validate_embedding(g, t, *e).ok);
    ++instances;
  }
  int solver_runs = 0, solver_disagreements = 0, not_found = 0;
  for (std::uint64_t s = 0; s < 300; ++s) {
    const int n = 3 + static_cast<int>(derive_seed(7, "sn", s) % 10);
    const int m = 2 + static_cast<int>(derive_seed(7, "sm", s) % 5);
    const auto g = random_coloring(random_tournament(n, derive_seed(7, "sh", s)), derive_seed(7, "sc", s));
    const auto t = random_oriented_tree(m, TreeMode::UniformOriented, derive_seed(7, "st", s));
    const auto r = find_monochromatic_tree(g, t);
    const bool exists = oracle::brute_embed(g, t, Color::Red) || oracle::brute_embed(g, t, Color::Blue);
    ++solver_runs;
    not_found += r.status == SolveStatus::NotFound;
    const bool agree = exists ? r.status == SolveStatus::Found && validate_embedding(g, t, *r.embedding).ok
                              : r.status == SolveStatus::NotFound;
    solver_disagreements += !agree;
  }
  std::ostringstream d;
  d << "exact vs all injections: " << disagreements << "/" << instances << " disagreements; solver vs two-colour "
    << "refutation: " << solver_disagreements << "/" << solver_runs << " disagreements (" << not_found
    << " refuted instances)";
  return {disagreements == 0 && solver_disagreements == 0, d.str()};
}

Outcome desk_scale_probe() {
  const int n = 2048;
  const int order = static_cast<int>(std::ceil(n / (8.0 * std::sqrt(std::log2(n)))));
  int found = 0;
  std::map<std::string, int> by_strategy;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto g = random_coloring(random_tournament(n, derive_seed(8, "host", s)), derive_seed(8, "color", s));
    SolverConfig cfg;
    cfg.seed = derive_seed(8, "solver", s);
    const auto r = find_monochromatic_tree(g, directed_path(order), cfg);
    if (r.status == SolveStatus::Found && validate_embedding(g, directed_path(order), *r.embedding).ok) {
      ++found;
      ++by_strategy[r.strategy];
    }
  }
  std::ostringstream d;
  d << "monochromatic directed path of order " << order << " found in " << found << "/100 runs (need >= 95); by rung:";
  for (const auto &[k, v] : by_strategy)
    d << " " << k << "=" << v;
  return {found >= 95, d.str()};
}

Outcome pseudorandom_statistics() {
  PseudorandomnessParams p;
  p.epsilon = 0.25;
  p.sigma = 4;
  int random_certified = 0, transitive_refuted = 0, runs = 0;
  std::ostringstream log;
  for (int n : {512, 1024, 2048}) {
    const auto transitive = transitive_tournament(n);
    for (std::uint64_t s = 0; s < 50; ++s) {
      ++runs;
      const auto g = random_tournament(n, derive_seed(9, "random", static_cast<std::uint64_t>(n) * 1000 + s));
      const auto r = check_sampled(g, p, 10'000, derive_seed(9, "trials", s));
      if (r.verdict != PseudoVerdict::Refuted)
        ++random_certified;
      else if (r.witness)
        log << " [random N=" << n << " seed " << s << " refuted: |A|=" << r.witness->a.size()
            << " |B|=" << r.witness->b.size() << " e=" << r.witness->edges << "]";
      const auto t = check_sampled(transitive, p, 10'000, derive_seed(9, "transitive", s));
      transitive_refuted += t.verdict == PseudoVerdict::Refuted && t.witness && witness_is_valid(transitive, p, *t.witness);
    }
  }
  std::ostringstream d;
  d << "random certified " << random_certified << "/" << runs << ", transitive refuted with valid witness "
    << transitive_refuted << "/" << runs << log.str();
  return {random_certified == runs && transitive_refuted == runs, d.str()};
}

} // namespace

int main(int argc, char **argv) {
  bool strict = false;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--strict") == 0)
      strict = true;
    else
      only.push_back(std::atoi(argv[i]));
  }
  auto want = [&](int id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };

  const std::vector<std::tuple<int, std::string, std::function<Outcome()>>> all{
      {1, "path Ramsey exactness", ramsey_paths},
      {2, "tightness witness on transitive(4)", tightness_witness},
      {3, "block colouring lower bound", block_lower_bound},
      {4, "interval colouring bound", interval_bound},
      {5, "split invariant suites", split_suites},
      {6, "constructive lemma checks", constructive_lemmas},
      {7, "oracle equivalence", oracle_equivalence},
      {8, "desk-scale probe N=2048", desk_scale_probe},
      {9, "pseudorandomness statistics", pseudorandom_statistics},
  };
  for (const auto &[id, name, body] : all)
    if (want(id))
      criterion(id, name, body);
  std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : "all criteria passed") << std::endl;
  return strict && failures ? 1 : 0;
}
