#include "rtour/solver.hpp"

#include "rtour/generators.hpp"
#include "rtour/machinery.hpp"
#include "rtour/rng.hpp"
#include "rtour/splits.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace rtour {

double SolverConfig::resolved_a() const {
  return a ? *a : std::ceil(128.0 / (epsilon * epsilon) - 1e-9);
}

void SolverConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw PreconditionError("solver: epsilon must lie in (0, 1/2)");
  if (!(sigma > 0.0))
    throw PreconditionError("solver: sigma must be positive");
  if (!(alpha > 0.0 && alpha <= 1.0 / 6.0 + 1e-12))
    throw PreconditionError("solver: alpha must lie in (0, 1/6]");
  if (!(resolved_a() > 0.0))
    throw PreconditionError("solver: a must be positive");
  if (exact_budget < 1 || search_budget < 1 || mindegree_trials < 1)
    throw PreconditionError("solver: budgets must be positive");
}

std::string_view to_string(SolveStatus s) noexcept {
  switch (s) {
  case SolveStatus::Found:
    return "found";
  case SolveStatus::NotFound:
    return "not-found";
  case SolveStatus::Unknown:
    return "unknown";
  }
  return "unknown";
}

ColoredTournament swap_colors(const ColoredTournament &g) {
  return ColoredTournament(g.base(), [&](Vertex i, Vertex j) { return other(g.color(i, j)); });
}

namespace {

std::string str(long long v) { return std::to_string(v); }

int ceil_int(double x) { return static_cast<int>(std::ceil(x - 1e-9)); }

constexpr Color kColors[] = {Color::Red, Color::Blue};

class Ladder {
public:
  Ladder(const ColoredTournament &g, const OrientedTree &t, const SolverConfig &cfg) : g_(g), t_(t), cfg_(cfg) {}

  SolveResult run() {
    using Rung = std::optional<Embedding> (Ladder::*)(Color);
    const std::pair<const char *, Rung> rungs[] = {
        {"sparse-color", &Ladder::sparse_color},
        {"min-degree-core", &Ladder::min_degree_core},
        {"ordering-buckets", &Ladder::ordering_buckets},
        {"cycle-pairs", &Ladder::cycle_pairs},
        {"inout-pair", &Ladder::inout_pair},
    };
    for (const auto &[name, rung] : rungs) {
      for (Color c : kColors) {
        current_ = std::string(name) + "/" + std::string(to_string(c));
        log("enter", "");
        try {
          if (auto e = (this->*rung)(c)) {
            if (auto v = validate_embedding(g_, t_, *e); !v) {
              log("fail", "rejected by validator: " + v.clause);
              continue;
            }
            log("success", "");
            result_.status = SolveStatus::Found;
            result_.embedding = std::move(e);
            result_.strategy = name;
            return std::move(result_);
          }
        } catch (const Error &ex) {
          log("fail", ex.what());
        }
      }
    }
    exact();
    return std::move(result_);
  }

private:
  void log(std::string event, std::string detail) {
    result_.trace.push_back(TraceEvent{current_, std::move(event), std::move(detail)});
  }

  std::optional<Embedding> skip(const std::string &why) {
    log("skip", why);
    return std::nullopt;
  }

  const ColoredTournament &colored(Color target) {
    // Several lemmas are stated for a red target; run them on the swapped
    // colouring for blue.
    if (target == Color::Red)
      return g_;
    if (!swapped_)
      swapped_ = swap_colors(g_);
    return *swapped_;
  }

  // Sparse other colour: the sparse-colour finder on the whole vertex set.
  std::optional<Embedding> sparse_color(Color c) {
    const auto &h = colored(c);
    const long double n = g_.n();
    const long long sparse = h.edge_count(Color::Blue);
    if (sparse > cfg_.delta_sparse() * n * n)
      return skip(str(sparse) + " edges of the other colour, above the sparse threshold");
    if (t_.size() > cfg_.epsilon / 4.0 * n)
      return skip("tree larger than (eps/4) N");
    auto e = find_red_tree_in_sparse_blue(h, VertexSet::full(g_.n()), t_, cfg_.epsilon);
    e.color = c;
    return e;
  }

  // Peels vertices with colour out- or in-degree below m - 1; greedy
  // embedding cannot get stuck in what is left.
  std::optional<Embedding> min_degree_core(Color c) {
    const int need = t_.size() - 1;
    const auto view = g_.view(c);
    VertexSet u = VertexSet::full(g_.n());
    std::vector<Vertex> queue;
    VertexSet queued(g_.n());
    auto weak = [&](Vertex v) { return view.out_degree_in(v, u) < need || view.in_degree_in(v, u) < need; };
    for (Vertex v = 0; v < g_.n(); ++v)
      if (weak(v)) {
        queue.push_back(v);
        queued.insert(v);
      }
    while (!queue.empty()) {
      const Vertex v = queue.back();
      queue.pop_back();
      u.erase(v);
      VertexSet touched = u - queued;
      VertexSet nb = VertexSet::from_words(g_.n(), view.out_row(v)) | VertexSet::from_words(g_.n(), view.in_row(v));
      touched &= nb;
      touched.for_each([&](Vertex w) {
        if (weak(w)) {
          queue.push_back(w);
          queued.insert(w);
        }
      });
    }
    if (u.empty())
      return skip("empty core");
    log("core", str(u.size()) + " vertices");
    return greedy_min_degree_embed(g_, u, t_, c);
  }

  // Directed T is handled as out-directed, reversing the host for an
  // in-directed T; the map is the same in both pictures.
  struct Oriented {
    const ColoredTournament *host;
    OrientedTree tree;
  };

  std::optional<Oriented> out_directed_view(Color c) {
    if (t_.is_out_directed())
      return Oriented{&colored(c), t_};
    if (t_.is_in_directed()) {
      if (!reversed_[static_cast<std::size_t>(c)])
        reversed_[static_cast<std::size_t>(c)] = reverse(colored(c));
      return Oriented{&*reversed_[static_cast<std::size_t>(c)], t_.reversed()};
    }
    return std::nullopt;
  }

  bool few_leaves() const {
    return leaf_count(t_) <= std::pow(static_cast<double>(t_.size()), cfg_.alpha) + 1e-9;
  }

  double scale() const { return std::pow(static_cast<double>(t_.size()), 2.0 * cfg_.alpha); }

  // Ordering with few blue forward edges, cut into buckets; the path-split
  // quotient goes into the buckets transitively and each part is a red path
  // inside its bucket ending at a vertex with red out-neighbours in the
  // candidate sets of its child parts.
  std::optional<Embedding> ordering_buckets(Color c) {
    if (!t_.is_directed())
      return skip("tree is not directed");
    if (!few_leaves())
      return skip("more than m^alpha leaves");
    auto o = out_directed_view(c);
    const auto &h = *o->host;
    const auto &tree = o->tree;
    const int threshold = std::max(1, ceil_int(cfg_.resolved_a() * scale()));
    const auto ord = low_outdegree_ordering(h, Color::Blue, VertexSet::full(h.n()), threshold);
    if (ord.dense)
      return skip("ordering stuck on a set of " + str(ord.dense->size()) + " vertices");
    const auto split = path_split(tree, cfg_.alpha);
    const auto pieces = pieces_of(split);
    const int q = static_cast<int>(pieces.size());
    std::size_t longest = 0;
    for (const auto &p : split.parts)
      longest = std::max(longest, p.size());
    const int k = h.n() / q;
    if (k < static_cast<int>(longest))
      return skip("buckets of " + str(k) + " vertices are shorter than a part");

    std::vector<Vertex> slots(static_cast<std::size_t>(q));
    std::iota(slots.begin(), slots.end(), 0);
    const auto bucket_of = embed_in_transitive(split.quotient, slots);
    std::vector<VertexSet> bucket(static_cast<std::size_t>(q), VertexSet(h.n()));
    for (int p = 0; p < q; ++p) {
      const int b = bucket_of[static_cast<std::size_t>(p)];
      for (int i = 0; i < k; ++i)
        bucket[static_cast<std::size_t>(p)].insert(ord.order[static_cast<std::size_t>(b * k + i)]);
    }

    std::vector<int> owner(static_cast<std::size_t>(tree.size()), -1);
    for (int p = 0; p < q; ++p)
      for (int v : split.parts[static_cast<std::size_t>(p)])
        owner[static_cast<std::size_t>(v)] = p;
    std::vector<std::vector<int>> child_parts(static_cast<std::size_t>(q));
    for (int p = 1; p < q; ++p)
      child_parts[static_cast<std::size_t>(owner[static_cast<std::size_t>(tree.parent(pieces[static_cast<std::size_t>(p)].root))])]
          .push_back(p);

    const auto view = h.view(Color::Red);
    CandidateSets cands;
    cands.d.assign(static_cast<std::size_t>(q), VertexSet(h.n()));
    cands.region = bucket;
    const long long per_call = std::max<long long>(1000, cfg_.search_budget / std::max(k, 1));
    auto ends_ok = [&](int p, const VertexSet &free) {
      return [&, p, free](Vertex u) {
        for (int j : child_parts[static_cast<std::size_t>(p)])
          if (view.out_degree_in(u, cands.d[static_cast<std::size_t>(j)] & free) == 0)
            return false;
        return true;
      };
    };
    const VertexSet all = VertexSet::full(h.n());
    for (int p = q - 1; p >= 0; --p) {
      const int len = static_cast<int>(split.parts[static_cast<std::size_t>(p)].size());
      const auto &region = bucket[static_cast<std::size_t>(p)];
      const auto end_ok = ends_ok(p, all);
      region.for_each([&](Vertex v) {
        try {
          if (find_color_path(view, v, len, region, end_ok, per_call))
            cands.d[static_cast<std::size_t>(p)].insert(v);
        } catch (const BudgetExceeded &) {
        }
      });
      if (cands.d[static_cast<std::size_t>(p)].empty())
        return skip("part " + str(p) + " has no candidates");
    }
    LocalEmbedder local = [&](int p, Vertex root, const VertexSet &free) -> std::optional<std::vector<Vertex>> {
      const int len = static_cast<int>(split.parts[static_cast<std::size_t>(p)].size());
      try {
        return find_color_path(view, root, len, bucket[static_cast<std::size_t>(p)] & free, ends_ok(p, free),
                               per_call);
      } catch (const BudgetExceeded &) {
        return std::nullopt;
      }
    };
    auto e = assemble_from_candidates(h, tree, pieces, cands, Color::Red, local);
    e.color = c;
    return e;
  }

  // Disjoint cycles of the other colour, each of length at least a L,
  // collected shortest-minimum-degree-first; then red-blue pairs and a
  // tree-split lift.
  std::vector<std::vector<Vertex>> collect_cycles(const ColoredTournament &h, int min_len) {
    const auto blue = h.view(Color::Blue);
    VertexSet rest = VertexSet::full(h.n());
    std::vector<std::vector<Vertex>> cycles;
    const int need = std::max(1, min_len - 1);
    for (;;) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (Vertex v = rest.first(); v != -1; v = rest.next(v + 1))
          if (blue.out_degree_in(v, rest) < need) {
            rest.erase(v);
            changed = true;
          }
      }
      if (rest.empty())
        break;
      auto cyc = long_cycle(h, Color::Blue, rest);
      if (static_cast<int>(cyc.size()) < min_len)
        break;
      for (Vertex v : cyc)
        rest.erase(v);
      cycles.push_back(std::move(cyc));
    }
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto &x, const auto &y) { return x.size() < y.size(); });
    return cycles;
  }

  std::optional<Embedding> cycle_pairs(Color c) {
    if (!t_.is_directed())
      return skip("tree is not directed");
    if (!few_leaves())
      return skip("more than m^alpha leaves");
    auto o = out_directed_view(c);
    const auto &h = *o->host;
    const auto &tree = o->tree;
    const double a = cfg_.resolved_a();
    const double al = a * scale();
    if (al > h.n())
      return skip("a L = " + std::to_string(al) + " exceeds N");
    const auto cycles = collect_cycles(h, ceil_int(al));
    std::vector<std::vector<Vertex>> medium, longer;
    for (const auto &cyc : cycles)
      (static_cast<double>(cyc.size()) <= 8.0 * al ? medium : longer).push_back(cyc);
    log("cycles", str(static_cast<long long>(medium.size())) + " medium, " +
                      str(static_cast<long long>(longer.size())) + " long");

    RedBluePairs pairs;
    if (medium.size() >= 2) {
      auto r = red_blue_pairs_from_cycles(h, medium, CycleMode::Medium, a, scale());
      if (auto *path = std::get_if<std::vector<Vertex>>(&r)) {
        // A path of the other colour only helps a path-shaped target.
        if (tree.size() <= static_cast<int>(path->size()) && leaf_count(tree) <= 1) {
          std::vector<Vertex> map(static_cast<std::size_t>(tree.size()));
          int v = tree.root();
          for (int i = 0; i < tree.size(); ++i) {
            map[static_cast<std::size_t>(v)] = (*path)[static_cast<std::size_t>(i)];
            if (!tree.children(v).empty())
              v = tree.children(v).front();
          }
          return Embedding{std::move(map), other(c)};
        }
        return skip("medium cycles gave a path of the other colour of order " +
                    str(static_cast<long long>(path->size())));
      }
      pairs = std::get<RedBluePairs>(std::move(r));
    } else if (!longer.empty()) {
      for (const auto &cyc : longer) {
        try {
          auto r = std::get<RedBluePairs>(red_blue_pairs_from_cycles(h, {cyc}, CycleMode::LongChords, a, scale()));
          pairs.k = r.k;
          for (std::size_t i = 0; i < r.pairs.size(); ++i) {
            pairs.pairs.push_back(std::move(r.pairs[i]));
            pairs.blue_paths.push_back(std::move(r.blue_paths[i]));
          }
        } catch (const ChordWitness &w) {
          log("chord", w.what());
        }
      }
    } else {
      return skip("no cycles of length a L");
    }
    if (pairs.pairs.empty())
      return skip("no red-blue pairs");

    const auto split = tree_split(tree, 3.0, cfg_.alpha);
    const int q = static_cast<int>(split.parts.size());
    if (static_cast<int>(pairs.pairs.size()) < q)
      return skip(str(static_cast<long long>(pairs.pairs.size())) + " pairs for " + str(q) + " parts");
    std::vector<VertexSet> as;
    for (const auto &pr : pairs.pairs)
      as.push_back(pr.first);
    AuxRuleSpec rule;
    rule.rule = AuxRule::PairDensity;
    rule.epsilon = cfg_.epsilon;
    rule.k = pairs.k;
    const auto aux = build_aux_digraph(h, as, rule);
    const int t = aux.size();
    BitMatrix out(t), in(t);
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j)
        if (i != j && aux.at(i, j) == Color::Red) {
          out.set(i, j);
          in.set(j, i);
        }
    ExactOptions opt;
    opt.budget = cfg_.search_budget;
    const auto host = exact_place(DigraphRef{&out, &in}, split.quotient, opt);
    if (!host)
      return skip("no red copy of the quotient in the auxiliary digraph");
    const auto lift = pair_lift_candidates(h, tree, split, pairs, *host, Color::Red);
    if (auto v = validate_candidate_sets(lift.candidates); !v)
      return skip(v.clause);
    auto e = assemble_from_candidates(h, tree, split.parts, lift.candidates, Color::Red,
                                      pair_lift_embedder(h, tree, split, lift, Color::Red));
    e.color = c;
    return e;
  }

  std::optional<Embedding> inout_pair(Color c) {
    const long double n = g_.n();
    const long long edges = g_.edge_count(c);
    const double delta = std::max(cfg_.delta_pair(), static_cast<double>(edges / (n * n)));
    if (edges < cfg_.delta_pair() * n * n)
      return skip("colour density below eps^2/192");
    const auto pair = mindegree_pair(g_, c, VertexSet::full(g_.n()), delta,
                                     derive_seed(cfg_.seed, "solver_inout"), cfg_.mindegree_trials);
    log("pair", "|A| = " + str(pair.a.size()) + ", |B| = " + str(pair.b.size()) + ", k = " + str(pair.k));
    return inout_embed(g_, pair, t_, c, default_subtree_embedder(cfg_.search_budget));
  }

  void exact() {
    current_ = "exact";
    if (!cfg_.exact_fallback) {
      log("skip", "exact fallback disabled");
      return;
    }
    bool refuted_both = true;
    for (Color c : kColors) {
      current_ = "exact/" + std::string(to_string(c));
      log("enter", "");
      try {
        if (auto e = exact_embed(g_, t_, c, cfg_.exact_budget)) {
          log("success", "");
          result_.status = SolveStatus::Found;
          result_.embedding = std::move(e);
          result_.strategy = "exact";
          return;
        }
        log("fail", "refuted");
      } catch (const BudgetExceeded &ex) {
        log("fail", ex.what());
        refuted_both = false;
      }
    }
    result_.status = refuted_both ? SolveStatus::NotFound : SolveStatus::Unknown;
  }

  const ColoredTournament &g_;
  const OrientedTree &t_;
  const SolverConfig &cfg_;
  SolveResult result_;
  std::string current_;
  std::optional<ColoredTournament> swapped_;
  std::optional<ColoredTournament> reversed_[2];
};

} // namespace

SolveResult find_monochromatic_tree(const ColoredTournament &g, const OrientedTree &t, const SolverConfig &cfg) {
  cfg.validate();
  if (t.size() > g.n()) {
    SolveResult r;
    r.status = SolveStatus::NotFound;
    r.trace.push_back(TraceEvent{"input", "skip", "tree larger than the host"});
    return r;
  }
  return Ladder(g, t, cfg).run();
}

} // namespace rtour
