#include "cli.hpp"

#include "rtour/embed.hpp"
#include "rtour/error.hpp"
#include "rtour/generators.hpp"
#include "rtour/io.hpp"
#include "rtour/oracle.hpp"
#include "rtour/pseudorandom.hpp"
#include "rtour/rng.hpp"
#include "rtour/solver.hpp"
#include "rtour/splits.hpp"
#include "rtour/tree.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace rtour::cli {

namespace {

using nlohmann::json;

struct Io {
  std::istream &in;
  std::ostream &out;
  std::ostream &err;
};

json to_json(const VertexSet &s) { return s.to_vector(); }

Tournament read_tournament_arg(const std::string &path, Io &io) {
  return path == "-" ? read_tournament(io.in) : load_tournament(path);
}
ColoredTournament read_colored_arg(const std::string &path, Io &io) {
  return path == "-" ? read_colored(io.in) : load_colored(path);
}
OrientedTree read_tree_arg(const std::string &path, Io &io) {
  return path == "-" ? read_tree(io.in) : load_tree(path);
}

void emit(const std::string &text, const std::string &out_path, Io &io) {
  if (out_path.empty() || out_path == "-") {
    io.out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f)
    throw Error("cannot open " + out_path + " for writing");
  f << text;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

/// [[pattern vertex, host vertex], ...]
json map_pairs(const std::vector<Vertex> &map) {
  json out = json::array();
  for (std::size_t v = 0; v < map.size(); ++v)
    out.push_back({static_cast<int>(v), map[v]});
  return out;
}

Rational parse_rational(const std::string &s) {
  Rational r{};
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      r.num = std::stoll(s);
      r.den = 1;
    } else {
      r.num = std::stoll(s.substr(0, slash));
      r.den = std::stoll(s.substr(slash + 1));
    }
  } catch (const std::exception &) {
    throw PreconditionError("not a rational number: " + s);
  }
  return r;
}

json trace_json(const std::vector<TraceEvent> &trace) {
  json a = json::array();
  for (const auto &e : trace)
    a.push_back({{"strategy", e.strategy}, {"event", e.event}, {"detail", e.detail}});
  return a;
}

std::string csv_double(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

// --- experiment scaling -----------------------------------------------------

struct ScalingConfig {
  std::vector<int> grid;
  int seeds = 20;
  std::string coloring = "interval";
  std::uint64_t seed = 0;
  bool solve = true;
  bool timing = false;
  int threads = 0;
  SolverConfig solver;
};

struct TrialRecord {
  int n = 0;
  int grid_n = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  PathOrder red, blue;
  double bound = 0;
  int target = 0;
  std::string solver_status = "skipped";
  std::string solver_color;
  std::string solver_strategy;
  double wall_ms = 0;
};

TrialRecord run_trial(const ScalingConfig &cfg, int grid_n, int trial) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord r;
  r.grid_n = grid_n;
  r.trial = trial;
  r.seed = derive_seed(cfg.seed, "experiment/scaling",
                       static_cast<std::uint64_t>(grid_n) * 1'000'003ULL + static_cast<std::uint64_t>(trial));
  ColoredTournament g;
  if (cfg.coloring == "block") {
    g = block_coloring(static_cast<int>(std::floor(std::sqrt(static_cast<double>(grid_n)))) + 1);
  } else {
    Tournament base = random_tournament(grid_n, derive_seed(r.seed, "tournament"));
    g = cfg.coloring == "interval" ? interval_coloring(base)
                                   : random_coloring(std::move(base), derive_seed(r.seed, "coloring"));
  }
  r.n = g.n();
  const auto orders = longest_mono_paths(g);
  r.red = orders.red;
  r.blue = orders.blue;
  const double lg = std::log2(static_cast<double>(std::max(r.n, 2)));
  r.bound = 3.0 * r.n / std::sqrt(lg);
  r.target = static_cast<int>(std::ceil(r.n / (8.0 * std::sqrt(lg)) - 1e-9));
  if (cfg.solve && r.target >= 1) {
    SolverConfig sc = cfg.solver;
    sc.seed = derive_seed(r.seed, "solver");
    const auto res = find_monochromatic_tree(g, directed_path(r.target), sc);
    r.solver_status = std::string(to_string(res.status));
    if (res.embedding && res.embedding->color)
      r.solver_color = std::string(to_string(*res.embedding->color));
    r.solver_strategy = res.strategy;
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string scaling_csv(const ScalingConfig &cfg, const std::vector<TrialRecord> &rows) {
  std::ostringstream os;
  os << "# rtour-scaling-csv v1\n";
  os << "grid_n,n,trial,seed,coloring,red_order,blue_order,longest,exact,bound,within_bound,target,"
        "solver_status,solver_color,solver_strategy";
  if (cfg.timing)
    os << ",wall_ms";
  os << "\n";
  for (const auto &r : rows) {
    const int longest = std::max(r.red.order, r.blue.order);
    os << r.grid_n << ',' << r.n << ',' << r.trial << ',' << r.seed << ',' << cfg.coloring << ',' << r.red.order
       << ',' << r.blue.order << ',' << longest << ',' << (r.red.exact && r.blue.exact ? 1 : 0) << ','
       << csv_double(r.bound) << ',' << (longest <= r.bound ? 1 : 0) << ',' << r.target << ','
       << r.solver_status << ',' << r.solver_color << ',' << r.solver_strategy;
    if (cfg.timing)
      os << ',' << csv_double(r.wall_ms);
    os << "\n";
  }
  return os.str();
}

double quantile(std::vector<int> v, double q) {
  if (v.empty())
    return 0;
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

json scaling_json(const ScalingConfig &cfg, const std::vector<TrialRecord> &rows) {
  json j;
  j["schema"] = "rtour-scaling-json v1";
  j["config"] = {{"grid", cfg.grid},
                 {"seeds", cfg.seeds},
                 {"coloring", cfg.coloring},
                 {"seed", cfg.seed},
                 {"solve", cfg.solve},
                 {"epsilon", cfg.solver.epsilon},
                 {"sigma", cfg.solver.sigma},
                 {"alpha", cfg.solver.alpha},
                 {"budget_nodes", cfg.solver.exact_budget}};
  json trials = json::array();
  for (const auto &r : rows) {
    json t = {{"grid_n", r.grid_n},
              {"n", r.n},
              {"trial", r.trial},
              {"seed", r.seed},
              {"red_order", r.red.order},
              {"blue_order", r.blue.order},
              {"exact", r.red.exact && r.blue.exact},
              {"bound", r.bound},
              {"target", r.target},
              {"solver_status", r.solver_status},
              {"solver_color", r.solver_color},
              {"solver_strategy", r.solver_strategy}};
    if (cfg.timing)
      t["wall_ms"] = r.wall_ms;
    trials.push_back(std::move(t));
  }
  j["trials"] = std::move(trials);
  json agg = json::array();
  for (int n : cfg.grid) {
    std::vector<int> longest;
    int within = 0, found = 0, solved = 0;
    for (const auto &r : rows) {
      if (r.grid_n != n)
        continue;
      const int l = std::max(r.red.order, r.blue.order);
      longest.push_back(l);
      within += l <= r.bound ? 1 : 0;
      if (r.solver_status != "skipped") {
        ++solved;
        found += r.solver_status == "found" ? 1 : 0;
      }
    }
    double mean = 0;
    for (int l : longest)
      mean += l;
    mean = longest.empty() ? 0 : mean / static_cast<double>(longest.size());
    agg.push_back({{"grid_n", n},
                   {"runs", longest.size()},
                   {"longest_mean", mean},
                   {"longest_p50", quantile(longest, 0.5)},
                   {"longest_p90", quantile(longest, 0.9)},
                   {"longest_max", longest.empty() ? 0 : *std::max_element(longest.begin(), longest.end())},
                   {"within_bound", within},
                   {"solver_runs", solved},
                   {"solver_found", found}});
  }
  j["aggregates"] = std::move(agg);
  return j;
}

std::vector<TrialRecord> run_scaling(const ScalingConfig &cfg) {
  std::vector<std::pair<int, int>> jobs;
  for (int n : cfg.grid)
    for (int s = 0; s < cfg.seeds; ++s)
      jobs.emplace_back(n, s);
  std::vector<TrialRecord> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
      rows[i] = run_trial(cfg, jobs[i].first, jobs[i].second);
  };
  int workers = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(jobs.size(), 1)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < workers; ++i)
      pool.emplace_back(worker);
  }
  return rows;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
  Io io{in, out, err};
  CLI::App app{"Monochromatic trees in 2-coloured tournaments"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // Shared solver / pseudorandomness flags.
  std::uint64_t seed = 0;
  double epsilon = 0.25, sigma = 4.0, alpha = 1.0 / 6.0;
  long long budget = -1;
  bool trace = false;
  std::string out_path, format = "json";

  // gen
  auto *gen = app.add_subcommand("gen", "Generate a tournament (TOUR) or, with --tree, an oriented tree (OTREE)");
  int gen_n = 0;
  std::string gen_kind = "random", tree_shape = "random", tree_mode = "uniform";
  bool gen_tree = false;
  int max_leaves = -1;
  gen->add_option("--n", gen_n, "Number of vertices")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--kind", gen_kind, "Tournament kind")->check(CLI::IsMember({"random", "transitive"}));
  gen->add_flag("--tree", gen_tree, "Generate an oriented tree on n vertices instead");
  gen->add_option("--shape", tree_shape, "Tree shape")->check(CLI::IsMember({"random", "path", "star"}));
  gen->add_option("--mode", tree_mode, "Edge directions of a random tree")
      ->check(CLI::IsMember({"uniform", "out", "in"}));
  gen->add_option("--max-leaves", max_leaves, "Leaf budget of a random tree");
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path);

  // color
  auto *color = app.add_subcommand("color", "Colour a tournament (CTOUR)");
  std::string in_path, color_kind = "random";
  int blocks = 0;
  color->add_option("--in", in_path, "TOUR file, - for stdin");
  color->add_option("--kind", color_kind)->check(CLI::IsMember({"random", "interval", "block", "all-red"}));
  color->add_option("--blocks", blocks, "For --kind block: path order n, giving (n-1)^2 vertices");
  color->add_option("--seed", seed);
  color->add_option("--out", out_path);

  // check-pseudo
  auto *pseudo = app.add_subcommand("check-pseudo", "Certify or refute (eps, k)-pseudorandomness");
  std::string mode = "sampled";
  int k = 0;
  long long trials = 10'000;
  int threads = 0;
  pseudo->add_option("--in", in_path)->required();
  pseudo->add_option("--epsilon", epsilon);
  pseudo->add_option("--sigma", sigma);
  pseudo->add_option("--k", k);
  pseudo->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  pseudo->add_option("--trials", trials);
  pseudo->add_option("--seed", seed);
  pseudo->add_option("--threads", threads);
  pseudo->add_option("--budget-nodes", budget, "Subset budget of exhaustive mode");
  pseudo->add_option("--out", out_path);

  // split
  auto *split = app.add_subcommand("split", "Decompose an oriented tree");
  std::string tree_path, split_kind = "tree", core_k;
  double split_c = 2.0;
  split->add_option("--tree", tree_path)->required();
  split->add_option("--kind", split_kind)->check(CLI::IsMember({"tree", "path", "core", "dpl", "inout"}));
  split->add_option("--alpha", alpha);
  split->add_option("--c", split_c, "Stage-one exponent multiplier of the tree-split");
  split->add_option("--k", core_k, "Core ratio as n or n/d (default ceil(m^(1/6)))");
  split->add_option("--out", out_path);

  // embed
  auto *embed = app.add_subcommand("embed", "Exact search for a copy of a tree");
  std::string host_path, embed_color = "any";
  embed->add_option("--host", host_path, "CTOUR file")->required();
  embed->add_option("--tree", tree_path)->required();
  embed->add_option("--color", embed_color)->check(CLI::IsMember({"red", "blue", "any"}));
  embed->add_option("--budget-nodes", budget);
  embed->add_option("--out", out_path);

  // solve
  auto *solve = app.add_subcommand("solve", "Search for a monochromatic copy of a tree");
  std::optional<double> medium_a;
  solve->add_option("--host", host_path)->required();
  solve->add_option("--tree", tree_path)->required();
  solve->add_option("--epsilon", epsilon);
  solve->add_option("--sigma", sigma);
  solve->add_option("--alpha", alpha);
  solve->add_option("--a", medium_a, "Medium-cycle constant (default ceil(128/eps^2))");
  solve->add_option("--budget-nodes", budget);
  solve->add_option("--seed", seed);
  solve->add_flag("--trace", trace, "Include the strategy event log");
  solve->add_option("--out", out_path);

  // ramsey
  auto *ramsey = app.add_subcommand("ramsey", "Exact oriented Ramsey number of a small tree");
  int max_n = 6;
  bool dedup = false, timing = false;
  ramsey->add_option("--tree", tree_path)->required();
  ramsey->add_option("--max-n", max_n)->check(CLI::Range(1, 11));
  ramsey->add_option("--budget-nodes", budget);
  ramsey->add_flag("--dedup", dedup, "Skip tournaments that are not in canonical form");
  ramsey->add_flag("--timing", timing, "Report wall time");
  ramsey->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  ramsey->add_option("--out", out_path);

  // experiment scaling
  auto *experiment = app.add_subcommand("experiment", "Experiments");
  experiment->require_subcommand(1);
  auto *scaling = experiment->add_subcommand("scaling", "Longest monochromatic paths over a grid of N");
  ScalingConfig sc;
  std::string grid = "256,512,1024,2048";
  bool no_solve = false;
  scaling->add_option("--grid", grid, "Comma-separated N values");
  scaling->add_option("--seeds", sc.seeds)->check(CLI::PositiveNumber);
  scaling->add_option("--coloring", sc.coloring)->check(CLI::IsMember({"interval", "block", "random"}));
  scaling->add_option("--seed", seed);
  scaling->add_option("--epsilon", epsilon);
  scaling->add_option("--sigma", sigma);
  scaling->add_option("--alpha", alpha);
  scaling->add_option("--budget-nodes", budget);
  scaling->add_option("--threads", threads);
  scaling->add_flag("--no-solve", no_solve, "Skip the solver column");
  scaling->add_flag("--timing", timing, "Add wall-time columns");
  scaling->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  scaling->add_option("--out", out_path, "Writes <out>.csv and <out>.json");

  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      if (!gen_tree) {
        const Tournament g = gen_kind == "random" ? random_tournament(gen_n, seed) : transitive_tournament(gen_n);
        emit(to_text(g), out_path, io);
        return kOk;
      }
      if (gen_n < 1)
        throw PreconditionError("a tree needs at least one vertex");
      const TreeMode m = tree_mode == "out" ? TreeMode::OutDirected
                         : tree_mode == "in" ? TreeMode::InDirected
                                             : TreeMode::UniformOriented;
      OrientedTree t;
      if (tree_shape == "path")
        t = directed_path(gen_n);
      else if (tree_shape == "star")
        t = out_star(gen_n);
      else if (max_leaves > 0)
        t = random_tree_with_leaf_budget(gen_n, max_leaves, m, seed);
      else
        t = random_oriented_tree(gen_n, m, seed);
      emit(to_text(t), out_path, io);
      return kOk;
    }

    if (*color) {
      ColoredTournament g;
      if (color_kind == "block") {
        if (blocks < 2)
          throw PreconditionError("--kind block needs --blocks >= 2");
        g = block_coloring(blocks);
      } else {
        if (in_path.empty())
          throw PreconditionError("--in is required unless --kind block");
        Tournament base = read_tournament_arg(in_path, io);
        if (color_kind == "random")
          g = random_coloring(std::move(base), seed);
        else if (color_kind == "interval")
          g = interval_coloring(base);
        else
          g = ColoredTournament(std::move(base));
      }
      emit(to_text(g), out_path, io);
      return kOk;
    }

    if (*pseudo) {
      const Tournament g = read_tournament_arg(in_path, io);
      PseudorandomnessParams p;
      p.epsilon = epsilon;
      p.sigma = sigma;
      if (k > 0)
        p.k = k;
      const PseudoReport r = mode == "exhaustive"
                                 ? check_exhaustive(g, p, budget > 0 ? budget : kDefaultExhaustiveBudget)
                                 : check_sampled(g, p, trials, seed, threads);
      json j = {{"verdict", std::string(to_string(r.verdict))}, {"trials", r.trials}, {"k", r.k}, {"n", g.n()}};
      if (r.min_density)
        j["min_density"] = {{"edges", r.min_density->first},
                            {"area", r.min_density->second},
                            {"value", r.min_density_value()}};
      else
        j["min_density"] = nullptr;
      if (r.witness)
        j["witness"] = {{"a", to_json(r.witness->a)}, {"b", to_json(r.witness->b)}, {"edges", r.witness->edges}};
      emit(dump(j), out_path, io);
      return r.verdict == PseudoVerdict::Refuted ? kNotFound : kOk;
    }

    if (*split) {
      const OrientedTree t = read_tree_arg(tree_path, io);
      json j = {{"kind", split_kind}, {"m", t.size()}};
      Verdict v;
      auto pieces_json = [](const std::vector<Piece> &ps) {
        json a = json::array();
        for (const auto &p : ps)
          a.push_back({{"root", p.root}, {"vertices", p.vertices}});
        return a;
      };
      if (split_kind == "tree") {
        const auto s = tree_split(t, split_c, alpha);
        v = validate_tree_split(t, s, split_c, alpha);
        j["parts"] = pieces_json(s.parts);
        j["quotient_parents"] = s.quotient.parents();
        j["leaf_tree"] = s.leaf_tree;
      } else if (split_kind == "path") {
        const auto s = path_split(t, alpha);
        v = validate_path_split(t, s, alpha);
        j["parts"] = s.parts;
        j["quotient_parents"] = s.quotient.parents();
        j["junction"] = s.junction;
      } else if (split_kind == "core") {
        Rational r{};
        if (core_k.empty()) {
          r.num = std::max<long long>(2, static_cast<long long>(std::ceil(std::pow(t.size(), 1.0 / 6.0) - 1e-9)));
          r.den = 1;
        } else {
          r = parse_rational(core_k);
        }
        const auto s = core_split(t, r);
        v = validate_core_split(t, s, r);
        j["k"] = std::to_string(r.num) + "/" + std::to_string(r.den);
        json layers = json::array();
        for (const auto &f : s.layers)
          layers.push_back(pieces_json(f));
        j["layers"] = std::move(layers);
      } else if (split_kind == "dpl") {
        const auto d = dpl(t);
        v = validate_dpl(t, d);
        j["paths"] = d.paths;
        j["remainder"] = d.remainder ? json(d.remainder->to_original) : json(nullptr);
      } else {
        const auto s = in_out_split(t);
        v = validate_in_out_split(t, s);
        json layers = json::array();
        for (const auto &f : s.layers)
          layers.push_back(pieces_json(f));
        j["layers"] = std::move(layers);
      }
      j["valid"] = v.ok;
      if (!v.ok)
        j["violation"] = v.clause;
      emit(dump(j), out_path, io);
      return v.ok ? kOk : kNotFound;
    }

    if (*embed) {
      const ColoredTournament g = read_colored_arg(host_path, io);
      const OrientedTree t = read_tree_arg(tree_path, io);
      std::optional<Color> c;
      if (embed_color != "any")
        c = parse_color(embed_color);
      const auto e = exact_embed(g, t, c, budget > 0 ? budget : kDefaultNodeBudget);
      json j = {{"found", e.has_value()}, {"color", embed_color}};
      if (e)
        j["map"] = map_pairs(e->map);
      emit(dump(j), out_path, io);
      return e ? kOk : kNotFound;
    }

    if (*solve) {
      const ColoredTournament g = read_colored_arg(host_path, io);
      const OrientedTree t = read_tree_arg(tree_path, io);
      SolverConfig cfg;
      cfg.epsilon = epsilon;
      cfg.sigma = sigma;
      cfg.alpha = alpha;
      cfg.a = medium_a;
      cfg.seed = seed;
      if (budget > 0)
        cfg.exact_budget = budget;
      const auto r = find_monochromatic_tree(g, t, cfg);
      json j = {{"status", std::string(to_string(r.status))}, {"strategy", r.strategy}};
      if (r.embedding) {
        j["color"] = std::string(to_string(*r.embedding->color));
        j["map"] = map_pairs(r.embedding->map);
      }
      if (trace)
        j["trace"] = trace_json(r.trace);
      emit(dump(j), out_path, io);
      return r.status == SolveStatus::Found ? kOk : r.status == SolveStatus::NotFound ? kNotFound : kBudget;
    }

    if (*ramsey) {
      const OrientedTree t = read_tree_arg(tree_path, io);
      const auto start = std::chrono::steady_clock::now();
      const auto r = oriented_ramsey_number(t, max_n, budget > 0 ? budget : 2'000'000'000, dedup);
      const double wall =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (format == "text") {
        if (r.value)
          emit(std::to_string(*r.value) + "\n", out_path, io);
        else
          emit(">=" + std::to_string(r.lower_bound) + "\n", out_path, io);
      } else {
        json j;
        if (r.value)
          j["value"] = *r.value;
        else
          j["bound"] = r.lower_bound;
        j["tournaments_checked"] = r.tournaments_checked;
        j["colorings_checked"] = r.colorings_checked;
        j["budget_exceeded"] = r.budget_exceeded;
        j["dedup"] = dedup;
        if (r.witness)
          j["witness"] = to_text(*r.witness);
        if (timing)
          j["wall_time"] = wall;
        emit(dump(j), out_path, io);
      }
      if (r.budget_exceeded)
        return kBudget;
      return r.value ? kOk : kNotFound;
    }

    if (*scaling) {
      sc.seed = seed;
      sc.solve = !no_solve;
      sc.timing = timing;
      sc.threads = threads;
      sc.solver.epsilon = epsilon;
      sc.solver.sigma = sigma;
      sc.solver.alpha = alpha;
      sc.solver.exact_budget = budget > 0 ? budget : 200'000;
      sc.solver.validate();
      std::stringstream gs(grid);
      for (std::string item; std::getline(gs, item, ',');) {
        try {
          const int n = std::stoi(item);
          if (n < 2)
            throw PreconditionError("grid values must be at least 2");
          sc.grid.push_back(n);
        } catch (const std::logic_error &) {
          throw PreconditionError("bad --grid entry: " + item);
        }
      }
      const auto rows = run_scaling(sc);
      const std::string csv = scaling_csv(sc, rows);
      const std::string js = dump(scaling_json(sc, rows));
      if (!out_path.empty()) {
        emit(csv, out_path + ".csv", io);
        emit(js, out_path + ".json", io);
      } else {
        io.out << (format == "csv" ? csv : js);
      }
      return kOk;
    }
  } catch (const ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded &e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kNotFound;
  }
  return kUsage;
}

} // namespace rtour::cli
