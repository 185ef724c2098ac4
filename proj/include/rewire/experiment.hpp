// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REWIRE_EXPERIMENT_HPP_
#define REWIRE_EXPERIMENT_HPP_

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "rewire/candidates.hpp"
#include "rewire/correlation.hpp"
#include "rewire/error.hpp"
#include "rewire/exact.hpp"
#include "rewire/generators.hpp"
#include "rewire/graph.hpp"
#include "rewire/random.hpp"
#include "rewire/robustness.hpp"
#include "rewire/strategies.hpp"

namespace rewire {

inline constexpr int kResultsSchemaVersion = 1;

// Worker count for independent jobs: hardware concurrency, capped by the
// REWIRE_THREADS environment variable when it holds a positive integer.
inline unsigned default_thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("REWIRE_THREADS")) {
    unsigned cap = 0;
    const std::string_view s(env);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec == std::errc() && p == s.data() + s.size() && cap > 0) n = std::min(n, cap);
  }
  return n;
}

// Shortest round-trip decimal form.
inline std::string format_double(double x) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

namespace detail {

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string opt_field(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

// Runs job(i) for i in [0, n) on up to `threads` workers. The first
// exception (lowest index) is rethrown after all workers finish.
inline void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& job) {
  std::vector<std::exception_ptr> failures(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        job(i);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), n));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (std::size_t start = 0;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

// One CSV record; fields may be double-quoted with "" escapes.
inline std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

template <typename T>
T parse_number(std::string_view s, const char* what) {
  T value{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw error(std::string("invalid ") + what + ": '" + std::string(s) + "'");
  return value;
}

}  // namespace detail

// "3" is a step count; anything with a decimal point or exponent ("0.05",
// "1.0", "5e-3") is a fraction of M.
inline Budget parse_budget(std::string_view s) {
  if (s.find_first_of(".eE") != std::string_view::npos) return Budget::fraction(detail::parse_number<double>(s, "budget"));
  const auto k = detail::parse_number<std::size_t>(s, "budget");
  if (k == 0) throw error("budget must be positive");
  return Budget::count(k);
}

// "first:last:step" fractions, last inclusive.
inline std::vector<double> parse_budget_sweep(std::string_view s) {
  const auto parts = detail::split(s, ':');
  if (parts.size() != 3) throw error("budget sweep must look like first:last:step");
  const double first = detail::parse_number<double>(parts[0], "sweep start");
  const double last = detail::parse_number<double>(parts[1], "sweep end");
  const double step = detail::parse_number<double>(parts[2], "sweep step");
  if (!(step > 0) || first > last) throw error("budget sweep needs step > 0 and first <= last");
  std::vector<double> out;
  for (std::size_t i = 0;; ++i) {
    const double f = std::round((first + static_cast<double>(i) * step) * 1e12) / 1e12;
    if (f > last + 1e-12) break;
    Budget::fraction(f);  // validates (0, 1]
    out.push_back(f);
  }
  return out;
}

inline std::vector<std::uint64_t> parse_seed_list(std::string_view s) {
  std::vector<std::uint64_t> seeds;
  for (auto part : detail::split(s, ',')) seeds.push_back(detail::parse_number<std::uint64_t>(part, "seed"));
  return seeds;
}

enum class Metric {
  assortativity,
  spearman,
  spectral_radius,
  natural_connectivity,
  betweenness,
  closeness,
  eigenvector,
  kshell,
};

inline constexpr Metric kAllMetrics[] = {Metric::assortativity, Metric::spearman,    Metric::spectral_radius,
                                         Metric::natural_connectivity, Metric::betweenness, Metric::closeness,
                                         Metric::eigenvector,   Metric::kshell};

inline std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::assortativity: return "assortativity";
    case Metric::spearman: return "spearman";
    case Metric::spectral_radius: return "spectral_radius";
    case Metric::natural_connectivity: return "natural_connectivity";
    case Metric::betweenness: return "betweenness";
    case Metric::closeness: return "closeness";
    case Metric::eigenvector: return "eigenvector";
    case Metric::kshell: return "kshell";
  }
  return "?";
}

inline std::optional<CentralityKind> centrality_of(Metric m) {
  switch (m) {
    case Metric::betweenness: return CentralityKind::betweenness;
    case Metric::closeness: return CentralityKind::closeness;
    case Metric::eigenvector: return CentralityKind::eigenvector;
    case Metric::kshell: return CentralityKind::kshell;
    default: return std::nullopt;
  }
}

// Comma-separated metric names; duplicates collapse, order is canonical.
inline std::vector<Metric> parse_metrics(std::string_view s) {
  std::vector<bool> on(std::size(kAllMetrics), false);
  for (auto part : detail::split(s, ',')) {
    if (part.empty()) continue;
    std::size_t i = 0;
    while (i < std::size(kAllMetrics) && metric_name(kAllMetrics[i]) != part) ++i;
    if (i == std::size(kAllMetrics)) throw error("unknown metric '" + std::string(part) + "'");
    on[i] = true;
  }
  std::vector<Metric> out;
  for (std::size_t i = 0; i < on.size(); ++i)
    if (on[i]) out.push_back(kAllMetrics[i]);
  return out;
}

struct ExperimentSpec {
  std::string input_path;
  std::string dataset;  // defaults to the input file stem
  std::string method = "ga";  // strategy name or "exact"
  std::vector<Budget> budgets{Budget::fraction(0.05)};
  std::vector<std::uint64_t> seeds{0};
  std::vector<Metric> metrics{Metric::assortativity};
  double top_fraction = 1.0;
  std::uint64_t node_budget = kDefaultNodeBudget;
  bool timing = false;  // adds a wall_time column; output is then not reproducible
  unsigned threads = 0;  // 0: default_thread_count()
};

inline bool is_stochastic(std::string_view method) { return method == "pea" || method == "ra" || method == "pa"; }

inline void validate(const ExperimentSpec& spec) {
  if (spec.method != "exact" && !parse_method(spec.method)) throw error("unknown method '" + spec.method + "'");
  if (spec.budgets.empty()) throw error("no budget given");
  if (is_stochastic(spec.method) && spec.seeds.empty()) throw error("stochastic method needs at least one seed");
  if (!(spec.top_fraction > 0.0 && spec.top_fraction <= 1.0)) throw error("top fraction must lie in (0, 1]");
}

struct ResultRow {
  std::string dataset;
  std::string method;
  double budget_fraction = 0.0;
  std::size_t budget_steps = 0;
  std::optional<std::uint64_t> seed;  // empty for deterministic methods
  std::size_t steps_applied = 0;
  bool truncated = false;
  std::int64_t delta_s = 0;
  std::optional<double> r_before, r_after;
  std::optional<double> spearman_before, spearman_after;
  std::vector<std::optional<double>> extra;  // aligned with extra_columns()
  std::vector<std::string> reasons;
  std::optional<double> wall_time;
  std::vector<RewireCandidate> plan;
};

// Metric-dependent columns after the fixed ones. Spectral metrics report
// before, after and the change rate (R - R0) / R0; centralities report the
// rank stability of the rewired scores.
inline std::vector<std::string> extra_columns(const std::vector<Metric>& metrics) {
  std::vector<std::string> cols;
  for (Metric m : metrics) {
    const std::string name(metric_name(m));
    if (m == Metric::spectral_radius || m == Metric::natural_connectivity) {
      cols.push_back(name + "_before");
      cols.push_back(name + "_after");
      cols.push_back(name + "_change");
    } else if (centrality_of(m)) {
      cols.push_back(name + "_sc");
    }
  }
  return cols;
}

struct LoadedGraph {
  Graph graph;
  ParseReport report;
};

inline LoadedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open input '" + path + "'");
  LoadedGraph lg;
  lg.graph = parse_edge_list(in, &lg.report);
  return lg;
}

namespace detail {

template <typename Fn>
std::optional<double> guarded(std::vector<std::string>& reasons, std::string_view what, Fn fn) {
  try {
    return fn();
  } catch (const undefined_metric& e) {
    reasons.push_back(std::string(what) + ": " + e.what());
  } catch (const convergence_error& e) {
    reasons.push_back(std::string(what) + ": " + e.what());
  }
  return std::nullopt;
}

struct Baseline {
  std::optional<double> r, spearman;
  std::vector<std::string> reasons;
  std::optional<double> radius, nc;
  std::vector<std::optional<CentralityVector>> centralities;  // per spec.metrics entry
};

inline Baseline baseline(const Graph& g, const ExperimentSpec& spec, unsigned threads) {
  Baseline b;
  b.r = guarded(b.reasons, "r_before", [&] { return assortativity(g); });
  b.spearman = guarded(b.reasons, "spearman_before", [&] { return spearman_degree_correlation(g); });
  for (Metric m : spec.metrics) {
    std::optional<CentralityVector> cv;
    if (m == Metric::spectral_radius)
      b.radius = guarded(b.reasons, "spectral_radius_before", [&] { return spectral_radius(g); });
    else if (m == Metric::natural_connectivity)
      b.nc = guarded(b.reasons, "natural_connectivity_before", [&] { return natural_connectivity(g); });
    else if (auto kind = centrality_of(m)) {
      try {
        cv = centrality(g, *kind, threads);
      } catch (const undefined_metric& e) {
        b.reasons.push_back(std::string(metric_name(m)) + "_before: " + e.what());
      }
    }
    b.centralities.push_back(std::move(cv));
  }
  return b;
}

inline std::optional<double> change_rate(std::vector<std::string>& reasons, std::string_view what,
                                         std::optional<double> before, std::optional<double> after) {
  if (!before || !after) return std::nullopt;
  if (*before == 0.0) {
    reasons.push_back(std::string(what) + ": zero baseline");
    return std::nullopt;
  }
  return (*after - *before) / *before;
}

}  // namespace detail

// One row per (budget, seed) cell in spec order; deterministic methods get
// one row per budget. Cells run concurrently.
inline std::vector<ResultRow> run_experiment(const ExperimentSpec& spec, const Graph& g) {
  validate(spec);
  const unsigned threads = spec.threads ? spec.threads : default_thread_count();
  const bool seeded = is_stochastic(spec.method);
  const std::vector<std::optional<std::uint64_t>> seeds =
      seeded ? std::vector<std::optional<std::uint64_t>>(spec.seeds.begin(), spec.seeds.end())
             : std::vector<std::optional<std::uint64_t>>{std::nullopt};
  const std::size_t cells = spec.budgets.size() * seeds.size();
  const unsigned inner = cells == 1 ? threads : 1;
  const auto base = detail::baseline(g, spec, inner);
  const std::string dataset =
      spec.dataset.empty() ? std::filesystem::path(spec.input_path).stem().string() : spec.dataset;

  std::vector<ResultRow> rows(cells);
  detail::parallel_for(cells, cells == 1 ? 1 : threads, [&](std::size_t cell) {
    const Budget& budget = spec.budgets[cell / seeds.size()];
    const auto seed = seeds[cell % seeds.size()];
    ResultRow row;
    row.dataset = dataset;
    row.method = spec.method;
    row.budget_steps = budget.resolve(g.edge_count());
    row.budget_fraction = budget.fraction().value_or(
        g.edge_count() ? static_cast<double>(row.budget_steps) / static_cast<double>(g.edge_count()) : 0.0);
    row.seed = seed;
    row.reasons = base.reasons;

    const auto start = std::chrono::steady_clock::now();
    RewirePlan plan;
    if (spec.method == "exact") {
      auto sol = solve_exact(g, row.budget_steps, spec.node_budget, inner);
      if (!sol.proven_optimal) row.reasons.push_back("exact: node budget exhausted, plan not proven optimal");
      plan = std::move(sol.plan);
    } else {
      StrategyConfig cfg;
      cfg.budget = budget;
      cfg.seed = seed.value_or(0);
      cfg.threads = inner;
      plan = run_strategy(*parse_method(spec.method), g, cfg);
    }
    const Graph& after = plan.final_graph;
    row.steps_applied = plan.steps.size();
    row.truncated = plan.truncated;
    row.delta_s = plan.delta_s;
    row.r_before = base.r;
    row.r_after = detail::guarded(row.reasons, "r_after", [&] { return assortativity(after); });
    row.spearman_before = base.spearman;
    row.spearman_after = detail::guarded(row.reasons, "spearman_after", [&] { return spearman_degree_correlation(after); });
    for (std::size_t i = 0; i < spec.metrics.size(); ++i) {
      const Metric m = spec.metrics[i];
      const std::string name(metric_name(m));
      if (m == Metric::spectral_radius || m == Metric::natural_connectivity) {
        const auto before = m == Metric::spectral_radius ? base.radius : base.nc;
        const auto value = detail::guarded(row.reasons, name + "_after", [&] {
          return m == Metric::spectral_radius ? spectral_radius(after) : natural_connectivity(after);
        });
        row.extra.push_back(before);
        row.extra.push_back(value);
        row.extra.push_back(detail::change_rate(row.reasons, name + "_change", before, value));
      } else if (auto kind = centrality_of(m)) {
        const auto& orig = base.centralities[i];
        row.extra.push_back(orig ? detail::guarded(row.reasons, name + "_sc", [&] {
          return centrality_sc(*orig, centrality(after, *kind, inner), spec.top_fraction);
        })
                                 : std::nullopt);
      }
    }
    if (spec.timing) row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    row.plan = std::move(plan.steps);
    rows[cell] = std::move(row);
  });
  return rows;
}

inline std::vector<ResultRow> run_experiment(const ExperimentSpec& spec) {
  validate(spec);
  return run_experiment(spec, load_graph(spec.input_path).graph);
}

// Header comment lines carry the schema version and how each budget
// resolved against M, then one CSV header and one line per row.
inline void write_results_csv(std::ostream& out, const ExperimentSpec& spec, const Graph& g,
                              const std::vector<ResultRow>& rows) {
  out << "# rewire-results v" << kResultsSchemaVersion << '\n';
  out << "# nodes=" << g.node_count() << " edges=" << g.edge_count() << " method=" << spec.method
      << " top_fraction=" << format_double(spec.top_fraction) << '\n';
  for (const Budget& b : spec.budgets) {
    out << "# budget ";
    if (b.fraction())
      out << format_double(*b.fraction());
    else
      out << b.resolve(g.edge_count());
    out << " -> " << b.resolve(g.edge_count()) << " steps\n";
  }
  out << "dataset,method,budget_fraction,budget_steps,seed,steps_applied,truncated,delta_s,r_before,r_after,"
         "spearman_before,spearman_after";
  for (const auto& c : extra_columns(spec.metrics)) out << ',' << c;
  out << ",reason";
  if (spec.timing) out << ",wall_time";
  out << '\n';
  for (const auto& r : rows) {
    out << detail::csv_field(r.dataset) << ',' << r.method << ',' << format_double(r.budget_fraction) << ','
        << r.budget_steps << ',' << (r.seed ? std::to_string(*r.seed) : std::string()) << ',' << r.steps_applied
        << ',' << (r.truncated ? 1 : 0) << ',' << r.delta_s << ',' << detail::opt_field(r.r_before) << ','
        << detail::opt_field(r.r_after) << ',' << detail::opt_field(r.spearman_before) << ','
        << detail::opt_field(r.spearman_after);
    for (const auto& x : r.extra) out << ',' << detail::opt_field(x);
    std::string reason;
    for (const auto& s : r.reasons) reason += (reason.empty() ? "" : "; ") + s;
    out << ',' << detail::csv_field(reason);
    if (spec.timing) out << ',' << detail::opt_field(r.wall_time);
    out << '\n';
  }
}

// Rewiring steps of every row, keyed by the row's 0-based index.
inline void write_plans_csv(std::ostream& out, const Graph& g, const std::vector<ResultRow>& rows) {
  out << "row,step,source_a_u,source_a_v,source_b_u,source_b_v,created_a_u,created_a_v,created_b_u,created_b_v,value\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t s = 0; s < rows[i].plan.size(); ++s) {
      const auto& c = rows[i].plan[s];
      out << i << ',' << s;
      for (const EdgeRef& e : {c.source_a, c.source_b, c.created_a, c.created_b})
        out << ',' << detail::csv_field(g.label(e.u)) << ',' << detail::csv_field(g.label(e.v));
      out << ',' << c.value << '\n';
    }
  }
}

inline std::map<std::size_t, std::vector<EdgeSwap>> read_plans_csv(std::istream& in, const Graph& g) {
  std::map<std::size_t, std::vector<EdgeSwap>> plans;
  std::string line;
  std::size_t lineno = 0;
  auto node = [&](std::string_view label) {
    auto id = g.find(label);
    if (!id) throw parse_error(lineno, "unknown node '" + std::string(label) + "' in plan");
    return *id;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 || line.empty()) continue;
    const auto f = detail::split_csv(line);
    if (f.size() != 11) throw parse_error(lineno, "plan line needs 11 fields");
    const auto row = detail::parse_number<std::size_t>(f[0], "row");
    EdgeRef e[4];
    for (int k = 0; k < 4; ++k) e[k] = EdgeRef::of(node(f[2 + 2 * k]), node(f[3 + 2 * k]));
    plans[row].push_back(EdgeSwap{e[0], e[1], e[2], e[3]});
  }
  return plans;
}

inline Graph replay_plan(Graph g, const std::vector<EdgeSwap>& plan) {
  for (const auto& s : plan) apply_rewiring_in_place(g, s);
  return g;
}

// Writes through a temporary sibling file and renames it into place.
inline void write_file_atomically(const std::string& path, const std::function<void(std::ostream&)>& body) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw error("cannot write '" + tmp + "'");
    body(out);
    out.flush();
    if (!out) throw error("write to '" + tmp + "' failed");
  }
  std::filesystem::rename(tmp, path);
}

// ---- GA versus exact on random models ----

enum class RandomModel { er, ws, ba };

inline std::string_view model_name(RandomModel m) {
  switch (m) {
    case RandomModel::er: return "er";
    case RandomModel::ws: return "ws";
    case RandomModel::ba: return "ba";
  }
  return "?";
}

inline std::optional<RandomModel> parse_model(std::string_view s) {
  for (RandomModel m : {RandomModel::er, RandomModel::ws, RandomModel::ba})
    if (model_name(m) == s) return m;
  return std::nullopt;
}

struct RatioStudySpec {
  RandomModel model = RandomModel::er;
  std::size_t n = 50;
  std::size_t edges = 100;       // er
  std::size_t ring_degree = 4;   // ws
  double rewire_p = 0.1;         // ws
  std::size_t attachment = 2;    // ba
  std::size_t k = 5;
  std::size_t trials = 200;
  std::uint64_t seed = 42;
  std::uint64_t node_budget = kDefaultNodeBudget;
  unsigned threads = 0;
};

// Trial t uses the graph generated from mix_seed(spec.seed, t).
inline Graph ratio_trial_graph(const RatioStudySpec& spec, std::size_t trial) {
  const auto seed = mix_seed(spec.seed, trial);
  switch (spec.model) {
    case RandomModel::er: return erdos_renyi(spec.n, spec.edges, seed);
    case RandomModel::ws: return watts_strogatz(spec.n, spec.ring_degree, spec.rewire_p, seed);
    case RandomModel::ba: return barabasi_albert(spec.n, spec.attachment, seed);
  }
  throw error("unknown model");
}

struct RatioTrial {
  std::int64_t ga_delta_s = 0;
  std::int64_t optimal_delta_s = 0;
  bool proven = false;
  std::optional<double> ratio;  // empty when unproven or the optimum is 0
};

struct RatioSummary {
  RatioStudySpec spec;
  std::vector<RatioTrial> trials;
  std::size_t valid = 0;
  std::size_t excluded = 0;   // solver hit its node budget
  std::size_t undefined = 0;  // optimum is 0
  std::size_t exact_hits = 0;
  std::optional<double> hit_rate, min_ratio, mean_ratio;
};

inline RatioSummary run_ratio_study(const RatioStudySpec& spec) {
  RatioSummary sum;
  sum.spec = spec;
  sum.trials.resize(spec.trials);
  StrategyConfig cfg;
  cfg.budget = Budget::count(spec.k);
  detail::parallel_for(spec.trials, spec.threads ? spec.threads : default_thread_count(), [&](std::size_t t) {
    const Graph g = ratio_trial_graph(spec, t);
    RatioTrial tr;
    tr.ga_delta_s = spec.k ? run_ga(g, cfg).delta_s : 0;
    const auto sol = solve_exact(g, spec.k, spec.node_budget);
    tr.optimal_delta_s = sol.optimal_delta_s;
    tr.proven = sol.proven_optimal;
    if (tr.proven && tr.optimal_delta_s > 0)
      tr.ratio = static_cast<double>(tr.ga_delta_s) / static_cast<double>(tr.optimal_delta_s);
    sum.trials[t] = tr;
  });
  double total = 0;
  for (const auto& tr : sum.trials) {
    if (!tr.proven) {
      ++sum.excluded;
    } else if (!tr.ratio) {
      ++sum.undefined;
    } else {
      ++sum.valid;
      total += *tr.ratio;
      sum.exact_hits += tr.ga_delta_s == tr.optimal_delta_s;
      sum.min_ratio = std::min(sum.min_ratio.value_or(*tr.ratio), *tr.ratio);
    }
  }
  if (sum.valid) {
    sum.mean_ratio = total / static_cast<double>(sum.valid);
    sum.hit_rate = static_cast<double>(sum.exact_hits) / static_cast<double>(sum.valid);
  }
  return sum;
}

inline void write_ratio_header(std::ostream& out) {
  out << "# rewire-ratio v" << kResultsSchemaVersion << '\n'
      << "model,n,edges,ring_degree,rewire_p,attachment,k,trials,seed,valid,excluded,undefined,exact_hits,"
         "hit_rate,min_ratio,mean_ratio\n";
}

// Parameters that do not apply to the model are left empty.
inline void write_ratio_row(std::ostream& out, const RatioSummary& s) {
  const auto& p = s.spec;
  out << model_name(p.model) << ',' << p.n << ',';
  if (p.model == RandomModel::er) out << p.edges;
  out << ',';
  if (p.model == RandomModel::ws) out << p.ring_degree << ',' << format_double(p.rewire_p);
  else out << ',';
  out << ',';
  if (p.model == RandomModel::ba) out << p.attachment;
  out << ',' << p.k << ',' << p.trials << ',' << p.seed << ',' << s.valid << ',' << s.excluded << ',' << s.undefined
      << ',' << s.exact_hits << ',' << detail::opt_field(s.hit_rate) << ',' << detail::opt_field(s.min_ratio) << ','
      << detail::opt_field(s.mean_ratio) << '\n';
}

inline void write_ratio_trials_csv(std::ostream& out, const RatioSummary& s) {
  out << "trial,graph_seed,ga_delta_s,optimal_delta_s,proven,ratio\n";
  for (std::size_t t = 0; t < s.trials.size(); ++t) {
    const auto& tr = s.trials[t];
    out << t << ',' << mix_seed(s.spec.seed, t) << ',' << tr.ga_delta_s << ',' << tr.optimal_delta_s << ','
        << (tr.proven ? 1 : 0) << ',' << detail::opt_field(tr.ratio) << '\n';
  }
}

}  // namespace rewire

#endif  // REWIRE_EXPERIMENT_HPP_
