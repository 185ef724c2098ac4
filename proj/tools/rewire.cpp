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

// rewire run   -- strategy / exact sweeps on an edge-list file
// rewire ratio -- GA versus exact on random graphs
//
// Exit status: 0 success, 1 input error, 2 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rewire/rewire.hpp"

namespace {

struct RunArgs {
  std::string input, method = "ga", budget = "0.05", sweep, seeds, metrics = "assortativity", output, plans, dataset;
  std::uint64_t seed = 0;
  double top_fraction = 1.0;
  bool dump_ep = false, timing = false;
  std::uint64_t node_budget = rewire::kDefaultNodeBudget;
};

struct RatioArgs {
  std::string model, output, trials_output;
  rewire::RatioStudySpec spec;
};

void emit(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
  } else {
    rewire::write_file_atomically(path, body);
  }
}

int run(const RunArgs& a) {
  using namespace rewire;
  ExperimentSpec spec;
  spec.input_path = a.input;
  spec.dataset = a.dataset;
  spec.method = a.method;
  spec.budgets.clear();
  if (!a.sweep.empty()) {
    for (double f : parse_budget_sweep(a.sweep)) spec.budgets.push_back(Budget::fraction(f));
  } else {
    spec.budgets.push_back(parse_budget(a.budget));
  }
  spec.seeds = a.seeds.empty() ? std::vector<std::uint64_t>{a.seed} : parse_seed_list(a.seeds);
  spec.metrics = parse_metrics(a.metrics);
  spec.top_fraction = a.top_fraction;
  spec.node_budget = a.node_budget;
  spec.timing = a.timing;
  validate(spec);

  const auto loaded = load_graph(a.input);
  const Graph& g = loaded.graph;
  std::clog << "loaded " << a.input << ": " << g.node_count() << " nodes, " << g.edge_count() << " edges";
  if (loaded.report.duplicate_edges) std::clog << " (" << loaded.report.duplicate_edges << " duplicate edges dropped)";
  std::clog << '\n';
  for (const Budget& b : spec.budgets)
    if (b.fraction())
      std::clog << "budget " << format_double(*b.fraction()) << " of M=" << g.edge_count() << " resolves to "
                << b.resolve(g.edge_count()) << " steps\n";

  if (a.dump_ep) {
    const std::string path = a.output.empty() || a.output == "-" ? "ep.csv" : a.output + ".ep.csv";
    const auto ep = enumerate_ep(g, default_thread_count());
    write_file_atomically(path, [&](std::ostream& out) { write_candidates_csv(out, g, ep); });
    std::clog << "wrote " << ep.size() << " candidates to " << path << '\n';
  }

  const auto rows = run_experiment(spec, g);
  emit(a.output, [&](std::ostream& out) { write_results_csv(out, spec, g, rows); });
  if (!a.plans.empty()) emit(a.plans, [&](std::ostream& out) { write_plans_csv(out, g, rows); });
  return 0;
}

int ratio(RatioArgs a) {
  using namespace rewire;
  const auto model = parse_model(a.model);
  if (!model) throw error("unknown model '" + a.model + "'");
  a.spec.model = *model;
  if (a.spec.model == RandomModel::ws)
    std::clog << "ws parameters: ring_degree=" << a.spec.ring_degree << " p=" << format_double(a.spec.rewire_p) << '\n';
  const auto summary = run_ratio_study(a.spec);
  emit(a.output, [&](std::ostream& out) {
    write_ratio_header(out);
    write_ratio_row(out, summary);
  });
  if (!a.trials_output.empty()) emit(a.trials_output, [&](std::ostream& out) { write_ratio_trials_csv(out, summary); });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-preserving rewiring toward maximum assortativity"};
  app.require_subcommand(1);

  RunArgs r;
  auto* run_cmd = app.add_subcommand("run", "Run a strategy or the exact solver on an edge list");
  run_cmd->add_option("--input", r.input, "Edge-list file")->required();
  run_cmd->add_option("--method", r.method, "ga|eda|ta|pea|ra|pa|exact")->capture_default_str();
  run_cmd->add_option("--budget", r.budget, "Step count (integer) or fraction of M (e.g. 0.05)")->capture_default_str();
  run_cmd->add_option("--budget-sweep", r.sweep, "first:last:step fractions; overrides --budget");
  run_cmd->add_option("--seed", r.seed, "Seed for stochastic methods")->capture_default_str();
  run_cmd->add_option("--seeds", r.seeds, "Comma-separated seeds; overrides --seed");
  run_cmd->add_option("--metrics", r.metrics,
                      "Comma-separated: assortativity,spearman,spectral_radius,natural_connectivity,"
                      "betweenness,closeness,eigenvector,kshell")
      ->capture_default_str();
  run_cmd->add_option("--top-fraction", r.top_fraction, "Node fraction for centrality stability")->capture_default_str();
  run_cmd->add_option("--output", r.output, "Results CSV (stdout when omitted)");
  run_cmd->add_option("--plans", r.plans, "Also write every row's rewiring steps to this CSV");
  run_cmd->add_option("--dataset", r.dataset, "Dataset name column (default: input file stem)");
  run_cmd->add_flag("--dump-ep", r.dump_ep, "Write the candidate set to <output>.ep.csv");
  run_cmd->add_flag("--timing", r.timing, "Add a wall_time column (output is then not reproducible)");
  run_cmd->add_option("--node-budget", r.node_budget, "Search-node cap for the exact solver")->capture_default_str();

  RatioArgs q;
  auto* ratio_cmd = app.add_subcommand("ratio", "GA versus exact on random graphs");
  ratio_cmd->add_option("--model", q.model, "er|ws|ba")->required();
  ratio_cmd->add_option("--n", q.spec.n, "Node count")->capture_default_str();
  ratio_cmd->add_option("--edges", q.spec.edges, "Edge count (er)")->capture_default_str();
  ratio_cmd->add_option("--ring-degree", q.spec.ring_degree, "Ring lattice degree (ws)")->capture_default_str();
  ratio_cmd->add_option("--p", q.spec.rewire_p, "Rewiring probability (ws)")->capture_default_str();
  ratio_cmd->add_option("--attachment", q.spec.attachment, "Edges per new node (ba)")->capture_default_str();
  ratio_cmd->add_option("--k", q.spec.k, "Rewiring budget")->capture_default_str();
  ratio_cmd->add_option("--trials", q.spec.trials, "Number of random graphs")->capture_default_str();
  ratio_cmd->add_option("--seed", q.spec.seed, "Base seed")->capture_default_str();
  ratio_cmd->add_option("--node-budget", q.spec.node_budget, "Search-node cap per trial")->capture_default_str();
  ratio_cmd->add_option("--output", q.output, "Summary CSV (stdout when omitted)");
  ratio_cmd->add_option("--trials-output", q.trials_output, "Per-trial CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    return run_cmd->parsed() ? run(r) : ratio(q);
  } catch (const rewire::convergence_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const rewire::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
