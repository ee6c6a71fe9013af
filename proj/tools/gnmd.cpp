// Copyright 2026 The gnmd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: threshold tables, phase predictions, graph
// sampling, component reports, sweeps, percolation comparison and the
// enumeration oracle.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "gnmd/components.hpp"
#include "gnmd/error.hpp"
#include "gnmd/experiments.hpp"
#include "gnmd/giant.hpp"
#include "gnmd/graph_io.hpp"
#include "gnmd/oracle.hpp"
#include "gnmd/rng.hpp"
#include "gnmd/sampler.hpp"

namespace {

void print_error_line(const std::string& kind, const std::string& message) {
  std::cerr << nlohmann::json{{"error", kind}, {"message", message}}.dump() << '\n';
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

struct GridOptions {
  int d = 4;
  double mu_from = 0.5;
  double mu_to = 2.0;
  std::size_t steps = 16;
  std::size_t n = 10000;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::string out;
};

void add_grid_options(CLI::App* cmd, GridOptions& o) {
  cmd->add_option("--d", o.d, "maximum degree")->required();
  cmd->add_option("--mu-from", o.mu_from, "first mean degree");
  cmd->add_option("--mu-to", o.mu_to, "last mean degree");
  cmd->add_option("--steps", o.steps, "grid points");
  cmd->add_option("--n", o.n, "vertices per graph");
  cmd->add_option("--trials", o.trials, "graphs per grid point");
  cmd->add_option("--seed", o.seed, "master seed");
  cmd->add_option("--out", o.out, "CSV output path")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform random graphs with bounded maximum degree"};
  app.require_subcommand(1);

  int d_max = 8;
  auto* threshold = app.add_subcommand("threshold", "critical mean degree for d = 2..K");
  threshold->add_option("--dmax", d_max, "largest d (2..20)");

  int predict_d = 3;
  double predict_mu = 1.5;
  bool predict_as_json = false;
  auto* predict_cmd = app.add_subcommand("predict", "phase and giant-component prediction");
  predict_cmd->add_option("--d", predict_d, "maximum degree")->required();
  predict_cmd->add_option("--mu", predict_mu, "mean degree")->required();
  predict_cmd->add_flag("--json", predict_as_json, "print JSON");

  std::size_t sample_n = 0;
  std::size_t sample_m = 0;
  int sample_d = 3;
  std::uint64_t sample_seed = 1;
  std::string sample_out;
  auto* sample = app.add_subcommand("sample", "draw one uniform graph");
  sample->add_option("--n", sample_n, "vertices")->required();
  sample->add_option("--m", sample_m, "edges")->required();
  sample->add_option("--d", sample_d, "maximum degree")->required();
  sample->add_option("--seed", sample_seed, "seed");
  sample->add_option("--out", sample_out, "output file (stdout if omitted)");

  std::string components_in;
  bool components_as_json = false;
  auto* components = app.add_subcommand("components", "component report for a graph file");
  components->add_option("--in", components_in, "edge-list file")->required();
  components->add_flag("--json", components_as_json, "print JSON");

  GridOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over mean degree");
  add_grid_options(sweep, sweep_opts);

  GridOptions duel_opts;
  auto* duel = app.add_subcommand("duel", "compare with percolated random regular graphs");
  add_grid_options(duel, duel_opts);

  std::size_t oracle_n = 6;
  std::size_t oracle_m = 5;
  int oracle_d = 3;
  std::size_t oracle_trials = 0;
  std::uint64_t oracle_seed = 1;
  std::string oracle_dump;
  auto* oracle = app.add_subcommand("oracle", "exhaustive enumeration and uniformity test");
  oracle->add_option("--n", oracle_n, "vertices (<= 8)")->required();
  oracle->add_option("--m", oracle_m, "edges")->required();
  oracle->add_option("--d", oracle_d, "maximum degree")->required();
  oracle->add_option("--trials", oracle_trials, "samples (default 1000 per graph)");
  oracle->add_option("--seed", oracle_seed, "seed");
  oracle->add_option("--dump", oracle_dump, "write the ensemble to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) print_error_line("usage_error", e.what());
    return app.exit(e);
  }

  try {
    if (*threshold) {
      const auto rows = gnmd::threshold_table(d_max);
      std::cout << gnmd::format_threshold_table(rows);
    } else if (*predict_cmd) {
      const auto p = gnmd::predict(predict_d, predict_mu);
      std::cout << (predict_as_json ? gnmd::prediction_json(p) + "\n" : gnmd::format_prediction(p));
    } else if (*sample) {
      gnmd::Rng rng(sample_seed);
      const auto g = gnmd::sample_graph(sample_n, sample_m, sample_d, rng);
      if (sample_out.empty()) {
        gnmd::write_graph(std::cout, g);
      } else {
        auto out = open_output(sample_out);
        gnmd::write_graph(out, g);
      }
    } else if (*components) {
      std::ifstream in(components_in);
      if (!in) throw std::runtime_error("cannot open " + components_in);
      const auto r = gnmd::report(gnmd::read_graph(in));
      std::cout << (components_as_json ? gnmd::report_json(r) + "\n" : gnmd::format_report(r));
    } else if (*sweep) {
      gnmd::SweepConfig config;
      config.d = sweep_opts.d;
      config.mu_grid = gnmd::linear_grid(sweep_opts.mu_from, sweep_opts.mu_to, sweep_opts.steps);
      config.n = sweep_opts.n;
      config.trials = sweep_opts.trials;
      config.seed = sweep_opts.seed;
      config.output_path = sweep_opts.out;
      const auto rows = gnmd::run_sweep(config);
      auto out = open_output(config.output_path);
      gnmd::write_sweep_csv(out, rows);
    } else if (*duel) {
      gnmd::DuelConfig config;
      config.d = duel_opts.d;
      config.mu_grid = gnmd::linear_grid(duel_opts.mu_from, duel_opts.mu_to, duel_opts.steps);
      config.n = duel_opts.n;
      config.trials = duel_opts.trials;
      config.seed = duel_opts.seed;
      const auto rows = gnmd::run_percolation_duel(config);
      auto out = open_output(duel_opts.out);
      gnmd::write_duel_csv(out, rows);
    } else if (*oracle) {
      const auto ensemble = gnmd::enumerate(oracle_n, oracle_m, oracle_d);
      std::cout << fmt::format("count         {}\n", ensemble.count());
      if (!oracle_dump.empty()) {
        std::vector<gnmd::SimpleGraph> graphs;
        graphs.reserve(ensemble.count());
        for (const auto& edges : ensemble.graphs()) graphs.emplace_back(oracle_n, edges, oracle_d);
        auto out = open_output(oracle_dump);
        gnmd::write_graphs(out, graphs);
      }
      if (ensemble.count() > 0) {
        const std::size_t trials = oracle_trials ? oracle_trials : 1000 * ensemble.count();
        const auto r = gnmd::uniformity_test(ensemble, trials, oracle_seed);
        std::cout << fmt::format("trials        {}\n", r.trials);
        std::cout << fmt::format("tv_distance   {:.6f}\n", r.tv_distance);
        std::cout << fmt::format("chi_square    {:.4f}\n", r.chi_square);
        std::cout << fmt::format("df            {}\n", r.degrees_of_freedom);
        std::cout << fmt::format("chi2_q0.999   {:.4f}\n", r.chi_square_critical);
      }
    }
  } catch (const std::exception& e) {
    print_error_line(gnmd::error_kind(e), e.what());
    return 1;
  }
  return 0;
}
