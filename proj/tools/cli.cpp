#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>

#include "swe/acceptance.hpp"
#include "swe/csv_io.hpp"
#include "swe/errors.hpp"
#include "swe/scenarios.hpp"

namespace swe::cli {

namespace {

RunSwitches to_switches(const RunConfig& cfg) {
  RunSwitches sw;
  sw.nx = cfg.nx;
  sw.ny = cfg.ny;
  sw.cfl = cfg.cfl;
  sw.t_final = cfg.t_final;
  sw.manning_m = cfg.friction_m;
  sw.limiter.kind = cfg.limiter == "none" ? LimiterKind::none : LimiterKind::hr;
  if (cfg.detector_threshold) sw.limiter.detector_threshold = *cfg.detector_threshold;
  sw.limiter.remainder_correction = cfg.remainder_correction != "off";
  sw.well_balanced = cfg.well_balanced != "off";
  return sw;
}

std::string default_output(const RunConfig& cfg, const std::string& suffix) {
  return cfg.output.empty() ? cfg.scenario + suffix : cfg.output;
}

int do_run(const RunConfig& cfg) {
  const RunSwitches sw = to_switches(cfg);
  if (const Scenario1D* scn = find_scenario_1d(cfg.scenario)) {
    const auto run = run_scenario(*scn, sw);
    const std::string out = default_output(cfg, ".csv");
    write_solution(out, run.grid, run.field, run.bathy);
    if (!cfg.log_path.empty()) write_step_log(cfg.log_path, run.adv.log);
    if (run.report) {
      std::cout << render_error_report(*run.report, {"w", "hu"});
    }
    std::cout << "wrote " << out << " (" << run.adv.log.size() << " steps)\n";
    if (cfg.with_reference && scn->reference == ReferenceKind::fine_grid && scn->reference_n > 0) {
      RunSwitches fsw = sw;
      fsw.nx = scn->reference_n;
      const auto fine = run_scenario(*scn, fsw);
      const std::string fout = cfg.scenario + "-reference.csv";
      write_solution(fout, fine.grid, fine.field, fine.bathy);
      const auto vals = restrict_primal(fine.field, fine.grid, fine.grid.n_cells / run.grid.n_cells);
      Field1D restricted = Field1D::zeros(run.grid);
      for (int k = 0; k < run.grid.n_cells; ++k) restricted.primal[run.grid.begin() + k] = vals[k];
      std::cout << "reference grid " << fine.grid.n_cells << ":\n"
                << render_error_report(error_norms(run.field, restricted, run.grid), {"w", "hu"});
      std::cout << "wrote " << fout << "\n";
    }
    return 0;
  }
  if (const Scenario2D* scn = find_scenario_2d(cfg.scenario)) {
    const auto run = run_scenario(*scn, sw);
    const std::string out = default_output(cfg, ".csv");
    write_solution(out, run.grid, run.field, run.bathy);
    if (!cfg.log_path.empty()) write_step_log(cfg.log_path, run.adv.log);
    if (run.report) std::cout << render_error_report(*run.report, {"w", "hu", "hv"});
    std::cout << "wrote " << out << " (" << run.adv.log.size() << " steps)\n";
    return 0;
  }
  throw ConfigError("unknown scenario: " + cfg.scenario);
}

int do_orders(const RunConfig& cfg) {
  const Scenario1D* scn = find_scenario_1d(cfg.scenario);
  if (scn == nullptr) throw ConfigError("orders: unknown 1-D scenario: " + cfg.scenario);
  const RunSwitches base = to_switches(cfg);
  const int n0 = cfg.nx.value_or(scn->default_n);

  RunSwitches sw = base;
  sw.nx = n0;
  const auto coarse = run_scenario(*scn, sw);
  sw.nx = 2 * n0;
  const auto mid = run_scenario(*scn, sw);
  sw.nx = 4 * n0;
  const auto fine = run_scenario(*scn, sw);
  const OrderEstimate est = aitken_order(coarse.field, coarse.grid, mid.field, mid.grid, fine.field, fine.grid);

  OrderTable table;
  table.columns = {"w L1-order", "w Linf-order", "hu L1-order", "hu Linf-order"};
  OrderTableRow row;
  row.label = "1/" + std::to_string(4 * n0);
  row.values = {est.l1[0], est.linf[0], est.l1[1], est.linf[1]};
  table.rows.push_back(row);
  const std::string rendered = render_order_table(table);
  std::cout << rendered;
  if (!cfg.output.empty()) write_text_atomic(cfg.output, rendered);
  return 0;
}

int do_suite(const RunConfig& cfg) {
  const auto results = run_acceptance(cfg.only, &std::cout);
  return all_passed(results) ? 0 : 1;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Expand `--config FILE` (a plain key=value file, one pair per line, '#'
// comments) into ordinary long options. Keys already present on the command
// line win over the file.
std::vector<std::string> expand_config_args(int argc, const char* const* argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config file: " + path);
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config: expected key=value, got: " + line);
    const std::string key = "--" + trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    bool already = false;
    for (const auto& a : args)
      if (a == key || a.rfind(key + "=", 0) == 0) already = true;
    if (already) continue;
    args.push_back(key);
    if (!value.empty()) args.push_back(value);
  }
  return args;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"Well-balanced central solver for the Saint-Venant system on overlapping grids"};
  app.require_subcommand(1);

  std::string scenario_help = "scenario name (";
  for (const auto& n : scenario_names()) scenario_help += n + " ";
  scenario_help.back() = ')';

  std::string config_path;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key=value file with defaults for these options");
    sub->add_option("--scenario", cfg.scenario, scenario_help)->required();
    sub->add_option("--nx", cfg.nx, "cells in x");
    sub->add_option("--cfl", cfg.cfl, "CFL number");
    sub->add_option("--t-final", cfg.t_final, "final time override");
    sub->add_option("--limiter", cfg.limiter, "hr|none")->check(CLI::IsMember({"hr", "none"}));
    sub->add_option("--well-balanced", cfg.well_balanced, "on|off")->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--detector-threshold", cfg.detector_threshold, "smoothness detector C_s");
    sub->add_option("--remainder-correction", cfg.remainder_correction, "on|off")
        ->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--friction-m", cfg.friction_m, "Manning coefficient override");
    sub->add_option("--output", cfg.output, "output path");
  };

  CLI::App* run = app.add_subcommand("run", "run one scenario and write the solution CSV");
  add_common(run);
  run->add_option("--ny", cfg.ny, "cells in y (2-D scenarios)");
  run->add_option("--log", cfg.log_path, "write the per-step diagnostics CSV here");
  run->add_flag("--with-reference", cfg.with_reference, "also run the catalog fine grid and report the difference");

  CLI::App* orders = app.add_subcommand("orders", "three-grid convergence study (nx, 2nx, 4nx)");
  add_common(orders);

  CLI::App* suite = app.add_subcommand("suite", "run the acceptance criteria");
  suite->add_option("--only", cfg.only, "criterion ids to run");

  std::vector<std::string> expanded;
  try {
    expanded = expand_config_args(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::vector<const char*> eargv;
  for (const auto& a : expanded) eargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(eargv.size()), eargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return do_run(cfg);
    if (orders->parsed()) return do_orders(cfg);
    if (suite->parsed()) return do_suite(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace swe::cli
