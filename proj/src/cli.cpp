#include "noncomm/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "noncomm/io.hpp"

namespace noncomm {

namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

bool all_states_identical(const FinalStateSet& set) {
  for (const auto& s : set.states)
    if (s != set.states.front()) return false;
  return true;
}

struct Options {
  std::string config_path;
  std::string curves_path;
  std::string out_dir;
  unsigned threads = 1;
  bool dump_states = false;
};

FinalStateSet run_single(const io::RunConfig& config, const Options& opts) {
  const MeasurementConfig mc = io::single_run_config(config);
  FinalStateSet ensemble = simulate_ensemble(
      config.sweep.rho0, mc, config.sweep.ensemble_size, opts.threads);
  if (all_states_identical(ensemble))
    throw DegenerateInput(
        "degenerate ensemble: all final states are identical (kappa = 0?)");
  return ensemble;
}

int cmd_simulate(const io::RunConfig& config, const Options& opts) {
  const FinalStateSet ensemble = run_single(config, opts);
  write_file(fs::path(opts.out_dir) / "finalstates.csv",
             io::final_states_csv(ensemble));
  return 0;
}

int cmd_measure(const io::RunConfig& config, const Options& opts) {
  const FinalStateSet ensemble = run_single(config, opts);
  const MeasureResult result = measure_pipeline(
      config.sweep.rho0, ensemble, config.sweep.lambda, config.sweep.params,
      mix_seed(ensemble.config.seed, 0x636c7573ULL));
  write_file(fs::path(opts.out_dir) / "finalstates.csv",
             io::final_states_csv(ensemble));
  write_file(fs::path(opts.out_dir) / "measure.json",
             io::measure_result_json(result).dump(2) + "\n");
  return 0;
}

GridResult run_sweep(const io::RunConfig& config, const Options& opts) {
  CellObserver observer;
  if (opts.dump_states) {
    observer = [&opts](const GridCell& cell, const FinalStateSet& states) {
      const std::string name = "finalstates_k" +
                               std::to_string(cell.kappa_index) + "_t" +
                               std::to_string(cell.theta_index) + ".csv";
      write_file(fs::path(opts.out_dir) / name, io::final_states_csv(states));
    };
  }
  try {
    return sweep_grid(config.sweep, opts.threads, observer);
  } catch (const std::invalid_argument& err) {
    throw io::ConfigError(std::string("config field error: ") + err.what());
  }
}

int cmd_sweep(const io::RunConfig& config, const Options& opts) {
  const GridResult grid = run_sweep(config, opts);
  write_file(fs::path(opts.out_dir) / "grid.csv", io::grid_csv(grid));
  return 0;
}

int cmd_bound_select(const io::RunConfig& config, const Options& opts) {
  if (opts.curves_path.empty())
    throw io::ConfigError("bound-select requires --curves <file>");
  const std::vector<BoundCurve> curves = io::load_curves(opts.curves_path);
  const GridResult grid = run_sweep(config, opts);
  write_file(fs::path(opts.out_dir) / "grid.csv", io::grid_csv(grid));
  const BoundSelection selection = select_bound_curve(grid, curves);
  write_file(fs::path(opts.out_dir) / "bound_report.json",
             io::bound_report_json(selection).dump(2) + "\n");
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Qubit weak-measurement simulator and non-commutability "
               "measure toolkit"};
  app.require_subcommand(1);

  Options opts;
  std::string command;
  for (const std::string& name :
       {"simulate", "measure", "sweep", "bound-select"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", opts.config_path, "JSON config file")
        ->required();
    sub->add_option("--out", opts.out_dir, "output directory")->required();
    sub->add_option("--curves", opts.curves_path, "JSON curves file");
    sub->add_option("--threads", opts.threads, "worker thread count");
    sub->add_flag("--dump-states", opts.dump_states,
                  "write per-cell final-state CSVs");
    sub->callback([&command, name] { command = name; });
  }

  // CLI11 wants argv-style reversed arguments.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const io::RunConfig config = io::load_config(opts.config_path);
    fs::create_directories(opts.out_dir);
    if (command == "simulate") return cmd_simulate(config, opts);
    if (command == "measure") return cmd_measure(config, opts);
    if (command == "sweep") return cmd_sweep(config, opts);
    return cmd_bound_select(config, opts);
  } catch (const io::ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}

}  // namespace noncomm
