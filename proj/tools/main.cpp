#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "eprb/errors.hpp"
#include "output.hpp"

using namespace eprb::tool;

namespace {

void add_sim_flags(CLI::App* cmd, SimFlags& f) {
  cmd->add_option("--experiment", f.experiment, "I (random orthogonal pairs) or II (fixed polarization)")
      ->capture_default_str();
  cmd->add_option("--n", f.n_events, "events per settings point")->capture_default_str();
  cmd->add_option("--d", f.d, "delay exponent")->capture_default_str();
  cmd->add_option("--l", f.l, "DLM learning parameter in (0, 1)")->capture_default_str();
  cmd->add_option("--tau", f.tau, "time-tag resolution, units of T0")->capture_default_str();
  cmd->add_option("--window", f.window, "coincidence window W >= tau, or inf")->capture_default_str();
  cmd->add_option("--t0", f.t0, "maximum time delay T0")->capture_default_str();
  cmd->add_option("--xi", f.xi, "source polarization for experiment II (e.g. pi/6)")->capture_default_str();
  cmd->add_option("--theta", f.theta, "comma list of theta values; overrides the grid");
  cmd->add_option("--theta-points", f.theta_points, "theta grid size")->capture_default_str();
  cmd->add_option("--theta-max", f.theta_max, "theta grid upper end")->capture_default_str();
  cmd->add_option("--layout", f.layout, "auto, ladder (0, 2t | t, 3t) or fixed-pair (t, t | t+pi/4, t+pi/4)")
      ->capture_default_str();
}

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--out-dir", f.out_dir, "output directory")->required();
  cmd->add_flag("--gnuplot", f.gnuplot, "also write gnuplot scripts");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Event-by-event EPRB simulation and coincidence analysis"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "show help for every command");

  SimulateFlags sim;
  auto* simulate = app.add_subcommand("simulate", "simulate a theta scan and write CHSH/singles CSVs");
  add_sim_flags(simulate, sim.sim);
  add_common(simulate, sim.common);
  simulate->add_option("--seed", sim.seed, "base seed (required)")->required();
  simulate->add_flag("--logs", sim.logs, "write index-paired station logs");
  simulate->add_flag("--export-timestamped", sim.export_timestamped, "also write unpaired, ns-tagged logs");
  simulate->add_option("--export-delay-unit", sim.export_delay_unit, "seconds per T0 in the export")
      ->capture_default_str();
  simulate->add_option("--export-gap", sim.export_gap, "mean spacing of emissions")->capture_default_str();
  simulate->add_option("--export-shift", sim.export_shift, "station-2 clock lag")->capture_default_str();
  simulate->add_option("--export-drop", sim.export_drop, "per-detection loss probability")->capture_default_str();

  SweepFlags sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "simulate over d, W/tau, theta and seeds");
  add_sim_flags(sweep_cmd, sweep.sim);
  add_common(sweep_cmd, sweep.common);
  sweep_cmd->add_option("--seed", sweep.seeds, "comma list of base seeds (required)")->required();
  sweep_cmd->add_option("--d-list", sweep.d_list, "comma list of delay exponents")->required();
  sweep_cmd->add_option("--w-over-tau-list", sweep.w_over_tau_list, "comma list of W/tau")->capture_default_str();

  AnalyticFlags analytic;
  auto* analytic_cmd = app.add_subcommand("analytic", "quadrature vs closed-form correlation table");
  add_common(analytic_cmd, analytic.common);
  analytic_cmd->add_option("--d", analytic.d, "delay exponent")->capture_default_str();
  analytic_cmd->add_option("--tau", analytic.tau, "time-tag resolution")->capture_default_str();
  analytic_cmd->add_option("--w-over-tau", analytic.w_over_tau, "W/tau, or inf")->capture_default_str();
  analytic_cmd->add_option("--points", analytic.points, "alpha - beta grid size over [0, pi)")->capture_default_str();
  analytic_cmd->add_option("--quad", analytic.quad, "quadrature points")->capture_default_str();

  SmaxCurveFlags curve;
  auto* curve_cmd = app.add_subcommand("smax-curve", "S_max as a function of W/tau from quadrature");
  add_common(curve_cmd, curve.common);
  curve_cmd->add_option("--d", curve.d_list, "comma list of delay exponents")->capture_default_str();
  curve_cmd->add_option("--w-over-tau", curve.w_over_tau_list, "comma list of W/tau")->capture_default_str();
  curve_cmd->add_option("--tau", curve.tau, "time-tag resolution")->capture_default_str();
  curve_cmd->add_option("--quad", curve.quad, "quadrature points")->capture_default_str();
  curve_cmd->add_option("--grid", curve.grid, "theta grid for the maximization")->capture_default_str();

  AnalyzeFlags analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "shift recovery and window sweep on unpaired time tags");
  add_common(analyze_cmd, analyze.common);
  analyze_cmd->add_option("--log1", analyze.log1, "station-1 log")->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("--log2", analyze.log2, "station-2 log")->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("--bin", analyze.bin, "histogram bin")->capture_default_str();
  analyze_cmd->add_option("--scan-range", analyze.scan_range, "largest |t1 - t2| scanned")->capture_default_str();
  analyze_cmd->add_option("--shift", analyze.shift, "clock shift, or auto")->capture_default_str();
  analyze_cmd->add_option("--w-list", analyze.w_list, "windows: list or a..b[:step]")->capture_default_str();
  analyze_cmd->add_option("--hist-window", analyze.hist_window, "window for delay histograms (default: largest W)");
  analyze_cmd->add_option("--outcome1", analyze.outcome_1, "station-1 detector for delay histograms")
      ->capture_default_str();
  analyze_cmd->add_option("--outcome2", analyze.outcome_2, "station-2 detector for delay histograms")
      ->capture_default_str();

  OracleFlags oracle;
  auto* oracle_cmd = app.add_subcommand("oracle-check", "closed-form pair count vs enumeration");
  oracle_cmd->add_option("--out-dir", oracle.out_dir, "optional output directory");
  oracle_cmd->add_option("--max-k1", oracle.max_k1, "largest K1")->capture_default_str();
  oracle_cmd->add_option("--max-k2", oracle.max_k2, "largest K2 (default: max-k1)")->capture_default_str();
  oracle_cmd->add_option("--max-k", oracle.max_k, "largest k")->capture_default_str();

  app.set_config("--config", "", "replay a manifest.ini written by an earlier run");
  for (auto* cmd : app.get_subcommands({})) cmd->configurable();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string manifest = "[" + chosen->get_name() + "]\n" + chosen->config_to_str(true, false);
  try {
    if (chosen == simulate) return run_simulate(sim, manifest);
    if (chosen == sweep_cmd) return run_sweep(sweep, manifest);
    if (chosen == analytic_cmd) return run_analytic(analytic, manifest);
    if (chosen == curve_cmd) return run_smax_curve(curve, manifest);
    if (chosen == analyze_cmd) return run_analyze(analyze, manifest);
    return run_oracle_check(oracle, manifest);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << chosen->help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
