#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eprb::tool {

/// Flags shared by simulate and sweep, kept as text until validated.
struct SimFlags {
  std::string experiment = "I";
  std::uint64_t n_events = 1'000'000;
  double d = 2.0;
  double l = 0.999;
  double tau = 0.00025;
  std::string window = "0.00025";
  double t0 = 1.0;
  std::string xi = "pi/6";
  std::string theta;              // explicit comma list; overrides the grid
  int theta_points = 33;
  std::string theta_max = "pi";
  std::string layout = "auto";    // auto | ladder | fixed-pair
};

struct CommonFlags {
  std::string out_dir;
  bool gnuplot = false;
};

struct SimulateFlags {
  SimFlags sim;
  CommonFlags common;
  std::uint64_t seed = 0;
  bool logs = false;
  bool export_timestamped = false;
  std::string export_delay_unit = "5ns";
  std::string export_gap = "1us";
  std::string export_shift = "4ns";
  double export_drop = 0.0;
};

struct SweepFlags {
  SimFlags sim;
  CommonFlags common;
  std::string seeds;
  std::string d_list;
  std::string w_over_tau_list = "1";
};

struct AnalyticFlags {
  CommonFlags common;
  double d = 2.0;
  double tau = 1e-4;
  std::string w_over_tau = "1";
  int points = 32;
  int quad = 200'000;
};

struct SmaxCurveFlags {
  CommonFlags common;
  std::string d_list = "2";
  std::string w_over_tau_list = "1,2,5,10,20,50,100,200,500,1000";
  double tau = 1e-3;
  int quad = 20'000;
  int grid = 64;
};

struct AnalyzeFlags {
  CommonFlags common;
  std::string log1;
  std::string log2;
  std::string bin = "0.5ns";
  std::string scan_range = "1us";
  std::string shift = "auto";
  std::string w_list = "1ns..20ns";
  std::string hist_window;  // defaults to the largest window in w_list
  int outcome_1 = 1;
  int outcome_2 = 1;
};

struct OracleFlags {
  std::string out_dir;
  int max_k1 = 30;
  int max_k2 = 0;  // 0: same as max_k1
  int max_k = 35;
};

/// Each returns the process exit code. `manifest` is the replayable option
/// dump written next to the outputs.
int run_simulate(const SimulateFlags& flags, const std::string& manifest);
int run_sweep(const SweepFlags& flags, const std::string& manifest);
int run_analytic(const AnalyticFlags& flags, const std::string& manifest);
int run_smax_curve(const SmaxCurveFlags& flags, const std::string& manifest);
int run_analyze(const AnalyzeFlags& flags, const std::string& manifest);
int run_oracle_check(const OracleFlags& flags, const std::string& manifest);

}  // namespace eprb::tool
