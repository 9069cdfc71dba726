#include <CLI11.hpp>
#include <iostream>

#include "supcon/cli.hpp"
#include "supcon/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Supervised antagonistic actuator toolkit"};
  app.require_subcommand(1);

  supcon::cli::RunOptions run_opt;
  std::string run_out;
  double run_dt = 0.0;
  double run_mismatch = 0.0;
  CLI::App* run = app.add_subcommand("run", "Simulate one closed-loop scenario");
  run->add_option("--config", run_opt.config_path, "run configuration file")->required();
  CLI::Option* run_out_opt = run->add_option("--out", run_out, "telemetry CSV path");
  CLI::Option* run_dt_opt = run->add_option("--dt", run_dt, "override the sample period");
  CLI::Option* run_mis_opt = run->add_option("--mismatch", run_mismatch, "plant a2 scale factor");

  supcon::cli::VerifyOptions verify_opt;
  std::string verify_gammas;
  std::string verify_out;
  CLI::App* verify = app.add_subcommand("verify", "Invariant-set safety check");
  verify->add_option("--config", verify_opt.config_path, "run configuration file")->required();
  CLI::Option* verify_gammas_opt =
      verify->add_option("--gammas", verify_gammas, "comma-separated gamma grid");
  CLI::Option* verify_out_opt = verify->add_option("--out", verify_out, "report path");

  supcon::cli::SweepOptions sweep_opt;
  std::string sweep_gammas;
  std::string sweep_out;
  double sweep_dt = 0.0;
  double sweep_mismatch = 0.0;
  CLI::App* sweep = app.add_subcommand("sweep", "Run the scenario across a gamma grid");
  sweep->add_option("--config", sweep_opt.config_path, "run configuration file")->required();
  sweep->add_option("--gammas", sweep_gammas, "comma-separated gamma grid")->required();
  CLI::Option* sweep_out_opt = sweep->add_option("--out", sweep_out, "sweep CSV path");
  CLI::Option* sweep_dt_opt = sweep->add_option("--dt", sweep_dt, "override the sample period");
  CLI::Option* sweep_mis_opt = sweep->add_option("--mismatch", sweep_mismatch, "plant a2 scale factor");

  supcon::cli::CalibrateOptions cal_opt;
  std::string cal_out;
  CLI::App* calibrate = app.add_subcommand("calibrate", "Fit wire parameters from a log");
  calibrate->add_option("csv", cal_opt.csv_path, "calibration log (k,w,u,w_next)")->required();
  calibrate->add_option("--dt", cal_opt.dt, "sample period of the log");
  CLI::Option* cal_out_opt = calibrate->add_option("--out", cal_out, "config fragment path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      if (*run_out_opt) run_opt.out = run_out;
      if (*run_dt_opt) run_opt.dt = run_dt;
      if (*run_mis_opt) run_opt.mismatch = run_mismatch;
      return supcon::cli::cmd_run(run_opt, std::cout);
    }
    if (*verify) {
      if (*verify_gammas_opt) verify_opt.gammas = supcon::cli::parse_gamma_list(verify_gammas);
      if (*verify_out_opt) verify_opt.out = verify_out;
      return supcon::cli::cmd_verify(verify_opt, std::cout);
    }
    if (*sweep) {
      sweep_opt.gammas = supcon::cli::parse_gamma_list(sweep_gammas);
      if (*sweep_out_opt) sweep_opt.out = sweep_out;
      if (*sweep_dt_opt) sweep_opt.dt = sweep_dt;
      if (*sweep_mis_opt) sweep_opt.mismatch = sweep_mismatch;
      return supcon::cli::cmd_sweep(sweep_opt, std::cout);
    }
    if (*calibrate) {
      if (*cal_out_opt) cal_opt.out = cal_out;
      return supcon::cli::cmd_calibrate(cal_opt, std::cout);
    }
  } catch (const supcon::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
