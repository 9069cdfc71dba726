#include "supcon/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "supcon/config.hpp"
#include "supcon/io.hpp"
#include "supcon/polytope.hpp"

namespace supcon::cli {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void apply_overrides(RunConfig& cfg, const std::optional<double>& dt,
                     const std::optional<double>& mismatch) {
  if (dt) {
    cfg.sim.dt = *dt;
    cfg.actuator0.dt = *dt;
    cfg.actuator1.dt = *dt;
  }
  if (mismatch) cfg.sim.mismatch = *mismatch;
}

void print_summary(std::ostream& out, const std::vector<TelemetryRecord>& telemetry) {
  double max_t0 = telemetry.front().t0;
  double max_t1 = telemetry.front().t1;
  for (const TelemetryRecord& r : telemetry) {
    max_t0 = std::max(max_t0, r.t0);
    max_t1 = std::max(max_t1, r.t1);
  }
  const TelemetryRecord& last = telemetry.back();
  out << "steps=" << telemetry.size() << " max_T0=" << fmt(max_t0) << " max_T1=" << fmt(max_t1)
      << " final_error=" << fmt(std::abs(last.theta - last.theta_ref));
  const std::optional<double> act = activation_time(telemetry);
  out << " activation_time=" << (act ? fmt(*act) : std::string("none")) << "\n";
}

}  // namespace

std::vector<double> parse_gamma_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
      throw ConfigError("--gammas: not a number: \"" + item + "\"");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("--gammas: empty list");
  return out;
}

int cmd_run(const RunOptions& opt, std::ostream& out) {
  RunConfig cfg = load_run_config(opt.config_path);
  apply_overrides(cfg, opt.dt, opt.mismatch);
  const std::vector<TelemetryRecord> telemetry = run_closed_loop(cfg);
  const std::string path = opt.out.value_or(cfg.out);
  write_telemetry_csv(path, telemetry);
  out << "wrote " << path << "\n";
  print_summary(out, telemetry);
  return 0;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const RunConfig cfg = load_run_config(opt.config_path);
  if (!cfg.supervisor) {
    throw ConfigError("verify requires an enabled supervisor section");
  }
  std::vector<double> gammas = opt.gammas;
  if (gammas.empty()) gammas.push_back(cfg.supervisor->gamma);

  const double band = cfg.supervisor->w_max - cfg.supervisor->w_lb;
  const HPolyhedron s = safe_set(band);
  const Eigen::Matrix2d a = augmented_matrices(cfg.actuator0).A;

  std::ostringstream report;
  bool all_safe = true;
  for (double gamma : gammas) {
    SupervisorConfig sup = *cfg.supervisor;
    sup.gamma = gamma;
    validate(sup);
    const Eigen::Matrix2d closed = (1.0 - gamma) * a;
    InvariantSetResult res;
    try {
      res = max_invariant_set(closed, s, 100, cfg.verify_tol);
    } catch (const NoConvergence& e) {
      report << "gamma=" << fmt(gamma) << " verdict=UNSAFE (" << e.what() << ")\n"
             << to_text(e.last);
      all_safe = false;
      continue;
    }
    if (res.spectral_radius >= 1.0) {
      report << "warning: closed-loop spectral radius " << fmt(res.spectral_radius) << " >= 1\n";
    }
    const bool safe = set_equal(res.invariant_set, s, cfg.verify_tol);
    all_safe = all_safe && safe;
    report << "gamma=" << fmt(gamma) << " iterations=" << res.iterations << " verdict="
           << (safe ? "SAFE" : "UNSAFE") << "\n"
           << to_text(res.invariant_set);
  }
  out << report.str();
  if (opt.out) {
    std::ofstream file(*opt.out);
    if (!file) throw IoError("cannot write " + *opt.out);
    file << report.str();
  }
  return all_safe ? 0 : 2;
}

int cmd_sweep(const SweepOptions& opt, std::ostream& out) {
  RunConfig cfg = load_run_config(opt.config_path);
  apply_overrides(cfg, opt.dt, opt.mismatch);
  if (opt.gammas.empty()) throw ConfigError("sweep: empty gamma list");
  const std::vector<GammaSweepRow> rows = gamma_sweep(cfg, opt.gammas);
  const std::string csv = sweep_csv(rows);
  if (opt.out) {
    write_sweep_csv(*opt.out, rows);
    out << "wrote " << *opt.out << "\n";
  }
  out << csv;
  return 0;
}

int cmd_calibrate(const CalibrateOptions& opt, std::ostream& out) {
  const std::vector<CalibrationSample> samples = read_calibration_csv(opt.csv_path);
  const ActuatorParams p = calibrate(samples, opt.dt);
  const std::string fragment = params_fragment(p);
  if (opt.out) {
    std::ofstream file(*opt.out);
    if (!file) throw IoError("cannot write " + *opt.out);
    file << fragment;
    out << "wrote " << *opt.out << "\n";
  } else {
    out << fragment;
  }
  out << "samples=" << samples.size() << " rms_residual=" << fmt(prediction_rms(p, samples))
      << "\n";
  return 0;
}

}  // namespace supcon::cli
