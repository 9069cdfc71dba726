#include "supcon/limb_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace supcon {

namespace {

double activation_level(double temperature, double t_act) {
  return std::max(0.0, temperature - t_act);
}

int step_count(const Scenario& sc, double dt) {
  const double raw = sc.duration / dt;
  const int k = static_cast<int>(std::llround(raw));
  if (k < 1 || std::abs(raw - k) > 1e-6) {
    std::ostringstream os;
    os << "scenario.duration " << sc.duration << " is not a positive multiple of dt " << dt;
    throw ConfigError(os.str());
  }
  return k;
}

void validate_run(const RunConfig& cfg, int steps) {
  validate(cfg.actuator0);
  validate(cfg.actuator1);
  validate(cfg.body);
  if (cfg.controller.kind == ControllerKind::PiAw) {
    validate(cfg.controller.pi);
  } else {
    validate(cfg.controller.smc);
  }
  if (cfg.supervisor) validate(*cfg.supervisor);
  if (!(cfg.sim.dt > 0.0)) throw ConfigError("sim.dt must be > 0");
  if (!(cfg.sim.mismatch > 0.0)) throw ConfigError("sim.mismatch must be > 0");
  if (!(cfg.body.t_act >= cfg.sim.ambient)) {
    throw ConfigError("body.t_act must be >= sim.ambient; cold wires must produce no torque");
  }
  if (!(cfg.sim.sensor_noise_std >= 0.0)) throw ConfigError("sim.sensor_noise_std must be >= 0");
  if (cfg.actuator0.dt != cfg.sim.dt || cfg.actuator1.dt != cfg.sim.dt) {
    throw ConfigError("actuator dt must equal sim.dt; the wire model and the loop share one rate");
  }
  if (cfg.scenario.kind == ScenarioKind::Wall && !cfg.body.theta_wall) {
    throw ConfigError("scenario.kind = wall requires body.theta_wall");
  }
  if (cfg.scenario.kind == ScenarioKind::Trajectory &&
      static_cast<int>(cfg.scenario.trajectory.size()) != steps) {
    std::ostringstream os;
    os << "scenario.trajectory has " << cfg.scenario.trajectory.size() << " samples but the run has "
       << steps << " steps";
    throw ConfigError(os.str());
  }
  if (cfg.scenario.kind == ScenarioKind::HumanDisturbance &&
      !(cfg.scenario.disturbance_end >= cfg.scenario.disturbance_start)) {
    throw ConfigError("scenario.disturbance_end must be >= scenario.disturbance_start");
  }
}

}  // namespace

const BodyParams& validate(const BodyParams& p) {
  auto fail = [](const char* field, const char* constraint, double got) {
    std::ostringstream os;
    os << "body." << field << " " << constraint << ", got " << got;
    throw DomainError(os.str());
  };
  if (!(p.gain > 0.0)) fail("gain", "must be > 0", p.gain);
  if (!(p.stiffness > 0.0)) fail("stiffness", "must be > 0", p.stiffness);
  if (!(p.damping >= 0.0)) fail("damping", "must be >= 0", p.damping);
  return p;
}

std::pair<double, double> body_step(const LimbState& s, const BodyParams& p,
                                    double disturbance, double dt) {
  validate(p);
  if (!(dt > 0.0)) throw DomainError("body_step: dt must be > 0");
  const double accel = p.gain * (activation_level(s.t0, p.t_act) - activation_level(s.t1, p.t_act)) -
                       p.stiffness * s.theta - p.damping * s.theta_dot + disturbance;
  double theta_dot = s.theta_dot + accel * dt;
  double theta = s.theta + theta_dot * dt;
  if (p.theta_wall && theta >= *p.theta_wall) {
    theta = *p.theta_wall;
    theta_dot = 0.0;
  }
  return {theta, theta_dot};
}

std::vector<TelemetryRecord> run_closed_loop(const RunConfig& cfg) {
  const double dt = cfg.sim.dt;
  const int steps = step_count(cfg.scenario, dt);
  validate_run(cfg, steps);

  // The supervisor caps against the nominal model; the plant below may heat
  // harder than that model says.
  ActuatorParams plant0 = cfg.actuator0;
  ActuatorParams plant1 = cfg.actuator1;
  plant0.a2 *= cfg.sim.mismatch;
  plant1.a2 *= cfg.sim.mismatch;
  validate(plant0);
  validate(plant1);

  std::mt19937_64 rng(cfg.sim.seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  const bool noisy = cfg.sim.sensor_noise_std > 0.0;

  LimbState s;
  s.t0 = s.t1 = cfg.sim.ambient;
  PiAwState pi = cfg.controller.pi;
  SmcState smc = cfg.controller.smc;
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<TelemetryRecord> telemetry;
  telemetry.reserve(static_cast<size_t>(steps));

  for (int k = 0; k < steps; ++k) {
    const double t = k * dt;
    const double theta_ref = cfg.scenario.kind == ScenarioKind::Trajectory
                                 ? cfg.scenario.trajectory[static_cast<size_t>(k)]
                                 : cfg.scenario.theta_ref;
    const double measured =
        s.theta + (noisy ? cfg.sim.sensor_noise_std * noise(rng) : 0.0);
    const double error = measured - theta_ref;

    double mu = 0.0;
    if (cfg.controller.kind == ControllerKind::PiAw) {
      PiAwResult r = pi_aw_step(pi, error, dt);
      mu = r.mu;
      pi = r.state;
    } else {
      SmcResult r = smc_step(smc, error, dt);
      mu = r.mu;
      smc = r.state;
    }

    // Negative feedback: an angle below the reference must heat the wire
    // that bends positive.
    Eigen::Vector2d attempted = siso_map(-mu);
    if (cfg.sim.flip_actuators) std::swap(attempted(0), attempted(1));

    double cap0 = inf;
    double cap1 = inf;
    if (cfg.supervisor) {
      cap0 = u_max(cfg.actuator0, *cfg.supervisor, s.t0);
      cap1 = u_max(cfg.actuator1, *cfg.supervisor, s.t1);
    }
    const double attempted_arr[2] = {attempted(0), attempted(1)};
    const double caps_arr[2] = {cap0, cap1};
    const SupervisedInput sup = compose(attempted_arr, caps_arr);

    TelemetryRecord rec;
    rec.k = k;
    rec.t = t;
    rec.theta = s.theta;
    rec.theta_ref = theta_ref;
    rec.t0 = s.t0;
    rec.t1 = s.t1;
    rec.v0 = attempted(0);
    rec.v1 = attempted(1);
    rec.cap0 = cap0;
    rec.cap1 = cap1;
    rec.u0 = sup.applied[0];
    rec.u1 = sup.applied[1];
    rec.active0 = sup.active[0];
    rec.active1 = sup.active[1];
    rec.supervisor_enabled = cfg.supervisor.has_value();
    telemetry.push_back(rec);

    // Anti-windup tracks what actually reached the plant, so a biting cap
    // bleeds the integral instead of winding it.
    if (cfg.controller.kind == ControllerKind::PiAw) {
      double nu_applied = sup.applied[0] - sup.applied[1];
      if (cfg.sim.flip_actuators) nu_applied = -nu_applied;
      pi.last_mu = -nu_applied;
    }

    double disturbance = 0.0;
    if (cfg.scenario.kind == ScenarioKind::HumanDisturbance &&
        t >= cfg.scenario.disturbance_start && t < cfg.scenario.disturbance_end) {
      disturbance = cfg.scenario.disturbance_magnitude;
    }

    // Wires and body both advance from the step-k state.
    LimbState body_view = s;
    if (cfg.sim.flip_actuators) std::swap(body_view.t0, body_view.t1);
    const auto [theta_next, theta_dot_next] = body_step(body_view, cfg.body, disturbance, dt);
    s.t0 = step(plant0, s.t0, sup.applied[0]);
    s.t1 = step(plant1, s.t1, sup.applied[1]);
    s.theta = theta_next;
    s.theta_dot = theta_dot_next;
  }
  return telemetry;
}

std::optional<double> activation_time(std::span<const TelemetryRecord> telemetry) {
  for (const TelemetryRecord& rec : telemetry) {
    if (rec.active0 || rec.active1) return rec.t;
  }
  return std::nullopt;
}

std::vector<GammaSweepRow> gamma_sweep(const RunConfig& cfg, std::span<const double> gammas) {
  if (!cfg.supervisor) {
    throw ConfigError("gamma_sweep requires an enabled supervisor section");
  }
  if (gammas.empty()) {
    throw ConfigError("gamma_sweep: empty gamma list");
  }
  std::vector<GammaSweepRow> rows;
  rows.reserve(gammas.size());
  for (double g : gammas) {
    RunConfig variant = cfg;
    variant.supervisor->gamma = g;
    validate(*variant.supervisor);
    const std::vector<TelemetryRecord> telemetry = run_closed_loop(variant);
    GammaSweepRow row;
    row.gamma = g;
    row.activation = activation_time(telemetry);
    row.max_t0 = -std::numeric_limits<double>::infinity();
    row.max_t1 = -std::numeric_limits<double>::infinity();
    for (const TelemetryRecord& rec : telemetry) {
      row.max_t0 = std::max(row.max_t0, rec.t0);
      row.max_t1 = std::max(row.max_t1, rec.t1);
    }
    const TelemetryRecord& last = telemetry.back();
    row.final_error = std::abs(last.theta - last.theta_ref);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace supcon
