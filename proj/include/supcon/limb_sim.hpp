#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "supcon/actuator.hpp"
#include "supcon/errors.hpp"
#include "supcon/pose_control.hpp"
#include "supcon/supervisor.hpp"

namespace supcon {

/// Planar state of a one-joint limb bent by two antagonistic wires.
struct LimbState {
  double theta = 0.0;      ///< bending angle, degrees
  double theta_dot = 0.0;  ///< angular rate, degrees/s
  double t0 = 25.0;        ///< wire 0 temperature (bends positive)
  double t1 = 25.0;        ///< wire 1 temperature (bends negative)
};

/// Second-order rotational plant: each wire contributes torque once its
/// temperature clears the activation threshold t_act.
struct BodyParams {
  double gain = 50.0;       ///< torque per degree of active temperature
  double stiffness = 25.0;  ///< elastic restoring coefficient
  double damping = 10.0;    ///< viscous coefficient
  double t_act = 35.0;      ///< activation temperature threshold, >= ambient
  std::optional<double> theta_wall;  ///< one-sided hard stop, degrees
};

const BodyParams& validate(const BodyParams& p);

enum class ScenarioKind { FreeStep, Wall, HumanDisturbance, Trajectory };

struct Scenario {
  ScenarioKind kind = ScenarioKind::FreeStep;
  double theta_ref = 40.0;  ///< constant reference for the non-trajectory kinds
  double duration = 60.0;   ///< seconds, > 0
  double disturbance_start = 20.0;      ///< torque pulse window, seconds
  double disturbance_end = 25.0;
  double disturbance_magnitude = 0.0;   ///< extra angular acceleration
  std::vector<double> trajectory;       ///< reference samples, one per step
};

enum class ControllerKind { PiAw, Smc };

struct ControllerConfig {
  ControllerKind kind = ControllerKind::PiAw;
  PiAwState pi;
  SmcState smc;
};

/// Simulation-wide knobs that belong to neither plant nor controller.
struct SimParams {
  double dt = 0.1;
  double ambient = 25.0;          ///< initial wire temperature
  double mismatch = 1.0;          ///< plant a2 scale relative to the model, > 0
  double sensor_noise_std = 0.0;  ///< optional angle measurement noise
  unsigned long seed = 0;
  bool flip_actuators = false;    ///< swap which wire bends positive
};

struct RunConfig {
  ActuatorParams actuator0;
  ActuatorParams actuator1;
  BodyParams body;
  ControllerConfig controller;
  std::optional<SupervisorConfig> supervisor;  ///< nullopt = supervision off
  Scenario scenario;
  SimParams sim;
  double verify_tol = 1e-9;  ///< slack tolerance for the set computations
  std::string out = "telemetry.csv";
};

/// One record per simulation step; column layout mirrors the telemetry CSV.
struct TelemetryRecord {
  int k = 0;
  double t = 0.0;
  double theta = 0.0;
  double theta_ref = 0.0;
  double t0 = 0.0;
  double t1 = 0.0;
  double v0 = 0.0;    ///< attempted duty, wire 0
  double v1 = 0.0;
  double cap0 = 0.0;  ///< supervisor cap (infinity when supervision is off)
  double cap1 = 0.0;
  double u0 = 0.0;    ///< duty actually applied
  double u1 = 0.0;
  bool active0 = false;
  bool active1 = false;
  bool supervisor_enabled = false;
};

/// Advances only the rigid body: semi-implicit Euler on
///   theta_ddot = gain (act(t0) - act(t1)) - stiffness theta
///               - damping theta_dot + disturbance,
/// with act(T) = max(0, T - t_act), then the optional wall clamp.
/// Returns (theta', theta_dot').
std::pair<double, double> body_step(const LimbState& s, const BodyParams& p,
                                    double disturbance, double dt);

/// Deterministic closed-loop rollout of the full limb. The controller sees
/// the measured angle; the supervisor caps its duty request per wire; the
/// plant may carry an inflated a2 (sim.mismatch) that the supervisor's model
/// does not know about.
std::vector<TelemetryRecord> run_closed_loop(const RunConfig& cfg);

/// Time of the first record where any cap actually bit, if ever.
std::optional<double> activation_time(std::span<const TelemetryRecord> telemetry);

struct GammaSweepRow {
  double gamma = 0.0;
  std::optional<double> activation = {};
  double max_t0 = 0.0;
  double max_t1 = 0.0;
  double final_error = 0.0;  ///< |theta - theta_ref| at the last step
};

/// Re-runs cfg once per gamma with everything else held fixed. cfg must
/// have supervision enabled.
std::vector<GammaSweepRow> gamma_sweep(const RunConfig& cfg, std::span<const double> gammas);

}  // namespace supcon
