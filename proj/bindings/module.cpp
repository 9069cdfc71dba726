#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "supcon/actuator.hpp"
#include "supcon/config.hpp"
#include "supcon/errors.hpp"
#include "supcon/io.hpp"
#include "supcon/limb_sim.hpp"
#include "supcon/polytope.hpp"
#include "supcon/pose_control.hpp"
#include "supcon/supervisor.hpp"

namespace py = pybind11;
using namespace supcon;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Safety-supervised antagonistic wire actuation toolkit";

  // Exception hierarchy. Python sees one base plus a subclass per failure
  // mode so callers can catch narrowly.
  auto base = py::register_exception<Error>(m, "SupconError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
  py::register_exception<RankDeficient>(m, "RankDeficient", base);
  py::register_exception<Unreachable>(m, "UnreachableError", base);
  py::register_exception<EmptySet>(m, "EmptySetError", base);
  py::register_exception<NoConvergence>(m, "NoConvergenceError", base);
  py::register_exception<ConfigError>(m, "ConfigError", base);
  py::register_exception<IoError>(m, "IoError", base);

  // Wire model.
  py::class_<ActuatorParams>(m, "ActuatorParams")
      .def(py::init<>())
      .def(py::init([](double a1, double a2, double a3, double dt) {
             ActuatorParams p;
             p.a1 = a1;
             p.a2 = a2;
             p.a3 = a3;
             p.dt = dt;
             return p;
           }),
           py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("dt") = 0.1)
      .def_readwrite("a1", &ActuatorParams::a1)
      .def_readwrite("a2", &ActuatorParams::a2)
      .def_readwrite("a3", &ActuatorParams::a3)
      .def_readwrite("dt", &ActuatorParams::dt)
      .def("__repr__", [](const ActuatorParams& p) {
        return "ActuatorParams(a1=" + std::to_string(p.a1) + ", a2=" + std::to_string(p.a2) +
               ", a3=" + std::to_string(p.a3) + ", dt=" + std::to_string(p.dt) + ")";
      });

  py::class_<CalibrationSample>(m, "CalibrationSample")
      .def(py::init<>())
      .def(py::init([](double w, double u, double w_next) {
             return CalibrationSample{w, u, w_next};
           }),
           py::arg("w"), py::arg("u"), py::arg("w_next"))
      .def_readwrite("w", &CalibrationSample::w)
      .def_readwrite("u", &CalibrationSample::u)
      .def_readwrite("w_next", &CalibrationSample::w_next);

  py::class_<AugmentedSystem>(m, "AugmentedSystem")
      .def_readonly("A", &AugmentedSystem::A)
      .def_readonly("B", &AugmentedSystem::B);

  m.def("step", &step, py::arg("params"), py::arg("w"), py::arg("u"),
        "One step of the wire temperature model.");
  m.def("equilibrium", &equilibrium, py::arg("params"), py::arg("u"),
        "Steady-state temperature under a constant duty cycle.");
  m.def("augmented", &augmented, py::arg("w"), "Lift w to the homogeneous pair [w, 1].");
  m.def("augmented_matrices", &augmented_matrices, py::arg("params"),
        "Matrix form (A, B) of the wire model on [w, 1].");
  m.def(
      "calibrate",
      [](const std::vector<CalibrationSample>& samples, double dt) {
        return calibrate(samples, dt);
      },
      py::arg("samples"), py::arg("dt") = 0.1,
      "Least-squares fit of (a1, a2, a3) from logged transitions.");
  m.def(
      "prediction_rms",
      [](const ActuatorParams& p, const std::vector<CalibrationSample>& samples) {
        return prediction_rms(p, samples);
      },
      py::arg("params"), py::arg("samples"),
      "Root mean square one-step prediction error over a log.");

  // Supervisor.
  py::class_<SupervisorConfig>(m, "SupervisorConfig")
      .def(py::init<>())
      .def(py::init([](double gamma, double w_max, double w_lb) {
             SupervisorConfig c;
             c.gamma = gamma;
             c.w_max = w_max;
             c.w_lb = w_lb;
             return c;
           }),
           py::arg("gamma"), py::arg("w_max"), py::arg("w_lb") = 25.0)
      .def_readwrite("gamma", &SupervisorConfig::gamma)
      .def_readwrite("w_max", &SupervisorConfig::w_max)
      .def_readwrite("w_lb", &SupervisorConfig::w_lb);

  py::class_<SupervisedInput>(m, "SupervisedInput")
      .def_readonly("applied", &SupervisedInput::applied)
      .def_readonly("attempted", &SupervisedInput::attempted)
      .def_readonly("cap", &SupervisedInput::cap)
      .def_readonly("active", &SupervisedInput::active);

  m.def("grammian", &grammian, py::arg("A"), py::arg("B"), py::arg("horizon"),
        "K-step controllability Grammian.");
  m.def("min_energy_sequence", &min_energy_sequence, py::arg("A"), py::arg("B"),
        py::arg("horizon"), py::arg("target"), py::arg("w0"),
        "Minimum-energy input sequence steering w0 to target.");
  m.def("w_set", &w_set, py::arg("A"), py::arg("config"),
        "Inflated setpoint that makes w_max the closed-loop equilibrium.");
  m.def("u_max", &u_max, py::arg("params"), py::arg("config"), py::arg("w"),
        "Largest duty cycle keeping the wire under w_max by geometric approach.");
  m.def("error_matrix", &error_matrix, py::arg("params"), py::arg("gamma"),
        "Closed-loop error propagation matrix (1-gamma) A.");
  m.def("is_stable", &is_stable, py::arg("params"), py::arg("gamma"),
        "True when the error matrix is a contraction.");
  m.def(
      "compose",
      [](const std::vector<double>& attempted, const std::vector<double>& caps, double tol) {
        return compose(attempted, caps, tol);
      },
      py::arg("attempted"), py::arg("caps"), py::arg("tol") = 1e-9,
      "Per channel applied = clamp(min(attempted, cap), 0, 1).");

  // Polyhedral safety sets.
  py::class_<HPolyhedron>(m, "HPolyhedron")
      .def(py::init([](const Eigen::MatrixXd& H, const Eigen::VectorXd& h) {
             return HPolyhedron{H, h};
           }),
           py::arg("H"), py::arg("h"))
      .def_readwrite("H", &HPolyhedron::H)
      .def_readwrite("h", &HPolyhedron::h)
      .def("dim", &HPolyhedron::dim)
      .def("rows", &HPolyhedron::rows)
      .def("contains", &HPolyhedron::contains, py::arg("e"), py::arg("tol") = kPolytopeTol);

  py::class_<InvariantSetResult>(m, "InvariantSetResult")
      .def_readonly("invariant_set", &InvariantSetResult::invariant_set)
      .def_readonly("iterations", &InvariantSetResult::iterations)
      .def_readonly("spectral_radius", &InvariantSetResult::spectral_radius);

  m.def("safe_set", &safe_set, py::arg("w_lb"),
        "Operating region in error coordinates: e2 = 0, e1 in [-w_lb, 0].");
  m.def("pre_image", &pre_image, py::arg("A"), py::arg("P"), "{ e | A e in P }.");
  m.def("intersect", &intersect, py::arg("P"), py::arg("Q"), py::arg("tol") = kPolytopeTol);
  m.def("minimize", &minimize, py::arg("P"), py::arg("tol") = kPolytopeTol,
        "Strip redundant halfspaces.");
  m.def("is_subset", &is_subset, py::arg("P"), py::arg("Q"), py::arg("tol") = kPolytopeTol);
  m.def("set_equal", &set_equal, py::arg("P"), py::arg("Q"), py::arg("tol") = kPolytopeTol);
  m.def("max_invariant_set", &max_invariant_set, py::arg("A"), py::arg("S"),
        py::arg("max_iters") = 100, py::arg("tol") = kPolytopeTol,
        "Largest subset of S that the map A can never leave.");
  m.def("polyhedron_to_text", &to_text, py::arg("P"));
  m.def("polyhedron_from_text", &polyhedron_from_text, py::arg("text"));

  // Pose controllers.
  py::class_<PiAwState>(m, "PiAwState")
      .def(py::init<>())
      .def_readwrite("kp", &PiAwState::kp)
      .def_readwrite("ki", &PiAwState::ki)
      .def_readwrite("kaw", &PiAwState::kaw)
      .def_readwrite("integral", &PiAwState::integral)
      .def_readwrite("last_mu", &PiAwState::last_mu)
      .def_readwrite("last_eta", &PiAwState::last_eta);

  py::class_<PiAwResult>(m, "PiAwResult")
      .def_readonly("mu", &PiAwResult::mu)
      .def_readonly("state", &PiAwResult::state);

  py::class_<SmcState>(m, "SmcState")
      .def(py::init<>())
      .def_readwrite("lambda_", &SmcState::lambda)
      .def_readwrite("ki", &SmcState::ki)
      .def_readwrite("phi", &SmcState::phi)
      .def_readwrite("last_error", &SmcState::last_error)
      .def_readwrite("integral", &SmcState::integral);

  py::class_<SmcResult>(m, "SmcResult")
      .def_readonly("mu", &SmcResult::mu)
      .def_readonly("state", &SmcResult::state);

  m.def("sat", &sat, py::arg("x"), "Clamp to [-1, 1].");
  m.def("siso_map", &siso_map, py::arg("mu"),
        "Split a signed command into the antagonistic duty pair.");
  m.def("pi_aw_step", &pi_aw_step, py::arg("state"), py::arg("error"), py::arg("dt"),
        "One PI update with back-calculation anti-windup.");
  m.def("smc_step", &smc_step, py::arg("state"), py::arg("error"), py::arg("dt"),
        "One boundary-layer sliding mode update.");

  // Closed-loop simulation.
  py::class_<LimbState>(m, "LimbState")
      .def(py::init<>())
      .def_readwrite("theta", &LimbState::theta)
      .def_readwrite("theta_dot", &LimbState::theta_dot)
      .def_readwrite("t0", &LimbState::t0)
      .def_readwrite("t1", &LimbState::t1);

  py::class_<BodyParams>(m, "BodyParams")
      .def(py::init<>())
      .def_readwrite("gain", &BodyParams::gain)
      .def_readwrite("stiffness", &BodyParams::stiffness)
      .def_readwrite("damping", &BodyParams::damping)
      .def_readwrite("t_act", &BodyParams::t_act)
      .def_readwrite("theta_wall", &BodyParams::theta_wall);

  py::enum_<ScenarioKind>(m, "ScenarioKind")
      .value("FreeStep", ScenarioKind::FreeStep)
      .value("Wall", ScenarioKind::Wall)
      .value("HumanDisturbance", ScenarioKind::HumanDisturbance)
      .value("Trajectory", ScenarioKind::Trajectory);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init<>())
      .def_readwrite("kind", &Scenario::kind)
      .def_readwrite("theta_ref", &Scenario::theta_ref)
      .def_readwrite("duration", &Scenario::duration)
      .def_readwrite("disturbance_start", &Scenario::disturbance_start)
      .def_readwrite("disturbance_end", &Scenario::disturbance_end)
      .def_readwrite("disturbance_magnitude", &Scenario::disturbance_magnitude)
      .def_readwrite("trajectory", &Scenario::trajectory);

  py::enum_<ControllerKind>(m, "ControllerKind")
      .value("PiAw", ControllerKind::PiAw)
      .value("Smc", ControllerKind::Smc);

  py::class_<ControllerConfig>(m, "ControllerConfig")
      .def(py::init<>())
      .def_readwrite("kind", &ControllerConfig::kind)
      .def_readwrite("pi", &ControllerConfig::pi)
      .def_readwrite("smc", &ControllerConfig::smc);

  py::class_<SimParams>(m, "SimParams")
      .def(py::init<>())
      .def_readwrite("dt", &SimParams::dt)
      .def_readwrite("ambient", &SimParams::ambient)
      .def_readwrite("mismatch", &SimParams::mismatch)
      .def_readwrite("sensor_noise_std", &SimParams::sensor_noise_std)
      .def_readwrite("seed", &SimParams::seed)
      .def_readwrite("flip_actuators", &SimParams::flip_actuators);

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("actuator0", &RunConfig::actuator0)
      .def_readwrite("actuator1", &RunConfig::actuator1)
      .def_readwrite("body", &RunConfig::body)
      .def_readwrite("controller", &RunConfig::controller)
      .def_readwrite("supervisor", &RunConfig::supervisor)
      .def_readwrite("scenario", &RunConfig::scenario)
      .def_readwrite("sim", &RunConfig::sim)
      .def_readwrite("verify_tol", &RunConfig::verify_tol)
      .def_readwrite("out", &RunConfig::out);

  py::class_<TelemetryRecord>(m, "TelemetryRecord")
      .def_readonly("k", &TelemetryRecord::k)
      .def_readonly("t", &TelemetryRecord::t)
      .def_readonly("theta", &TelemetryRecord::theta)
      .def_readonly("theta_ref", &TelemetryRecord::theta_ref)
      .def_readonly("t0", &TelemetryRecord::t0)
      .def_readonly("t1", &TelemetryRecord::t1)
      .def_readonly("v0", &TelemetryRecord::v0)
      .def_readonly("v1", &TelemetryRecord::v1)
      .def_readonly("cap0", &TelemetryRecord::cap0)
      .def_readonly("cap1", &TelemetryRecord::cap1)
      .def_readonly("u0", &TelemetryRecord::u0)
      .def_readonly("u1", &TelemetryRecord::u1)
      .def_readonly("active0", &TelemetryRecord::active0)
      .def_readonly("active1", &TelemetryRecord::active1)
      .def_readonly("supervisor_enabled", &TelemetryRecord::supervisor_enabled);

  py::class_<GammaSweepRow>(m, "GammaSweepRow")
      .def_readonly("gamma", &GammaSweepRow::gamma)
      .def_readonly("activation", &GammaSweepRow::activation)
      .def_readonly("max_t0", &GammaSweepRow::max_t0)
      .def_readonly("max_t1", &GammaSweepRow::max_t1)
      .def_readonly("final_error", &GammaSweepRow::final_error);

  m.def(
      "body_step",
      [](const LimbState& s, const BodyParams& p, double disturbance, double dt) {
        return body_step(s, p, disturbance, dt);
      },
      py::arg("state"), py::arg("params"), py::arg("disturbance"), py::arg("dt"),
      "Advance the rigid body one step; returns (theta, theta_dot).");
  m.def("run_closed_loop", &run_closed_loop, py::arg("config"),
        "Deterministic closed-loop rollout; returns the telemetry records.");
  m.def(
      "activation_time",
      [](const std::vector<TelemetryRecord>& telemetry) { return activation_time(telemetry); },
      py::arg("telemetry"), "Time of the first record where any cap bit, or None.");
  m.def(
      "gamma_sweep",
      [](const RunConfig& cfg, const std::vector<double>& gammas) {
        return gamma_sweep(cfg, gammas);
      },
      py::arg("config"), py::arg("gammas"),
      "Re-run the scenario once per gamma with everything else held fixed.");

  // Configuration and file formats.
  m.def("load_run_config", &load_run_config, py::arg("path"));
  m.def("parse_run_config", &parse_run_config, py::arg("text"), py::arg("base_dir") = ".");
  m.def("params_fragment", &params_fragment, py::arg("params"),
        "Render identified wire parameters as a config fragment.");
  m.def("read_calibration_csv", &read_calibration_csv, py::arg("path"));
  m.def("read_trajectory_csv", &read_trajectory_csv, py::arg("path"));
  m.def(
      "telemetry_csv",
      [](const std::vector<TelemetryRecord>& telemetry) { return telemetry_csv(telemetry); },
      py::arg("telemetry"));
  m.def(
      "write_telemetry_csv",
      [](const std::string& path, const std::vector<TelemetryRecord>& telemetry) {
        write_telemetry_csv(path, telemetry);
      },
      py::arg("path"), py::arg("telemetry"));
  m.def(
      "sweep_csv", [](const std::vector<GammaSweepRow>& rows) { return sweep_csv(rows); },
      py::arg("rows"));
  m.def(
      "write_sweep_csv",
      [](const std::string& path, const std::vector<GammaSweepRow>& rows) {
        write_sweep_csv(path, rows);
      },
      py::arg("path"), py::arg("rows"));
}
