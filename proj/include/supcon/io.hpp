#pragma once

#include <span>
#include <string>
#include <vector>

#include "supcon/actuator.hpp"
#include "supcon/limb_sim.hpp"

namespace supcon {

/// Calibration log CSV with header "k,w,u,w_next". Malformed cells and
/// out-of-range duty cycles raise ConfigError naming the row; an unreadable
/// file raises IoError naming the path.
std::vector<CalibrationSample> read_calibration_csv(const std::string& path);

/// Reference trajectory CSV with header "t,theta_ref"; returns the
/// theta_ref column in file order.
std::vector<double> read_trajectory_csv(const std::string& path);

/// Telemetry CSV with the fixed header
/// "k,t,theta,theta_ref,T0,T1,v0,v1,cap0,cap1,u0,u1,active0,active1".
/// Numbers print in round-trip form so repeated runs are byte identical.
std::string telemetry_csv(std::span<const TelemetryRecord> telemetry);
void write_telemetry_csv(const std::string& path, std::span<const TelemetryRecord> telemetry);

/// Sweep CSV with header "gamma,activation_time,max_T0,max_T1,final_error";
/// a run whose caps never bit prints "none" for activation_time.
std::string sweep_csv(std::span<const GammaSweepRow> rows);
void write_sweep_csv(const std::string& path, std::span<const GammaSweepRow> rows);

}  // namespace supcon
