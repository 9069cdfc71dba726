#pragma once

#include <Eigen/Dense>

#include "supcon/errors.hpp"

namespace supcon {

/// Clamp to [-1, 1], identity inside the band.
double sat(double x);

/// Splits a signed command into the antagonistic duty pair: positive mu
/// drives channel 0, negative mu drives channel 1. |mu| must be <= 1.
Eigen::Vector2d siso_map(double mu);

/// PI state with back-calculation anti-windup. Gains ride along with the
/// accumulator so a run is one self-contained value.
struct PiAwState {
  double kp = 0.02;
  double ki = 0.01;
  double kaw = 1.0;
  double integral = 0.0;
  double last_mu = 0.0;   ///< most recent realized command; the loop may
                          ///< overwrite it with the post-cap value
  double last_eta = 0.0;  ///< most recent pre-saturation command
};

const PiAwState& validate(const PiAwState& s);

struct PiAwResult {
  double mu;
  PiAwState state;
};

/// One controller update:
///   integral' = integral + e dt + kaw (last_mu - last_eta) dt
///   eta = kp e + ki integral',  mu = sat(eta).
PiAwResult pi_aw_step(const PiAwState& s, double error, double dt);

/// Model-free sliding mode state (boundary-layer smoothed).
struct SmcState {
  double lambda = 0.5;
  double ki = 0.05;
  double phi = 20.0;
  double last_error = 0.0;
  double integral = 0.0;
};

const SmcState& validate(const SmcState& s);

struct SmcResult {
  double mu;
  SmcState state;
};

/// One update of the sliding surface s = de/dt + 2 lambda e + ki int(e),
/// with mu = sat(s / phi).
SmcResult smc_step(const SmcState& s, double error, double dt);

}  // namespace supcon
