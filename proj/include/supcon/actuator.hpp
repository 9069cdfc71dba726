#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "supcon/errors.hpp"

namespace supcon {

/// Coefficients of the discrete affine model of one heated wire,
///   w(k+1) = a1*w(k) + a2*u(k) + a3,
/// where w is the wire temperature and u in [0,1] is the duty cycle.
struct ActuatorParams {
  double a1 = 0.95;  ///< per-step temperature retention, in (0,1)
  double a2 = 10.0;  ///< heating gain per unit duty cycle, > 0
  double a3 = 1.25;  ///< per-step ambient drive, >= 0
  double dt = 0.1;   ///< sample period in seconds, > 0
};

/// One row of an input/output log used for identification.
struct CalibrationSample {
  double w;
  double u;
  double w_next;
};

/// Throws DomainError naming the offending field; returns its argument so
/// call sites can validate inline.
const ActuatorParams& validate(const ActuatorParams& p);

/// One step of the wire model. u must lie in [0,1].
double step(const ActuatorParams& p, double w, double u);

/// Steady-state temperature under a constant duty cycle u.
double equilibrium(const ActuatorParams& p, double u);

/// Lifts w to the homogeneous coordinates [w, 1] used by the matrix form.
Eigen::Vector2d augmented(double w);

struct AugmentedSystem {
  Eigen::Matrix2d A;
  Eigen::Vector2d B;
};

/// Matrix form of the model on [w, 1]: the pair (A, B) with
/// A = [[a1, a3], [0, 1]] and B = [a2, 0], so that
/// augmented(step(p, w, u)) == A * augmented(w) + B * u.
AugmentedSystem augmented_matrices(const ActuatorParams& p);

/// Least-squares fit of (a1, a2, a3) from logged transitions, solved via the
/// normal equations. Throws RankDeficient when the log does not excite all
/// three coefficients and DomainError when the fit violates the model ranges.
ActuatorParams calibrate(std::span<const CalibrationSample> samples, double dt);

/// Root mean square one-step prediction error of p over the log.
double prediction_rms(const ActuatorParams& p, std::span<const CalibrationSample> samples);

}  // namespace supcon
