#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "supcon/actuator.hpp"
#include "supcon/errors.hpp"

namespace supcon {

/// Tuning of the saturating safety supervisor.
struct SupervisorConfig {
  double gamma = 0.2;   ///< contraction multiplier, in (0,1); smaller is more cautious
  double w_max = 65.0;  ///< temperature ceiling enforced on each wire
  double w_lb = 25.0;   ///< lower edge of the verified operating band, < w_max
};

/// Throws DomainError naming the offending field.
const SupervisorConfig& validate(const SupervisorConfig& c);

/// K-step controllability Grammian sum A^t B B' A'^t for t = 0..K-1.
Eigen::MatrixXd grammian(const Eigen::MatrixXd& A, const Eigen::VectorXd& B, int horizon);

/// Minimum-energy open-loop input sequence steering w0 to target in exactly
/// `horizon` steps. Throws Unreachable when the target is outside the
/// reachable affine subspace.
std::vector<double> min_energy_sequence(const Eigen::MatrixXd& A, const Eigen::VectorXd& B,
                                        int horizon, const Eigen::VectorXd& target,
                                        const Eigen::VectorXd& w0);

/// The inflated setpoint (1/gamma)(I - (1-gamma)A) [w_max, 1]; feeding the
/// gamma-scaled one-step law toward this point makes w_max the closed-loop
/// equilibrium.
Eigen::Vector2d w_set(const Eigen::Matrix2d& A, const SupervisorConfig& c);

/// Largest duty cycle that keeps the wire on the safe side of w_max under
/// geometric approach:
///   u_max = (w_max - (1-gamma)(a1 w_max + a3) - gamma (a1 w + a3)) / a2.
/// May exceed [0,1]; the caller clamps via compose().
double u_max(const ActuatorParams& p, const SupervisorConfig& c, double w);

/// Closed-loop error propagation matrix (1-gamma) A.
Eigen::Matrix2d error_matrix(const ActuatorParams& p, double gamma);

/// True when every eigenvalue of the error matrix has magnitude < 1, i.e.
/// max(|(1-gamma) a1|, |1-gamma|) < 1.
bool is_stable(const ActuatorParams& p, double gamma);

/// Outcome of capping a set of attempted inputs.
struct SupervisedInput {
  std::vector<double> applied;
  std::vector<double> attempted;
  std::vector<double> cap;
  std::vector<bool> active;  ///< cap actually reduced this channel
};

/// Per channel: applied = clamp(min(attempted, cap), 0, 1). Attempted inputs
/// must already lie in [0,1]; caps are unrestricted (infinity disables a
/// channel's cap).
SupervisedInput compose(std::span<const double> attempted, std::span<const double> caps,
                        double tol = 1e-9);

}  // namespace supcon
