#include "supcon/supervisor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace supcon {

namespace {

[[noreturn]] void fail_field(const char* field, const char* constraint, double got) {
  std::ostringstream os;
  os << "supervisor." << field << " " << constraint << ", got " << got;
  throw DomainError(os.str());
}

}  // namespace

const SupervisorConfig& validate(const SupervisorConfig& c) {
  if (!(c.gamma > 0.0) || !(c.gamma < 1.0)) fail_field("gamma", "must lie in (0,1)", c.gamma);
  if (!(c.w_lb < c.w_max)) fail_field("w_lb", "must be < w_max", c.w_lb);
  return c;
}

Eigen::MatrixXd grammian(const Eigen::MatrixXd& A, const Eigen::VectorXd& B, int horizon) {
  if (A.rows() != A.cols() || A.rows() != B.size()) {
    throw DimensionMismatch("grammian: A must be square and match B's length");
  }
  if (horizon < 1) {
    throw DomainError("grammian: horizon must be >= 1, got " + std::to_string(horizon));
  }
  const Eigen::Index n = A.rows();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd reach = B;  // A^t B
  for (int t = 0; t < horizon; ++t) {
    w += reach * reach.transpose();
    reach = A * reach;
  }
  return w;
}

std::vector<double> min_energy_sequence(const Eigen::MatrixXd& A, const Eigen::VectorXd& B,
                                        int horizon, const Eigen::VectorXd& target,
                                        const Eigen::VectorXd& w0) {
  if (A.rows() != A.cols() || A.rows() != B.size() || target.size() != A.rows() ||
      w0.size() != A.rows()) {
    throw DimensionMismatch("min_energy_sequence: A, B, target and w0 must share one dimension");
  }
  const Eigen::MatrixXd w = grammian(A, B, horizon);

  // Pseudoinverse through the symmetric eigendecomposition; the Grammian of
  // a single-input chain is typically rank deficient, which is fine as long
  // as the steering defect lies in its range.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(w);
  const Eigen::VectorXd& lam = eig.eigenvalues();
  Eigen::VectorXd inv_lam = Eigen::VectorXd::Zero(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) > 1e-12) inv_lam(i) = 1.0 / lam(i);
  }
  const Eigen::MatrixXd w_pinv =
      eig.eigenvectors() * inv_lam.asDiagonal() * eig.eigenvectors().transpose();

  Eigen::MatrixXd a_pow = Eigen::MatrixXd::Identity(A.rows(), A.cols());
  for (int t = 0; t < horizon; ++t) a_pow = A * a_pow;
  const Eigen::VectorXd defect = target - a_pow * w0;

  const Eigen::VectorXd residual = defect - w * (w_pinv * defect);
  const double scale = std::max(1.0, defect.lpNorm<Eigen::Infinity>());
  if (residual.lpNorm<Eigen::Infinity>() > 1e-9 * scale) {
    std::ostringstream os;
    os << "min_energy_sequence: target is outside the reachable subspace (defect residual "
       << residual.lpNorm<Eigen::Infinity>() << ")";
    throw Unreachable(os.str());
  }

  const Eigen::VectorXd core = w_pinv * defect;
  std::vector<double> u(static_cast<size_t>(horizon));
  Eigen::MatrixXd at_pow = Eigen::MatrixXd::Identity(A.rows(), A.cols());  // (A')^(K-t-1)
  for (int t = horizon - 1; t >= 0; --t) {
    u[static_cast<size_t>(t)] = B.dot(at_pow.transpose() * core);
    at_pow = A * at_pow;
  }
  return u;
}

Eigen::Vector2d w_set(const Eigen::Matrix2d& A, const SupervisorConfig& c) {
  validate(c);
  const Eigen::Matrix2d m = Eigen::Matrix2d::Identity() - (1.0 - c.gamma) * A;
  return (1.0 / c.gamma) * (m * augmented(c.w_max));
}

double u_max(const ActuatorParams& p, const SupervisorConfig& c, double w) {
  validate(p);
  validate(c);
  const double hold = p.a1 * c.w_max + p.a3;
  return (c.w_max - (1.0 - c.gamma) * hold - c.gamma * (p.a1 * w + p.a3)) / p.a2;
}

Eigen::Matrix2d error_matrix(const ActuatorParams& p, double gamma) {
  validate(p);
  return (1.0 - gamma) * augmented_matrices(p).A;
}

bool is_stable(const ActuatorParams& p, double gamma) {
  validate(p);
  const double s = std::abs(1.0 - gamma);
  return std::max(s * p.a1, s) < 1.0;
}

SupervisedInput compose(std::span<const double> attempted, std::span<const double> caps,
                        double tol) {
  if (attempted.size() != caps.size()) {
    throw DimensionMismatch("compose: attempted and caps differ in length");
  }
  SupervisedInput out;
  out.applied.reserve(attempted.size());
  out.attempted.assign(attempted.begin(), attempted.end());
  out.cap.assign(caps.begin(), caps.end());
  out.active.reserve(attempted.size());
  for (size_t i = 0; i < attempted.size(); ++i) {
    if (!(attempted[i] >= 0.0) || !(attempted[i] <= 1.0)) {
      std::ostringstream os;
      os << "compose: attempted[" << i << "] must lie in [0,1], got " << attempted[i];
      throw DomainError(os.str());
    }
    const double applied = std::clamp(std::min(attempted[i], caps[i]), 0.0, 1.0);
    out.applied.push_back(applied);
    out.active.push_back(applied < attempted[i] - tol);
  }
  return out;
}

}  // namespace supcon
