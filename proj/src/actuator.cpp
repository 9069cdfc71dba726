#include "supcon/actuator.hpp"

#include <cmath>
#include <sstream>

namespace supcon {

namespace {

[[noreturn]] void fail_field(const char* field, const char* constraint, double got) {
  std::ostringstream os;
  os << "actuator." << field << " " << constraint << ", got " << got;
  throw DomainError(os.str());
}

}  // namespace

const ActuatorParams& validate(const ActuatorParams& p) {
  if (!(p.a1 > 0.0) || !(p.a1 < 1.0)) fail_field("a1", "must lie in (0,1)", p.a1);
  if (!(p.a2 > 0.0)) fail_field("a2", "must be > 0", p.a2);
  if (!(p.a3 >= 0.0)) fail_field("a3", "must be >= 0", p.a3);
  if (!(p.dt > 0.0)) fail_field("dt", "must be > 0", p.dt);
  return p;
}

double step(const ActuatorParams& p, double w, double u) {
  validate(p);
  if (!(u >= 0.0) || !(u <= 1.0)) fail_field("u", "must lie in [0,1]", u);
  return p.a1 * w + p.a2 * u + p.a3;
}

double equilibrium(const ActuatorParams& p, double u) {
  validate(p);
  return (p.a2 * u + p.a3) / (1.0 - p.a1);
}

Eigen::Vector2d augmented(double w) { return {w, 1.0}; }

AugmentedSystem augmented_matrices(const ActuatorParams& p) {
  validate(p);
  AugmentedSystem sys;
  sys.A << p.a1, p.a3, 0.0, 1.0;
  sys.B << p.a2, 0.0;
  return sys;
}

ActuatorParams calibrate(std::span<const CalibrationSample> samples, double dt) {
  if (samples.size() < 3) {
    throw RankDeficient("calibrate needs at least 3 samples, got " +
                        std::to_string(samples.size()));
  }
  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd x(n, 3);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const CalibrationSample& s = samples[static_cast<size_t>(i)];
    x.row(i) << s.w, s.u, 1.0;
    y(i) = s.w_next;
  }

  // Normal equations with a rank guard: the 3x3 Gram matrix loses rank
  // exactly when the regressors [w, u, 1] are collinear in the log.
  const Eigen::Matrix3d gram = x.transpose() * x;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(gram);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (!(lo > 1e-10 * hi)) {
    throw RankDeficient("calibrate: regressors [w, u, 1] are collinear; vary u and w in the log");
  }
  const Eigen::Vector3d beta = gram.ldlt().solve(x.transpose() * y);

  ActuatorParams p;
  p.a1 = beta(0);
  p.a2 = beta(1);
  p.a3 = beta(2);
  p.dt = dt;
  validate(p);
  return p;
}

double prediction_rms(const ActuatorParams& p, std::span<const CalibrationSample> samples) {
  validate(p);
  if (samples.empty()) return 0.0;
  double acc = 0.0;
  for (const CalibrationSample& s : samples) {
    const double r = s.w_next - (p.a1 * s.w + p.a2 * s.u + p.a3);
    acc += r * r;
  }
  return std::sqrt(acc / static_cast<double>(samples.size()));
}

}  // namespace supcon
