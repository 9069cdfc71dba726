#include "supcon/pose_control.hpp"

#include <cmath>
#include <sstream>

namespace supcon {

namespace {

[[noreturn]] void fail_field(const char* who, const char* field, const char* constraint,
                             double got) {
  std::ostringstream os;
  os << who << "." << field << " " << constraint << ", got " << got;
  throw DomainError(os.str());
}

void check_dt(double dt) {
  if (!(dt > 0.0)) fail_field("controller", "dt", "must be > 0", dt);
}

}  // namespace

double sat(double x) {
  if (x >= 1.0) return 1.0;
  if (x <= -1.0) return -1.0;
  return x;
}

Eigen::Vector2d siso_map(double mu) {
  if (std::abs(mu) > 1.0) {
    std::ostringstream os;
    os << "siso_map: |mu| must be <= 1, got " << mu;
    throw DomainError(os.str());
  }
  return mu >= 0.0 ? Eigen::Vector2d(mu, 0.0) : Eigen::Vector2d(0.0, -mu);
}

const PiAwState& validate(const PiAwState& s) {
  if (!(s.kp >= 0.0)) fail_field("pi_aw", "kp", "must be >= 0", s.kp);
  if (!(s.ki >= 0.0)) fail_field("pi_aw", "ki", "must be >= 0", s.ki);
  if (!(s.kaw >= 0.0)) fail_field("pi_aw", "kaw", "must be >= 0", s.kaw);
  return s;
}

PiAwResult pi_aw_step(const PiAwState& s, double error, double dt) {
  validate(s);
  check_dt(dt);
  PiAwState next = s;
  next.integral = s.integral + error * dt + s.kaw * (s.last_mu - s.last_eta) * dt;
  const double eta = s.kp * error + s.ki * next.integral;
  const double mu = sat(eta);
  next.last_eta = eta;
  next.last_mu = mu;
  return {mu, next};
}

const SmcState& validate(const SmcState& s) {
  if (!(s.lambda > 0.0)) fail_field("smc", "lambda", "must be > 0", s.lambda);
  if (!(s.ki >= 0.0)) fail_field("smc", "ki", "must be >= 0", s.ki);
  if (!(s.phi > 0.0)) fail_field("smc", "phi", "must be > 0", s.phi);
  return s;
}

SmcResult smc_step(const SmcState& s, double error, double dt) {
  validate(s);
  check_dt(dt);
  SmcState next = s;
  next.integral = s.integral + error * dt;
  const double de = (error - s.last_error) / dt;
  const double surface = de + 2.0 * s.lambda * error + s.ki * next.integral;
  next.last_error = error;
  return {sat(surface / s.phi), next};
}

}  // namespace supcon
