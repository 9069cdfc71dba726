#pragma once

#include <Eigen/Dense>

#include "supcon/errors.hpp"

namespace supcon::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  double value = 0.0;      // objective at the optimum, valid when Optimal
  Eigen::VectorXd point;   // an optimal point, valid when Optimal
};

/// Solves max objective.dot(x) subject to H*x <= h with x free. Dense
/// two-phase tableau simplex sized for the handful of variables and a few
/// dozen rows this library produces; not meant for large programs.
Result maximize(const Eigen::VectorXd& objective, const Eigen::MatrixXd& H,
                const Eigen::VectorXd& h);

}  // namespace supcon::lp
