#pragma once

#include <Eigen/Dense>
#include <string>

#include "supcon/errors.hpp"

namespace supcon {

/// Absolute slack tolerance shared by the polyhedral comparisons.
inline constexpr double kPolytopeTol = 1e-9;

/// Convex polyhedron in halfspace form, { e | H e <= h }. Always has at
/// least one row; emptiness is legal and detected on demand.
struct HPolyhedron {
  Eigen::MatrixXd H;
  Eigen::VectorXd h;

  int dim() const { return static_cast<int>(H.cols()); }
  int rows() const { return static_cast<int>(H.rows()); }

  /// Pointwise membership check, slack tolerance on every row.
  bool contains(const Eigen::VectorXd& e, double tol = kPolytopeTol) const;
};

/// Fixed-point iteration ran out of iterations; carries the last iterate.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, HPolyhedron last_iterate, int iterations_used)
      : Error(what), last(std::move(last_iterate)), iterations(iterations_used) {}

  HPolyhedron last;
  int iterations;
};

/// The error-coordinate operating region: second coordinate pinned to zero,
/// first coordinate in [-w_lb, 0]. w_lb must be positive.
HPolyhedron safe_set(double w_lb);

/// { e | A e in P }, computed as the rows of P composed with A. The result
/// is not minimized.
HPolyhedron pre_image(const Eigen::MatrixXd& A, const HPolyhedron& P);

/// Stacks the constraints of both sets, then strips redundant rows.
HPolyhedron intersect(const HPolyhedron& P, const HPolyhedron& Q, double tol = kPolytopeTol);

/// Removes every row whose halfspace is implied by the remaining rows, i.e.
/// rows i with max H_i e over the others <= h_i + tol. Throws EmptySet when
/// the polyhedron is infeasible.
HPolyhedron minimize(const HPolyhedron& P, double tol = kPolytopeTol);

/// True when every point of P satisfies all rows of Q (an empty P is a
/// subset of anything). Decided by one LP per row of Q.
bool is_subset(const HPolyhedron& P, const HPolyhedron& Q, double tol = kPolytopeTol);

/// Mutual inclusion; robust to row order and to redundant representations.
bool set_equal(const HPolyhedron& P, const HPolyhedron& Q, double tol = kPolytopeTol);

struct InvariantSetResult {
  HPolyhedron invariant_set;
  int iterations = 0;        ///< fixed-point index at which equality held
  double spectral_radius = 0.0;
};

/// Largest subset of S that the linear map A can never leave, computed by
/// iterating O <- pre_image(A, O) intersect O to a fixed point. Diverges for
/// expansive A; throws NoConvergence after max_iters refinements.
InvariantSetResult max_invariant_set(const Eigen::MatrixXd& A, const HPolyhedron& S,
                                     int max_iters = 100, double tol = kPolytopeTol);

/// Text form: first line "n r", then r rows of n coefficients and the offset.
std::string to_text(const HPolyhedron& P);
HPolyhedron polyhedron_from_text(const std::string& text);

}  // namespace supcon
