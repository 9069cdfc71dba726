#include "supcon/polytope.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "supcon/lp.hpp"

namespace supcon {

namespace {

void check_rows(const HPolyhedron& p, const char* who) {
  if (p.rows() < 1 || p.h.size() != p.H.rows()) {
    throw DimensionMismatch(std::string(who) + ": polyhedron needs H and h with matching rows (>= 1)");
  }
}

bool feasible(const HPolyhedron& p) {
  const lp::Result r = lp::maximize(Eigen::VectorXd::Zero(p.dim()), p.H, p.h);
  return r.status != lp::Status::Infeasible;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

bool HPolyhedron::contains(const Eigen::VectorXd& e, double tol) const {
  check_rows(*this, "contains");
  if (e.size() != H.cols()) {
    throw DimensionMismatch("contains: point has " + std::to_string(e.size()) +
                            " entries, polyhedron has dimension " + std::to_string(dim()));
  }
  return ((H * e - h).array() <= tol).all();
}

HPolyhedron safe_set(double w_lb) {
  if (!(w_lb > 0.0)) {
    throw DomainError("safe_set: w_lb must be > 0, got " + std::to_string(w_lb));
  }
  HPolyhedron s;
  s.H.resize(4, 2);
  s.H << -1, 0, 0, -1, 1, 0, 0, 1;
  s.h.resize(4);
  s.h << w_lb, 0, 0, 0;
  return s;
}

HPolyhedron pre_image(const Eigen::MatrixXd& A, const HPolyhedron& P) {
  check_rows(P, "pre_image");
  if (A.rows() != A.cols() || A.cols() != P.dim()) {
    throw DimensionMismatch("pre_image: A must be square with the polyhedron's dimension");
  }
  return {P.H * A, P.h};
}

HPolyhedron intersect(const HPolyhedron& P, const HPolyhedron& Q, double tol) {
  check_rows(P, "intersect");
  check_rows(Q, "intersect");
  if (P.dim() != Q.dim()) {
    throw DimensionMismatch("intersect: dimensions differ (" + std::to_string(P.dim()) +
                            " vs " + std::to_string(Q.dim()) + ")");
  }
  HPolyhedron stacked;
  stacked.H.resize(P.rows() + Q.rows(), P.dim());
  stacked.H << P.H, Q.H;
  stacked.h.resize(P.rows() + Q.rows());
  stacked.h << P.h, Q.h;
  return minimize(stacked, tol);
}

HPolyhedron minimize(const HPolyhedron& P, double tol) {
  check_rows(P, "minimize");
  if (!feasible(P)) throw EmptySet("minimize: polyhedron is empty");

  std::vector<int> kept;
  for (int i = 0; i < P.rows(); ++i) kept.push_back(i);

  // Drop rows one at a time, always testing against the surviving set, so a
  // pair of rows that only jointly pin a face can never both disappear.
  for (int i = 0; i < P.rows(); ++i) {
    if (kept.size() <= 1) break;
    if (std::find(kept.begin(), kept.end(), i) == kept.end()) continue;
    Eigen::MatrixXd rest_h(static_cast<Eigen::Index>(kept.size()) - 1, P.dim());
    Eigen::VectorXd rest_b(static_cast<Eigen::Index>(kept.size()) - 1);
    Eigen::Index at = 0;
    for (int r : kept) {
      if (r == i) continue;
      rest_h.row(at) = P.H.row(r);
      rest_b(at) = P.h(r);
      ++at;
    }
    const lp::Result best = lp::maximize(P.H.row(i).transpose(), rest_h, rest_b);
    if (best.status == lp::Status::Optimal && best.value <= P.h(i) + tol) {
      std::erase(kept, i);
    }
  }

  HPolyhedron out;
  out.H.resize(static_cast<Eigen::Index>(kept.size()), P.dim());
  out.h.resize(static_cast<Eigen::Index>(kept.size()));
  Eigen::Index at = 0;
  for (int r : kept) {
    out.H.row(at) = P.H.row(r);
    out.h(at) = P.h(r);
    ++at;
  }
  return out;
}

bool is_subset(const HPolyhedron& P, const HPolyhedron& Q, double tol) {
  check_rows(P, "is_subset");
  check_rows(Q, "is_subset");
  if (P.dim() != Q.dim()) {
    throw DimensionMismatch("is_subset: dimensions differ (" + std::to_string(P.dim()) +
                            " vs " + std::to_string(Q.dim()) + ")");
  }
  if (!feasible(P)) return true;
  for (int j = 0; j < Q.rows(); ++j) {
    const lp::Result r = lp::maximize(Q.H.row(j).transpose(), P.H, P.h);
    if (r.status == lp::Status::Unbounded) return false;
    if (r.status == lp::Status::Optimal && r.value > Q.h(j) + tol) return false;
  }
  return true;
}

bool set_equal(const HPolyhedron& P, const HPolyhedron& Q, double tol) {
  return is_subset(P, Q, tol) && is_subset(Q, P, tol);
}

InvariantSetResult max_invariant_set(const Eigen::MatrixXd& A, const HPolyhedron& S,
                                     int max_iters, double tol) {
  check_rows(S, "max_invariant_set");
  if (A.rows() != A.cols() || A.cols() != S.dim()) {
    throw DimensionMismatch("max_invariant_set: A must be square with the set's dimension");
  }
  if (max_iters < 1) {
    throw DomainError("max_invariant_set: max_iters must be >= 1, got " + std::to_string(max_iters));
  }

  InvariantSetResult out;
  out.spectral_radius = A.eigenvalues().cwiseAbs().maxCoeff();

  HPolyhedron current = S;
  for (int j = 1; j <= max_iters; ++j) {
    HPolyhedron next = intersect(pre_image(A, current), current, tol);
    if (set_equal(next, current, tol)) {
      out.invariant_set = std::move(next);
      out.iterations = j;
      return out;
    }
    current = std::move(next);
  }
  throw NoConvergence("max_invariant_set: no fixed point within " + std::to_string(max_iters) +
                          " iterations (spectral radius " + std::to_string(out.spectral_radius) + ")",
                      std::move(current), max_iters);
}

std::string to_text(const HPolyhedron& P) {
  check_rows(P, "to_text");
  std::ostringstream os;
  os << P.dim() << " " << P.rows() << "\n";
  for (int i = 0; i < P.rows(); ++i) {
    for (int j = 0; j < P.dim(); ++j) os << fmt(P.H(i, j)) << " ";
    os << fmt(P.h(i)) << "\n";
  }
  return os.str();
}

HPolyhedron polyhedron_from_text(const std::string& text) {
  std::istringstream is(text);
  int n = 0;
  int r = 0;
  if (!(is >> n >> r) || n < 1 || r < 1) {
    throw IoError("polyhedron_from_text: expected header \"n r\" with positive counts");
  }
  HPolyhedron p;
  p.H.resize(r, n);
  p.h.resize(r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(is >> p.H(i, j))) {
        throw IoError("polyhedron_from_text: truncated row " + std::to_string(i));
      }
    }
    if (!(is >> p.h(i))) {
      throw IoError("polyhedron_from_text: truncated row " + std::to_string(i));
    }
  }
  return p;
}

}  // namespace supcon
