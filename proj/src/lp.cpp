#include "supcon/lp.hpp"

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace supcon::lp {

namespace {

constexpr double kEps = 1e-10;
const double kInf = std::numeric_limits<double>::infinity();

// Tableau simplex for max c.x s.t. A x <= b, x >= 0, b of any sign.
// Phase 1 drives an artificial variable out of the basis; ties break on
// variable ids, which rules out cycling on the degenerate systems the
// polytope code produces. Classic competitive-programming formulation.
class Tableau {
 public:
  Tableau(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c)
      : m_(static_cast<int>(b.size())), n_(static_cast<int>(c.size())),
        nonbasic_(n_ + 1), basic_(m_),
        d_(m_ + 2, std::vector<double>(n_ + 2, 0.0)) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) d_[i][j] = a(i, j);
      basic_[i] = n_ + i;
      d_[i][n_] = -1.0;
      d_[i][n_ + 1] = b(i);
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      d_[m_][j] = -c(j);
    }
    nonbasic_[n_] = -1;
    d_[m_ + 1][n_] = 1.0;
  }

  // Returns the optimal value, -inf when infeasible, +inf when unbounded,
  // and fills x with an optimizer when finite.
  double solve(std::vector<double>& x) {
    int r = 0;
    for (int i = 1; i < m_; ++i) {
      if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
    }
    if (m_ > 0 && d_[r][n_ + 1] < -kEps) {
      pivot(r, n_);
      if (!simplex(2) || d_[m_ + 1][n_ + 1] < -kEps) return -kInf;
      for (int i = 0; i < m_; ++i) {
        if (basic_[i] != -1) continue;
        int s = 0;
        for (int j = 1; j <= n_; ++j) {
          if (rank(i, j) < rank(i, s)) s = j;
        }
        pivot(i, s);
      }
    }
    const bool bounded = simplex(1);
    x.assign(static_cast<size_t>(n_), 0.0);
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] < n_) x[static_cast<size_t>(basic_[i])] = d_[i][n_ + 1];
    }
    return bounded ? d_[m_][n_ + 1] : kInf;
  }

 private:
  std::pair<double, int> rank(int row, int col) const {
    return {d_[row][col], nonbasic_[col]};
  }

  void pivot(int r, int s) {
    std::vector<double>& pr = d_[static_cast<size_t>(r)];
    const double inv = 1.0 / pr[static_cast<size_t>(s)];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || std::abs(d_[i][s]) <= kEps) continue;
      std::vector<double>& row = d_[static_cast<size_t>(i)];
      const double factor = row[static_cast<size_t>(s)] * inv;
      for (int j = 0; j < n_ + 2; ++j) row[j] -= pr[j] * factor;
      row[static_cast<size_t>(s)] = pr[static_cast<size_t>(s)] * factor;
    }
    for (int j = 0; j < n_ + 2; ++j) {
      if (j != s) pr[j] *= inv;
    }
    for (int i = 0; i < m_ + 2; ++i) {
      if (i != r) d_[i][s] *= -inv;
    }
    pr[static_cast<size_t>(s)] = inv;
    std::swap(basic_[static_cast<size_t>(r)], nonbasic_[static_cast<size_t>(s)]);
  }

  bool simplex(int phase) {
    const int obj = m_ + phase - 1;
    for (;;) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        // The artificial column may re-enter only while restoring feasibility.
        if (phase == 1 && nonbasic_[j] == -1) continue;
        if (s == -1 || rank(obj, j) < rank(obj, s)) s = j;
      }
      if (d_[obj][s] >= -kEps) return true;
      int r = -1;
      for (int i = 0; i < m_; ++i) {
        if (d_[i][s] <= kEps) continue;
        if (r == -1) {
          r = i;
          continue;
        }
        const double li = d_[i][n_ + 1] / d_[i][s];
        const double lr = d_[r][n_ + 1] / d_[r][s];
        if (std::pair(li, basic_[i]) < std::pair(lr, basic_[r])) r = i;
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  int m_;
  int n_;
  std::vector<int> nonbasic_;
  std::vector<int> basic_;
  std::vector<std::vector<double>> d_;
};

}  // namespace

Result maximize(const Eigen::VectorXd& objective, const Eigen::MatrixXd& H,
                const Eigen::VectorXd& h) {
  const Eigen::Index n = objective.size();
  if (H.cols() != n || H.rows() != h.size()) {
    throw DimensionMismatch("lp::maximize: objective has " + std::to_string(n) +
                            " entries but H is " + std::to_string(H.rows()) + "x" +
                            std::to_string(H.cols()));
  }

  Result out;
  if (H.rows() == 0) {
    // No constraints: bounded only for the zero objective.
    if (objective.lpNorm<Eigen::Infinity>() > 0.0) {
      out.status = Status::Unbounded;
    } else {
      out.status = Status::Optimal;
      out.value = 0.0;
      out.point = Eigen::VectorXd::Zero(n);
    }
    return out;
  }

  // Free variables enter the nonnegative tableau split as x = xp - xn.
  Eigen::MatrixXd a(H.rows(), 2 * n);
  a << H, -H;
  Eigen::VectorXd c(2 * n);
  c << objective, -objective;

  std::vector<double> split;
  const double value = Tableau(a, h, c).solve(split);
  if (value == -kInf) {
    out.status = Status::Infeasible;
  } else if (value == kInf) {
    out.status = Status::Unbounded;
  } else {
    out.status = Status::Optimal;
    out.value = value;
    out.point.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      out.point(i) = split[static_cast<size_t>(i)] - split[static_cast<size_t>(i + n)];
    }
  }
  return out;
}

}  // namespace supcon::lp
