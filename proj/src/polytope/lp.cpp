#include "quermass/polytope/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "quermass/core/errors.hpp"

namespace quermass::lp {

namespace {

class Tableau {
 public:
  Tableau(const Mat& a, const Vec& b) : m_(static_cast<int>(a.rows())), n_(static_cast<int>(a.cols())) {
    width_ = n_ + m_ + 1;
    t_.assign(static_cast<std::size_t>(m_) * width_, 0.0);
    sign_.assign(m_, 1.0);
    basis_.resize(m_);
    double scale = 0.0;
    for (int i = 0; i < m_; ++i) {
      const double s = b(i) < 0.0 ? -1.0 : 1.0;
      sign_[i] = s;
      for (int j = 0; j < n_; ++j) {
        at(i, j) = s * a(i, j);
        scale = std::max(scale, std::abs(a(i, j)));
      }
      at(i, n_ + i) = 1.0;
      at(i, width_ - 1) = s * b(i);
      basis_[i] = n_ + i;
    }
    pivot_tol_ = 1e-11 * std::max(1.0, scale);
    z_.assign(width_, 0.0);
    allowed_.assign(n_ + m_, true);
  }

  double& at(int i, int j) { return t_[static_cast<std::size_t>(i) * width_ + j]; }
  double at(int i, int j) const { return t_[static_cast<std::size_t>(i) * width_ + j]; }
  double rhs(int i) const { return at(i, width_ - 1); }

  // Reduced costs for cost vector over all n + m columns.
  void price(const std::vector<double>& cost) {
    for (int j = 0; j < width_; ++j) {
      double r = j < width_ - 1 ? cost[j] : 0.0;
      for (int i = 0; i < m_; ++i) r -= cost[basis_[i]] * at(i, j);
      z_[j] = r;
    }
  }

  void pivot(int row, int col) {
    const double p = at(row, col);
    for (int j = 0; j < width_; ++j) at(row, j) /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == row) continue;
      const double f = at(i, col);
      if (f == 0.0) continue;
      for (int j = 0; j < width_; ++j) at(i, j) -= f * at(row, j);
    }
    const double f = z_[col];
    if (f != 0.0) {
      for (int j = 0; j < width_; ++j) z_[j] -= f * at(row, j);
    }
    basis_[row] = col;
  }

  // Returns false if unbounded.
  bool run(int max_iter) {
    int degenerate_run = 0;
    for (int iter = 0; iter < max_iter; ++iter) {
      const bool bland = degenerate_run > m_;
      int col = -1;
      double best = -1e-10;
      for (int j = 0; j < n_ + m_; ++j) {
        if (!allowed_[j]) continue;
        if (z_[j] < best) {
          col = j;
          if (bland) break;
          best = z_[j];
        }
      }
      if (col < 0) return true;
      int row = -1;
      double ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        const double v = at(i, col);
        if (v <= pivot_tol_) continue;
        const double r = rhs(i) / v;
        if (r < ratio - 1e-14 || (r <= ratio + 1e-14 && row >= 0 && basis_[i] < basis_[row])) {
          ratio = r;
          row = i;
        }
      }
      if (row < 0) return false;
      degenerate_run = ratio <= 1e-14 ? degenerate_run + 1 : 0;
      pivot(row, col);
    }
    throw std::runtime_error("simplex: iteration limit exceeded");
  }

  int m_, n_, width_;
  std::vector<double> t_;
  std::vector<double> sign_;
  std::vector<int> basis_;
  std::vector<double> z_;
  std::vector<bool> allowed_;
  double pivot_tol_ = 1e-11;
};

}  // namespace

Result minimize(const Vec& c, const Mat& a, const Vec& b) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  Tableau t(a, b);
  const int max_iter = 50 * (m + n) + 100;

  // Phase 1: minimize the sum of artificials.
  std::vector<double> cost1(n + m, 0.0);
  for (int i = 0; i < m; ++i) cost1[n + i] = 1.0;
  t.price(cost1);
  t.run(max_iter);
  double infeas = 0.0;
  for (int i = 0; i < m; ++i) {
    if (t.basis_[i] >= n) infeas += t.rhs(i);
  }
  Result result;
  if (infeas > 1e-9 * (1.0 + b.lpNorm<Eigen::Infinity>())) {
    result.status = Status::infeasible;
    return result;
  }
  // Drive zero-level artificials out of the basis where possible.
  for (int i = 0; i < m; ++i) {
    if (t.basis_[i] < n) continue;
    for (int j = 0; j < n; ++j) {
      if (std::abs(t.at(i, j)) > t.pivot_tol_) {
        t.pivot(i, j);
        break;
      }
    }
  }
  for (int j = n; j < n + m; ++j) t.allowed_[j] = false;

  // Phase 2.
  std::vector<double> cost2(n + m, 0.0);
  for (int j = 0; j < n; ++j) cost2[j] = c(j);
  t.price(cost2);
  if (!t.run(max_iter)) {
    result.status = Status::unbounded;
    return result;
  }
  result.status = Status::optimal;
  result.x = Vec::Zero(n);
  for (int i = 0; i < m; ++i) {
    if (t.basis_[i] < n) result.x(t.basis_[i]) = t.rhs(i);
  }
  result.objective = c.dot(result.x);
  result.duals = Vec::Zero(m);
  for (int k = 0; k < m; ++k) {
    double pi = 0.0;
    for (int i = 0; i < m; ++i) pi += cost2[t.basis_[i]] * t.at(i, n + k);
    result.duals(k) = t.sign_[k] * pi;
  }
  return result;
}

double maximize_linear(const Mat& a, const Vec& b, const Vec& u) {
  const Result r = minimize(b, a.transpose(), u);
  if (r.status == Status::infeasible) throw UnboundednessError("linear objective is unbounded above");
  if (r.status == Status::unbounded) throw DomainError("maximize_linear: constraint set is empty");
  return r.objective;
}

ChebyshevBall chebyshev_center(const Mat& a, const Vec& b) {
  const int m = static_cast<int>(a.rows());
  const int d = static_cast<int>(a.cols());
  Mat eq(d + 1, m);
  eq.topRows(d) = a.transpose();
  for (int i = 0; i < m; ++i) eq(d, i) = a.row(i).norm();
  Vec rhs = Vec::Zero(d + 1);
  rhs(d) = 1.0;
  const Result r = minimize(b, eq, rhs);
  ChebyshevBall ball;
  if (r.status == Status::unbounded) return ball;  // primal infeasible
  if (r.status == Status::infeasible) throw UnboundednessError("chebyshev_center: unbounded polyhedron");
  ball.feasible = true;
  ball.center = r.duals.head(d);
  ball.radius = r.duals(d);
  if (ball.radius < 0.0) ball.feasible = false;
  return ball;
}

bool in_convex_hull(const Mat& vertices, const Vec& x, double tol) {
  const int d = static_cast<int>(vertices.rows());
  const int k = static_cast<int>(vertices.cols());
  Mat eq(d + 1, k);
  eq.topRows(d) = vertices;
  eq.row(d).setOnes();
  Vec rhs(d + 1);
  rhs.head(d) = x;
  rhs(d) = 1.0;
  const Result r = minimize(Vec::Zero(k), eq, rhs);
  if (r.status != Status::optimal) return false;
  return (vertices * r.x - x).lpNorm<Eigen::Infinity>() <= tol * (1.0 + x.lpNorm<Eigen::Infinity>());
}

}  // namespace quermass::lp
