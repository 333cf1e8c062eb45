#include <algorithm>
#include <cmath>
#include <vector>

#include "quermass/bodies/operations.hpp"
#include "quermass/core/errors.hpp"

namespace quermass {

namespace {

double ellipsoid_distance(const Ellipsoid& e, const Vec& x) {
  Eigen::SelfAdjointEigenSolver<Mat> eig(e.shape);
  const Vec lam = eig.eigenvalues();
  const Vec z = eig.eigenvectors().transpose() * (x - e.center);
  if ((z.array().square() / lam.array()).sum() <= 1.0) return 0.0;
  // Closest point y_i = lam_i z_i / (lam_i + t) with sum y_i^2 / lam_i = 1.
  auto excess = [&](double t) { return (lam.array() * z.array().square() / (lam.array() + t).square()).sum() - 1.0; };
  double lo = 0.0;
  double hi = std::sqrt(lam.maxCoeff()) * z.norm();
  while (excess(hi) > 0.0) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  const double t = 0.5 * (lo + hi);
  const Vec y = (lam.array() * z.array() / (lam.array() + t)).matrix();
  return (z - y).norm();
}

}  // namespace

Vec min_norm_point(const Mat& p) {
  const int d = static_cast<int>(p.rows());
  const int count = static_cast<int>(p.cols());
  if (count == 0) throw DomainError("min_norm_point of an empty set");
  const double scale = p.colwise().squaredNorm().maxCoeff();
  const double eps = 1e-12 * std::max(scale, 1e-300);

  int first = 0;
  p.colwise().squaredNorm().minCoeff(&first);
  std::vector<int> s{first};
  std::vector<double> lambda{1.0};
  Vec x = p.col(first);

  for (int major = 0; major < 50 * count + 100; ++major) {
    int j = 0;
    (p.transpose() * x).minCoeff(&j);
    if (x.squaredNorm() - x.dot(p.col(j)) <= eps) break;
    if (std::find(s.begin(), s.end(), j) != s.end()) break;
    s.push_back(j);
    lambda.push_back(0.0);

    while (true) {
      // Affine minimizer over the current corral.
      const int m = static_cast<int>(s.size());
      Mat kkt = Mat::Zero(m + 1, m + 1);
      Vec rhs = Vec::Zero(m + 1);
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) kkt(a, b) = p.col(s[a]).dot(p.col(s[b]));
        kkt(a, m) = 1.0;
        kkt(m, a) = 1.0;
      }
      rhs(m) = 1.0;
      const Vec sol = kkt.completeOrthogonalDecomposition().solve(rhs);
      const Vec mu = sol.head(m);
      if ((mu.array() > 1e-14).all()) {
        for (int a = 0; a < m; ++a) lambda[a] = mu(a);
        break;
      }
      double theta = 1.0;
      for (int a = 0; a < m; ++a) {
        if (mu(a) <= 1e-14) theta = std::min(theta, lambda[a] / (lambda[a] - mu(a)));
      }
      for (int a = 0; a < m; ++a) lambda[a] = (1.0 - theta) * lambda[a] + theta * mu(a);
      std::vector<int> s2;
      std::vector<double> l2;
      for (int a = 0; a < m; ++a) {
        if (lambda[a] > 1e-14) {
          s2.push_back(s[a]);
          l2.push_back(lambda[a]);
        }
      }
      s = std::move(s2);
      lambda = std::move(l2);
      if (s.empty()) throw DomainError("min_norm_point lost its support set");
    }
    x = Vec::Zero(d);
    for (std::size_t a = 0; a < s.size(); ++a) x += lambda[a] * p.col(s[a]);
  }
  return x;
}

double distance(const ConvexBody& k, const Vec& x) {
  if (const auto* b = std::get_if<Ball>(&k.rep())) return std::max(0.0, (x - b->center).norm() - b->radius);
  if (const auto* b = std::get_if<Box>(&k.rep())) {
    return ((x - b->center).cwiseAbs() - b->halfwidths).cwiseMax(0.0).norm();
  }
  if (const auto* e = std::get_if<Ellipsoid>(&k.rep())) return ellipsoid_distance(*e, x);
  if (k.hull().contains(x, 0.0)) return 0.0;
  return min_norm_point(k.hull().vertices.colwise() - x).norm();
}

}  // namespace quermass
