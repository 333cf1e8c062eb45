#include "quermass/verify/constants.hpp"

#include <cmath>

#include "quermass/core/constants.hpp"
#include "quermass/core/errors.hpp"
#include "quermass/core/linalg.hpp"
#include "quermass/polytope/hull.hpp"
#include "quermass/polytope/planar.hpp"

namespace quermass {

namespace {

void require_nkj(int n, int k, int j) {
  if (n < 2 || n > kMaxTableDim || k < 1 || k > n - 1 || j < 0 || j > n - k - 1) {
    throw DomainError("constants need 1 <= k <= n-1 and 0 <= j <= n-k-1");
  }
}

}  // namespace

double conv_volume(const Mat& x, bool include_origin) {
  const int d = static_cast<int>(x.rows());
  const int q = static_cast<int>(x.cols());
  if (!include_origin) {
    if (q <= d) return 0.0;
    if (d == 1) return x.maxCoeff() - x.minCoeff();
    if (d == 2) return planar_intrinsics(x).area;
    return hull_volume(x);
  }
  if (q < d) return 0.0;
  if (q == d) {
    Mat copy = x.transpose();
    double f = 1.0;
    for (int i = 2; i <= d; ++i) f *= i;
    return std::abs(det_inplace(copy.data(), d)) / f;
  }
  Mat pts(d, q + 1);
  pts << Mat::Zero(d, 1), x;
  if (d == 1) return pts.maxCoeff() - pts.minCoeff();
  if (d == 2) return planar_intrinsics(pts).area;
  return hull_volume(pts);
}

double crofton_alpha(int n, int k, int j) {
  require_nkj(n, k, j);
  return LogProduct().times_omega(n - k).times_omega(n - j).over_omega(n - k - j).over_omega(n).value();
}

double section_gamma(int n, int k, int j) {
  require_nkj(n, k, j);
  return LogProduct().times_omega(n - k).times_omega(n - j).over_omega(n - k - j).over_omega(k).value();
}

double shift_factor(int n, int k, int j) {
  require_nkj(n, k, j);
  return std::pow((n + 1.0) / (n - k - j + 1.0), n - k - j);
}

double ratio_beta(int n, int k, int j) {
  return LogProduct()
      .times(crofton_alpha(n, k, j))
      .times(shift_factor(n, k, j), -1.0)
      .over_binom(n, k)
      .value();
}

double ratio_gamma(int n, int k, int j) {
  return LogProduct()
      .times(crofton_alpha(n, k, j))
      .times_binom(n - j, k)
      .times((n + 1.0) / (n - k + 1.0), n - k)
      .value();
}

double simplex_delta(int n, int k, int j) {
  require_nkj(n, k, j);
  return LogProduct().times_omega(j).over_omega(k + j).times_binom(n, k + j).over_binom(n - k, j).value();
}

Estimate dpp_constant(int d, int q, bool include_origin, const Budget& budget, const SeededRng& rng) {
  if (d < 1 || q < 1 || (include_origin && d > q) || (!include_origin && d > q - 1) || d > kMaxHullDim) {
    throw DomainError("dpp constant needs 1 <= d <= q (d <= q-1 without the origin), d <= 6");
  }
  return mc_estimate(rng, budget, [&](Rng& r) {
    Mat x(d, q);
    for (int i = 0; i < q; ++i) x.col(i) = random_in_ball(d, r);
    return conv_volume(x, include_origin);
  });
}

Estimate simplex_c(int n, int k, int j, const Estimate& dpp) {
  require_nkj(n, k, j);
  const double factor =
      LogProduct().times_omega(j).over_omega(k + j).over_omega(n - k - j).over_binom(n - k, j).value();
  return scaled(dpp, factor);
}

Estimate simplex_c_centered(int n, int k, int j, const Estimate& dpp) {
  return scaled(simplex_c(n, k, j, dpp), std::pow((n + 1.0) / (k + j + 1.0), -(k + j)));
}

Estimate hull_c(int n, int N, int j, const Estimate& dpp) {
  if (j < 0 || j > n - 1 || N < n + 1) throw DomainError("hull constant needs 0 <= j <= n-1 and N >= n+1");
  return scaled(dpp, LogProduct().over_omega(n - j).over_binom(n, j).value());
}

Estimate hull_c_centered(int n, int N, int j, const Estimate& dpp) {
  return scaled(hull_c(n, N, j, dpp), std::pow((n + 1.0) / (j + 1.0), -j));
}

Estimate bp_moment(int n, int s, const Budget& budget, const SeededRng& rng) {
  if (s < 1 || s > n - 1 || n > kMaxTableDim) throw DomainError("calibration needs 1 <= s <= n-1");
  return mc_estimate(rng, budget, [&](Rng& r) {
    Mat x(s, s);
    for (int i = 0; i < s; ++i) x.col(i) = random_in_ball(s, r);
    return std::pow(conv_volume(x, true), n - s);
  });
}

Estimate bp_constant(int n, int s, const Estimate& moment) {
  const double top = LogProduct().times_omega(n, s).over_omega(s, s).value();
  return quotient(Estimate::exact(top), moment);
}

}  // namespace quermass
