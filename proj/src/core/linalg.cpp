#include "quermass/core/linalg.hpp"

#include <cmath>
#include <utility>

#include "quermass/core/errors.hpp"

namespace quermass {

Mat gaussian_matrix(int rows, int cols, Rng& rng) {
  Mat g(rows, cols);
  // Column-major fill order is part of the determinism contract.
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) g(r, c) = rng.normal();
  }
  return g;
}

Mat orthonormalize(const Mat& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (cols == 0 || cols > rows) throw DegenerateInputError("orthonormalize: need 1 <= cols <= rows");
  Eigen::HouseholderQR<Mat> qr(m);
  const Mat r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  const Eigen::JacobiSVD<Mat> svd(r);
  const Vec sv = svd.singularValues();
  if (!(sv(cols - 1) >= kRankTolerance * sv(0)) || sv(0) == 0.0) {
    throw DegenerateInputError("orthonormalize: rank-deficient input");
  }
  Mat q = qr.householderQ() * Mat::Identity(rows, cols);
  for (int c = 0; c < cols; ++c) {
    if (r(c, c) < 0.0) q.col(c) = -q.col(c);
  }
  return q;
}

double det_inplace(double* a, int d) {
  double det = 1.0;
  for (int c = 0; c < d; ++c) {
    int piv = c;
    double best = std::abs(a[c * d + c]);
    for (int r = c + 1; r < d; ++r) {
      const double v = std::abs(a[r * d + c]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != c) {
      for (int k = 0; k < d; ++k) std::swap(a[c * d + k], a[piv * d + k]);
      det = -det;
    }
    const double p = a[c * d + c];
    det *= p;
    for (int r = c + 1; r < d; ++r) {
      const double f = a[r * d + c] / p;
      if (f == 0.0) continue;
      for (int k = c + 1; k < d; ++k) a[r * d + k] -= f * a[c * d + k];
    }
  }
  return det;
}

Vec random_direction(int n, Rng& rng) {
  Vec v(n);
  double norm2 = 0.0;
  do {
    for (int i = 0; i < n; ++i) v(i) = rng.normal();
    norm2 = v.squaredNorm();
  } while (norm2 < 1e-300);
  return v / std::sqrt(norm2);
}

Vec random_in_ball(int n, Rng& rng) {
  Vec v = random_direction(n, rng);
  return v * std::pow(rng.uniform(), 1.0 / n);
}

}  // namespace quermass
