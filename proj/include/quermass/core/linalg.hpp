#pragma once

#include <Eigen/Dense>

#include "quermass/core/rng.hpp"

namespace quermass {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Relative singular-value floor below which a matrix counts as rank deficient.
inline constexpr double kRankTolerance = 1e-10;

/// rows x cols matrix of independent standard normals.
Mat gaussian_matrix(int rows, int cols, Rng& rng);

/// Orthonormal basis of the column span, via Householder QR with the sign of
/// each R diagonal entry made positive (so the map is idempotent).
/// Throws DegenerateInputError when sigma_min < kRankTolerance * sigma_max.
Mat orthonormalize(const Mat& m);

/// Determinant of a small dense matrix (row-major, d x d, d <= 8), destroys `a`.
double det_inplace(double* a, int d);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  void merge(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Uniform point on the unit sphere in R^n.
Vec random_direction(int n, Rng& rng);
/// Uniform point in the unit ball of R^n.
Vec random_in_ball(int n, Rng& rng);

}  // namespace quermass
