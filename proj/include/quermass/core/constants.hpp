#pragma once

#include <array>

namespace quermass {

/// Largest dimension covered by the constant tables.
inline constexpr int kMaxTableDim = 32;

/// Volume of the Euclidean unit ball in R^d, 0 <= d <= kMaxTableDim.
double omega(int d);
double log_omega(int d);

/// log C(n, k); -inf when k < 0 or k > n.
double log_binom(int n, int k);
double binom(int n, int k);

/// Precomputed unit-ball volumes and log-binomials.
///
/// Products of ball volumes and binomials that feed check constants are
/// assembled as sums of logs and exponentiated once; see `LogProduct`.
class DimConstants {
 public:
  static const DimConstants& instance();

  double omega(int d) const;
  double log_omega(int d) const;
  double log_binom(int n, int k) const;

 private:
  DimConstants();
  std::array<double, kMaxTableDim + 1> omega_{};
  std::array<double, kMaxTableDim + 1> log_omega_{};
  std::array<std::array<double, kMaxTableDim + 1>, kMaxTableDim + 1> log_binom_{};
};

/// Accumulates a product of positive factors in log space.
class LogProduct {
 public:
  LogProduct& times_omega(int d, int power = 1);
  LogProduct& over_omega(int d, int power = 1) { return times_omega(d, -power); }
  LogProduct& times_binom(int n, int k, int power = 1);
  LogProduct& over_binom(int n, int k, int power = 1) { return times_binom(n, k, -power); }
  LogProduct& times(double positive_factor, double power = 1.0);
  double log_value() const { return log_; }
  double value() const;

 private:
  double log_ = 0.0;
};

}  // namespace quermass
