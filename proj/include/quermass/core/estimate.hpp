#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace quermass {

/// A Monte Carlo estimate (or an exact value when `samples == 0`).
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static Estimate exact(double v) { return Estimate{v, 0.0, 0, 0}; }
  bool is_exact() const { return samples == 0; }
};

// First-order error propagation; operands are treated as independent.
Estimate scaled(const Estimate& e, double factor);
Estimate product(const Estimate& a, const Estimate& b);
Estimate quotient(const Estimate& a, const Estimate& b);
Estimate power(const Estimate& e, double p);
Estimate sum(const Estimate& a, const Estimate& b);

/// sqrt of the sum of squared standard errors.
double combined_sigma(const Estimate& a, const Estimate& b);

/// Streaming mean/variance (Welford within a block, Chan merge across blocks).
class MomentAccumulator {
 public:
  void add(double x);
  void merge(const MomentAccumulator& other);
  std::uint64_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const;
  Estimate to_estimate(std::uint64_t seed) const;

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Vector-valued counterpart with the full co-moment matrix.
class VectorMomentAccumulator {
 public:
  explicit VectorMomentAccumulator(int dim = 0);
  void add(std::span<const double> x);
  void merge(const VectorMomentAccumulator& other);
  std::uint64_t count() const { return n_; }
  const Eigen::VectorXd& mean() const { return mean_; }
  /// Covariance of the sample mean (co-moment / (n (n - 1))).
  Eigen::MatrixXd mean_covariance() const;

 private:
  int dim_ = 0;
  std::uint64_t n_ = 0;
  Eigen::VectorXd mean_;
  Eigen::MatrixXd comoment_;
};

}  // namespace quermass
