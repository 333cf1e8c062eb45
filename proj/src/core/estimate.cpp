#include "quermass/core/estimate.hpp"

#include <cmath>

namespace quermass {

Estimate scaled(const Estimate& e, double factor) {
  return Estimate{e.value * factor, e.std_error * std::abs(factor), e.samples, e.seed};
}

Estimate product(const Estimate& a, const Estimate& b) {
  const double v = a.value * b.value;
  const double s = std::hypot(a.std_error * b.value, b.std_error * a.value);
  return Estimate{v, s, std::max(a.samples, b.samples), a.seed ? a.seed : b.seed};
}

Estimate quotient(const Estimate& a, const Estimate& b) {
  const double v = a.value / b.value;
  const double s = std::hypot(a.std_error / b.value, v * b.std_error / b.value);
  return Estimate{v, std::abs(s), std::max(a.samples, b.samples), a.seed ? a.seed : b.seed};
}

Estimate power(const Estimate& e, double p) {
  const double v = std::pow(e.value, p);
  const double s = std::abs(p * std::pow(e.value, p - 1.0)) * e.std_error;
  return Estimate{v, e.std_error == 0.0 ? 0.0 : s, e.samples, e.seed};
}

Estimate sum(const Estimate& a, const Estimate& b) {
  return Estimate{a.value + b.value, std::hypot(a.std_error, b.std_error),
                  std::max(a.samples, b.samples), a.seed ? a.seed : b.seed};
}

double combined_sigma(const Estimate& a, const Estimate& b) { return std::hypot(a.std_error, b.std_error); }

void MomentAccumulator::add(double x) {
  ++n_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_ += delta * (x - mean_);
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const double n = na + nb;
  const double delta = other.mean_ - mean_;
  mean_ += delta * nb / n;
  m2_ += other.m2_ + delta * delta * na * nb / n;
  n_ += other.n_;
}

double MomentAccumulator::variance() const {
  if (n_ < 2) return 0.0;
  return std::max(0.0, m2_ / static_cast<double>(n_ - 1));
}

Estimate MomentAccumulator::to_estimate(std::uint64_t seed) const {
  const double se = n_ >= 2 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
  return Estimate{mean_, se, n_, seed};
}

VectorMomentAccumulator::VectorMomentAccumulator(int dim)
    : dim_(dim), mean_(Eigen::VectorXd::Zero(dim)), comoment_(Eigen::MatrixXd::Zero(dim, dim)) {}

void VectorMomentAccumulator::add(std::span<const double> x) {
  ++n_;
  const Eigen::Map<const Eigen::VectorXd> v(x.data(), dim_);
  const Eigen::VectorXd delta = v - mean_;
  mean_ += delta / static_cast<double>(n_);
  comoment_.noalias() += delta * (v - mean_).transpose();
}

void VectorMomentAccumulator::merge(const VectorMomentAccumulator& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const double n = na + nb;
  const Eigen::VectorXd delta = other.mean_ - mean_;
  mean_ += delta * (nb / n);
  comoment_ += other.comoment_ + delta * delta.transpose() * (na * nb / n);
  n_ += other.n_;
}

Eigen::MatrixXd VectorMomentAccumulator::mean_covariance() const {
  if (n_ < 2) return Eigen::MatrixXd::Zero(dim_, dim_);
  const double n = static_cast<double>(n_);
  return comoment_ / (n * (n - 1.0));
}

}  // namespace quermass
