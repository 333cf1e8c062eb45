#include "quermass/core/constants.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "quermass/core/errors.hpp"

namespace quermass {

namespace {

void check_dim(int d) {
  if (d < 0 || d > kMaxTableDim) {
    throw DomainError("dimension " + std::to_string(d) + " outside [0, " +
                      std::to_string(kMaxTableDim) + "]");
  }
}

}  // namespace

DimConstants::DimConstants() {
  // omega_{d+2} = omega_d * 2 pi / (d + 2) keeps full double accuracy.
  omega_[0] = 1.0;
  omega_[1] = 2.0;
  for (int d = 2; d <= kMaxTableDim; ++d) {
    omega_[d] = omega_[d - 2] * 2.0 * std::numbers::pi / static_cast<double>(d);
  }
  for (int d = 0; d <= kMaxTableDim; ++d) log_omega_[d] = std::log(omega_[d]);

  for (int n = 0; n <= kMaxTableDim; ++n) {
    for (int k = 0; k <= kMaxTableDim; ++k) {
      if (k > n) {
        log_binom_[n][k] = -std::numeric_limits<double>::infinity();
      } else {
        log_binom_[n][k] = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
      }
    }
    log_binom_[n][0] = 0.0;
    log_binom_[n][n] = 0.0;
  }
}

const DimConstants& DimConstants::instance() {
  static const DimConstants table;
  return table;
}

double DimConstants::omega(int d) const {
  check_dim(d);
  return omega_[d];
}

double DimConstants::log_omega(int d) const {
  check_dim(d);
  return log_omega_[d];
}

double DimConstants::log_binom(int n, int k) const {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  check_dim(n);
  return log_binom_[n][k];
}

double omega(int d) { return DimConstants::instance().omega(d); }
double log_omega(int d) { return DimConstants::instance().log_omega(d); }
double log_binom(int n, int k) { return DimConstants::instance().log_binom(n, k); }

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::round(std::exp(log_binom(n, k)));
}

LogProduct& LogProduct::times_omega(int d, int power) {
  log_ += power * quermass::log_omega(d);
  return *this;
}

LogProduct& LogProduct::times_binom(int n, int k, int power) {
  const double lb = quermass::log_binom(n, k);
  if (!std::isfinite(lb)) throw DomainError("binomial C(" + std::to_string(n) + "," +
                                            std::to_string(k) + ") is zero");
  log_ += power * lb;
  return *this;
}

LogProduct& LogProduct::times(double positive_factor, double power) {
  if (!(positive_factor > 0.0)) throw DomainError("LogProduct factor must be positive");
  log_ += power * std::log(positive_factor);
  return *this;
}

double LogProduct::value() const { return std::exp(log_); }

}  // namespace quermass
