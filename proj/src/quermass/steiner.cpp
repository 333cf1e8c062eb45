#include <cmath>

#include "quermass/bodies/operations.hpp"
#include "quermass/core/constants.hpp"
#include "quermass/core/errors.hpp"
#include "quermass/quermass/quermass.hpp"

namespace quermass {

std::vector<double> default_steiner_lambdas(const ConvexBody& k) {
  const Vec c = barycenter(k);
  const double reach = std::max((k.upper_corner() - c).cwiseAbs().maxCoeff(), (k.lower_corner() - c).cwiseAbs().maxCoeff());
  const int count = k.dim() + 2;
  std::vector<double> lambdas;
  for (int i = 1; i <= count; ++i) lambdas.push_back(reach * i / count);
  return lambdas;
}

SteinerFit steiner_fit(const ConvexBody& k, const std::vector<double>& lambdas, std::uint64_t samples,
                       const SeededRng& rng) {
  const int n = k.dim();
  const int count = static_cast<int>(lambdas.size());
  if (count < n + 1) throw DomainError("Steiner fit needs at least n+1 lambda values");
  double lmax = 0.0;
  for (double l : lambdas) {
    if (!(l > 0.0) || l > 2.0 * k.circumradius() + 1e-12) throw DomainError("lambda values must lie in (0, 2R]");
    lmax = std::max(lmax, l);
  }
  const Vec lo = k.lower_corner().array() - lmax;
  const Vec span = (k.upper_corner().array() + lmax).matrix() - lo;
  const double box_volume = span.prod();

  const VectorMomentAccumulator acc = mc_accumulate_vector(rng, samples, count, [&](Rng& r, std::span<double> out) {
    Vec x(n);
    for (int i = 0; i < n; ++i) x(i) = lo(i) + span(i) * r.uniform();
    const double d = distance(k, x);
    for (int l = 0; l < count; ++l) out[l] = d <= lambdas[l] ? 1.0 : 0.0;
  });
  const Vec vols = box_volume * acc.mean();
  const Mat cov = box_volume * box_volume * acc.mean_covariance();

  SteinerFit fit;
  fit.coefficients.assign(n + 1, 0.0);
  fit.errors.assign(n + 1, 0.0);
  fit.coefficients[0] = volume(k);
  fit.coefficients[n] = omega(n);
  const int unknowns = n - 1;
  if (unknowns == 0) return fit;

  Mat x(count, unknowns);
  Vec y(count);
  for (int l = 0; l < count; ++l) {
    const double lam = lambdas[l];
    y(l) = vols(l) - fit.coefficients[0] - fit.coefficients[n] * std::pow(lam, n);
    for (int i = 1; i <= unknowns; ++i) x(l, i - 1) = binom(n, i) * std::pow(lam, i);
  }
  Eigen::JacobiSVD<Mat> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vec sv = svd.singularValues();
  fit.condition = sv(0) / sv(sv.size() - 1);
  if (!(fit.condition <= 1e10)) throw FitConditioningError("Steiner design matrix condition exceeds 1e10");
  const Mat pinv = svd.matrixV() * sv.cwiseInverse().asDiagonal() * svd.matrixU().transpose();
  const Vec beta = pinv * y;
  const Mat beta_cov = pinv * cov * pinv.transpose();
  for (int i = 1; i <= unknowns; ++i) {
    fit.coefficients[i] = beta(i - 1);
    fit.errors[i] = std::sqrt(std::max(0.0, beta_cov(i - 1, i - 1)));
  }
  return fit;
}

Estimate quermass_steiner_fit(const ConvexBody& k, int j, const std::vector<double>& lambdas,
                              std::uint64_t samples, const SeededRng& rng) {
  if (j < 0 || j > k.dim()) throw DomainError("quermassintegral index out of range");
  const SteinerFit fit = steiner_fit(k, lambdas, samples, rng);
  if (j == 0 || j == k.dim()) return Estimate::exact(fit.coefficients[j]);
  return Estimate{fit.coefficients[j], fit.errors[j], samples, rng.seed};
}

}  // namespace quermass
