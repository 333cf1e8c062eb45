#include "quermass/quermass/quermass.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "quermass/bodies/operations.hpp"
#include "quermass/core/constants.hpp"
#include "quermass/core/errors.hpp"
#include "quermass/grassmann/subspace.hpp"
#include "quermass/polytope/planar.hpp"

namespace quermass {

namespace {

// Elementary symmetric polynomial e_m of the entries of s.
double elementary_symmetric(const Vec& s, int m) {
  std::vector<double> e(m + 1, 0.0);
  e[0] = 1.0;
  for (int i = 0; i < s.size(); ++i) {
    for (int r = std::min<int>(m, i + 1); r >= 1; --r) e[r] += s(i) * e[r - 1];
  }
  return e[m];
}

double ellipse_perimeter(double a, double b) {
  if (a < b) std::swap(a, b);
  const double e = std::sqrt(std::max(0.0, 1.0 - (b * b) / (a * a)));
  return 4.0 * a * std::comp_ellint_2(e);
}

double ellipsoid_surface(Vec axes) {
  std::sort(axes.data(), axes.data() + 3, std::greater<>());
  const double a = axes(0), b = axes(1), c = axes(2);
  if (a - c <= 1e-14 * a) return 4.0 * M_PI * a * a;
  const double phi = std::acos(c / a);
  const double k2 = (a * a * (b * b - c * c)) / (b * b * (a * a - c * c));
  const double k = std::sqrt(std::clamp(k2, 0.0, 1.0));
  const double s = std::sin(phi);
  return 2.0 * M_PI * c * c +
         2.0 * M_PI * a * b / s * (std::ellint_2(k, phi) * s * s + std::ellint_1(k, phi) * std::cos(phi) * std::cos(phi));
}

// Integral of mean curvature of a 3-polytope: sum over edges of
// length * (exterior dihedral angle) / 2.
double polytope_mean_curvature_3d(const HullComplex& hull) {
  const auto& facets = hull.facets;
  CompensatedSum total;
  std::vector<int> shared;
  for (std::size_t a = 0; a < facets.size(); ++a) {
    for (std::size_t b = a + 1; b < facets.size(); ++b) {
      shared.clear();
      std::set_intersection(facets[a].vertices.begin(), facets[a].vertices.end(), facets[b].vertices.begin(),
                            facets[b].vertices.end(), std::back_inserter(shared));
      if (shared.size() < 2) continue;
      double length = 0.0;
      for (std::size_t p = 0; p < shared.size(); ++p) {
        for (std::size_t q = p + 1; q < shared.size(); ++q) {
          length = std::max(length, (hull.vertices.col(shared[p]) - hull.vertices.col(shared[q])).norm());
        }
      }
      const double cosine = std::clamp(facets[a].normal.dot(facets[b].normal), -1.0, 1.0);
      total.add(0.5 * length * std::acos(cosine));
    }
  }
  return total.value();
}

}  // namespace

std::string to_string(QuermassMethod m) {
  switch (m) {
    case QuermassMethod::exact: return "exact";
    case QuermassMethod::kubota_mc: return "kubota-mc";
    case QuermassMethod::steiner_fit: return "steiner-fit";
    case QuermassMethod::meanwidth: return "meanwidth";
  }
  return "unknown";
}

Estimate QuermassVector::at(int j) const {
  Estimate e{values.at(j), errors.at(j), methods.at(j) == QuermassMethod::exact ? 0u : 1u, 0};
  return e;
}

std::optional<double> quermass_exact(const ConvexBody& k, int j) {
  const int n = k.dim();
  if (j < 0 || j > n) throw DomainError("quermassintegral index out of range");
  if (j == n) return omega(n);
  if (const auto* b = std::get_if<Ball>(&k.rep())) return omega(n) * std::pow(b->radius, n - j);
  if (const auto* b = std::get_if<Box>(&k.rep())) {
    return omega(j) * elementary_symmetric(2.0 * b->halfwidths, n - j) / binom(n, n - j);
  }
  if (const auto* e = std::get_if<Ellipsoid>(&k.rep())) {
    if (j == 0) return volume(k);
    const Vec axes = Eigen::SelfAdjointEigenSolver<Mat>(e->shape).eigenvalues().cwiseSqrt();
    if (n == 2) return 0.5 * ellipse_perimeter(axes(0), axes(1));
    if (n == 3 && j == 1) return ellipsoid_surface(axes) / 3.0;
    return std::nullopt;
  }
  const HullComplex& hull = k.hull();
  if (j == 0) return hull.boundary.volume();
  if (n == 2) return planar_intrinsics(hull.vertices).w1();
  if (j == 1) return hull.boundary.boundary_measure() / n;
  if (n == 3 && j == 2) return polytope_mean_curvature_3d(hull) / 3.0;
  return std::nullopt;
}

Estimate quermass_kubota(const ConvexBody& k, int j, const Budget& budget, const SeededRng& rng) {
  const int n = k.dim();
  if (j < 1 || j > n - 1) throw DomainError("Kubota estimator needs 1 <= j <= n-1");
  const int m = n - j;
  const double factor = omega(n) / omega(m);
  return mc_estimate(rng, budget, [&](Rng& r) {
    const Subspace f = haar_subspace(n, m, r);
    return factor * projection_volume(k, f.basis());
  });
}

Estimate mean_width(const std::function<double(const Vec&)>& support_fn, int n, const Budget& budget,
                    const SeededRng& rng) {
  return mc_estimate(rng, budget, [&](Rng& r) {
    const Vec u = random_direction(n, r);
    return 0.5 * (support_fn(u) + support_fn(-u));
  });
}

Estimate mean_width(const ConvexBody& k, const Budget& budget, const SeededRng& rng) {
  return mean_width([&](const Vec& u) { return support(k, u); }, k.dim(), budget, rng);
}

Estimate quermass_auto(const ConvexBody& k, int j, const Budget& budget, const SeededRng& rng) {
  if (const auto exact = quermass_exact(k, j)) return Estimate::exact(*exact);
  const int n = k.dim();
  if (j == n - 1) return scaled(mean_width(k, budget, rng), omega(n));
  return quermass_kubota(k, j, budget, rng);
}

QuermassVector quermass_vector(const ConvexBody& k, const Budget& budget, const SeededRng& rng) {
  const int n = k.dim();
  QuermassVector q;
  q.n = n;
  for (int j = 0; j <= n; ++j) {
    if (const auto exact = quermass_exact(k, j)) {
      q.values.push_back(*exact);
      q.errors.push_back(0.0);
      q.methods.push_back(QuermassMethod::exact);
      continue;
    }
    const SeededRng child = rng.child(static_cast<std::uint64_t>(j));
    const bool width = j == n - 1;
    const Estimate e = width ? scaled(mean_width(k, budget, child), omega(n)) : quermass_kubota(k, j, budget, child);
    q.values.push_back(e.value);
    q.errors.push_back(e.std_error);
    q.methods.push_back(width ? QuermassMethod::meanwidth : QuermassMethod::kubota_mc);
  }
  return q;
}

double quermass_inner(const ConvexBody& k, int j, int inner_samples, Rng& rng) {
  if (const auto exact = quermass_exact(k, j)) return *exact;
  const int n = k.dim();
  CompensatedSum total;
  if (j == n - 1) {
    for (int s = 0; s < inner_samples; ++s) {
      const Vec u = random_direction(n, rng);
      total.add(0.5 * (support(k, u) + support(k, -u)));
    }
    return omega(n) * total.value() / inner_samples;
  }
  const int m = n - j;
  for (int s = 0; s < inner_samples; ++s) {
    total.add(projection_volume(k, haar_subspace(n, m, rng).basis()));
  }
  return omega(n) / omega(m) * total.value() / inner_samples;
}

double dim_convert_factor(int n, int k, int j) {
  if (k < 0 || j < 0 || j > n - k || n > kMaxTableDim) {
    throw DomainError("dimension conversion needs 0 <= j <= n-k");
  }
  return LogProduct().times_omega(k + j).times_binom(n - k, j).over_omega(j).over_binom(n, k + j).value();
}

double dim_convert(double value, int n, int k, int j) { return value * dim_convert_factor(n, k, j); }
double dim_convert_inverse(double value, int n, int k, int j) { return value / dim_convert_factor(n, k, j); }

SubdimResult quermass_subdim(const Mat& points, int j, int sub_samples, Rng& rng, bool include_origin) {
  SubdimResult out;
  const int q = static_cast<int>(points.cols());
  const int m = include_origin ? q : q - 1;
  if (j < 0 || j > m) throw DomainError("quermass_subdim needs 0 <= j <= m");
  const AffineFrame frame =
      include_origin ? affine_frame(points, Vec(Vec::Zero(points.rows()))) : affine_frame(points);
  out.rank = frame.rank;
  if (frame.rank < m) {
    out.degenerate = true;
    return out;
  }
  if (j == m) {
    out.value = omega(m);
    return out;
  }
  Mat coords = frame.coords;
  if (include_origin) {
    coords.conservativeResize(Eigen::NoChange, q + 1);
    coords.col(q).setZero();
  }
  if (m == 1) {
    out.value = coords.maxCoeff() - coords.minCoeff();
    return out;
  }
  if (m == 2) {
    const PlanarIntrinsics p = planar_intrinsics(coords);
    out.value = j == 0 ? p.w0() : p.w1();
    return out;
  }
  if (j == 0) {
    out.value = hull_volume(coords);
    return out;
  }
  try {
    out.value = quermass_inner(ConvexBody::vpolytope(coords), j, sub_samples, rng);
  } catch (const DegenerateInputError&) {
    out.degenerate = true;
    out.value = 0.0;
  }
  return out;
}

}  // namespace quermass
