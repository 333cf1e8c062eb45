#include "quermass/polytope/planar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "quermass/core/errors.hpp"

namespace quermass {

PlanarIntrinsics planar_intrinsics(const Mat& points) {
  if (points.rows() != 2) throw DomainError("planar_intrinsics needs points in R^2");
  PlanarIntrinsics out;
  const int count = static_cast<int>(points.cols());
  if (count == 0) {
    out.degenerate = true;
    return out;
  }
  std::vector<int> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (points(0, a) != points(0, b)) return points(0, a) < points(0, b);
    return points(1, a) < points(1, b);
  });
  auto cross = [&](int o, int a, int b) {
    return (points(0, a) - points(0, o)) * (points(1, b) - points(1, o)) -
           (points(1, a) - points(1, o)) * (points(0, b) - points(0, o));
  };
  std::vector<int> hull(2 * count);
  int k = 0;
  for (int i = 0; i < count; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], idx[i]) <= 0.0) --k;
    hull[k++] = idx[i];
  }
  for (int i = count - 2, lower = k + 1; i >= 0; --i) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], idx[i]) <= 0.0) --k;
    hull[k++] = idx[i];
  }
  const int m = std::max(1, k - 1);
  CompensatedSum area;
  CompensatedSum perimeter;
  for (int i = 0; i < m; ++i) {
    const int a = hull[i];
    const int b = hull[(i + 1) % m];
    area.add(points(0, a) * points(1, b) - points(0, b) * points(1, a));
    perimeter.add(std::hypot(points(0, b) - points(0, a), points(1, b) - points(1, a)));
  }
  out.area = 0.5 * std::abs(area.value());
  out.perimeter = perimeter.value();
  const double diam = (points.rowwise().maxCoeff() - points.rowwise().minCoeff()).norm();
  out.degenerate = m < 3 || out.area <= kRankTolerance * diam * diam;
  if (out.degenerate) out.area = 0.0;
  return out;
}

}  // namespace quermass
