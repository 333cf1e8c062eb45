#include "quermass/polytope/vertex_enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "quermass/core/errors.hpp"
#include "quermass/polytope/hull.hpp"
#include "quermass/polytope/lp.hpp"

namespace quermass {

namespace {

bool lex_less(const Mat& p, int a, int b) {
  for (int k = 0; k < p.rows(); ++k) {
    if (p(k, a) < p(k, b)) return true;
    if (p(k, a) > p(k, b)) return false;
  }
  return false;
}

}  // namespace

Mat dedupe_points(const Mat& points, double tol) {
  const int count = static_cast<int>(points.cols());
  std::vector<int> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return lex_less(points, a, b); });
  std::vector<int> keep;
  for (int i : idx) {
    bool duplicate = false;
    for (int j : keep) {
      if ((points.col(i) - points.col(j)).norm() <= tol) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) keep.push_back(i);
  }
  Mat out(points.rows(), keep.size());
  for (std::size_t c = 0; c < keep.size(); ++c) out.col(c) = points.col(keep[c]);
  return out;
}

void require_bounded(const Mat& a, const Vec& b) {
  const int d = static_cast<int>(a.cols());
  for (int k = 0; k < d; ++k) {
    for (double s : {1.0, -1.0}) {
      Vec u = Vec::Zero(d);
      u(k) = s;
      lp::maximize_linear(a, b, u);  // throws when unbounded
    }
  }
}

Mat vertex_enumeration(const Mat& a, const Vec& b) {
  const int m = static_cast<int>(a.rows());
  const int d = static_cast<int>(a.cols());
  if (d < 1 || d > kMaxHullDim) throw CapabilityError("vertex enumeration supports dimensions 1..6");
  const int cap = d >= 5 ? kMaxEnumerationFacetsHighDim : kMaxEnumerationFacets;
  if (m > cap) {
    throw CapabilityError("vertex enumeration capped at " + std::to_string(cap) + " facets in dimension " +
                          std::to_string(d));
  }
  require_bounded(a, b);

  Mat an = a;
  Vec bn = b;
  for (int i = 0; i < m; ++i) {
    const double norm = a.row(i).norm();
    if (norm == 0.0) continue;
    an.row(i) /= norm;
    bn(i) /= norm;
  }

  std::vector<Vec> found;
  std::vector<int> pick(d);
  std::iota(pick.begin(), pick.end(), 0);
  Mat sys(d, d);
  Vec rhs(d);
  while (true) {
    for (int r = 0; r < d; ++r) {
      sys.row(r) = an.row(pick[r]);
      rhs(r) = bn(pick[r]);
    }
    Eigen::PartialPivLU<Mat> lu(sys);
    const double det = std::abs(lu.determinant());
    if (det > 1e-12) {
      const Vec x = lu.solve(rhs);
      if (((an * x - bn).array() <= kVertexFeasibilityTolerance).all()) found.push_back(x);
    }
    int r = d - 1;
    while (r >= 0 && pick[r] == m - d + r) --r;
    if (r < 0) break;
    ++pick[r];
    for (int s = r + 1; s < d; ++s) pick[s] = pick[s - 1] + 1;
  }
  Mat all(d, found.size());
  for (std::size_t c = 0; c < found.size(); ++c) all.col(c) = found[c];
  return dedupe_points(all, kVertexFeasibilityTolerance);
}

Mat vertex_enumeration_polar(const Mat& a, const Vec& b, const Vec& z) {
  const int m = static_cast<int>(a.rows());
  const int d = static_cast<int>(a.cols());
  if (d == 1) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (a(i, 0) > 0.0) hi = std::min(hi, b(i) / a(i, 0));
      if (a(i, 0) < 0.0) lo = std::max(lo, b(i) / a(i, 0));
    }
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw UnboundednessError("unbounded interval");
    Mat out(1, 2);
    out << lo, hi;
    return out;
  }
  Mat polar(d, m);
  for (int i = 0; i < m; ++i) {
    const double slack = b(i) - a.row(i).dot(z);
    if (slack <= 0.0) throw DomainError("polar vertex enumeration needs a strictly interior point");
    polar.col(i) = a.row(i).transpose() / slack;
  }
  const HullResult hull = convex_hull(polar);
  if (hull.degenerate()) throw UnboundednessError("constraint normals do not span: polytope is unbounded");
  if (!hull.hull->contains(Vec::Zero(d), -1e-12)) {
    throw UnboundednessError("origin not interior to the polar hull: polytope is unbounded");
  }
  Mat out(d, hull.hull->facets.size());
  for (std::size_t f = 0; f < hull.hull->facets.size(); ++f) {
    const HullFacet& facet = hull.hull->facets[f];
    out.col(f) = z + facet.normal / facet.offset;
  }
  return out;
}

}  // namespace quermass
