#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "quermass/core/errors.hpp"
#include "quermass/core/linalg.hpp"
#include "quermass/grassmann/subspace.hpp"
#include "quermass/polytope/hull.hpp"
#include "quermass/polytope/lp.hpp"
#include "quermass/polytope/planar.hpp"
#include "quermass/polytope/vertex_enumeration.hpp"

using namespace quermass;

namespace {

Mat cube_corners(int n) {
  Mat c(n, 1 << n);
  for (int m = 0; m < (1 << n); ++m) {
    for (int i = 0; i < n; ++i) c(i, m) = (m >> i) & 1;
  }
  return c;
}

Mat cross_polytope(int n) {
  Mat v = Mat::Zero(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    v(i, 2 * i) = 1.0;
    v(i, 2 * i + 1) = -1.0;
  }
  return v;
}

Mat random_points(int d, int count, Rng& r) { return gaussian_matrix(d, count, r); }

void check_hull_invariants(const HullComplex& h) {
  const int d = h.dim;
  for (const auto& f : h.facets) {
    for (int v = 0; v < h.vertices.cols(); ++v) EXPECT_LE(f.normal.dot(h.vertices.col(v)) - f.offset, 1e-9);
    // Facet carries d affinely independent vertices.
    Mat pts(d, f.vertices.size());
    for (std::size_t i = 0; i < f.vertices.size(); ++i) pts.col(i) = h.vertices.col(f.vertices[i]);
    EXPECT_EQ(affine_frame(pts).rank, d - 1);
    EXPECT_NEAR(f.normal.norm(), 1.0, 1e-12);
  }
}

}  // namespace

TEST(ConvexHull, UnitSquare) {
  Mat sq(2, 4);
  sq << 0, 1, 1, 0, 0, 0, 1, 1;
  const HullResult r = convex_hull(sq);
  ASSERT_FALSE(r.degenerate());
  EXPECT_EQ(r.hull->vertices.cols(), 4);
  EXPECT_EQ(r.hull->facets.size(), 4u);
  check_hull_invariants(*r.hull);
}

TEST(ConvexHull, CubeEulerCharacteristic) {
  const HullResult r = convex_hull(cube_corners(3));
  ASSERT_FALSE(r.degenerate());
  const int v = static_cast<int>(r.hull->vertices.cols());
  const int f = static_cast<int>(r.hull->facets.size());
  const int e = edge_count_3d(*r.hull);
  EXPECT_EQ(v, 8);
  EXPECT_EQ(f, 6);
  EXPECT_EQ(e, 12);
  EXPECT_EQ(v - e + f, 2);
  check_hull_invariants(*r.hull);
}

TEST(ConvexHull, RandomPolytopesSatisfyEuler) {
  Rng r(11, 0, 0);
  for (int t = 0; t < 20; ++t) {
    const HullResult h = convex_hull(random_points(3, 30, r));
    ASSERT_FALSE(h.degenerate());
    const int v = static_cast<int>(h.hull->vertices.cols());
    EXPECT_EQ(v - edge_count_3d(*h.hull) + static_cast<int>(h.hull->facets.size()), 2);
    check_hull_invariants(*h.hull);
  }
}

TEST(ConvexHull, DiskPointsContainment) {
  Rng r(3, 0, 0);
  Mat pts(2, 100);
  for (int i = 0; i < 100; ++i) pts.col(i) = random_in_ball(2, r);
  const HullResult h = convex_hull(pts);
  ASSERT_FALSE(h.degenerate());
  for (int v = 0; v < h.hull->vertices.cols(); ++v) {
    double best = 1e9;
    for (int i = 0; i < 100; ++i) best = std::min(best, (pts.col(i) - h.hull->vertices.col(v)).norm());
    EXPECT_EQ(best, 0.0);
  }
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(h.hull->contains(pts.col(i)));
  // Independent containment oracle: LP feasibility against the hull vertices.
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(lp::in_convex_hull(h.hull->vertices, pts.col(i)));
}

TEST(ConvexHull, DegenerateReportsRank) {
  Mat pts(3, 4);
  pts << 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0;
  const HullResult h = convex_hull(pts);
  EXPECT_TRUE(h.degenerate());
  EXPECT_EQ(h.affine_rank, 2);
  EXPECT_EQ(hull_volume(pts), 0.0);
}

TEST(ConvexHull, CoplanarPointsDoNotBreakVolume) {
  // Cube corners plus face centres and edge midpoints.
  Mat pts(3, 0);
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y)
      for (int z = 0; z <= 2; ++z) {
        pts.conservativeResize(Eigen::NoChange, pts.cols() + 1);
        pts.col(pts.cols() - 1) << x / 2.0, y / 2.0, z / 2.0;
      }
  const HullResult h = convex_hull(pts);
  ASSERT_FALSE(h.degenerate());
  EXPECT_EQ(h.hull->vertices.cols(), 8);
  EXPECT_EQ(h.hull->facets.size(), 6u);
  EXPECT_NEAR(h.hull->boundary.volume(), 1.0, 1e-12);
  EXPECT_NEAR(h.hull->boundary.boundary_measure(), 6.0, 1e-12);
}

TEST(VolumeCentroid, Examples) {
  const HullResult cube = convex_hull(cube_corners(3));
  const VolumeCentroid vc = volume_and_centroid(*cube.hull);
  EXPECT_NEAR(vc.volume, 1.0, 1e-12);
  EXPECT_LT((vc.centroid - Vec::Constant(3, 0.5)).norm(), 1e-12);

  Mat simplex = Mat::Zero(3, 4);
  simplex.rightCols(3) = Mat::Identity(3, 3);
  const VolumeCentroid s = volume_and_centroid(*convex_hull(simplex).hull);
  EXPECT_NEAR(s.volume, 1.0 / 6.0, 1e-14);
  EXPECT_LT((s.centroid - Vec::Constant(3, 0.25)).norm(), 1e-12);

  const VolumeCentroid x = volume_and_centroid(*convex_hull(cross_polytope(3)).hull);
  EXPECT_NEAR(x.volume, 8.0 / 6.0, 1e-12);  // 2^3 orthant simplices of volume 1/3!
  EXPECT_LT(x.centroid.norm(), 1e-12);
}

TEST(VolumeCentroid, HigherDimensions) {
  EXPECT_NEAR(hull_volume(cross_polytope(4)), 16.0 / 24.0, 1e-12);
  EXPECT_NEAR(hull_volume(cross_polytope(5)), 32.0 / 120.0, 1e-12);
  EXPECT_NEAR(hull_volume(cube_corners(5)), 1.0, 1e-12);
  EXPECT_NEAR(hull_volume(cube_corners(6)), 1.0, 1e-12);
  const HullResult c5 = convex_hull(cube_corners(5));
  EXPECT_EQ(c5.hull->vertices.cols(), 32);
  EXPECT_EQ(c5.hull->facets.size(), 10u);
}

TEST(VolumeCentroid, InvariantUnderPermutationAndRotation) {
  Rng r(17, 0, 0);
  for (int d = 2; d <= 4; ++d) {
    const Mat pts = random_points(d, 25, r);
    const double base = hull_volume(pts);
    std::vector<int> perm(25);
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    std::swap(perm[3], perm[17]);
    Mat shuffled(d, 25);
    for (int i = 0; i < 25; ++i) shuffled.col(i) = pts.col(perm[i]);
    EXPECT_NEAR(hull_volume(shuffled) / base, 1.0, 1e-9);
    const Mat u = haar_orthogonal(d, r);
    EXPECT_NEAR(hull_volume(u * pts) / base, 1.0, 1e-9);
  }
}

TEST(VolumeCentroid, MonotoneUnderInclusion) {
  Rng r(19, 0, 0);
  for (int t = 0; t < 10; ++t) {
    const Mat pts = random_points(3, 40, r);
    EXPECT_LE(hull_volume(pts.leftCols(20)), hull_volume(pts) + 1e-12);
  }
}

TEST(BoundarySampling, UniformInsideTriangle) {
  Mat tri(2, 3);
  tri << 0, 1, 0, 0, 0, 1;
  auto t = triangulate_boundary(tri);
  ASSERT_TRUE(t.hull);
  t.hull->prepare_sampling();
  Rng r(5, 0, 0);
  double mx = 0.0;
  const int count = 40000;
  for (int i = 0; i < count; ++i) {
    const Vec x = t.hull->sample(r);
    ASSERT_GE(x.minCoeff(), 0.0);
    ASSERT_LE(x.sum(), 1.0 + 1e-12);
    mx += x(0);
  }
  // x coordinate has mean 1/3 and variance 1/18.
  EXPECT_LT(std::abs(mx / count - 1.0 / 3.0), 4.0 * std::sqrt(1.0 / 18.0 / count));
}

TEST(VertexEnumeration, Examples) {
  Mat a(6, 3);
  a << 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1;
  EXPECT_EQ(vertex_enumeration(a, Vec::Ones(6)).cols(), 8);

  Mat s(4, 3);
  s << -1, 0, 0, 0, -1, 0, 0, 0, -1, 1, 1, 1;
  Vec sb(4);
  sb << 0, 0, 0, 1;
  EXPECT_EQ(vertex_enumeration(s, sb).cols(), 4);

  Mat x(8, 3);
  for (int m = 0; m < 8; ++m) {
    for (int i = 0; i < 3; ++i) x(m, i) = ((m >> i) & 1) ? -1.0 : 1.0;
  }
  const Mat v = vertex_enumeration(x, Vec::Ones(8));
  EXPECT_EQ(v.cols(), 6);
  // Lexicographic order.
  for (int c = 1; c < v.cols(); ++c) {
    EXPECT_TRUE(std::lexicographical_compare(v.col(c - 1).data(), v.col(c - 1).data() + 3, v.col(c).data(),
                                             v.col(c).data() + 3));
  }
}

TEST(VertexEnumeration, UnboundedAndCaps) {
  Mat a(2, 2);
  a << 1, 0, 0, 1;
  EXPECT_THROW(vertex_enumeration(a, Vec::Ones(2)), UnboundednessError);
  Mat big = Mat::Random(33, 5);
  EXPECT_THROW(vertex_enumeration(big, Vec::Ones(33)), CapabilityError);
}

TEST(VertexEnumeration, RecoversHullVertices) {
  Rng r(23, 0, 0);
  for (int d = 2; d <= 4; ++d) {
    const HullResult h = convex_hull(random_points(d, 12, r));
    const HullComplex& hull = *h.hull;
    if (static_cast<int>(hull.facets.size()) > kMaxEnumerationFacets) continue;
    const Mat v = vertex_enumeration(hull.facet_normals(), hull.facet_offsets());
    const Mat expected = dedupe_points(hull.vertices, 0.0);
    ASSERT_EQ(v.cols(), expected.cols());
    EXPECT_LT((v - expected).cwiseAbs().maxCoeff(), 1e-8);
    const Mat p = dedupe_points(vertex_enumeration_polar(hull.facet_normals(), hull.facet_offsets(), hull.interior_point), 1e-9);
    ASSERT_EQ(p.cols(), expected.cols());
    EXPECT_LT((p - expected).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(Planar, Examples) {
  Mat sq(2, 4);
  sq << 0, 1, 1, 0, 0, 0, 1, 1;
  const PlanarIntrinsics s = planar_intrinsics(sq);
  EXPECT_NEAR(s.area, 1.0, 1e-15);
  EXPECT_NEAR(s.perimeter, 4.0, 1e-15);
  EXPECT_NEAR(s.w1(), 2.0, 1e-15);

  Mat tri(2, 3);
  tri << 0, 1, 0, 0, 0, 1;
  const PlanarIntrinsics t = planar_intrinsics(tri);
  EXPECT_NEAR(t.area, 0.5, 1e-15);
  EXPECT_NEAR(t.perimeter, 2.0 + std::sqrt(2.0), 1e-14);

  const int m = 1024;
  Mat gon(2, m);
  for (int i = 0; i < m; ++i) gon.col(i) << std::cos(2 * std::numbers::pi * i / m), std::sin(2 * std::numbers::pi * i / m);
  const PlanarIntrinsics g = planar_intrinsics(gon);
  // Regular m-gon: area m/2 sin(2pi/m), perimeter 2m sin(pi/m).
  EXPECT_NEAR(g.area, 0.5 * m * std::sin(2 * std::numbers::pi / m), 1e-12);
  EXPECT_NEAR(g.area, std::numbers::pi, 1e-4);
  EXPECT_NEAR(g.perimeter, 2.0 * std::numbers::pi, 1e-4);
}

TEST(Planar, DegenerateSegment) {
  Mat seg(2, 3);
  seg << 0, 1, 2, 0, 1, 2;
  const PlanarIntrinsics p = planar_intrinsics(seg);
  EXPECT_TRUE(p.degenerate);
  EXPECT_EQ(p.area, 0.0);
  EXPECT_NEAR(p.perimeter, 2.0 * std::sqrt(8.0), 1e-12);
}

TEST(LinearProgram, SupportAndChebyshev) {
  Mat a(4, 2);
  a << 1, 0, -1, 0, 0, 1, 0, -1;
  Vec b(4);
  b << 1, 1, 2, 0;
  Vec u(2);
  u << 1, 1;
  EXPECT_NEAR(lp::maximize_linear(a, b, u), 3.0, 1e-12);
  const lp::ChebyshevBall c = lp::chebyshev_center(a, b);
  ASSERT_TRUE(c.feasible);
  EXPECT_NEAR(c.radius, 1.0, 1e-12);
  Mat open(1, 2);
  open << 1, 0;
  EXPECT_THROW(lp::maximize_linear(open, Vec::Ones(1), u), UnboundednessError);
  Vec empty_b(4);
  empty_b << -1, -1, 1, 1;  // x <= -1 and x >= 1
  EXPECT_FALSE(lp::chebyshev_center(a, empty_b).feasible);
}

TEST(AffineFrame, RankAndCoordinates) {
  Mat pts(3, 2);
  pts << 1, 0, 0, 1, 0, 0;
  const AffineFrame f = affine_frame(pts, Vec(Vec::Zero(3)));
  EXPECT_EQ(f.rank, 2);
  EXPECT_NEAR((f.basis * f.coords - pts).norm(), 0.0, 1e-14);
}
