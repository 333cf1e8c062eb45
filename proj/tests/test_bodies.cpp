#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quermass/bodies/operations.hpp"
#include "quermass/core/constants.hpp"
#include "quermass/core/errors.hpp"
#include "quermass/grassmann/subspace.hpp"

using namespace quermass;

namespace {

Vec v3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

ConvexBody cross_polytope(int n) {
  Mat v = Mat::Zero(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    v(i, 2 * i) = 1.0;
    v(i, 2 * i + 1) = -1.0;
  }
  return ConvexBody::vpolytope(v).with_flags({true, true});
}

ConvexBody corner_simplex(int n) {
  Mat v = Mat::Zero(n, n + 1);
  v.rightCols(n) = Mat::Identity(n, n);
  return ConvexBody::vpolytope(v);
}

ConvexBody random_symmetric(int n, int count, std::uint64_t seed) {
  Rng r(seed, 0, 0);
  const Mat g = gaussian_matrix(n, count, r);
  Mat pts(n, 2 * count);
  pts << g, -g;
  return ConvexBody::vpolytope(pts).with_flags({true, true});
}

}  // namespace

TEST(Support, Examples) {
  EXPECT_DOUBLE_EQ(support(ConvexBody::ball(Vec::Zero(3), 2.0), v3(0, 0.6, 0.8)), 2.0);
  EXPECT_DOUBLE_EQ(support(ConvexBody::unit_cube(3, true).with_flags({}), v3(1, 0, 0)), 0.5);
  EXPECT_DOUBLE_EQ(support(ConvexBody::box(Vec::Zero(3), Vec::Ones(3)), v3(1, 0, 0)), 1.0);
  const Vec u = v3(1, 1, 1) / std::sqrt(3.0);
  // Vertex max over +-e_i.
  EXPECT_NEAR(support(cross_polytope(3), u), 1.0 / std::sqrt(3.0), 1e-15);
}

TEST(Support, HPolytopeMatchesVertices) {
  Mat a(8, 3);
  for (int m = 0; m < 8; ++m) {
    for (int i = 0; i < 3; ++i) a(m, i) = ((m >> i) & 1) ? -1.0 : 1.0;
  }
  const ConvexBody h = ConvexBody::hpolytope(a, Vec::Ones(8));
  EXPECT_EQ(h.hull().vertices.cols(), 6);
  EXPECT_NEAR(volume(h), 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(support(h, v3(1, 1, 1) / std::sqrt(3.0)), 1.0 / std::sqrt(3.0), 1e-12);
  Mat open(1, 3);
  open << 1, 0, 0;
  EXPECT_THROW(ConvexBody::hpolytope(open, Vec::Ones(1)), UnboundednessError);
}

TEST(Support, SymmetricFlagInvariant) {
  Rng r(1, 0, 0);
  for (const ConvexBody& k : {cross_polytope(3), random_symmetric(3, 20, 4), ConvexBody::unit_ball(4)}) {
    ASSERT_TRUE(k.flags.symmetric);
    for (int t = 0; t < 100; ++t) {
      const Vec u = random_direction(k.dim(), r);
      EXPECT_NEAR(support(k, u), support(k, -u), 1e-9 * support(k, u));
    }
  }
}

TEST(Contains, Examples) {
  const ConvexBody b = ConvexBody::unit_ball(3);
  EXPECT_TRUE(contains(b, Vec::Zero(3)));
  EXPECT_FALSE(contains(b, v3(1 + 1e-6, 0, 0)));
  EXPECT_TRUE(contains(ConvexBody::unit_cube(3), v3(0.5, 0.5, 0.5)));
  const ConvexBody x = cross_polytope(3);
  EXPECT_TRUE(contains(x, v3(0.3, 0.3, 0.3)));
  EXPECT_FALSE(contains(x, v3(0.4, 0.4, 0.4)));
  EXPECT_TRUE(contains_by_lp(x, v3(0.3, 0.3, 0.3)));
  EXPECT_FALSE(contains_by_lp(x, v3(0.4, 0.4, 0.4)));
}

TEST(Contains, HullMembershipAgreesWithLp) {
  const ConvexBody k = random_symmetric(3, 15, 8);
  Rng r(2, 0, 0);
  for (int t = 0; t < 300; ++t) {
    const Vec x = 2.0 * random_in_ball(3, r);
    EXPECT_EQ(contains(k, x), contains_by_lp(k, x)) << x.transpose();
  }
}

TEST(Volume, Examples) {
  EXPECT_NEAR(volume(ConvexBody::unit_ball(3)), 4.0 * std::numbers::pi / 3.0, 1e-14);
  EXPECT_NEAR(volume(ConvexBody::box(Vec::Zero(3), Vec::Constant(3, 0.5))), 1.0, 1e-15);
  EXPECT_NEAR(volume(corner_simplex(3)), 1.0 / 6.0, 1e-15);
  Mat shape = Mat::Identity(3, 3);
  shape(0, 0) = 4.0;
  EXPECT_NEAR(volume(ConvexBody::ellipsoid(Vec::Zero(3), shape)), 2.0 * 4.0 * std::numbers::pi / 3.0, 1e-13);
}

TEST(Volume, DegenerateVertexSetRejected) {
  Mat flat(3, 4);
  flat << 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0;
  EXPECT_THROW(ConvexBody::vpolytope(flat), DegenerateInputError);
}

TEST(Barycenter, Examples) {
  EXPECT_LT((barycenter(ConvexBody::ball(v3(1, 2, 3), 0.5)) - v3(1, 2, 3)).norm(), 1e-15);
  Mat tri(2, 3);
  tri << 0, 1, 0, 0, 0, 1;
  const Vec c = barycenter(ConvexBody::vpolytope(tri));
  EXPECT_NEAR(c(0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(c(1), 1.0 / 3.0, 1e-15);
  EXPECT_LT((barycenter(ConvexBody::unit_cube(3)) - Vec::Constant(3, 0.5)).norm(), 1e-15);
}

TEST(Centering, Examples) {
  const ConvexBody cube = translate_to_centered(ConvexBody::unit_cube(3));
  EXPECT_LT(barycenter(cube).norm(), 1e-15);
  EXPECT_TRUE(cube.flags.centered);
  const ConvexBody ball = ConvexBody::unit_ball(3);
  const ConvexBody same = translate_to_centered(ball);
  EXPECT_EQ(std::get<Ball>(same.rep()).center, std::get<Ball>(ball.rep()).center);
  const ConvexBody s = translate_to_centered(corner_simplex(3));
  EXPECT_LT(barycenter(s).norm(), 1e-6 * s.circumradius());
  EXPECT_LT((s.hull().vertices.rowwise().minCoeff() + Vec::Constant(3, 0.25)).norm(), 1e-12);
}

TEST(Centering, Idempotent) {
  const ConvexBody once = translate_to_centered(corner_simplex(4));
  const ConvexBody twice = translate_to_centered(once);
  EXPECT_LT((once.hull().vertices - twice.hull().vertices).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Project, Examples) {
  Rng r(3, 0, 0);
  const ConvexBody disk = project(ConvexBody::unit_ball(3), haar_subspace(3, 2, r));
  EXPECT_EQ(disk.dim(), 2);
  EXPECT_DOUBLE_EQ(std::get<Ball>(disk.rep()).radius, 1.0);

  const ConvexBody sq = project(ConvexBody::unit_cube(3, true), Subspace::coordinate(3, {0, 1}));
  EXPECT_EQ(sq.hull().vertices.cols(), 4);
  EXPECT_NEAR(volume(sq), 1.0, 1e-14);
  EXPECT_NEAR(sq.hull().vertices.cwiseAbs().maxCoeff(), 0.5, 1e-15);

  Mat seg(2, 2);
  seg << 1, -1, 1, -1;
  seg /= std::sqrt(2.0);
  // A segment is not a body in R^2; project its support function directly.
  const Vec e1 = Subspace::coordinate(2, {0}).basis().col(0);
  EXPECT_NEAR((seg.transpose() * e1).maxCoeff(), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Project, ClosedFormVolumesMatchHulls) {
  Rng r(4, 0, 0);
  Mat shape(3, 3);
  shape << 3, 1, 0, 1, 2, 0.5, 0, 0.5, 1;
  const ConvexBody e = ConvexBody::ellipsoid(Vec::Zero(3), shape);
  const ConvexBody box = ConvexBody::box(v3(0.1, 0, 0), v3(1, 0.5, 0.25));
  const ConvexBody box_as_poly = ConvexBody::vpolytope(box.polytope_vertices());
  for (int t = 0; t < 20; ++t) {
    for (int m = 1; m <= 2; ++m) {
      const Subspace f = haar_subspace(3, m, r);
      EXPECT_NEAR(projection_volume(box, f.basis()), projection_volume(box_as_poly, f.basis()), 1e-12);
      EXPECT_NEAR(projection_volume(e, f.basis()), volume(project(e, f)), 1e-12);
    }
  }
}

TEST(Section, Examples) {
  Rng r(5, 0, 0);
  const Subspace f = haar_subspace(3, 2, r);
  const Vec normal = f.complement().basis().col(0);
  const Section s = affine_section(ConvexBody::unit_ball(3), f, 0.6 * normal);
  ASSERT_TRUE(s.ok());
  EXPECT_NEAR(std::get<Ball>(s.body->rep()).radius, 0.8, 1e-14);
  EXPECT_EQ(affine_section(ConvexBody::unit_ball(3), f, 1.5 * normal).status, SectionStatus::empty);

  const Section c = central_section(ConvexBody::unit_cube(3, true), Subspace::coordinate(3, {0, 1}));
  ASSERT_TRUE(c.ok());
  EXPECT_NEAR(volume(*c.body), 1.0, 1e-12);
  EXPECT_NEAR(c.body->hull().vertices.cwiseAbs().maxCoeff(), 0.5, 1e-12);
}

TEST(Section, TangentAndOutside) {
  const ConvexBody cube = ConvexBody::unit_cube(3, true);
  const Subspace f = Subspace::coordinate(3, {0, 1});
  EXPECT_EQ(affine_section(cube, f, v3(0, 0, 0.7)).status, SectionStatus::empty);
  const Section face = affine_section(cube, f, v3(0, 0, 0.5));
  ASSERT_TRUE(face.ok());
  EXPECT_NEAR(volume(*face.body), 1.0, 1e-12);
  EXPECT_EQ(affine_section(cross_polytope(3), f, v3(0, 0, 1.0)).status, SectionStatus::degenerate);
}

TEST(Section, EllipsoidSectionPointsLieInBody) {
  Rng r(6, 0, 0);
  Mat shape(3, 3);
  shape << 2, 0.3, 0.1, 0.3, 1, 0.2, 0.1, 0.2, 0.5;
  const ConvexBody e = ConvexBody::ellipsoid(v3(0.2, -0.1, 0.3), shape);
  for (int t = 0; t < 20; ++t) {
    const Subspace f = haar_subspace(3, 2, r);
    const Vec x = 0.3 * f.complement().basis().col(0);
    const Section s = affine_section(e, f, x);
    ASSERT_TRUE(s.ok());
    const UniformSampler sampler(*s.body);
    for (int i = 0; i < 20; ++i) EXPECT_TRUE(contains(e, x + f.basis() * sampler.sample(r), 1e-9));
    // Boundary of the section lies on the boundary of the body.
    const Vec u = random_direction(2, r);
    const Vec edge = x + f.basis() * (std::get<Ellipsoid>(s.body->rep()).center +
                                      s.body->ellipsoid_factor() * u);
    const Vec d = edge - std::get<Ellipsoid>(e.rep()).center;
    EXPECT_NEAR(d.dot(e.ellipsoid_inverse() * d), 1.0, 1e-9);
  }
}

TEST(Section, PolytopeSectionMatchesBruteForce) {
  const ConvexBody k = random_symmetric(3, 20, 9);
  Rng r(7, 0, 0);
  for (int t = 0; t < 10; ++t) {
    const Subspace f = haar_subspace(3, 2, r);
    const Vec x = 0.2 * f.complement().basis().col(0);
    const Section s = affine_section(k, f, x);
    ASSERT_TRUE(s.ok());
    // Hit-or-miss area estimate over the section's bounding box.
    const Vec lo = s.body->lower_corner(), hi = s.body->upper_corner();
    int hits = 0;
    const int count = 20000;
    for (int i = 0; i < count; ++i) {
      Vec z(2);
      z << lo(0) + (hi(0) - lo(0)) * r.uniform(), lo(1) + (hi(1) - lo(1)) * r.uniform();
      hits += contains(k, x + f.basis() * z, 0.0) ? 1 : 0;
    }
    const double box = (hi - lo).prod();
    const double p = static_cast<double>(hits) / count;
    EXPECT_LT(std::abs(box * p - volume(*s.body)), 4.0 * box * std::sqrt(p * (1 - p) / count) + 1e-12);
  }
}

TEST(Section, SymmetricCentralSectionIsMaximal) {
  Rng r(8, 0, 0);
  for (const ConvexBody& k : {cross_polytope(3), random_symmetric(3, 20, 10), ConvexBody::unit_cube(3, true)}) {
    for (int t = 0; t < 50; ++t) {
      const Subspace f = haar_subspace(3, 2, r);
      const Section c = central_section(k, f);
      ASSERT_TRUE(c.ok());
      const Vec x = r.uniform() * 0.5 * f.complement().basis().col(0);
      const Section s = affine_section(k, f, x);
      if (s.ok()) {
        EXPECT_LE(volume(*s.body), volume(*c.body) * (1 + 1e-9));
      }
    }
  }
}

TEST(Section, RogersShephardLowerBoundForSymmetricBodies) {
  Rng r(9, 0, 0);
  for (const ConvexBody& k : {cross_polytope(3), random_symmetric(4, 20, 11), ConvexBody::unit_cube(4, true)}) {
    const int n = k.dim();
    for (int t = 0; t < 20; ++t) {
      const int dim_f = 1 + static_cast<int>(r.below(n - 1));
      const Subspace f = haar_subspace(n, dim_f, r);
      const double proj = volume(project(k, f));
      const Section s = central_section(k, f.complement());
      ASSERT_TRUE(s.ok());
      EXPECT_GE(proj * volume(*s.body), volume(k) * (1 - 1e-9));
    }
  }
}

TEST(Minkowski, Examples) {
  const ConvexBody k = cross_polytope(3);
  Mat origin_pt = Mat::Zero(3, 1);
  // K + {0}: sum vertex sets directly (a point is not a body).
  const ConvexBody same = ConvexBody::vpolytope(k.hull().vertices.colwise() + origin_pt.col(0));
  EXPECT_NEAR(volume(same), volume(k), 1e-14);

  Mat seg(1, 2);
  seg << -1, 1;
  const ConvexBody s = ConvexBody::vpolytope(seg);
  const ConvexBody sum = minkowski_sum(s, s);
  EXPECT_NEAR(sum.hull().vertices.minCoeff(), -2.0, 1e-15);
  EXPECT_NEAR(sum.hull().vertices.maxCoeff(), 2.0, 1e-15);

  Mat square(2, 4), rotated(2, 4);
  for (int i = 0; i < 4; ++i) {
    const double a = std::numbers::pi / 4 + i * std::numbers::pi / 2;
    square.col(i) << std::cos(a), std::sin(a);
    rotated.col(i) << std::cos(a + std::numbers::pi / 4), std::sin(a + std::numbers::pi / 4);
  }
  const ConvexBody oct = minkowski_sum(ConvexBody::vpolytope(square), ConvexBody::vpolytope(rotated));
  ASSERT_EQ(oct.hull().vertices.cols(), 8);
  const Vec radii = oct.hull().vertices.colwise().norm();
  EXPECT_LT(radii.maxCoeff() - radii.minCoeff(), 1e-12);
  // Regular octagon: every facet has the same length.
  std::vector<double> lengths;
  for (const auto& f : oct.hull().facets) {
    lengths.push_back((oct.hull().vertices.col(f.vertices[0]) - oct.hull().vertices.col(f.vertices[1])).norm());
  }
  EXPECT_LT(*std::max_element(lengths.begin(), lengths.end()) - *std::min_element(lengths.begin(), lengths.end()),
            1e-12);
  EXPECT_THROW(minkowski_sum(ConvexBody::unit_ball(2), ConvexBody::vpolytope(square)), CapabilityError);
}

TEST(Minkowski, SupportIsAdditive) {
  const ConvexBody a = random_symmetric(3, 8, 12);
  const ConvexBody b = corner_simplex(3);
  const ConvexBody s = minkowski_sum(a, b);
  Rng r(10, 0, 0);
  for (int t = 0; t < 100; ++t) {
    const Vec u = random_direction(3, r);
    EXPECT_NEAR(support(s, u), support(a, u) + support(b, u), 1e-9);
  }
}

TEST(Sampling, BoxMeanClt) {
  const ConvexBody box = ConvexBody::box(v3(1, -2, 0.5), v3(1, 2, 0.5));
  Rng r(11, 0, 0);
  const SampleSet s = sample_uniform(box, 100000, r);
  const Vec mean = s.points.rowwise().mean();
  for (int i = 0; i < 3; ++i) {
    const double h = std::get<Box>(box.rep()).halfwidths(i);
    EXPECT_LT(std::abs(mean(i) - std::get<Box>(box.rep()).center(i)), 4.0 * h / std::sqrt(3.0 * 100000));
  }
}

TEST(Sampling, DiskAreaRatio) {
  Rng r(12, 0, 0);
  const int count = 100000;
  const SampleSet s = sample_uniform(ConvexBody::unit_ball(2), count, r);
  int inner = 0;
  for (int i = 0; i < count; ++i) inner += s.points.col(i).norm() <= 0.5 ? 1 : 0;
  const double p = static_cast<double>(inner) / count;
  EXPECT_LT(std::abs(p - 0.25), 4.0 * std::sqrt(0.25 * 0.75 / count));
}

TEST(Sampling, PolytopeSamplesInsideAndUniform) {
  const ConvexBody k = translate_to_centered(corner_simplex(3));
  Rng r(13, 0, 0);
  const SampleSet s = sample_uniform(k, 20000, r);
  EXPECT_GT(s.acceptance_rate(), 0.1);
  for (int i = 0; i < s.points.cols(); ++i) ASSERT_TRUE(contains(k, s.points.col(i)));
  const Vec mean = s.points.rowwise().mean();
  EXPECT_LT(mean.norm(), 4.0 * 0.25 / std::sqrt(20000.0));
}

TEST(Sampling, EllipsoidSamplesInside) {
  Mat shape(2, 2);
  shape << 4, 1, 1, 1;
  const ConvexBody e = ConvexBody::ellipsoid(Vec::Ones(2), shape);
  Rng r(14, 0, 0);
  const SampleSet s = sample_uniform(e, 1000, r);
  for (int i = 0; i < s.points.cols(); ++i) ASSERT_TRUE(contains(e, s.points.col(i)));
}

TEST(Sampling, NeedleTriggersEfficiencyError) {
  Mat needle(3, 4);
  needle << 0, 1, 1, 1, 0, 1, 1 + 1e-3, 1, 0, 1, 1, 1 + 1e-3;
  const ConvexBody k = ConvexBody::vpolytope(needle);
  Rng r(15, 0, 0);
  EXPECT_THROW(sample_uniform(k, 10, r), EfficiencyError);
}

TEST(Distance, ClosedFormsAndPolytopes) {
  EXPECT_NEAR(distance(ConvexBody::unit_ball(3), v3(2, 0, 0)), 1.0, 1e-15);
  EXPECT_NEAR(distance(ConvexBody::unit_cube(3, true), v3(1.5, 1.5, 0)), std::sqrt(2.0), 1e-15);
  const ConvexBody cube_poly = ConvexBody::vpolytope(ConvexBody::unit_cube(3, true).polytope_vertices());
  Rng r(16, 0, 0);
  for (int t = 0; t < 200; ++t) {
    const Vec x = 2.0 * random_in_ball(3, r);
    EXPECT_NEAR(distance(cube_poly, x), distance(ConvexBody::unit_cube(3, true), x), 1e-9);
  }
  Mat shape = Mat::Identity(3, 3);
  const ConvexBody sphere_as_ellipsoid = ConvexBody::ellipsoid(Vec::Zero(3), 4.0 * shape);
  EXPECT_NEAR(distance(sphere_as_ellipsoid, v3(0, 3, 0)), 1.0, 1e-12);
  Mat sh(2, 2);
  sh << 4, 0, 0, 1;
  const ConvexBody ell = ConvexBody::ellipsoid(Vec::Zero(2), sh);
  Vec p(2);
  p << 0, 3;
  EXPECT_NEAR(distance(ell, p), 2.0, 1e-12);
  // Brute force over the boundary.
  p << 2.5, 1.5;
  double best = 1e9;
  for (int i = 0; i < 200000; ++i) {
    const double a = 2 * std::numbers::pi * i / 200000;
    Vec q(2);
    q << 2 * std::cos(a), std::sin(a);
    best = std::min(best, (q - p).norm());
  }
  EXPECT_NEAR(distance(ell, p), best, 1e-6);
}
