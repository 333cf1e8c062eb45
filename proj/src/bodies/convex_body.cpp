#include "quermass/bodies/convex_body.hpp"

#include <cmath>

#include "quermass/core/errors.hpp"
#include "quermass/polytope/lp.hpp"
#include "quermass/polytope/vertex_enumeration.hpp"

namespace quermass {

struct ConvexBody::Derived {
  std::optional<HullComplex> hull;
  Mat factor;
  Mat inverse;
  Vec lo;
  Vec hi;
  double circumradius = 0.0;
};

namespace {

void require_dim(const Vec& v, int n, const char* what) {
  if (v.size() != n) throw DomainError(std::string(what) + " has the wrong dimension");
}

}  // namespace

ConvexBody::ConvexBody(int dim, Representation rep, std::shared_ptr<const Derived> derived)
    : dim_(dim), rep_(std::move(rep)), derived_(std::move(derived)) {}

ConvexBody ConvexBody::ball(Vec center, double radius) {
  if (!(radius > 1e-9)) throw DegenerateInputError("ball radius must exceed 1e-9");
  const int n = static_cast<int>(center.size());
  if (n < 1) throw DomainError("ball needs dimension >= 1");
  auto d = std::make_shared<Derived>();
  d->lo = center.array() - radius;
  d->hi = center.array() + radius;
  d->circumradius = center.norm() + radius;
  ConvexBody k(n, Ball{std::move(center), radius}, std::move(d));
  return k;
}

ConvexBody ConvexBody::unit_ball(int n) {
  ConvexBody k = ball(Vec::Zero(n), 1.0);
  k.flags = {true, true};
  k.name = "ball" + std::to_string(n);
  return k;
}

ConvexBody ConvexBody::box(Vec center, Vec halfwidths) {
  const int n = static_cast<int>(center.size());
  require_dim(halfwidths, n, "box halfwidths");
  if (n < 1) throw DomainError("box needs dimension >= 1");
  if (!(halfwidths.array() > 1e-9).all()) throw DegenerateInputError("box halfwidths must exceed 1e-9");
  auto d = std::make_shared<Derived>();
  d->lo = center - halfwidths;
  d->hi = center + halfwidths;
  d->circumradius = (center.cwiseAbs() + halfwidths).norm();
  return ConvexBody(n, Box{std::move(center), std::move(halfwidths)}, std::move(d));
}

ConvexBody ConvexBody::unit_cube(int n, bool centered) {
  const Vec h = Vec::Constant(n, 0.5);
  ConvexBody k = box(centered ? Vec(Vec::Zero(n)) : h, h);
  k.flags = {centered, centered};
  k.name = std::string(centered ? "centered-cube" : "cube") + std::to_string(n);
  return k;
}

ConvexBody ConvexBody::ellipsoid(Vec center, Mat shape) {
  const int n = static_cast<int>(center.size());
  if (shape.rows() != n || shape.cols() != n) throw DomainError("ellipsoid shape has the wrong size");
  if ((shape - shape.transpose()).norm() > 1e-12 * shape.norm()) throw DomainError("ellipsoid shape must be symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> eig(shape);
  const double lmin = eig.eigenvalues().minCoeff();
  const double lmax = eig.eigenvalues().maxCoeff();
  if (!(lmin > 0.0) || std::sqrt(lmin) <= 1e-9) throw DegenerateInputError("ellipsoid shape must be positive definite");
  auto d = std::make_shared<Derived>();
  Eigen::LLT<Mat> llt(shape);
  d->factor = llt.matrixL();
  d->inverse = llt.solve(Mat::Identity(n, n));
  const Vec reach = shape.diagonal().cwiseSqrt();
  d->lo = center - reach;
  d->hi = center + reach;
  d->circumradius = center.norm() + std::sqrt(lmax);
  return ConvexBody(n, Ellipsoid{std::move(center), std::move(shape)}, std::move(d));
}

ConvexBody ConvexBody::from_hull(HullComplex hull) {
  const int n = hull.dim;
  auto d = std::make_shared<Derived>();
  d->lo = hull.vertices.rowwise().minCoeff();
  d->hi = hull.vertices.rowwise().maxCoeff();
  d->circumradius = hull.vertices.colwise().norm().maxCoeff();
  Mat vertices = hull.vertices;
  d->hull = std::move(hull);
  return ConvexBody(n, VPolytope{std::move(vertices)}, std::move(d));
}

ConvexBody ConvexBody::vpolytope(const Mat& points) {
  if (points.rows() < 1) throw DomainError("polytope needs dimension >= 1");
  HullResult result = convex_hull(points);
  if (result.degenerate()) {
    throw DegenerateInputError("points span affine dimension " + std::to_string(result.affine_rank) + " < " +
                               std::to_string(points.rows()));
  }
  return from_hull(std::move(*result.hull));
}

ConvexBody ConvexBody::hpolytope(Mat normals, Vec offsets) {
  if (normals.rows() != offsets.size()) throw DomainError("normals and offsets disagree in count");
  require_bounded(normals, offsets);
  const lp::ChebyshevBall ball = lp::chebyshev_center(normals, offsets);
  if (!ball.feasible || ball.radius <= 1e-9) throw DegenerateInputError("H-polytope has empty interior");
  return polytope_from_constraints(std::move(normals), std::move(offsets), ball.center);
}

ConvexBody polytope_from_constraints(Mat normals, Vec offsets, const Vec& interior) {
  for (int i = 0; i < normals.rows(); ++i) {
    const double norm = normals.row(i).norm();
    if (norm > 0.0) {
      normals.row(i) /= norm;
      offsets(i) /= norm;
    }
  }
  const Mat vertices = vertex_enumeration_polar(normals, offsets, interior);
  HullResult result = convex_hull(vertices);
  if (result.degenerate()) throw DegenerateInputError("H-polytope is lower dimensional");
  ConvexBody k = ConvexBody::from_hull(std::move(*result.hull));
  k.rep_ = HPolytope{std::move(normals), std::move(offsets)};
  return k;
}

std::string ConvexBody::type_name() const {
  static const char* names[] = {"ball", "box", "ellipsoid", "vpolytope", "hpolytope"};
  return names[rep_.index()];
}

bool ConvexBody::is_polytope() const {
  return std::holds_alternative<VPolytope>(rep_) || std::holds_alternative<HPolytope>(rep_);
}

const HullComplex& ConvexBody::hull() const {
  if (!derived_->hull) throw CapabilityError(type_name() + " has no polytope hull");
  return *derived_->hull;
}

Mat ConvexBody::polytope_vertices() const {
  if (const auto* b = std::get_if<Box>(&rep_)) {
    const int n = dim_;
    Mat corners(n, 1 << n);
    for (int mask = 0; mask < (1 << n); ++mask) {
      for (int i = 0; i < n; ++i) {
        corners(i, mask) = b->center(i) + (((mask >> i) & 1) ? b->halfwidths(i) : -b->halfwidths(i));
      }
    }
    return corners;
  }
  return hull().vertices;
}

const Mat& ConvexBody::ellipsoid_factor() const {
  if (!std::holds_alternative<Ellipsoid>(rep_)) throw DomainError("not an ellipsoid");
  return derived_->factor;
}

const Mat& ConvexBody::ellipsoid_inverse() const {
  if (!std::holds_alternative<Ellipsoid>(rep_)) throw DomainError("not an ellipsoid");
  return derived_->inverse;
}

Vec ConvexBody::lower_corner() const { return derived_->lo; }
Vec ConvexBody::upper_corner() const { return derived_->hi; }
double ConvexBody::circumradius() const { return derived_->circumradius; }

ConvexBody ConvexBody::with_flags(BodyFlags f) const {
  ConvexBody k = *this;
  k.flags = f;
  return k;
}

ConvexBody ConvexBody::with_name(std::string n) const {
  ConvexBody k = *this;
  k.name = std::move(n);
  return k;
}

}  // namespace quermass
