#pragma once

#include <memory>
#include <string>
#include <variant>

#include "quermass/core/linalg.hpp"
#include "quermass/polytope/hull.hpp"

namespace quermass {

struct Ball {
  Vec center;
  double radius = 1.0;
};

struct Box {
  Vec center;
  Vec halfwidths;
};

/// {x : (x - c)^T A^{-1} (x - c) <= 1}.
struct Ellipsoid {
  Vec center;
  Mat shape;
};

struct VPolytope {
  Mat vertices;  ///< dim x V, extreme points only
};

/// {x : a_i . x <= b_i}.
struct HPolytope {
  Mat normals;  ///< m x dim
  Vec offsets;
};

using Representation = std::variant<Ball, Box, Ellipsoid, VPolytope, HPolytope>;

struct BodyFlags {
  bool symmetric = false;
  bool centered = false;
};

/// Immutable convex body with non-empty interior. Derived data (polytope
/// hulls, ellipsoid factorizations) is computed at construction and shared
/// between copies.
class ConvexBody {
 public:
  static ConvexBody ball(Vec center, double radius);
  static ConvexBody unit_ball(int n);
  static ConvexBody box(Vec center, Vec halfwidths);
  /// [0,1]^n when `centered` is false, [-1/2,1/2]^n otherwise.
  static ConvexBody unit_cube(int n, bool centered = false);
  static ConvexBody ellipsoid(Vec center, Mat shape);
  /// conv of the columns; redundant points are dropped.
  static ConvexBody vpolytope(const Mat& points);
  /// Throws UnboundednessError for unbounded constraint sets.
  static ConvexBody hpolytope(Mat normals, Vec offsets);

  int dim() const { return dim_; }
  const Representation& rep() const { return rep_; }
  std::string type_name() const;
  bool is_polytope() const;

  /// Hull of a V- or H-polytope (irredundant vertices, merged facets).
  const HullComplex& hull() const;
  /// Vertices of a polytope or the corners of a box, as columns.
  Mat polytope_vertices() const;

  /// Ellipsoid factors: shape = L L^T, and shape^{-1}.
  const Mat& ellipsoid_factor() const;
  const Mat& ellipsoid_inverse() const;

  /// Axis-aligned bounding box.
  Vec lower_corner() const;
  Vec upper_corner() const;
  /// max |x| over the body.
  double circumradius() const;

  BodyFlags flags;
  std::string name;

  ConvexBody with_flags(BodyFlags f) const;
  ConvexBody with_name(std::string n) const;

 private:
  struct Derived;
  ConvexBody(int dim, Representation rep, std::shared_ptr<const Derived> derived);
  static ConvexBody from_hull(HullComplex hull);
  friend ConvexBody polytope_from_constraints(Mat normals, Vec offsets, const Vec& interior);

  int dim_ = 0;
  Representation rep_;
  std::shared_ptr<const Derived> derived_;
};

/// H-polytope whose interior contains `interior`; skips the boundedness LP and
/// enumerates vertices through polarity about that point.
ConvexBody polytope_from_constraints(Mat normals, Vec offsets, const Vec& interior);

}  // namespace quermass
