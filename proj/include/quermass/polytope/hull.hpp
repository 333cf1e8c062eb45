#pragma once

#include <optional>
#include <vector>

#include "quermass/core/linalg.hpp"
#include "quermass/core/rng.hpp"

namespace quermass {

/// Largest dimension the exact polytope routines accept.
inline constexpr int kMaxHullDim = 6;

/// Relative tolerance (times the point-set diameter) for facet visibility.
inline constexpr double kVisibilityTolerance = 1e-10;

/// Simplicial triangulation of a polytope boundary: each cell is a
/// (dim-1)-simplex given by `dim` column indices into `points`, with its
/// outward unit normal and offset (normal . x <= offset on the polytope).
/// Coplanar input points may appear as cell vertices; the cells still tile the
/// boundary exactly.
struct BoundaryTriangulation {
  int dim = 0;
  Mat points;
  std::vector<int> cells;
  Mat normals;
  Vec offsets;
  Vec interior;

  int cell_count() const { return static_cast<int>(offsets.size()); }
  const int* cell(int c) const { return cells.data() + static_cast<std::size_t>(c) * dim; }

  /// Fan triangulation from `interior`: exact volume.
  double volume() const;
  /// Volume-weighted centroid of the fan simplices; returns volume too.
  Vec centroid(double& volume) const;
  /// (dim-1)-dimensional measure of the boundary.
  double boundary_measure() const;
  /// Uniform point inside, by picking a fan simplex proportional to volume.
  /// Requires `prepare_sampling()` first.
  Vec sample(Rng& rng) const;
  void prepare_sampling();

  std::vector<double> cumulative_volume;
};

struct TriangulationResult {
  std::optional<BoundaryTriangulation> hull;
  int affine_rank = 0;
};

/// Boundary triangulation of conv(columns of points), built in R^{points.rows()}.
/// Returns no hull (and the achieved affine rank) for lower-dimensional input.
TriangulationResult triangulate_boundary(const Mat& points, double rel_tol = kVisibilityTolerance);

/// Volume of conv(points); 0 when the points are affinely degenerate.
double hull_volume(const Mat& points);

/// Facet with outward unit normal; `vertices` index HullComplex::vertices.
struct HullFacet {
  Vec normal;
  double offset = 0.0;
  std::vector<int> vertices;
};

struct HullComplex {
  int dim = 0;
  Mat vertices;                ///< extreme points only (dim x V)
  std::vector<HullFacet> facets;
  Vec interior_point;
  BoundaryTriangulation boundary;

  Mat facet_normals() const;  ///< F x dim
  Vec facet_offsets() const;
  /// Membership with slack `tol` on the normalized facet inequalities.
  bool contains(const Vec& x, double tol = 1e-9) const;
};

struct HullResult {
  std::optional<HullComplex> hull;
  int affine_rank = 0;
  bool degenerate() const { return !hull.has_value(); }
};

/// Irredundant vertices and merged facets of conv(points) in R^d, d = rows.
HullResult convex_hull(const Mat& points);

struct VolumeCentroid {
  double volume = 0.0;
  Vec centroid;
};

VolumeCentroid volume_and_centroid(const HullComplex& hull);

/// Number of edges of a 3-dimensional hull (vertex pairs shared by two facets).
int edge_count_3d(const HullComplex& hull);

/// Orthonormal coordinates of a point set within its affine span.
struct AffineFrame {
  Vec origin;
  Mat basis;    ///< ambient x rank, orthonormal columns
  Mat coords;   ///< rank x N
  int rank = 0;
};

/// Expresses points in an orthonormal basis of their affine span through
/// `origin` (the first point when none is given).
AffineFrame affine_frame(const Mat& points, std::optional<Vec> origin = std::nullopt,
                         double rel_tol = kRankTolerance);

}  // namespace quermass
