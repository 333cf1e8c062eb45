#pragma once

#include "quermass/core/linalg.hpp"

namespace quermass {

inline constexpr int kMaxEnumerationFacets = 64;
inline constexpr int kMaxEnumerationFacetsHighDim = 32;  // dim >= 5
inline constexpr double kVertexFeasibilityTolerance = 1e-8;

/// Vertices of {x : A x <= b} as columns, sorted lexicographically.
///
/// Every dim-subset of constraints is solved as a square system; solutions
/// feasible within 1e-8 are kept and deduplicated at 1e-8 spacing.
/// Throws UnboundednessError for unbounded input and CapabilityError past the
/// facet caps.
Mat vertex_enumeration(const Mat& a, const Vec& b);

/// Same vertex set via polarity about a strictly interior point `z`: the
/// facets of conv{a_i / (b_i - a_i.z)} correspond one-to-one to vertices.
/// No facet cap; suited to the many-facet sections of hull polytopes.
Mat vertex_enumeration_polar(const Mat& a, const Vec& b, const Vec& z);

/// Sorts columns lexicographically and merges columns closer than `tol`.
Mat dedupe_points(const Mat& points, double tol);

/// Throws UnboundednessError unless every coordinate direction has finite support.
void require_bounded(const Mat& a, const Vec& b);

}  // namespace quermass
