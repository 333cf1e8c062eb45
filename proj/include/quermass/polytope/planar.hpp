#pragma once

#include "quermass/core/linalg.hpp"

namespace quermass {

struct PlanarIntrinsics {
  double area = 0.0;
  double perimeter = 0.0;
  bool degenerate = false;

  double w0() const { return area; }
  double w1() const { return 0.5 * perimeter; }
};

/// Area (shoelace) and perimeter of conv(points) for points in R^2.
/// Collinear input yields zero area and twice the segment length.
PlanarIntrinsics planar_intrinsics(const Mat& points);

}  // namespace quermass
