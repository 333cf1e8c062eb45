#pragma once

#include "quermass/core/linalg.hpp"

namespace quermass::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  Vec x;          ///< primal solution (standard form)
  Vec duals;      ///< simplex multipliers, one per equality row
  double objective = 0.0;
};

/// Dense two-phase tableau simplex for
///   minimize c.x  subject to  A x = b,  x >= 0.
/// Pricing is Dantzig's rule; after a run of degenerate pivots it switches to
/// Bland's rule, which cannot cycle.
Result minimize(const Vec& c, const Mat& a, const Vec& b);

/// max u.y over {y : A y <= b} (rows of A are constraint normals).
/// Solved through the dual  min b.l  s.t.  A^T l = u, l >= 0.
/// Throws UnboundednessError when the maximum is +infinity.
double maximize_linear(const Mat& a, const Vec& b, const Vec& u);

struct ChebyshevBall {
  Vec center;
  double radius = 0.0;
  bool feasible = false;
};

/// Largest inscribed ball of {y : A y <= b}; `feasible` is false for an empty set.
ChebyshevBall chebyshev_center(const Mat& a, const Vec& b);

/// Feasibility of  V l = x, 1.l = 1, l >= 0  (x in conv of the columns of V).
bool in_convex_hull(const Mat& vertices, const Vec& x, double tol = 1e-9);

}  // namespace quermass::lp
