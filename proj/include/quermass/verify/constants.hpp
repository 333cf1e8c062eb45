#pragma once

#include "quermass/core/estimate.hpp"
#include "quermass/core/linalg.hpp"
#include "quermass/core/parallel.hpp"

namespace quermass {

// Closed-form constants. Index ranges follow 0 <= j <= n-k-1, 1 <= k <= n-1.

/// Crofton constant omega_{n-k} omega_{n-j} / (omega_{n-k-j} omega_n).
double crofton_alpha(int n, int k, int j);
/// omega_{n-k} omega_{n-j} / (omega_{n-k-j} omega_k).
double section_gamma(int n, int k, int j);
/// ((n+1)/(n-k-j+1))^{n-k-j}: the section-shift factor for W_j of centered bodies.
double shift_factor(int n, int k, int j);
/// Lower constant of the section-ratio inequality for centered bodies.
double ratio_beta(int n, int k, int j);
/// Upper constant of the section-ratio inequality for centered bodies.
double ratio_gamma(int n, int k, int j);
/// Upper constant of the random-simplex inequality.
double simplex_delta(int n, int k, int j);

/// Volume in R^d of conv of the columns of `x` (d x q), with the origin
/// added when `include_origin` is set. Lower-dimensional hulls give 0.
double conv_volume(const Mat& x, bool include_origin);

/// Expected volume of conv({0} and q points) (or of q points alone) with the
/// points uniform in B^d, volumes taken in R^d.
Estimate dpp_constant(int d, int q, bool include_origin, const Budget& budget, const SeededRng& rng);

/// Lower constant of the random-simplex inequality, from the dpp constant
/// with d = n-k-j, q = n-k and the origin included.
Estimate simplex_c(int n, int k, int j, const Estimate& dpp);
/// Centered version: c * ((n+1)/(k+j+1))^{-(k+j)}.
Estimate simplex_c_centered(int n, int k, int j, const Estimate& dpp);

/// Lower constant for random hulls of N points, from dpp(n-j, N, no origin).
Estimate hull_c(int n, int N, int j, const Estimate& dpp);
Estimate hull_c_centered(int n, int N, int j, const Estimate& dpp);

/// E |conv{0, X_1..X_s}|^{n-s} for X_i uniform in B^s, and the resulting
/// normalization p(n, s) = omega_n^s / (omega_s^s E[...]).
Estimate bp_moment(int n, int s, const Budget& budget, const SeededRng& rng);
Estimate bp_constant(int n, int s, const Estimate& moment);

}  // namespace quermass
