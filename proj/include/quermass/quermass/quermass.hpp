#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quermass/bodies/convex_body.hpp"
#include "quermass/core/estimate.hpp"
#include "quermass/core/parallel.hpp"

namespace quermass {

enum class QuermassMethod { exact, kubota_mc, steiner_fit, meanwidth };

std::string to_string(QuermassMethod m);

/// W_0..W_n of one body, each with its method and standard error.
struct QuermassVector {
  int n = 0;
  std::vector<double> values;
  std::vector<double> errors;
  std::vector<QuermassMethod> methods;

  Estimate at(int j) const;
};

/// Closed forms: balls, boxes, planar bodies, and the volume/surface terms of
/// polytopes and ellipsoids (plus W_2 of 3-dimensional polytopes from edge
/// lengths and dihedral angles). Returns nullopt where none is implemented.
std::optional<double> quermass_exact(const ConvexBody& k, int j);

/// Kubota average of |P_F K| over Haar F in G_{n,n-j}, times omega_n/omega_{n-j}.
Estimate quermass_kubota(const ConvexBody& k, int j, const Budget& budget, const SeededRng& rng);

/// Mean of h_K over the sphere, w(K); W_{n-1} = omega_n w.
/// Uses antithetic pairs (u, -u).
Estimate mean_width(const ConvexBody& k, const Budget& budget, const SeededRng& rng);
/// Same estimator for any support function on R^n (lower-dimensional sets included).
Estimate mean_width(const std::function<double(const Vec&)>& support_fn, int n, const Budget& budget,
                    const SeededRng& rng);

/// Exact when available, otherwise mean width (j = n-1) or Kubota.
Estimate quermass_auto(const ConvexBody& k, int j, const Budget& budget, const SeededRng& rng);

/// Exact where available, else the chosen Monte Carlo method for each entry.
QuermassVector quermass_vector(const ConvexBody& k, const Budget& budget, const SeededRng& rng);

/// Single-sample unbiased W_j for nested estimators: exact when possible,
/// otherwise a Kubota average over `inner_samples` Haar flats drawn from `rng`.
double quermass_inner(const ConvexBody& k, int j, int inner_samples, Rng& rng);

/// Factor converting W^{(n-k)}_j of a subset of an (n-k)-flat to W^{(n)}_{k+j}.
double dim_convert_factor(int n, int k, int j);
double dim_convert(double value, int n, int k, int j);
double dim_convert_inverse(double value, int n, int k, int j);

struct SubdimResult {
  bool degenerate = false;
  int rank = 0;
  double value = 0.0;
};

/// W^{(m)}_j of conv({0} and the columns of `points`) inside its own span,
/// m = number of columns. Degenerate tuples report `degenerate` and value 0.
SubdimResult quermass_subdim(const Mat& points, int j, int sub_samples, Rng& rng, bool include_origin = true);

/// Steiner polynomial fit of |K + lambda B| for coefficient W_j.
struct SteinerFit {
  std::vector<double> coefficients;  ///< W_0..W_n
  std::vector<double> errors;
  double condition = 0.0;
};

SteinerFit steiner_fit(const ConvexBody& k, const std::vector<double>& lambdas, std::uint64_t samples,
                       const SeededRng& rng);
Estimate quermass_steiner_fit(const ConvexBody& k, int j, const std::vector<double>& lambdas,
                              std::uint64_t samples, const SeededRng& rng);
/// n + 2 equally spaced values in (0, 2 R].
std::vector<double> default_steiner_lambdas(const ConvexBody& k);

}  // namespace quermass
