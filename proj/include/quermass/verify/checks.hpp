#pragma once

#include <cstdint>
#include <optional>

#include "quermass/bodies/convex_body.hpp"
#include "quermass/core/rng.hpp"
#include "quermass/grassmann/subspace.hpp"
#include "quermass/verify/context.hpp"
#include "quermass/verify/report.hpp"

namespace quermass {

/// Parameters of a check. Unused fields stay at -1 / 0; zero budgets fall
/// back to the context defaults.
struct CheckParams {
  int k = -1;
  int j = -1;
  int N = -1;
  int s = -1;  ///< bp-identity subspace dimension
  int d = -1;  ///< dpp-spot marginal dimension
  int q = -1;  ///< dpp-spot point count
  std::uint64_t samples = 0;
  int trials = 0;
  int inner = 0;
  std::uint64_t seed = 0;
  /// Fixed subspace for the single-subspace checks (lemma-rs, spingarn,
  /// rs-lower, fradelizi, stephen-yaskin, dpp-spot); Haar-random otherwise.
  std::optional<Subspace> subspace;
};

/// Largest W_j(K ∩ F) over Haar-sampled F in G_{n,flat_dim}. A lower bound on
/// the true maximum.
struct MaxOverFlats {
  double best_value = 0.0;
  Subspace best_subspace;
  std::uint64_t trials = 0;
};

MaxOverFlats max_section_quermass(const ConvexBody& k, int flat_dim, int j, int trials, int inner,
                                  const SeededRng& rng);

/// W_j of a body (section) as an Estimate: exact when possible, else Monte
/// Carlo with `samples` Kubota flats.
Estimate body_quermass(const ConvexBody& k, int j, std::uint64_t samples, const SeededRng& rng);

// Section and projection inequalities.
CheckReport crofton_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
CheckReport lemma_rs_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
CheckReport thm11_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
CheckReport cor12_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
CheckReport thm12_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
CheckReport thm34_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
CheckReport spingarn_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
CheckReport rs_lower_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
CheckReport fradelizi_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
CheckReport stephen_yaskin_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);

// Random simplices, random hulls and the point-to-subspace change of variables.
CheckReport dpp_spot_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
CheckReport thm43_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
CheckReport cor47_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
CheckReport bp_identity_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
CheckReport thm45_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
CheckReport cor48_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
CheckReport thm13_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
CheckReport thm46_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
CheckReport thm14_centered_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);

// Background inequalities.
CheckReport aleksandrov_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);
/// Brunn-Minkowski for W_j against a random V-polytope drawn from the seed;
/// all j in [0, n-1] when p.j is unset.
CheckReport bm_quermass_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);

/// Random polytope conv{±g_1..±g_m} (symmetric) or conv{g_1..g_m} with
/// Gaussian g_i.
ConvexBody random_vpolytope(int n, int m, bool symmetric, Rng& rng);

}  // namespace quermass
