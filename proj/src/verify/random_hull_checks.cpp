#include <cmath>

#include "common.hpp"
#include "quermass/core/constants.hpp"
#include "quermass/polytope/planar.hpp"
#include "quermass/verify/constants.hpp"

namespace quermass {

using namespace detail;

ConvexBody random_vpolytope(int n, int m, bool symmetric, Rng& rng) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    const Mat g = gaussian_matrix(n, m, rng);
    Mat pts = g;
    if (symmetric) {
      pts.resize(n, 2 * m);
      pts << g, -g;
    }
    try {
      ConvexBody body = ConvexBody::vpolytope(pts);
      body.flags.symmetric = symmetric;
      body.flags.centered = symmetric;
      return body;
    } catch (const DegenerateInputError&) {
    }
  }
  throw DegenerateInputError("could not draw a full-dimensional random polytope");
}

namespace {

void require_dpp_args(int n, int d, int q) {
  if (d < 1 || d > n) throw DomainError("d must satisfy 1 ≤ d ≤ n");
  if (q < d) throw DomainError("q must satisfy q ≥ d");
}

/// Shared part of the random-simplex double bound: middle and W_{k+j}(K).
CheckReport simplex_bound(std::string id, const ConvexBody& k, const CheckParams& p, VerifyContext& ctx,
                          bool centered) {
  const int n = k.dim();
  require_kj(n, p.k, p.j);
  require_flag(centered ? k.flags.centered : k.flags.symmetric, centered ? "centered" : "symmetric");
  CheckReport r = new_report(std::move(id), k, p);
  const int m = n - p.k;
  const int inner = or_default(p.inner, ctx.budgets().inner);
  const std::uint64_t tuples = or_default(p.samples, ctx.budgets().tuples);
  r.middle = mc_estimate(check_rng(r, "tuples"), tuples, [&](Rng& rng) {
    const SampleSet pts = sample_uniform(k, m, rng);
    return quermass_subdim(pts.points, p.j, inner, rng, true).value;
  });
  const Estimate dpp = ctx.dpp(n - p.k - p.j, n - p.k, true);
  const Estimate c = centered ? simplex_c_centered(n, p.k, p.j, dpp) : simplex_c(n, p.k, p.j, dpp);
  const double delta = simplex_delta(n, p.k, p.j);
  const Estimate w = ctx.reference_quermass(k, p.k + p.j);
  r.lower = product(c, w);
  r.upper = scaled(w, delta);
  r.constants.push_back({centered ? "c'" : "c", c});
  r.constants.push_back({"delta", Estimate::exact(delta)});
  r.constants.push_back({"dpp(n-k-j, n-k, origin)", dpp});
  r.constants.push_back({"W_{k+j}(K)", w});
  finalize(r);
  return r;
}

/// W_{k+j}(K) <= c^{-1} max_F W_j(K ∩ F), plus the power form with the
/// Aleksandrov step as a sub-check when `power_form` is set.
CheckReport max_section_bound(std::string id, const ConvexBody& k, const CheckParams& p, VerifyContext& ctx,
                              bool centered, bool power_form) {
  const int n = k.dim();
  require_kj(n, p.k, p.j);
  require_flag(centered ? k.flags.centered : k.flags.symmetric, centered ? "centered" : "symmetric");
  CheckReport r = new_report(std::move(id), k, p);
  const int trials = or_default(p.trials, ctx.budgets().trials);
  const int inner = or_default(p.inner, ctx.budgets().inner);
  const MaxOverFlats best = max_section_quermass(k, n - p.k, p.j, trials, inner, check_rng(r, "max"));
  const Section s = central_section(k, best.best_subspace);
  const Estimate mx = s.ok() ? body_quermass(*s.body, p.j, ctx.budgets().reference, check_rng(r, "argmax"))
                             : Estimate::exact(0.0);
  const Estimate dpp = ctx.dpp(n - p.k - p.j, n - p.k, true);
  const Estimate c = centered ? simplex_c_centered(n, p.k, p.j, dpp) : simplex_c(n, p.k, p.j, dpp);
  const Estimate wkj = ctx.reference_quermass(k, p.k + p.j);
  const std::string note = "right side uses a maximum over " + std::to_string(trials) +
                           " sampled flats (a lower bound on the true maximum): passes are valid, failures are "
                           "inconclusive";
  r.constants.push_back({centered ? "c'" : "c", c});
  r.constants.push_back({"dpp(n-k-j, n-k, origin)", dpp});
  r.constants.push_back({"max W_j(K ∩ F)", mx});
  r.fail_is_inconclusive = true;
  r.note = note;
  if (!power_form) {
    r.middle = wkj;
    r.upper = quotient(mx, c);
    r.constants.push_back({"W_{k+j}(K)", wkj});
    finalize(r);
    return r;
  }
  const Estimate wj = ctx.reference_quermass(k, p.j);
  const double on = std::pow(omega(n), p.k);
  r.middle = power(wj, n - p.k - p.j);
  r.upper = quotient(power(mx, n - p.j), scaled(power(c, n - p.j), on));
  r.constants.push_back({"W_j(K)", wj});
  CheckReport step = new_report(r.check_id + "-aleksandrov", k, p);
  step.middle = scaled(power(wj, n - p.k - p.j), on);
  step.upper = power(wkj, n - p.j);
  step.constants = {{"W_j(K)", wj}, {"W_{k+j}(K)", wkj}};
  step.note = "omega_n^k W_j^(n-k-j) <= W_{k+j}^(n-j)";
  finalize(step);
  r.sub_checks.push_back(std::move(step));
  finalize(r);
  return r;
}

CheckReport hull_bound(std::string id, const ConvexBody& k, const CheckParams& p, VerifyContext& ctx,
                       bool centered) {
  const int n = k.dim();
  if (p.j < 0 || p.j > n - 1) throw DomainError("j must satisfy 0 ≤ j ≤ n−1");
  if (p.N < n + 1) throw DomainError("N must satisfy N ≥ n+1");
  require_flag(centered ? k.flags.centered : k.flags.symmetric, centered ? "centered" : "symmetric");
  CheckReport r = new_report(std::move(id), k, p);
  r.k = -1;
  const int inner = or_default(p.inner, ctx.budgets().inner);
  const std::uint64_t tuples = or_default(p.samples, ctx.budgets().tuples);
  r.middle = mc_estimate(check_rng(r, "tuples"), tuples, [&](Rng& rng) {
    const SampleSet pts = sample_uniform(k, p.N, rng);
    if (n == 2) {
      const PlanarIntrinsics pi = planar_intrinsics(pts.points);
      return p.j == 0 ? pi.area : pi.w1();
    }
    try {
      return quermass_inner(ConvexBody::vpolytope(pts.points), p.j, inner, rng);
    } catch (const DegenerateInputError&) {
      return 0.0;
    }
  });
  const Estimate dpp = ctx.dpp(n - p.j, p.N, false);
  const Estimate c = centered ? hull_c_centered(n, p.N, p.j, dpp) : hull_c(n, p.N, p.j, dpp);
  const Estimate w = ctx.reference_quermass(k, p.j);
  r.lower = product(c, w);
  r.constants.push_back({centered ? "c'_{n,N,j}" : "c_{n,N,j}", c});
  r.constants.push_back({"dpp(n-j, N)", dpp});
  r.constants.push_back({"W_j(K)", w});
  finalize(r);
  return r;
}

}  // namespace

CheckReport dpp_spot_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  const int n = k.dim();
  const int d = p.d;
  const int q = p.q > 0 ? p.q : d;
  require_dpp_args(n, d, q);
  CheckReport r = new_report("dpp-spot", k, p);
  r.N = q;
  const bool full = d == n;
  const Subspace f = full ? Subspace::from_orthonormal(Mat::Identity(n, n))
                          : [&] {
                              if (p.subspace) {
                                if (p.subspace->n() != n || p.subspace->k() != d) {
                                  throw DomainError("subspace has the wrong dimension");
                                }
                                return *p.subspace;
                              }
                              Rng rng = check_rng(r, "subspace").at(0);
                              return haar_subspace(n, d, rng);
                            }();
  const std::uint64_t samples = or_default(p.samples, ctx.budgets().tuples);
  r.middle = mc_estimate(check_rng(r, "tuples"), samples, [&](Rng& rng) {
    const SampleSet pts = sample_uniform(k, q, rng);
    const Mat y = full ? pts.points : Mat(f.basis().transpose() * pts.points);
    return conv_volume(y, true);
  });

  double sup = 1.0;
  Vec argmax = Vec::Zero(n);
  if (!full) {
    const Subspace fperp = f.complement();
    const std::vector<Vec> xs = offsets_in_projection(k, f, ctx.budgets().offsets, check_rng(r, "offsets"));
    sup = 0.0;
    for (const Vec& x : xs) {
      const double v = section_volume(affine_section(k, fperp, x));
      if (v > sup) {
        sup = v;
        argmax = x;
      }
    }
    r.fail_is_inconclusive = true;
    r.note = "sup f is a maximum over sampled translates (a lower bound), so the right side is an upper bound: "
             "passes are valid, failures are inconclusive; best x = " +
             format_vec(argmax);
  } else {
    r.note = "full-dimensional marginal: sup f = 1";
  }
  const double vol = volume(k);
  const int m = std::min(q, d);
  const double ratio = std::pow(vol / (omega(d) * sup), static_cast<double>(m) / d);
  const Estimate dpp = ctx.dpp(d, q, true);
  r.lower = scaled(dpp, ratio);
  r.constants = {{"dpp(d, q, origin)", dpp},
                 {"|f|_1", Estimate::exact(vol)},
                 {"|f|_inf", Estimate::exact(sup)},
                 {"(|f|_1/(omega_d |f|_inf))^(m/d)", Estimate::exact(ratio)}};
  finalize(r);
  return r;
}

CheckReport thm43_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  return simplex_bound("thm-4-3", k, p, ctx, false);
}

CheckReport cor47_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  return simplex_bound("cor-4-7", k, p, ctx, true);
}

CheckReport thm45_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  return max_section_bound("thm-4-5", k, p, ctx, false, false);
}

CheckReport cor48_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  CheckReport r = max_section_bound("cor-4-8", k, p, ctx, true, false);
  CheckReport power_form = max_section_bound("cor-4-8-power", k, p, ctx, true, true);
  r.sub_checks.push_back(std::move(power_form));
  finalize(r);
  return r;
}

CheckReport thm13_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  return max_section_bound("thm-1-3", k, p, ctx, false, true);
}

CheckReport thm46_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  return hull_bound("thm-4-6", k, p, ctx, false);
}

CheckReport thm14_centered_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  return hull_bound("thm-1-4-centered", k, p, ctx, true);
}

CheckReport bp_identity_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  const int n = k.dim();
  const int s = p.s;
  if (s < 1 || s > n - 1) throw DomainError("s must satisfy 1 ≤ s ≤ n−1");
  CheckReport r = new_report("bp-identity", k, p);
  r.k = -1;
  r.j = -1;
  r.N = s;
  const Estimate moment = ctx.bp_moment(n, s);
  const Estimate pc = bp_constant(n, s, moment);
  Estimate inner;
  const auto* ball = std::get_if<Ball>(&k.rep());
  if (ball && ball->radius == 1.0 && ball->center.isZero()) {
    // Every central section is B^s, so the integral is the calibration moment.
    inner = scaled(moment, std::pow(omega(s), s));
    r.note = "calibration body: the identity holds by construction";
  } else {
    const std::uint64_t samples = or_default(p.samples, ctx.budgets().tuples);
    inner = mc_estimate(check_rng(r, "tuples"), samples, [&](Rng& rng) {
      const Subspace g = haar_subspace(n, s, rng);
      const Section sec = central_section(k, g);
      if (!sec.ok()) return 0.0;
      const double v = volume(*sec.body);
      const SampleSet pts = sample_uniform(*sec.body, s, rng);
      return std::pow(v, s) * std::pow(conv_volume(pts.points, true), n - s);
    });
  }
  r.middle = product(pc, inner);
  const Estimate target = Estimate::exact(std::pow(volume(k), s));
  r.lower = target;
  r.upper = target;
  r.constants = {{"p(n,s)", pc}, {"calibration moment", moment}};
  finalize(r);
  return r;
}

}  // namespace quermass
