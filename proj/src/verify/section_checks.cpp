#include <cmath>

#include "common.hpp"
#include "quermass/core/constants.hpp"
#include "quermass/verify/constants.hpp"

namespace quermass {

using namespace detail;

Estimate body_quermass(const ConvexBody& k, int j, std::uint64_t samples, const SeededRng& rng) {
  if (auto exact = quermass_exact(k, j)) return Estimate::exact(*exact);
  return quermass_auto(k, j, Budget::fixed(samples), rng);
}

MaxOverFlats max_section_quermass(const ConvexBody& k, int flat_dim, int j, int trials, int inner,
                                  const SeededRng& rng) {
  MaxOverFlats best;
  for (int t = 0; t < trials; ++t) {
    Rng r = rng.at(static_cast<std::uint64_t>(t));
    Subspace f = haar_subspace(k.dim(), flat_dim, r);
    const double v = section_quermass(central_section(k, f), j, inner, r);
    if (t == 0 || v > best.best_value) {
      best.best_value = v;
      best.best_subspace = std::move(f);
    }
  }
  best.trials = static_cast<std::uint64_t>(trials);
  return best;
}

namespace {

Subspace chosen_subspace(const CheckParams& p, int n, int dim, const SeededRng& rng, std::uint64_t index) {
  if (p.subspace) {
    if (p.subspace->n() != n || p.subspace->k() != dim) throw DomainError("subspace has the wrong dimension");
    return *p.subspace;
  }
  Rng r = rng.at(index);
  return haar_subspace(n, dim, r);
}

/// The sampled maximum over a section family re-estimated at its argmax with
/// an independent stream, so that selection does not bias the value upwards.
Estimate reestimate_max(const ConvexBody& k, const MaxOverFlats& m, int j, VerifyContext& ctx,
                        const SeededRng& rng) {
  const Section s = central_section(k, m.best_subspace);
  if (!s.ok()) return Estimate::exact(0.0);
  return body_quermass(*s.body, j, ctx.budgets().reference, rng);
}

std::string fixed_or_haar(const CheckParams& p) { return p.subspace ? "given subspace" : "Haar subspace"; }

CheckReport section_ratio(std::string id, const ConvexBody& k, const CheckParams& p, VerifyContext& ctx,
                          double lower_const, double upper_const) {
  CheckReport r = new_report(std::move(id), k, p);
  const int n = k.dim();
  const int m = n - p.k;
  const double vol = volume(k);
  const double guard = 1e-12 * std::pow(vol, static_cast<double>(m) / n);
  const int inner = or_default(p.inner, ctx.budgets().inner);
  const std::uint64_t flats = or_default(p.samples, ctx.budgets().flats);
  r.middle = mc_estimate(check_rng(r, "flats"), flats, [&](Rng& rng) {
    for (int attempt = 0; attempt < 16; ++attempt) {
      const Subspace g = haar_subspace(n, p.k, rng);
      const Section s = central_section(k, g.complement());
      const double a = section_volume(s);
      if (a > guard) return section_quermass(s, p.j, inner, rng) / a;
    }
    throw DegenerateInputError("central sections keep falling below the volume guard");
  });
  const Estimate wj = ctx.reference_quermass(k, p.j);
  const Estimate ratio = scaled(wj, 1.0 / vol);
  r.lower = scaled(ratio, lower_const);
  r.upper = scaled(ratio, upper_const);
  r.constants.push_back({"W_j(K)", wj});
  r.constants.push_back({"|K|", Estimate::exact(vol)});
  return r;
}

}  // namespace

CheckReport crofton_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  const int n = k.dim();
  require_kj(n, p.k, p.j);
  CheckReport r = new_report("crofton", k, p);
  const int inner = or_default(p.inner, ctx.budgets().inner);
  const std::uint64_t flats = or_default(p.samples, ctx.budgets().flats);
  r.middle = mc_estimate(check_rng(r, "flats"), flats, [&](Rng& rng) {
    const AffineFlat f = sample_affine_flat(k, n - p.k, rng);
    return f.weight * section_quermass(affine_section(k, f.flat, f.offset), p.j, inner, rng);
  });
  const double alpha = crofton_alpha(n, p.k, p.j);
  const Estimate wj = ctx.reference_quermass(k, p.j);
  const Estimate rhs = scaled(wj, alpha);
  r.lower = rhs;
  r.upper = rhs;
  r.constants.push_back({"alpha", Estimate::exact(alpha)});
  r.constants.push_back({"W_j(K)", wj});
  r.note = "identity: flat integral of W_j(K ∩ E) against alpha W_j(K)";
  finalize(r);
  return r;
}

CheckReport lemma_rs_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  const int n = k.dim();
  require_kj(n, p.k, p.j);
  require_flag(k.flags.centered, "centered");
  CheckReport r = new_report("lemma-rs", k, p);
  const Subspace f = chosen_subspace(p, n, p.k, check_rng(r, "subspace"), 0);
  const Subspace fperp = f.complement();
  const double proj = projection_volume(k, f.basis());
  const int inner = or_default(p.inner, ctx.budgets().inner);
  const std::uint64_t samples = or_default(p.samples, ctx.budgets().flats);

  const ConvexBody projected = project(k, f);
  const UniformSampler sampler(projected);
  const Estimate mean = mc_estimate(check_rng(r, "offsets"), samples, [&](Rng& rng) {
    const Vec x = f.basis() * sampler.sample(rng);
    return section_quermass(affine_section(k, fperp, x), p.j, inner, rng);
  });
  r.middle = scaled(mean, proj);

  const Section central = central_section(k, fperp);
  const Estimate wc = central.ok() ? body_quermass(*central.body, p.j, ctx.budgets().reference, check_rng(r, "central"))
                                   : Estimate::exact(0.0);
  const Estimate base = scaled(wc, proj);
  const double lo = 1.0 / binom(n - p.j, p.k);
  const double hi = shift_factor(n, p.k, p.j);
  r.lower = scaled(base, lo);
  r.upper = scaled(base, hi);
  r.constants.push_back({"binom(n-j,k)^-1", Estimate::exact(lo)});
  r.constants.push_back({"((n+1)/(n-k-j+1))^(n-k-j)", Estimate::exact(hi)});
  r.constants.push_back({"|P_F K|", Estimate::exact(proj)});
  r.constants.push_back({"W_j(K ∩ F⊥)", wc});
  r.note = fixed_or_haar(p);

  if (k.flags.symmetric) {
    CheckReport sym = new_report("lemma-rs-symmetric", k, p);
    sym.middle = r.middle;
    sym.upper = base;
    sym.note = "symmetric bodies: integral at most |P_F K| W_j(K ∩ F⊥)";
    finalize(sym);
    r.sub_checks.push_back(std::move(sym));
  }
  finalize(r);
  return r;
}

CheckReport thm11_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  const int n = k.dim();
  require_kj(n, p.k, p.j);
  require_flag(k.flags.centered, "centered");
  CheckReport r = new_report("thm-1-1", k, p);
  const int inner = or_default(p.inner, ctx.budgets().inner);
  const std::uint64_t flats = or_default(p.samples, ctx.budgets().flats);
  r.middle = mc_estimate(check_rng(r, "flats"), flats, [&](Rng& rng) {
    const Subspace g = haar_subspace(n, p.k, rng);
    const double proj = projection_volume(k, g.basis());
    return proj * section_quermass(central_section(k, g.complement()), p.j, inner, rng);
  });
  const double alpha = crofton_alpha(n, p.k, p.j);
  const double shift = shift_factor(n, p.k, p.j);
  const Estimate wj = ctx.reference_quermass(k, p.j);
  r.lower = scaled(wj, alpha / shift);
  r.upper = scaled(wj, alpha * binom(n - p.j, p.k));
  r.constants.push_back({"alpha", Estimate::exact(alpha)});
  r.constants.push_back({"W_j(K)", wj});
  finalize(r);
  return r;
}

CheckReport cor12_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  const int n = k.dim();
  require_kj(n, p.k, p.j);
  require_flag(k.flags.centered, "centered");
  CheckReport r = new_report("cor-1-2", k, p);
  const int trials = or_default(p.trials, ctx.budgets().trials);
  const int inner = or_default(p.inner, ctx.budgets().inner);
  const MaxOverFlats best = max_section_quermass(k, n - p.k, p.j, trials, inner, check_rng(r, "max"));
  const Estimate mx = reestimate_max(k, best, p.j, ctx, check_rng(r, "argmax"));
  const double gamma = section_gamma(n, p.k, p.j);
  const double shift = shift_factor(n, p.k, p.j);
  const Estimate wj = ctx.reference_quermass(k, p.j);
  const Estimate wnk = ctx.reference_quermass(k, n - p.k);
  r.middle = scaled(wj, gamma / shift);
  r.upper = product(wnk, mx);
  r.fail_is_inconclusive = true;
  r.constants.push_back({"gamma", Estimate::exact(gamma)});
  r.constants.push_back({"W_j(K)", wj});
  r.constants.push_back({"W_{n-k}(K)", wnk});
  r.constants.push_back({"max W_j(K ∩ F)", mx});
  r.note = "right side uses a maximum over " + std::to_string(trials) +
           " sampled flats (a lower bound on the true maximum): passes are valid, failures are inconclusive";
  finalize(r);
  return r;
}

CheckReport thm12_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  const int n = k.dim();
  require_kj(n, p.k, p.j);
  require_flag(k.flags.symmetric, "symmetric");
  const double alpha = crofton_alpha(n, p.k, p.j);
  CheckReport r = section_ratio("thm-1-2", k, p, ctx, alpha / binom(n, p.k), alpha * binom(n - p.j, p.k));
  r.constants.insert(r.constants.begin(), {"alpha", Estimate::exact(alpha)});
  finalize(r);
  return r;
}

CheckReport thm34_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  const int n = k.dim();
  require_kj(n, p.k, p.j);
  require_flag(k.flags.centered, "centered");
  const double beta = ratio_beta(n, p.k, p.j);
  const double gamma = ratio_gamma(n, p.k, p.j);
  CheckReport r = section_ratio("thm-3-4", k, p, ctx, beta, gamma);
  r.constants.insert(r.constants.begin(), {"gamma", Estimate::exact(gamma)});
  r.constants.insert(r.constants.begin(), {"beta", Estimate::exact(beta)});
  finalize(r);
  return r;
}

namespace {

/// Worst case over subspaces of an exact product inequality.
template <class Eval>
CheckReport worst_over_subspaces(CheckReport r, const ConvexBody& k, const CheckParams& p, int trials, Eval&& eval) {
  const SeededRng rng = check_rng(r, "subspace");
  const int count = p.subspace ? 1 : trials;
  std::optional<CheckReport> worst;
  double worst_m = 0.0;
  for (int t = 0; t < count; ++t) {
    const Subspace f = chosen_subspace(p, k.dim(), p.k, rng, static_cast<std::uint64_t>(t));
    CheckReport c = r;
    eval(f, c);
    finalize(c);
    const double m = worst_margin(c).value_or(0.0);
    if (!worst || m < worst_m) {
      worst = std::move(c);
      worst_m = m;
    }
  }
  return *worst;
}

}  // namespace

CheckReport spingarn_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  const int n = k.dim();
  if (p.k < 1 || p.k > n - 1) throw DomainError("k must satisfy 1 ≤ k ≤ n−1");
  CheckReport r = new_report("spingarn", k, p);
  const double vol = volume(k);
  const double c = binom(n, p.k);
  const int trials = or_default(p.trials, std::min(ctx.budgets().trials, 50));
  return worst_over_subspaces(r, k, p, trials, [&](const Subspace& f, CheckReport& c_) {
    const double proj = projection_volume(k, f.basis());
    const double sec = section_volume(central_section(k, f.complement()));
    c_.middle = Estimate::exact(proj * sec);
    c_.upper = Estimate::exact(c * vol);
    c_.constants = {{"binom(n,k)", Estimate::exact(c)}, {"|P_F K|", Estimate::exact(proj)},
                    {"|K ∩ F⊥|", Estimate::exact(sec)}, {"|K|", Estimate::exact(vol)}};
    c_.note = p.subspace ? "given subspace" : "worst of " + std::to_string(trials) + " Haar subspaces";
  });
}

CheckReport rs_lower_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  const int n = k.dim();
  if (p.k < 1 || p.k > n - 1) throw DomainError("k must satisfy 1 ≤ k ≤ n−1");
  require_flag(k.flags.symmetric, "symmetric");
  CheckReport r = new_report("rs-lower", k, p);
  const double vol = volume(k);
  const int trials = or_default(p.trials, std::min(ctx.budgets().trials, 50));
  return worst_over_subspaces(r, k, p, trials, [&](const Subspace& f, CheckReport& c_) {
    const double proj = projection_volume(k, f.basis());
    const double sec = section_volume(central_section(k, f.complement()));
    c_.lower = Estimate::exact(vol);
    c_.middle = Estimate::exact(proj * sec);
    c_.constants = {{"|P_F K|", Estimate::exact(proj)}, {"|K ∩ F⊥|", Estimate::exact(sec)},
                    {"|K|", Estimate::exact(vol)}};
    c_.note = p.subspace ? "given subspace" : "worst of " + std::to_string(trials) + " Haar subspaces";
  });
}

namespace {

struct OffsetMax {
  double value = 0.0;
  Vec argmax;
};

template <class Value>
OffsetMax max_over_offsets(const ConvexBody& k, const Subspace& f, int count, const SeededRng& rng, Value&& value) {
  OffsetMax best;
  const std::vector<Vec> xs = offsets_in_projection(k, f, count, rng);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double v = value(xs[i], i);
    if (i == 0 || v > best.value) {
      best.value = v;
      best.argmax = xs[i];
    }
  }
  return best;
}

const char* kLhsSampledNote =
    "left side is a maximum over sampled translates (a lower bound on the true maximum): a pass may miss "
    "violations; best x = ";

}  // namespace

CheckReport fradelizi_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  const int n = k.dim();
  if (p.k < 1 || p.k > n - 1) throw DomainError("k must satisfy 1 ≤ k ≤ n−1");
  require_flag(k.flags.centered, "centered");
  CheckReport r = new_report("fradelizi", k, p);
  r.sampled = true;
  const int offsets = ctx.budgets().offsets;
  const int trials = or_default(p.trials, 4);
  const double factor = std::pow((n + 1.0) / (n - p.k + 1.0), n - p.k);
  const SeededRng xs = check_rng(r, "offsets");
  int t = 0;
  return worst_over_subspaces(r, k, p, trials, [&](const Subspace& f, CheckReport& c) {
    const Subspace fperp = f.complement();
    const OffsetMax best = max_over_offsets(k, f, offsets, xs.child(static_cast<std::uint64_t>(t++)),
                                            [&](const Vec& x, std::size_t) {
                                              return section_volume(affine_section(k, fperp, x));
                                            });
    const double central = section_volume(central_section(k, fperp));
    c.middle = Estimate::exact(best.value);
    c.upper = Estimate::exact(factor * central);
    c.constants = {{"((n+1)/(n-k+1))^(n-k)", Estimate::exact(factor)}, {"|K ∩ F⊥|", Estimate::exact(central)}};
    c.note = kLhsSampledNote + format_vec(best.argmax);
  });
}

CheckReport stephen_yaskin_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  const int n = k.dim();
  require_kj(n, p.k, p.j);
  require_flag(k.flags.centered, "centered");
  CheckReport r = new_report("stephen-yaskin", k, p);
  r.sampled = true;
  const int offsets = ctx.budgets().offsets;
  const int inner = or_default(p.inner, ctx.budgets().inner);
  const int trials = or_default(p.trials, 4);
  const double factor = shift_factor(n, p.k, p.j);
  const SeededRng xs = check_rng(r, "offsets");
  const SeededRng inner_rng = check_rng(r, "inner");
  const SeededRng ref_rng = check_rng(r, "reference");
  int t = 0;
  return worst_over_subspaces(r, k, p, trials, [&](const Subspace& f, CheckReport& c) {
    const Subspace fperp = f.complement();
    const std::uint64_t tag = static_cast<std::uint64_t>(t++);
    const SeededRng draw = inner_rng.child(tag);
    const OffsetMax best = max_over_offsets(k, f, offsets, xs.child(tag), [&](const Vec& x, std::size_t i) {
      Rng rng = draw.at(i);
      return section_quermass(affine_section(k, fperp, x), p.j, inner, rng);
    });
    const Section at_best = affine_section(k, fperp, best.argmax);
    const std::uint64_t ref = ctx.budgets().reference;
    c.middle = at_best.ok() ? body_quermass(*at_best.body, p.j, ref, ref_rng.child(2 * tag)) : Estimate::exact(0.0);
    const Section central = central_section(k, fperp);
    const Estimate wc =
        central.ok() ? body_quermass(*central.body, p.j, ref, ref_rng.child(2 * tag + 1)) : Estimate::exact(0.0);
    c.upper = scaled(wc, factor);
    c.constants = {{"((n+1)/(n-k-j+1))^(n-k-j)", Estimate::exact(factor)}, {"W_j(K ∩ F⊥)", wc}};
    c.note = kLhsSampledNote + format_vec(best.argmax);
  });
}

}  // namespace quermass
