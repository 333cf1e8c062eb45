#include "quermass/verify/registry.hpp"

#include <chrono>

#include "common.hpp"

namespace quermass {

const std::vector<CheckSpec>& check_registry() {
  using B = BodyRequirement;
  using P = ParamRule;
  static const std::vector<CheckSpec> registry = {
      {"crofton", "flat integral of section W_j equals alpha W_j(K)", B::none, P::k_and_j, crofton_check},
      {"lemma-rs", "translate integral of section W_j between projection bounds", B::centered, P::k_and_j,
       lemma_rs_check},
      {"thm-1-1", "projection-weighted section average of W_j", B::centered, P::k_and_j, thm11_check},
      {"cor-1-2", "W_j(K) against W_{n-k}(K) times the maximal section", B::centered, P::k_and_j, cor12_check},
      {"thm-1-2", "average of W_j(K ∩ F)/|K ∩ F|, symmetric bodies", B::symmetric, P::k_and_j, thm12_check},
      {"thm-3-4", "average of W_j(K ∩ F)/|K ∩ F|, centered bodies", B::centered, P::k_and_j, thm34_check},
      {"spingarn", "|P_F K| |K ∩ F⊥| <= binom(n,k) |K|", B::none, P::k_only, spingarn_check},
      {"rs-lower", "|K| <= |P_F K| |K ∩ F⊥|", B::symmetric, P::k_only, rs_lower_check},
      {"fradelizi", "maximal parallel section volume against the central one", B::centered, P::k_only,
       fradelizi_check},
      {"stephen-yaskin", "maximal parallel section W_j against the central one", B::centered, P::k_and_j,
       stephen_yaskin_check},
      {"dpp-spot", "random simplex functional of a marginal against the ball", B::none, P::d_and_q,
       dpp_spot_check},
      {"thm-4-3", "random simplex W_j between multiples of W_{k+j}(K)", B::symmetric, P::k_and_j, thm43_check},
      {"cor-4-7", "random simplex lower bound, centered bodies", B::centered, P::k_and_j, cor47_check},
      {"bp-identity", "calibrated point-to-subspace change of variables", B::none, P::s_only, bp_identity_check},
      {"thm-4-5", "W_{k+j}(K) against the maximal section W_j", B::symmetric, P::k_and_j, thm45_check},
      {"cor-4-8", "W_{k+j}(K) against the maximal section W_j, centered bodies", B::centered, P::k_and_j,
       cor48_check},
      {"thm-1-3", "W_j(K) against a power of the maximal section W_j", B::symmetric, P::k_and_j, thm13_check},
      {"thm-4-6", "random hull W_j lower bound", B::symmetric, P::j_and_N, thm46_check},
      {"thm-1-4-centered", "random hull W_j lower bound, centered bodies", B::centered, P::j_and_N,
       thm14_centered_check},
      {"aleksandrov", "monotone normalized quermassintegrals and the vrad/w sandwich", B::none, P::none,
       aleksandrov_check},
      {"bm-quermass", "Brunn-Minkowski for W_j against a random polytope", B::polytope, P::optional_j,
       bm_quermass_check},
  };
  return registry;
}

const CheckSpec* find_check(std::string_view id) {
  for (const CheckSpec& s : check_registry()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

std::vector<std::string> validate_check(const CheckSpec& spec, int n, const BodyFlags& flags, bool polytope_or_box,
                                        const CheckParams& p) {
  std::vector<std::string> out;
  auto fail = [&](const std::string& what, int value, const std::string& rule) {
    out.push_back(what + " = " + std::to_string(value) + " violates " + rule + " (n = " + std::to_string(n) +
                  (p.k >= 0 ? ", k = " + std::to_string(p.k) : std::string()) + ")");
  };
  if (n < 2 || n > kMaxHullDim) {
    out.push_back("dimension n = " + std::to_string(n) + " outside 2 ≤ n ≤ 6");
    return out;
  }
  switch (spec.body) {
    case BodyRequirement::symmetric:
      if (!flags.symmetric) out.push_back(spec.id + " needs a symmetric body");
      break;
    case BodyRequirement::centered:
      if (!flags.centered) out.push_back(spec.id + " needs a centered body");
      break;
    case BodyRequirement::polytope:
      if (!polytope_or_box) out.push_back(spec.id + " needs a polytope or box");
      break;
    case BodyRequirement::none:
      break;
  }
  const bool k_ok = p.k >= 1 && p.k <= n - 1;
  switch (spec.params) {
    case ParamRule::k_and_j:
      if (!k_ok) {
        fail("k", p.k, "1 ≤ k ≤ n−1");
      } else if (p.j < 0 || p.j > n - p.k - 1) {
        fail("j", p.j, "0 ≤ j ≤ n−k−1");
      }
      break;
    case ParamRule::k_only:
      if (!k_ok) fail("k", p.k, "1 ≤ k ≤ n−1");
      break;
    case ParamRule::j_and_N:
      if (p.j < 0 || p.j > n - 1) fail("j", p.j, "0 ≤ j ≤ n−1");
      if (p.N < n + 1) fail("N", p.N, "N ≥ n+1");
      break;
    case ParamRule::s_only:
      if (p.s < 1 || p.s > n - 1) fail("s", p.s, "1 ≤ s ≤ n−1");
      break;
    case ParamRule::d_and_q:
      if (p.d < 1 || p.d > n) fail("d", p.d, "1 ≤ d ≤ n");
      if (p.q >= 0 && p.q < p.d) fail("q", p.q, "q ≥ d");
      break;
    case ParamRule::optional_j:
      if (p.j >= n) fail("j", p.j, "0 ≤ j ≤ n−1");
      break;
    case ParamRule::none:
      break;
  }
  if (p.subspace && p.subspace->n() != n) out.push_back("subspace ambient dimension differs from n");
  return out;
}

CheckReport run_check(const CheckSpec& spec, const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r;
  const bool polytope_or_box = k.is_polytope() || std::holds_alternative<Box>(k.rep());
  const std::vector<std::string> problems = validate_check(spec, k.dim(), k.flags, polytope_or_box, p);
  if (!problems.empty()) {
    r = detail::new_report(spec.id, k, p);
    r.verdict = Verdict::error;
    for (const std::string& s : problems) r.note += (r.note.empty() ? "" : "; ") + s;
  } else {
    try {
      r = spec.run(k, p, ctx);
    } catch (const std::exception& e) {
      r = detail::new_report(spec.id, k, p);
      r.verdict = Verdict::error;
      r.note = e.what();
    }
  }
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace quermass
