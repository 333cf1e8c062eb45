#include <cmath>

#include "common.hpp"
#include "quermass/core/constants.hpp"

namespace quermass {

using namespace detail;

CheckReport aleksandrov_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  const int n = k.dim();
  CheckReport r = new_report("aleksandrov", k, p);
  r.k = -1;
  r.j = -1;
  r.N = -1;
  const double on = omega(n);
  std::vector<Estimate> w(n + 1);
  for (int j = 0; j <= n; ++j) w[j] = ctx.reference_quermass(k, j);
  // Q_i = (W_{n-i} / omega_n)^{1/i}; Q_1 is the mean width, Q_n the volume radius.
  std::vector<Estimate> q(n + 1);
  for (int i = 1; i <= n; ++i) q[i] = power(scaled(w[n - i], 1.0 / on), 1.0 / i);
  const Estimate& width = q[1];
  const Estimate& vrad = q[n];
  r.middle = width;
  r.constants.push_back({"w(K)", width});
  r.constants.push_back({"vrad(K)", vrad});

  auto sub = [&](std::string id, int j) {
    CheckReport c = new_report(std::move(id), k, p);
    c.k = -1;
    c.j = j;
    c.N = -1;
    return c;
  };
  for (int i = 1; i < n; ++i) {
    CheckReport c = sub("aleksandrov-chain", n - i - 1);
    c.middle = q[i + 1];
    c.upper = q[i];
    c.note = "Q_" + std::to_string(i + 1) + " <= Q_" + std::to_string(i);
    finalize(c);
    r.sub_checks.push_back(std::move(c));
  }
  for (int i = 1; i <= n; ++i) {
    CheckReport c = sub("aleksandrov-sandwich", n - i);
    c.lower = vrad;
    c.middle = q[i];
    c.upper = width;
    c.note = "vrad <= Q_" + std::to_string(i) + " <= w";
    finalize(c);
    r.sub_checks.push_back(std::move(c));
  }
  const double vol = volume(k);
  for (int j = 1; j < n; ++j) {
    CheckReport c = sub("aleksandrov-volume", j);
    c.lower = Estimate::exact(std::pow(on, static_cast<double>(j) / n) * std::pow(vol, static_cast<double>(n - j) / n));
    c.middle = w[j];
    c.note = "omega_n^(j/n) |K|^((n-j)/n) <= W_j";
    finalize(c);
    r.sub_checks.push_back(std::move(c));
  }
  finalize(r);
  return r;
}

CheckReport bm_quermass_check(const ConvexBody& k, const CheckParams& p, VerifyContext& ctx) {
  const int n = k.dim();
  if (p.j >= n) throw DomainError("j must satisfy 0 ≤ j ≤ n−1");
  CheckReport r = new_report("bm-quermass", k, p);
  r.k = -1;
  r.N = -1;
  Rng draw = check_rng(r, "partner").at(0);
  const ConvexBody d = random_vpolytope(n, 2 * n + 2, false, draw);
  const ConvexBody sum = minkowski_sum(k, d);
  const std::uint64_t samples = ctx.budgets().reference;
  // Common random numbers for the three bodies.
  const SeededRng shared = check_rng(r, "quermass");

  auto one = [&](int j) {
    CheckReport c = new_report("bm-quermass", k, p);
    c.k = -1;
    c.N = -1;
    c.j = j;
    const double e = 1.0 / (n - j);
    const Estimate wk = body_quermass(k, j, samples, shared);
    const Estimate wd = body_quermass(d, j, samples, shared);
    const Estimate ws = body_quermass(sum, j, samples, shared);
    c.middle = power(ws, e);
    c.lower = quermass::sum(power(wk, e), power(wd, e));
    c.constants = {{"W_j(K)", wk}, {"W_j(D)", wd}, {"W_j(K+D)", ws}};
    c.note = "W_j(K+D)^(1/(n-j)) >= W_j(K)^(1/(n-j)) + W_j(D)^(1/(n-j)), D random with " +
             std::to_string(d.polytope_vertices().cols()) + " vertices";
    finalize(c);
    return c;
  };
  if (p.j >= 0) return one(p.j);
  r.j = -1;
  for (int j = 0; j < n; ++j) r.sub_checks.push_back(one(j));
  r.middle = Estimate::exact(0.0);
  r.note = "all j in [0, n-1]";
  finalize(r);
  return r;
}

}  // namespace quermass
