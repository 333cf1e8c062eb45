#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "quermass/bodies/operations.hpp"
#include "quermass/cli/corpus.hpp"
#include "quermass/core/constants.hpp"
#include "quermass/core/errors.hpp"
#include "quermass/core/parallel.hpp"
#include "quermass/verify/constants.hpp"
#include "quermass/verify/registry.hpp"

using namespace quermass;

namespace {

constexpr double kPi = std::numbers::pi;

Budgets small_budgets() {
  Budgets b;
  b.flats = 4000;
  b.tuples = 20000;
  b.constants = 50000;
  b.reference = 5000;
  b.trials = 100;
  return b;
}

CheckParams params(int k, int j, std::uint64_t seed = 11) {
  CheckParams p;
  p.k = k;
  p.j = j;
  p.seed = seed;
  return p;
}

void expect_within(const Estimate& e, double truth, double sigmas = 3.0) {
  EXPECT_LE(std::abs(e.value - truth), sigmas * e.std_error + 1e-9 * std::abs(truth))
      << "value " << e.value << " truth " << truth << " se " << e.std_error;
}

void expect_pass(const CheckReport& r) {
  EXPECT_EQ(r.verdict, Verdict::pass) << r.check_id << " on " << r.body << ": " << r.note << " margins "
                                      << r.lower_margin.value_or(NAN) << " " << r.upper_margin.value_or(NAN);
}

/// Simpson's rule on [a, b] with an even number of panels.
template <class F>
double simpson(F&& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

/// E |x_1 - x_2| for x_i uniform in the unit disk, from the overlap area of
/// two unit disks at distance r.
double disk_mean_distance() {
  auto overlap = [](double r) { return 2.0 * std::acos(r / 2.0) - (r / 2.0) * std::sqrt(std::max(0.0, 4.0 - r * r)); };
  return simpson([&](double r) { return r * overlap(r) * 2.0 * kPi * r; }, 0.0, 2.0, 20000) / (kPi * kPi);
}

}  // namespace

TEST(Constants, ClosedForms) {
  EXPECT_NEAR(crofton_alpha(3, 1, 1), 3.0 * kPi / 8.0, 1e-12);
  EXPECT_NEAR(crofton_alpha(3, 1, 0), 1.0, 1e-12);
  EXPECT_NEAR(section_gamma(3, 1, 1), kPi * kPi / 4.0, 1e-12);
  EXPECT_NEAR(simplex_delta(3, 1, 1), 3.0 / kPi, 1e-12);
  EXPECT_NEAR(shift_factor(3, 1, 1), 2.0, 1e-12);
  // Recomputed directly from unit-ball volumes and binomials.
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int j = 0; j <= n - k - 1; ++j) {
        const double a = omega(n - k) * omega(n - j) / (omega(n - k - j) * omega(n));
        EXPECT_NEAR(crofton_alpha(n, k, j), a, 1e-12 * a);
        const double sf = std::pow((n + 1.0) / (n - k - j + 1.0), n - k - j);
        EXPECT_NEAR(ratio_beta(n, k, j), a / sf / binom(n, k), 1e-12 * a);
        const double g = a * binom(n - j, k) * std::pow((n + 1.0) / (n - k + 1.0), n - k);
        EXPECT_NEAR(ratio_gamma(n, k, j), g, 1e-12 * g);
      }
    }
  }
  EXPECT_THROW(crofton_alpha(3, 1, 2), DomainError);
}

TEST(Constants, SimplexConstantFromPrintedFormula) {
  const Estimate dpp = Estimate::exact(5.0 / 6.0);
  const Estimate c = simplex_c(3, 1, 1, dpp);
  EXPECT_NEAR(c.value, omega(1) / (omega(2) * omega(1)) / 2.0 * 5.0 / 6.0, 1e-12);
  EXPECT_NEAR(simplex_c_centered(3, 1, 1, dpp).value, c.value * std::pow(4.0 / 3.0, -2.0), 1e-12);
  const Estimate range3 = Estimate::exact(1.0);
  EXPECT_NEAR(hull_c(2, 3, 1, range3).value, 0.25, 1e-12);
}

TEST(DppConstant, OneDimensionalAndPlanarValues) {
  const SeededRng rng{3, 0};
  expect_within(dpp_constant(1, 1, true, Budget::fixed(200000), rng), 0.5);
  expect_within(dpp_constant(2, 2, true, Budget::fixed(200000), rng.child(1)), 4.0 / (9.0 * kPi));
  expect_within(dpp_constant(1, 2, false, Budget::fixed(200000), rng.child(2)), 2.0 / 3.0);
  expect_within(dpp_constant(1, 3, false, Budget::fixed(200000), rng.child(3)), 1.0);
}

TEST(DppConstant, SegmentWithOriginMatchesQuadrature) {
  // E range{0, a, b} for a, b uniform on [-1, 1], by a midpoint grid.
  const int m = 2000;
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    const double a = -1.0 + (i + 0.5) * 2.0 / m;
    for (int l = 0; l < m; ++l) {
      const double b = -1.0 + (l + 0.5) * 2.0 / m;
      total += std::max({0.0, a, b}) - std::min({0.0, a, b});
    }
  }
  const double oracle = total / (static_cast<double>(m) * m);
  EXPECT_NEAR(oracle, 5.0 / 6.0, 1e-6);
  expect_within(dpp_constant(1, 2, true, Budget::fixed(200000), SeededRng{5, 0}), oracle);
}

TEST(DppConstant, Preconditions) {
  EXPECT_THROW(dpp_constant(3, 2, true, Budget::fixed(10), SeededRng{}), DomainError);
  EXPECT_THROW(dpp_constant(2, 2, false, Budget::fixed(10), SeededRng{}), DomainError);
}

TEST(Calibration, SegmentCaseClosedForm) {
  for (int n = 2; n <= 4; ++n) {
    const Estimate p = bp_constant(n, 1, bp_moment(n, 1, Budget::fixed(200000), SeededRng{7, static_cast<std::uint64_t>(n)}));
    expect_within(p, n * omega(n) / 2.0);
  }
}

TEST(Crofton, BallClosedForm) {
  VerifyContext ctx(1, small_budgets());
  const CheckReport r = crofton_check(ConvexBody::unit_ball(3), params(1, 1), ctx);
  expect_within(r.middle, kPi * kPi / 2.0);
  EXPECT_NEAR(r.upper->value, kPi * kPi / 2.0, 1e-12);
  expect_pass(r);
  const CheckReport v = crofton_check(ConvexBody::unit_ball(3), params(1, 0), ctx);
  EXPECT_NEAR(v.constants[0].value.value, 1.0, 1e-12);
  expect_within(v.middle, 4.0 * kPi / 3.0);
}

TEST(Crofton, CubeAndPolytope) {
  VerifyContext ctx(2, small_budgets());
  expect_pass(crofton_check(ConvexBody::unit_cube(3, true), params(1, 1), ctx));
  expect_pass(crofton_check(cross_polytope(4), params(2, 1), ctx));
}

TEST(FibreAverage, BallValues) {
  VerifyContext ctx(3, small_budgets());
  const CheckReport r = lemma_rs_check(ConvexBody::unit_ball(3), params(1, 1), ctx);
  EXPECT_NEAR(r.lower->value, kPi, 1e-9);
  EXPECT_NEAR(r.upper->value, 4.0 * kPi, 1e-9);
  expect_within(r.middle, kPi * kPi / 2.0);
  ASSERT_EQ(r.sub_checks.size(), 1u);
  expect_pass(r);
}

TEST(FibreAverage, CenteredSimplex) {
  VerifyContext ctx(4, small_budgets());
  const CheckReport r = lemma_rs_check(centered_simplex(3), params(1, 1), ctx);
  EXPECT_TRUE(r.sub_checks.empty());
  expect_pass(r);
}

TEST(ProjectionTimesSection, BallIsExact) {
  VerifyContext ctx(5, small_budgets());
  const CheckReport r = thm11_check(ConvexBody::unit_ball(3), params(1, 1), ctx);
  EXPECT_NEAR(r.middle.value, 2.0 * kPi, 1e-9);
  EXPECT_NEAR(r.lower->value, kPi * kPi / 4.0, 1e-9);
  EXPECT_NEAR(r.upper->value, kPi * kPi, 1e-9);
  expect_pass(r);
}

TEST(ProjectionTimesSection, CubeAndSimplex) {
  VerifyContext ctx(6, small_budgets());
  expect_pass(thm11_check(ConvexBody::unit_cube(3, true).with_flags({true, true}), params(1, 1), ctx));
  expect_pass(thm11_check(centered_simplex(4), params(1, 1), ctx));
}

TEST(ProjectionTimesSectionMax, BallValuesAndSampledMax) {
  VerifyContext ctx(7, small_budgets());
  const CheckReport r = cor12_check(ConvexBody::unit_ball(3), params(1, 1), ctx);
  EXPECT_NEAR(r.middle.value, std::pow(kPi, 3) / 6.0, 1e-9);
  EXPECT_NEAR(r.upper->value, 4.0 * kPi * kPi / 3.0, 1e-9);
  EXPECT_TRUE(r.fail_is_inconclusive);
  expect_pass(r);
  const CheckReport s = cor12_check(corpus("random-symmetric")[1], params(1, 1), ctx);
  EXPECT_NE(s.verdict, Verdict::fail);
}

TEST(SectionRatio, BallCrossAndSimplex) {
  VerifyContext ctx(8, small_budgets());
  const CheckReport r = thm12_check(ConvexBody::unit_ball(3), params(1, 1), ctx);
  EXPECT_NEAR(r.middle.value, 1.0, 1e-12);
  EXPECT_NEAR(r.lower->value, kPi / 8.0, 1e-12);
  EXPECT_NEAR(r.upper->value, 3.0 * kPi / 4.0, 1e-12);
  expect_pass(r);
  expect_pass(thm12_check(cross_polytope(3), params(1, 1), ctx));
  expect_pass(thm34_check(centered_simplex(3), params(1, 1), ctx));
}

TEST(ProductInequalities, CubeCoordinateSubspace) {
  VerifyContext ctx(9, small_budgets());
  CheckParams p = params(1, -1);
  p.subspace = Subspace::coordinate(3, {0});
  const ConvexBody cube = ConvexBody::unit_cube(3, true).with_flags({true, true});
  const CheckReport sp = spingarn_check(cube, p, ctx);
  EXPECT_NEAR(sp.middle.value, 1.0, 1e-12);
  EXPECT_NEAR(sp.upper->value, 3.0, 1e-12);
  expect_pass(sp);
  const CheckReport rs = rs_lower_check(cube, p, ctx);
  EXPECT_NEAR(rs.middle.value, 1.0, 1e-12);
  EXPECT_NEAR(rs.lower->value, 1.0, 1e-12);
  expect_pass(rs);
}

TEST(ProductInequalities, RandomSubspaces) {
  VerifyContext ctx(10, small_budgets());
  for (const ConvexBody& k : corpus("crosspolytopes")) {
    expect_pass(spingarn_check(k, params(1, -1), ctx));
    expect_pass(rs_lower_check(k, params(2, -1), ctx));
  }
}

TEST(Fradelizi, BallCentralSectionIsMaximal) {
  VerifyContext ctx(11, small_budgets());
  const CheckReport r = fradelizi_check(ConvexBody::unit_ball(3), params(1, -1), ctx);
  EXPECT_NEAR(r.middle.value, kPi, 1e-12);
  EXPECT_NEAR(r.upper->value, 16.0 * kPi / 9.0, 1e-12);
  EXPECT_TRUE(r.sampled);
  EXPECT_EQ(verdict_label(r), "pass (sampled)");
  EXPECT_NE(r.note.find("best x"), std::string::npos);
}

TEST(StephenYaskin, CenteredSimplex) {
  VerifyContext ctx(12, small_budgets());
  const CheckReport r = stephen_yaskin_check(centered_simplex(3), params(1, 1), ctx);
  EXPECT_EQ(verdict_label(r), "pass (sampled)");
}

TEST(DppSpot, BallCubeAndEquality) {
  VerifyContext ctx(13, small_budgets());
  CheckParams p;
  p.seed = 3;
  p.d = 2;
  p.q = 3;
  expect_pass(dpp_spot_check(ConvexBody::unit_ball(3), p, ctx));
  expect_pass(dpp_spot_check(ConvexBody::unit_cube(3, true), p, ctx));
  p.d = 2;
  p.q = 2;
  const CheckReport eq = dpp_spot_check(ConvexBody::unit_ball(2), p, ctx);
  EXPECT_NEAR(eq.constants[3].value.value, 1.0, 1e-12);
  EXPECT_LE(std::abs(*eq.lower_margin), 3.0);
}

TEST(RandomSimplex, BallBounds) {
  VerifyContext ctx(14, small_budgets());
  const CheckReport r = thm43_check(ConvexBody::unit_ball(3), params(1, 1), ctx);
  EXPECT_NEAR(r.upper->value, 4.0, 1e-12);
  EXPECT_NEAR(r.lower->value, r.constants[0].value.value * 4.0 * kPi / 3.0, 1e-12);
  expect_pass(r);
  expect_pass(cor47_check(centered_simplex(3), params(1, 1), ctx));
}

TEST(Calibration, IdentityOnCubeAndBall) {
  VerifyContext ctx(15, small_budgets());
  CheckParams p;
  p.s = 2;
  p.seed = 5;
  const CheckReport cube = bp_identity_check(ConvexBody::unit_cube(3, true), p, ctx);
  EXPECT_NEAR(cube.lower->value, 1.0, 1e-12);
  expect_pass(cube);
  const CheckReport ball = bp_identity_check(ConvexBody::unit_ball(3), p, ctx);
  EXPECT_NEAR(ball.middle.value, std::pow(omega(3), 2), 1e-9);
}

TEST(MaxSectionBounds, BallCubeSimplex) {
  VerifyContext ctx(16, small_budgets());
  const ConvexBody cube = ConvexBody::unit_cube(3, true).with_flags({true, true});
  for (const ConvexBody& k : {ConvexBody::unit_ball(3), cube}) {
    expect_pass(thm45_check(k, params(1, 1), ctx));
    const CheckReport t = thm13_check(k, params(1, 1), ctx);
    ASSERT_EQ(t.sub_checks.size(), 1u);
    expect_pass(t);
  }
  const CheckReport c = cor48_check(centered_simplex(3), params(1, 1), ctx);
  EXPECT_EQ(c.sub_checks.size(), 1u);
  expect_pass(c);
}

TEST(RandomHull, DiskPerimeterOracle) {
  const double mean_distance = disk_mean_distance();
  EXPECT_NEAR(mean_distance, 128.0 / (45.0 * kPi), 1e-9);
  VerifyContext ctx(17, small_budgets());
  CheckParams p;
  p.j = 1;
  p.N = 3;
  p.seed = 9;
  const CheckReport r = thm46_check(ConvexBody::unit_ball(2), p, ctx);
  expect_within(r.middle, 1.5 * mean_distance);
  expect_within(*r.lower, kPi / 4.0);
  expect_pass(r);
}

TEST(RandomHull, CubeAndCentered) {
  VerifyContext ctx(18, small_budgets());
  CheckParams p;
  p.j = 1;
  p.N = 5;
  p.seed = 2;
  expect_pass(thm46_check(ConvexBody::unit_cube(3, true).with_flags({true, true}), p, ctx));
  expect_pass(thm14_centered_check(centered_simplex(3), p, ctx));
}

TEST(Aleksandrov, BallCubeThinBox) {
  VerifyContext ctx(19, small_budgets());
  const CheckReport ball = aleksandrov_check(ConvexBody::unit_ball(4), CheckParams{}, ctx);
  expect_pass(ball);
  for (const CheckReport& s : ball.sub_checks) {
    if (s.check_id == "aleksandrov-chain") {
      EXPECT_NEAR(s.middle.value, 1.0, 1e-12);
    }
  }
  const CheckReport cube = aleksandrov_check(ConvexBody::unit_cube(3), CheckParams{}, ctx);
  expect_pass(cube);
  for (const CheckReport& s : cube.sub_checks) {
    if (s.check_id == "aleksandrov-chain") {
      EXPECT_LT(s.middle.value, s.upper->value);
    }
  }
  const CheckReport thin = aleksandrov_check(ConvexBody::box(Vec::Zero(3), Vec(Eigen::Vector3d(0.5, 1e-3, 1e-3))),
                                             CheckParams{}, ctx);
  expect_pass(thin);
  EXPECT_LT(thin.constants[1].value.value, 0.1 * thin.constants[0].value.value);
}

TEST(BrunnMinkowski, RandomPairs) {
  VerifyContext ctx(20, small_budgets());
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng r(seed, 1, 2);
    CheckParams p;
    p.seed = seed;
    const CheckReport rep = bm_quermass_check(random_vpolytope(3, 8, false, r), p, ctx);
    EXPECT_EQ(rep.sub_checks.size(), 3u);
    expect_pass(rep);
  }
}

TEST(Registry, IdsAndValidation) {
  const std::vector<std::string> ids = {"crofton", "lemma-rs", "thm-1-1", "cor-1-2", "thm-1-2", "thm-3-4",
                                        "spingarn", "rs-lower", "fradelizi", "stephen-yaskin", "dpp-spot",
                                        "thm-4-3", "cor-4-7", "bp-identity", "thm-4-5", "cor-4-8", "thm-1-3",
                                        "thm-4-6", "thm-1-4-centered", "aleksandrov", "bm-quermass"};
  ASSERT_EQ(check_registry().size(), ids.size());
  for (const std::string& id : ids) EXPECT_NE(find_check(id), nullptr) << id;
  const CheckSpec& crofton = *find_check("crofton");
  const std::vector<std::string> bad = validate_check(crofton, 3, BodyFlags{}, false, params(1, 2));
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_NE(bad[0].find("0 ≤ j ≤ n−k−1"), std::string::npos);
  EXPECT_FALSE(validate_check(*find_check("thm-1-2"), 3, BodyFlags{false, true}, false, params(1, 1)).empty());
  EXPECT_FALSE(validate_check(*find_check("thm-4-6"), 3, BodyFlags{true, true}, false, params(-1, 1)).empty());
}

TEST(Registry, RuntimeErrorsBecomeErrorVerdicts) {
  VerifyContext ctx(21, small_budgets());
  const CheckReport r = run_check(*find_check("bm-quermass"), ConvexBody::unit_ball(3), CheckParams{}, ctx);
  EXPECT_EQ(r.verdict, Verdict::error);
  EXPECT_FALSE(r.note.empty());
}

TEST(Properties, ScaleInvariantVerdicts) {
  VerifyContext ctx(22, small_budgets());
  const ConvexBody k = cross_polytope(3);
  const ConvexBody k2 = scale(k, 2.0).with_flags(k.flags);
  for (const char* id : {"spingarn", "thm-1-1", "thm-1-2", "thm-4-3"}) {
    const CheckSpec& spec = *find_check(id);
    const CheckReport a = run_check(spec, k, params(1, 1), ctx);
    const CheckReport b = run_check(spec, k2, params(1, 1), ctx);
    EXPECT_EQ(a.verdict, b.verdict) << id;
    if (a.lower_margin && a.middle.is_exact()) {
      EXPECT_NEAR(*a.lower_margin, *b.lower_margin, 1e-6 * std::abs(*a.lower_margin));
    }
  }
  // Exact paths: every quantity scales by 2^degree.
  const CheckReport a = spingarn_check(k, params(1, -1), ctx);
  const CheckReport b = spingarn_check(k2, params(1, -1), ctx);
  EXPECT_NEAR(b.middle.value / a.middle.value, 8.0, 1e-9);
  EXPECT_NEAR(b.upper->value / a.upper->value, 8.0, 1e-9);
}

TEST(Properties, LargerBudgetsKeepPasses) {
  // Meta-test on the ball, where the Crofton truth is closed-form.
  int passed = 0;
  int kept = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Budgets b = small_budgets();
    VerifyContext ctx(seed, b);
    CheckParams p = params(1, 1, seed);
    p.samples = 2000;
    if (crofton_check(ConvexBody::unit_ball(3), p, ctx).verdict != Verdict::pass) continue;
    ++passed;
    p.samples = 8000;
    if (crofton_check(ConvexBody::unit_ball(3), p, ctx).verdict == Verdict::pass) ++kept;
  }
  EXPECT_GE(passed, 19);
  EXPECT_EQ(kept, passed);
}

TEST(Properties, ThreadCountIndependence) {
  auto run = [](int threads) {
    set_thread_count(threads);
    VerifyContext ctx(23, small_budgets());
    const CheckReport r = thm43_check(cross_polytope(3), params(1, 1), ctx);
    set_thread_count(0);
    return r;
  };
  const CheckReport a = run(1);
  const CheckReport b = run(3);
  EXPECT_EQ(a.middle.value, b.middle.value);
  EXPECT_EQ(a.middle.std_error, b.middle.std_error);
  EXPECT_EQ(a.lower->value, b.lower->value);
}
