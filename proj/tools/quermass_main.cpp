#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "quermass/cli/body_io.hpp"
#include "quermass/cli/report_io.hpp"
#include "quermass/cli/scenario.hpp"
#include "quermass/core/constants.hpp"
#include "quermass/quermass/quermass.hpp"
#include "quermass/verify/constants.hpp"

using namespace quermass;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QUERMASS_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
    }
  }
  return 0;
}

int run_compute(const std::string& body_arg, int j, const std::string& method, std::uint64_t samples,
                std::uint64_t seed) {
  const std::vector<ConvexBody> bodies = resolve_body_argument(body_arg);
  std::printf("%-16s %3s %3s %-10s %22s %12s\n", "body", "n", "j", "method", "value", "std_error");
  for (std::size_t b = 0; b < bodies.size(); ++b) {
    const ConvexBody& k = bodies[b];
    if (j < 0 || j > k.dim()) throw ValidationError("--j: need 0 ≤ j ≤ n (n = " + std::to_string(k.dim()) + ")");
    const SeededRng rng{seed, static_cast<std::uint64_t>(b)};
    Estimate e;
    std::string used = method;
    if (method == "exact") {
      const auto v = quermass_exact(k, j);
      if (!v) throw CapabilityError("no closed form for W_" + std::to_string(j) + " of this " + k.type_name());
      e = Estimate::exact(*v);
    } else if (method == "kubota") {
      e = (j == k.dim() - 1) ? mean_width(k, Budget::fixed(samples), rng) : quermass_kubota(k, j, Budget::fixed(samples), rng);
      if (j == k.dim() - 1) e = scaled(e, omega(k.dim()));
    } else if (method == "steiner") {
      e = quermass_steiner_fit(k, j, default_steiner_lambdas(k), samples, rng);
    } else {
      e = quermass_auto(k, j, Budget::fixed(samples), rng);
      used = e.is_exact() ? "exact" : "kubota";
    }
    std::printf("%-16s %3d %3d %-10s %22.15g %12.4g\n", (k.name.empty() ? k.type_name() : k.name).c_str(), k.dim(),
                j, used.c_str(), e.value, e.std_error);
  }
  return 0;
}

int run_constants(int n, int k, int j, int N, std::uint64_t samples, std::uint64_t seed) {
  if (n < 2 || n > kMaxTableDim) throw ValidationError("--n: need 2 ≤ n");
  if (k < 1 || k > n - 1) throw ValidationError("--k: need 1 ≤ k ≤ n−1");
  if (j < 0 || j > n - k - 1) throw ValidationError("--j: need 0 ≤ j ≤ n−k−1");
  auto line = [](const char* name, const Estimate& e) {
    if (e.is_exact()) {
      std::printf("%-12s %22.15g  closed-form\n", name, e.value);
    } else {
      std::printf("%-12s %22.15g  monte-carlo ± %.3g (%llu samples)\n", name, e.value, e.std_error,
                  static_cast<unsigned long long>(e.samples));
    }
  };
  std::printf("n = %d, k = %d, j = %d\n", n, k, j);
  line("alpha", Estimate::exact(crofton_alpha(n, k, j)));
  line("gamma", Estimate::exact(section_gamma(n, k, j)));
  line("beta", Estimate::exact(ratio_beta(n, k, j)));
  line("gamma'", Estimate::exact(ratio_gamma(n, k, j)));
  line("delta", Estimate::exact(simplex_delta(n, k, j)));
  const Estimate dpp = dpp_constant(n - k - j, n - k, true, Budget::fixed(samples), SeededRng{seed, 1});
  line("c", simplex_c(n, k, j, dpp));
  line("c'", simplex_c_centered(n, k, j, dpp));
  if (N >= 0) {
    if (N < n + 1) throw ValidationError("--N: need N ≥ n+1");
    const Estimate hull = dpp_constant(n - j, N, false, Budget::fixed(samples), SeededRng{seed, 2});
    line("c_{n,N,j}", hull_c(n, N, j, hull));
    line("c'_{n,N,j}", hull_c_centered(n, N, j, hull));
  }
  return 0;
}

struct VerifyArgs {
  std::string check, body, out, format = "csv";
  int n = -1, k = -1, j = -1, N = -1, s = -1, d = -1, q = -1, trials = 0, inner = 0;
  std::uint64_t samples = 0, seed = 0;
  bool timing = false;
};

int run_verify(const VerifyArgs& a) {
  const CheckSpec* spec = find_check(a.check);
  if (!spec) throw ValidationError("--check: unknown check '" + a.check + "'");
  const ReportFormat format = parse_report_format(a.format);
  const std::vector<ConvexBody> bodies = resolve_body_argument(a.body);
  std::vector<ScenarioJob> jobs;
  std::vector<std::string> problems;
  for (const ConvexBody& k : bodies) {
    if (a.n >= 0 && a.n != k.dim()) {
      problems.push_back("--n: " + std::to_string(a.n) + " differs from the dimension of " + k.name);
      continue;
    }
    CheckParams p;
    p.k = a.k;
    p.j = a.j;
    p.N = a.N;
    p.s = a.s;
    p.d = a.d;
    p.q = a.q;
    p.samples = a.samples;
    p.trials = a.trials;
    p.inner = a.inner;
    p.seed = job_seed(a.seed, 0, k, p);
    const bool poly = k.is_polytope() || std::holds_alternative<Box>(k.rep());
    for (const std::string& issue : validate_check(*spec, k.dim(), k.flags, poly, p)) {
      problems.push_back(a.check + " on " + k.name + ": " + issue);
    }
    jobs.push_back(ScenarioJob{spec, &k, p});
  }
  if (!problems.empty()) throw ScenarioError(problems);
  VerifyContext ctx(a.seed);
  const std::vector<CheckReport> reports = run_jobs(jobs, ctx);
  if (a.out.empty()) {
    if (format == ReportFormat::csv) {
      write_csv(std::cout, reports, a.timing);
    } else {
      write_json_lines(std::cout, reports, a.timing);
    }
  } else {
    write_reports(a.out, format, reports, a.timing);
    write_summary(std::cout, reports);
  }
  for (const CheckReport& r : reports) {
    if (r.verdict == Verdict::fail || r.verdict == Verdict::error) return kExitFail;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quermassintegrals of convex bodies and verification of section and projection inequalities"};
  app.require_subcommand(1);

  std::string body_arg, method = "auto";
  int cj = 0;
  std::uint64_t csamples = 100000, cseed = default_seed();
  auto* compute = app.add_subcommand("compute", "Estimate W_j of a body");
  compute->add_option("--body", body_arg, "body file or corpus:<name>")->required();
  compute->add_option("--j", cj, "index j")->required();
  compute->add_option("--method", method, "exact, kubota, steiner or auto")
      ->check(CLI::IsMember({"auto", "exact", "kubota", "steiner"}));
  compute->add_option("--samples", csamples, "Monte Carlo samples");
  compute->add_option("--seed", cseed, "seed (default QUERMASS_SEED or 0)");

  VerifyArgs va;
  va.seed = default_seed();
  auto* verify = app.add_subcommand("verify", "Run one check on one body or corpus");
  verify->add_option("--check", va.check, "check id")->required();
  verify->add_option("--body", va.body, "body file or corpus:<name>")->required();
  verify->add_option("--n", va.n, "ambient dimension (must match the body)");
  verify->add_option("--k", va.k, "codimension k");
  verify->add_option("--j", va.j, "index j");
  verify->add_option("--N", va.N, "number of random points");
  verify->add_option("--s", va.s, "subspace dimension (bp-identity)");
  verify->add_option("--d", va.d, "marginal dimension (dpp-spot)");
  verify->add_option("--q", va.q, "point count (dpp-spot)");
  verify->add_option("--samples", va.samples, "main sample budget");
  verify->add_option("--trials", va.trials, "sampled flats for maxima");
  verify->add_option("--inner", va.inner, "nested Kubota flats");
  verify->add_option("--seed", va.seed, "seed (default QUERMASS_SEED or 0)");
  verify->add_option("--out", va.out, "report file (default: stdout)");
  verify->add_option("--format", va.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--timing", va.timing, "include wall time");

  std::string scenario_source, scenario_out, scenario_format;
  bool scenario_timing = false;
  auto* scenario = app.add_subcommand("scenario", "Run a scenario file or builtin:<name>");
  scenario->add_option("file", scenario_source, "scenario JSON or builtin:<name>")->required();
  scenario->add_option("--out", scenario_out, "report file (overrides the scenario)");
  scenario->add_option("--format", scenario_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  scenario->add_flag("--timing", scenario_timing, "include wall time");

  int kn = 0, kk = 0, kj = 0, kN = -1;
  std::uint64_t ksamples = 100000, kseed = default_seed();
  auto* constants = app.add_subcommand("constants", "Print the inequality constants");
  constants->add_option("--n", kn, "ambient dimension")->required();
  constants->add_option("--k", kk, "codimension")->required();
  constants->add_option("--j", kj, "index")->required();
  constants->add_option("--N", kN, "point count for the random hull constants");
  constants->add_option("--samples", ksamples, "samples for Monte Carlo constants");
  constants->add_option("--seed", kseed, "seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) return run_compute(body_arg, cj, method, csamples, cseed);
    if (*verify) return run_verify(va);
    if (*constants) return run_constants(kn, kk, kj, kN, ksamples, kseed);
    if (*scenario) {
      Scenario sc = load_scenario(scenario_source);
      if (!scenario_out.empty()) sc.output = scenario_out;
      if (!scenario_format.empty()) sc.format = parse_report_format(scenario_format);
      if (scenario_timing) sc.timing = true;
      return run_scenario(sc, std::cout).exit_code;
    }
  } catch (const ScenarioError& e) {
    std::cerr << "validation failed:\n";
    for (const std::string& p : e.problems()) std::cerr << "  " << p << "\n";
    return kExitInvalid;
  } catch (const ValidationError& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return 0;
}
