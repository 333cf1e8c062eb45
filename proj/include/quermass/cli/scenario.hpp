#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "quermass/bodies/convex_body.hpp"
#include "quermass/cli/report_io.hpp"
#include "quermass/core/errors.hpp"
#include "quermass/verify/registry.hpp"

namespace quermass {

/// All validation problems of a scenario, each prefixed with its field path.
class ScenarioError : public ValidationError {
 public:
  explicit ScenarioError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// A parameter given as an integer, a list of integers, "all" (every
/// admissible value) or, for N, "n+c".
struct ParamSweep {
  enum class Kind { unset, values, all, n_plus } kind = Kind::unset;
  std::vector<int> values;
  int offset = 0;
};

struct ScenarioCheck {
  std::string id;
  ParamSweep k, j, N, s, d, q;
  std::uint64_t samples = 0;
  int trials = 0;
  int inner = 0;
  std::vector<std::string> bodies;  ///< restricts the check to these body names
};

struct Scenario {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<ConvexBody> bodies;
  std::vector<ScenarioCheck> checks;
  Budgets budgets;
  /// Skip bodies that lack a required flag instead of rejecting them.
  bool skip_ineligible = false;
  std::optional<std::string> output;
  ReportFormat format = ReportFormat::csv;
  bool timing = false;
};

struct ScenarioJob {
  const CheckSpec* spec = nullptr;
  const ConvexBody* body = nullptr;
  CheckParams params;
};

/// Parses a scenario document:
///   {"name": ..., "seed": int, "bodies": [body | "corpus:<name>" | "file:<path>"],
///    "checks": [{"id": ..., "k": ..., "j": ..., "N": ..., "s": ..., "d": ..., "q": ...,
///                "samples": ..., "trials": ..., "inner": ..., "bodies": [names]}],
///    "budgets": {"flats", "tuples", "constants", "reference", "inner", "trials", "offsets"},
///    "skip_ineligible": bool, "output": {"path": ..., "format": "csv" | "json", "timing": bool}}
/// A missing seed falls back to QUERMASS_SEED, then 0. Relative body files
/// resolve against `base_dir`.
Scenario parse_scenario(const nlohmann::json& doc, const std::string& base_dir = ".");

/// "builtin:<name>" or a path to a JSON scenario file.
Scenario load_scenario(const std::string& source);

const std::vector<std::string>& builtin_scenario_names();
nlohmann::json builtin_scenario(const std::string& name);

/// Expands sweeps into jobs in scenario order and validates every job before
/// any sampling. Throws ScenarioError listing all problems.
std::vector<ScenarioJob> expand_scenario(const Scenario& scenario);

/// Runs the jobs on a pool of `threads` workers (0: thread_count()). Reports
/// are returned in job order.
std::vector<CheckReport> run_jobs(const std::vector<ScenarioJob>& jobs, VerifyContext& ctx, int threads = 0);

struct ScenarioOutcome {
  std::vector<CheckReport> reports;
  int exit_code = 0;  ///< 1 when any check failed or errored
};

ScenarioOutcome run_scenario(const Scenario& scenario, std::ostream& summary, int threads = 0);

/// Seed of one job, a function of the scenario seed and the job's content.
std::uint64_t job_seed(std::uint64_t scenario_seed, std::size_t check_index, const ConvexBody& body,
                       const CheckParams& p);

}  // namespace quermass
