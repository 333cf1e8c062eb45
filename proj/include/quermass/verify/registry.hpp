#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "quermass/verify/checks.hpp"

namespace quermass {

enum class BodyRequirement { none, symmetric, centered, polytope };

enum class ParamRule {
  none,
  k_only,      ///< 1 ≤ k ≤ n−1
  k_and_j,     ///< 1 ≤ k ≤ n−1, 0 ≤ j ≤ n−k−1
  j_and_N,     ///< 0 ≤ j ≤ n−1, N ≥ n+1
  s_only,      ///< 1 ≤ s ≤ n−1
  d_and_q,     ///< 1 ≤ d ≤ n, q ≥ d
  optional_j,  ///< j unset or 0 ≤ j ≤ n−1
};

using CheckFn = std::function<CheckReport(const ConvexBody&, const CheckParams&, VerifyContext&)>;

struct CheckSpec {
  std::string id;
  std::string description;
  BodyRequirement body;
  ParamRule params;
  CheckFn run;
};

/// All checks, in a stable order.
const std::vector<CheckSpec>& check_registry();
const CheckSpec* find_check(std::string_view id);

/// Precondition violations (empty when the combination is admissible).
std::vector<std::string> validate_check(const CheckSpec& spec, int n, const BodyFlags& flags, bool polytope_or_box,
                                        const CheckParams& p);

/// Validates, runs and times one check. Runtime errors are reported as an
/// "error" verdict with the message in the note.
CheckReport run_check(const CheckSpec& spec, const ConvexBody& k, const CheckParams& p, VerifyContext& ctx);

}  // namespace quermass
