#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quermass/core/estimate.hpp"

namespace quermass {

enum class Verdict { pass, fail, inconclusive, error };

std::string to_string(Verdict v);

/// Margins below this many combined standard errors fail.
inline constexpr double kMarginThreshold = -3.0;

/// Relative sigma floor used when both sides of a comparison are exact.
inline constexpr double kExactSigmaFloor = 1e-9;

struct NamedConstant {
  std::string name;
  Estimate value;
};

/// One verification of an inequality lower <= middle <= upper. One-sided
/// inequalities leave the unused bound empty; identities set both bounds to
/// the same value.
struct CheckReport {
  std::string check_id;
  std::string body;
  int n = 0;
  int k = -1;  ///< -1 when not applicable
  int j = -1;
  int N = -1;

  std::optional<Estimate> lower;
  Estimate middle;
  std::optional<Estimate> upper;
  std::vector<NamedConstant> constants;

  std::optional<double> lower_margin;
  std::optional<double> upper_margin;
  Verdict verdict = Verdict::error;

  /// A bound contains a sampled maximum that can only make it too small, so
  /// a failing comparison cannot certify a violation.
  bool fail_is_inconclusive = false;
  /// The middle is a sampled maximum: passes may miss violations.
  bool sampled = false;
  std::string note;

  std::vector<CheckReport> sub_checks;
  std::uint64_t seed = 0;
  double wall_time = 0.0;
};

/// (large - small) / combined sigma, with a floor of kExactSigmaFloor times
/// the larger magnitude.
double margin(const Estimate& small, const Estimate& large);

/// Fills margins and the verdict from the bounds and sub-checks. The overall
/// verdict is the worst of the own comparison and all sub-checks.
void finalize(CheckReport& report);

/// "pass (sampled)" for sampled passes, otherwise to_string(verdict).
std::string verdict_label(const CheckReport& report);

/// Smallest margin present in the report (nullopt when none).
std::optional<double> worst_margin(const CheckReport& report);

}  // namespace quermass
