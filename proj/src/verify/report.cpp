#include "quermass/verify/report.hpp"

#include <algorithm>
#include <cmath>

namespace quermass {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
    case Verdict::error:
      return "error";
  }
  return "error";
}

double margin(const Estimate& small, const Estimate& large) {
  const double diff = large.value - small.value;
  double sigma = combined_sigma(small, large);
  const double floor = kExactSigmaFloor * std::max({std::abs(small.value), std::abs(large.value), 1e-300});
  sigma = std::max(sigma, floor);
  return diff / sigma;
}

namespace {

int severity(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return 0;
    case Verdict::inconclusive:
      return 1;
    case Verdict::fail:
      return 2;
    case Verdict::error:
      return 3;
  }
  return 3;
}

}  // namespace

void finalize(CheckReport& report) {
  Verdict own = Verdict::pass;
  if (report.lower) report.lower_margin = margin(*report.lower, report.middle);
  if (report.upper) report.upper_margin = margin(report.middle, *report.upper);
  const bool failed = (report.lower_margin && *report.lower_margin < kMarginThreshold) ||
                      (report.upper_margin && *report.upper_margin < kMarginThreshold);
  if (failed) own = report.fail_is_inconclusive ? Verdict::inconclusive : Verdict::fail;
  for (const CheckReport& sub : report.sub_checks) {
    if (severity(sub.verdict) > severity(own)) own = sub.verdict;
  }
  report.verdict = own;
}

std::string verdict_label(const CheckReport& report) {
  if (report.verdict == Verdict::pass && report.sampled) return "pass (sampled)";
  return to_string(report.verdict);
}

std::optional<double> worst_margin(const CheckReport& report) {
  std::optional<double> worst;
  auto take = [&](const std::optional<double>& m) {
    if (m && (!worst || *m < *worst)) worst = m;
  };
  take(report.lower_margin);
  take(report.upper_margin);
  for (const CheckReport& sub : report.sub_checks) take(worst_margin(sub));
  return worst;
}

}  // namespace quermass
