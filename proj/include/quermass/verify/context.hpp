#pragma once

#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <tuple>

#include "quermass/bodies/convex_body.hpp"
#include "quermass/core/estimate.hpp"
#include "quermass/core/rng.hpp"

namespace quermass {

/// Default sample budgets of the checks.
struct Budgets {
  std::uint64_t flats = 10000;       ///< Grassmannian averages
  std::uint64_t tuples = 100000;     ///< random simplex and hull expectations
  std::uint64_t constants = 100000;  ///< dpp and calibration constants
  std::uint64_t reference = 20000;   ///< W_j(K) when no closed form exists
  int inner = 16;                    ///< nested Kubota flats for section W_j
  int trials = 200;                  ///< flats in sampled maxima
  int offsets = 200;                 ///< translates in sampled maxima over x
};

/// Hash of a body's representation; equal bodies hash equally.
std::uint64_t body_fingerprint(const ConvexBody& k);

/// Shared state of a verification run: budgets plus caches of Monte Carlo
/// constants and reference quermassintegrals. Cached values are drawn from
/// streams keyed by the run seed and the cache key, so they do not depend on
/// which check requests them first. Thread-safe.
class VerifyContext {
 public:
  explicit VerifyContext(std::uint64_t seed = 0, Budgets budgets = {});

  std::uint64_t seed() const { return seed_; }
  const Budgets& budgets() const { return budgets_; }

  Estimate dpp(int d, int q, bool include_origin);
  Estimate bp_moment(int n, int s);
  /// W_j(K): exact when available, otherwise a Monte Carlo estimate.
  Estimate reference_quermass(const ConvexBody& k, int j);

 private:
  using Key = std::tuple<int, std::uint64_t, int, int>;
  Estimate cached(const Key& key, const std::function<Estimate(const SeededRng&)>& compute);

  std::uint64_t seed_;
  Budgets budgets_;
  std::mutex mutex_;
  std::map<Key, std::shared_future<Estimate>> cache_;
};

}  // namespace quermass
