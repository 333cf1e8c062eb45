#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "quermass/core/estimate.hpp"
#include "quermass/core/rng.hpp"

namespace quermass {

/// Worker count: set_thread_count() if called, else QUERMASS_THREADS, else
/// hardware concurrency. set_thread_count(0) restores the default.
int thread_count();
void set_thread_count(int threads);

/// Runs body(i) for i in [0, n). Work is spread over thread_count() threads
/// unless the caller is already inside a parallel region (nested calls run
/// serially on the calling thread). The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Forces parallel_for calls made on this thread to run serially.
class SerialScope {
 public:
  SerialScope();
  ~SerialScope();
  SerialScope(const SerialScope&) = delete;
  SerialScope& operator=(const SerialScope&) = delete;

 private:
  bool previous_;
};

/// Samples per reduction block. Block partials are merged pairwise in block
/// order, so results do not depend on the thread count.
inline constexpr std::uint64_t kBlockSize = 512;

namespace detail {
template <class Acc>
Acc tree_merge(std::vector<Acc>& parts) {
  if (parts.empty()) return Acc{};
  std::size_t width = 1;
  while (width < parts.size()) {
    for (std::size_t i = 0; i + width < parts.size(); i += 2 * width) parts[i].merge(parts[i + width]);
    width *= 2;
  }
  return parts.front();
}
}  // namespace detail

/// Mean of f(rng_i) over sample indices [first, first + samples), where
/// rng_i = rng.at(i). Deterministic for fixed (rng, first, samples).
template <class F>
MomentAccumulator mc_accumulate(const SeededRng& rng, std::uint64_t first, std::uint64_t samples, F&& f) {
  const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<MomentAccumulator> parts(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    const std::uint64_t lo = first + b * kBlockSize;
    const std::uint64_t hi = std::min(first + samples, lo + kBlockSize);
    MomentAccumulator acc;
    for (std::uint64_t i = lo; i < hi; ++i) {
      Rng r = rng.at(i);
      acc.add(f(r));
    }
    parts[b] = acc;
  });
  return detail::tree_merge(parts);
}

template <class F>
Estimate mc_estimate(const SeededRng& rng, std::uint64_t samples, F&& f) {
  return mc_accumulate(rng, 0, samples, std::forward<F>(f)).to_estimate(rng.seed);
}

/// Sample budget: fixed count, or doubling until the relative standard error
/// drops below `target_relative_error` (capped at `cap` samples).
struct Budget {
  std::uint64_t samples = 10000;
  double target_relative_error = 0.0;
  std::uint64_t cap = 10000000;

  static Budget fixed(std::uint64_t n) { return Budget{n, 0.0, n}; }
  static Budget relative(double target, std::uint64_t initial = 1000, std::uint64_t cap = 10000000) {
    return Budget{initial, target, cap};
  }
};

template <class F>
Estimate mc_estimate(const SeededRng& rng, const Budget& budget, F&& f) {
  MomentAccumulator acc = mc_accumulate(rng, 0, budget.samples, f);
  if (budget.target_relative_error > 0.0) {
    while (acc.count() < budget.cap) {
      const Estimate e = acc.to_estimate(rng.seed);
      if (e.std_error <= budget.target_relative_error * std::abs(e.value)) break;
      const std::uint64_t more = std::min<std::uint64_t>(acc.count(), budget.cap - acc.count());
      acc.merge(mc_accumulate(rng, acc.count(), more, f));
    }
  }
  return acc.to_estimate(rng.seed);
}

/// Vector-valued variant: f(rng, out) writes `dim` values per sample.
template <class F>
VectorMomentAccumulator mc_accumulate_vector(const SeededRng& rng, std::uint64_t samples, int dim, F&& f) {
  const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<VectorMomentAccumulator> parts(blocks, VectorMomentAccumulator(dim));
  parallel_for(blocks, [&](std::size_t b) {
    const std::uint64_t lo = b * kBlockSize;
    const std::uint64_t hi = std::min(samples, lo + kBlockSize);
    VectorMomentAccumulator acc(dim);
    std::vector<double> out(dim);
    for (std::uint64_t i = lo; i < hi; ++i) {
      Rng r = rng.at(i);
      f(r, std::span<double>(out));
      acc.add(out);
    }
    parts[b] = std::move(acc);
  });
  if (parts.empty()) return VectorMomentAccumulator(dim);
  return detail::tree_merge(parts);
}

}  // namespace quermass
