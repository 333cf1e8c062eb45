#pragma once

#include <array>
#include <cstdint>

namespace quermass {

class Rng;

/// Addressable random stream: sample `i` of stream `stream` under `seed` is
/// produced by `at(i)` without generating the preceding samples.
struct SeededRng {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  Rng at(std::uint64_t index) const;
  /// Independent stream derived from this one and a tag.
  SeededRng child(std::uint64_t tag) const;
};

/// Per-sample generator: xoshiro256** keyed by a SplitMix64 hash of
/// (seed, stream, index). Normals come from Box-Muller so that sequences
/// do not depend on the standard library's distribution implementations.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  std::uint64_t next_u64();
  /// Uniform on the open interval (0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Fresh seed for a nested estimator.
  SeededRng spawn();

 private:
  std::array<std::uint64_t, 4> s_{};
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b);

}  // namespace quermass
