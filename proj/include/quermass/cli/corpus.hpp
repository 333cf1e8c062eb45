#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quermass/bodies/convex_body.hpp"

namespace quermass {

/// Seed of the random corpus entries.
inline constexpr std::uint64_t kCorpusSeed = 20240601;

/// balls, boxes, crosspolytopes, ellipsoids, random-symmetric,
/// centered-simplices, all.
const std::vector<std::string>& corpus_names();

/// Bodies of a named corpus. Throws ValidationError for unknown names.
std::vector<ConvexBody> corpus(const std::string& name, std::uint64_t seed = kCorpusSeed);

/// A corpus name or the name of a single corpus body ("ball3", "cross4", ...).
std::vector<ConvexBody> resolve_corpus_entry(const std::string& name, std::uint64_t seed = kCorpusSeed);

ConvexBody cross_polytope(int n);
/// Regular simplex with barycenter at the origin and unit circumradius.
ConvexBody centered_simplex(int n);

}  // namespace quermass
