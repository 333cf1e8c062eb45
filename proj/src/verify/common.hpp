#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include "quermass/bodies/operations.hpp"
#include "quermass/core/errors.hpp"
#include "quermass/quermass/quermass.hpp"
#include "quermass/verify/checks.hpp"

namespace quermass::detail {

inline std::uint64_t tag_of(std::string_view s) {
  std::uint64_t h = 0x51ed270b27e1d6a5ULL;
  for (char c : s) h = hash_combine(h, static_cast<unsigned char>(c));
  return h;
}

inline std::string body_label(const ConvexBody& k) { return k.name.empty() ? k.type_name() : k.name; }

inline CheckReport new_report(std::string id, const ConvexBody& k, const CheckParams& p) {
  CheckReport r;
  r.check_id = std::move(id);
  r.body = body_label(k);
  r.n = k.dim();
  r.k = p.k;
  r.j = p.j;
  r.N = p.N;
  r.seed = p.seed;
  return r;
}

inline SeededRng check_rng(const CheckReport& r, std::string_view purpose) {
  return SeededRng{r.seed, hash_combine(tag_of(r.check_id), tag_of(purpose))};
}

inline void require_kj(int n, int k, int j) {
  if (k < 1 || k > n - 1) throw DomainError("k must satisfy 1 ≤ k ≤ n−1");
  if (j < 0 || j > n - k - 1) throw DomainError("j must satisfy 0 ≤ j ≤ n−k−1");
}

inline void require_flag(bool ok, const char* what) {
  if (!ok) throw DomainError(std::string("body must be ") + what);
}

/// W_j of a section in its own dimension; empty or degenerate sections give 0.
inline double section_quermass(const Section& s, int j, int inner, Rng& rng) {
  if (!s.ok()) return 0.0;
  return quermass_inner(*s.body, j, inner, rng);
}

inline double section_volume(const Section& s) { return s.ok() ? volume(*s.body) : 0.0; }

inline std::uint64_t or_default(std::uint64_t v, std::uint64_t fallback) { return v > 0 ? v : fallback; }
inline int or_default(int v, int fallback) { return v > 0 ? v : fallback; }

/// Uniform translates x in P_F K (ambient coordinates), starting with x = 0.
inline std::vector<Vec> offsets_in_projection(const ConvexBody& k, const Subspace& f, int count, const SeededRng& rng) {
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(count) + 1);
  out.push_back(Vec::Zero(k.dim()));
  const ConvexBody proj = project(k, f);
  const UniformSampler sampler(proj);
  for (int i = 0; i < count; ++i) {
    Rng r = rng.at(static_cast<std::uint64_t>(i));
    out.push_back(f.basis() * sampler.sample(r));
  }
  return out;
}

inline std::string format_vec(const Vec& v) {
  std::string out = "[";
  char buf[32];
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%.6g", i ? ", " : "", v(i));
    out += buf;
  }
  return out + "]";
}

}  // namespace quermass::detail
