#pragma once

#include <optional>
#include <utility>

#include "quermass/bodies/convex_body.hpp"
#include "quermass/core/rng.hpp"
#include "quermass/grassmann/subspace.hpp"

namespace quermass {

/// h_K(u) = max <x, u> over K.
double support(const ConvexBody& k, const Vec& u);

/// Membership with slack `tol` on normalized constraints.
bool contains(const ConvexBody& k, const Vec& x, double tol = 1e-9);

/// Membership in a V-polytope through a feasibility LP (reference path).
bool contains_by_lp(const ConvexBody& k, const Vec& x, double tol = 1e-9);

double volume(const ConvexBody& k);
Vec barycenter(const ConvexBody& k);

ConvexBody translate(const ConvexBody& k, const Vec& shift);
/// Dilation about the origin.
ConvexBody scale(const ConvexBody& k, double factor);
/// Image under x -> U x for orthogonal U.
ConvexBody rotate(const ConvexBody& k, const Mat& u);
ConvexBody translate_to_centered(const ConvexBody& k);

/// Orthogonal projection onto F, expressed in the coordinates of F's basis.
ConvexBody project(const ConvexBody& k, const Subspace& f);

/// |P_F K| without building the projected body where a closed form exists.
double projection_volume(const ConvexBody& k, const Mat& basis);

enum class SectionStatus { ok, empty, degenerate };

struct Section {
  SectionStatus status = SectionStatus::empty;
  std::optional<ConvexBody> body;  ///< in F-coordinates when status is ok

  bool ok() const { return status == SectionStatus::ok; }
};

/// K intersected with x + F, for x in the orthogonal complement of F (ambient
/// coordinates). The central section is x = 0.
Section affine_section(const ConvexBody& k, const Subspace& f, const Vec& x);
Section central_section(const ConvexBody& k, const Subspace& f);

/// Irredundant hull of all pairwise vertex sums (polytopes and boxes only).
ConvexBody minkowski_sum(const ConvexBody& k, const ConvexBody& d);

/// Uniform sampler. Ball, box and ellipsoid use closed-form transforms;
/// polytopes use rejection from the bounding box.
class UniformSampler {
 public:
  explicit UniformSampler(const ConvexBody& k);
  Vec sample(Rng& rng) const;
  void sample_into(Rng& rng, double* out) const;
  int dim() const { return dim_; }

 private:
  const ConvexBody* body_;
  int dim_;
  Vec lo_;
  Vec span_;
  Mat normals_;  ///< F x dim, for rejection
  Vec offsets_;
};

struct SampleSet {
  Mat points;  ///< dim x m
  std::uint64_t proposals = 0;
  double acceptance_rate() const {
    return proposals == 0 ? 1.0 : static_cast<double>(points.cols()) / static_cast<double>(proposals);
  }
};

/// m independent uniform points. Throws EfficiencyError when the rejection
/// acceptance rate falls below 1e-4 after 1e5 proposals.
SampleSet sample_uniform(const ConvexBody& k, int m, Rng& rng);

/// Euclidean distance from x to K (0 inside).
double distance(const ConvexBody& k, const Vec& x);

/// Minimum-norm point of conv(columns) (Wolfe's algorithm).
Vec min_norm_point(const Mat& points);

}  // namespace quermass
