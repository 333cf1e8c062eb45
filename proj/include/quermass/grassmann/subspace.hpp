#pragma once

#include "quermass/core/linalg.hpp"
#include "quermass/core/rng.hpp"

namespace quermass {

class ConvexBody;

/// k-dimensional linear subspace of R^n held as an n x k orthonormal basis.
class Subspace {
 public:
  Subspace() = default;
  /// Orthonormalizes the columns of `spanning`.
  explicit Subspace(const Mat& spanning);
  static Subspace from_orthonormal(Mat basis);
  static Subspace coordinate(int n, std::initializer_list<int> axes);

  int n() const { return static_cast<int>(basis_.rows()); }
  int k() const { return static_cast<int>(basis_.cols()); }
  const Mat& basis() const { return basis_; }
  Mat projector() const { return basis_ * basis_.transpose(); }
  /// Orthonormal basis of the orthogonal complement.
  Subspace complement() const;

 private:
  Mat basis_;
};

/// Haar-distributed k-dimensional subspace of R^n.
Subspace haar_subspace(int n, int k, Rng& rng);

/// Random orthogonal n x n matrix (Haar on O(n)).
Mat haar_orthogonal(int n, Rng& rng);

/// A k-dimensional affine flat x + F sampled for the translation-invariant
/// measure dx dnu: F Haar, x uniform on P_{F-perp} K, weight |P_{F-perp} K|.
struct AffineFlat {
  Subspace flat;
  Subspace normal_space;  ///< complement of `flat`
  Vec offset;             ///< x in ambient coordinates, lies in normal_space
  double weight = 0.0;
};

AffineFlat sample_affine_flat(const ConvexBody& k, int flat_dim, Rng& rng);

}  // namespace quermass
