#include "quermass/grassmann/subspace.hpp"

#include "quermass/bodies/operations.hpp"
#include "quermass/core/errors.hpp"

namespace quermass {

Subspace::Subspace(const Mat& spanning) : basis_(orthonormalize(spanning)) {}

Subspace Subspace::from_orthonormal(Mat basis) {
  Subspace s;
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::coordinate(int n, std::initializer_list<int> axes) {
  Mat b = Mat::Zero(n, static_cast<int>(axes.size()));
  int c = 0;
  for (int a : axes) {
    if (a < 0 || a >= n) throw DomainError("coordinate axis out of range");
    b(a, c++) = 1.0;
  }
  return from_orthonormal(std::move(b));
}

Subspace Subspace::complement() const {
  const int dim = n();
  const int kk = k();
  if (kk == 0) return from_orthonormal(Mat::Identity(dim, dim));
  Eigen::HouseholderQR<Mat> qr(basis_);
  const Mat q = qr.householderQ() * Mat::Identity(dim, dim);
  return from_orthonormal(q.rightCols(dim - kk));
}

Subspace haar_subspace(int n, int k, Rng& rng) {
  if (k < 1 || k > n - 1) throw DomainError("haar_subspace needs 1 <= k <= n-1");
  for (int attempt = 0; attempt < 3; ++attempt) {
    try {
      return Subspace::from_orthonormal(orthonormalize(gaussian_matrix(n, k, rng)));
    } catch (const DegenerateInputError&) {
    }
  }
  throw DegenerateInputError("Gaussian matrix rank deficient three times");
}

Mat haar_orthogonal(int n, Rng& rng) { return orthonormalize(gaussian_matrix(n, n, rng)); }

AffineFlat sample_affine_flat(const ConvexBody& k, int flat_dim, Rng& rng) {
  const int n = k.dim();
  AffineFlat out;
  out.flat = haar_subspace(n, flat_dim, rng);
  out.normal_space = out.flat.complement();
  const ConvexBody shadow = project(k, out.normal_space);
  out.weight = volume(shadow);
  if (!(out.weight > 0.0)) throw DegenerateInputError("projection onto the flat's complement has zero volume");
  const UniformSampler sampler(shadow);
  out.offset = out.normal_space.basis() * sampler.sample(rng);
  return out;
}

}  // namespace quermass
