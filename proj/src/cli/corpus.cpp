#include "quermass/cli/corpus.hpp"

#include <cmath>

#include "quermass/core/errors.hpp"
#include "quermass/core/rng.hpp"
#include "quermass/verify/checks.hpp"

namespace quermass {

namespace {

constexpr BodyFlags kBoth{true, true};

ConvexBody named(ConvexBody k, std::string name, BodyFlags flags) {
  k.name = std::move(name);
  k.flags = flags;
  return k;
}

std::vector<ConvexBody> balls() {
  std::vector<ConvexBody> out;
  for (int n = 2; n <= 5; ++n) out.push_back(ConvexBody::unit_ball(n));
  return out;
}

std::vector<ConvexBody> boxes() {
  std::vector<ConvexBody> out;
  for (int n = 2; n <= 4; ++n) out.push_back(named(ConvexBody::unit_cube(n, true), "cube" + std::to_string(n), kBoth));
  for (int n = 3; n <= 4; ++n) {
    Vec half(n);
    for (int i = 0; i < n; ++i) half(i) = 0.5 * std::pow(0.5, i);
    out.push_back(named(ConvexBody::box(Vec::Zero(n), half), "box" + std::to_string(n), kBoth));
  }
  return out;
}

std::vector<ConvexBody> crosspolytopes() { return {cross_polytope(3), cross_polytope(4)}; }

std::vector<ConvexBody> ellipsoids() {
  std::vector<ConvexBody> out;
  for (int n = 2; n <= 4; ++n) {
    Mat shape = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      const double axis = std::pow(4.0, -static_cast<double>(i) / (n - 1));
      shape(i, i) = axis * axis;
    }
    out.push_back(named(ConvexBody::ellipsoid(Vec::Zero(n), shape), "ellipsoid" + std::to_string(n), kBoth));
  }
  return out;
}

std::vector<ConvexBody> random_symmetric(std::uint64_t seed) {
  std::vector<ConvexBody> out;
  for (int n = 3; n <= 4; ++n) {
    Rng rng(seed, 0x72616e64ULL, static_cast<std::uint64_t>(n));
    out.push_back(named(random_vpolytope(n, 20, true, rng), "rsym" + std::to_string(n), kBoth));
  }
  return out;
}

std::vector<ConvexBody> simplices() { return {centered_simplex(3), centered_simplex(4)}; }

}  // namespace

ConvexBody cross_polytope(int n) {
  Mat v(n, 2 * n);
  v << Mat::Identity(n, n), -Mat::Identity(n, n);
  return named(ConvexBody::vpolytope(v), "cross" + std::to_string(n), kBoth);
}

ConvexBody centered_simplex(int n) {
  // Standard basis of R^{n+1} minus its centroid, written in an orthonormal
  // basis of the hyperplane sum(x) = 0.
  Mat e = Mat::Identity(n + 1, n + 1);
  e.array() -= 1.0 / (n + 1);
  Eigen::HouseholderQR<Mat> qr(Mat::Ones(n + 1, 1));
  const Mat q = qr.householderQ();
  Mat v = q.rightCols(n).transpose() * e;
  v /= v.col(0).norm();
  return named(ConvexBody::vpolytope(v), "simplex" + std::to_string(n), BodyFlags{false, true});
}

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {"balls",           "boxes",         "crosspolytopes",     "ellipsoids",
                                                 "random-symmetric", "centered-simplices", "all"};
  return names;
}

std::vector<ConvexBody> corpus(const std::string& name, std::uint64_t seed) {
  if (name == "balls") return balls();
  if (name == "boxes") return boxes();
  if (name == "crosspolytopes") return crosspolytopes();
  if (name == "ellipsoids") return ellipsoids();
  if (name == "random-symmetric") return random_symmetric(seed);
  if (name == "centered-simplices") return simplices();
  if (name == "all") {
    std::vector<ConvexBody> out;
    for (const std::string& part : corpus_names()) {
      if (part == "all") continue;
      for (ConvexBody& k : corpus(part, seed)) out.push_back(std::move(k));
    }
    return out;
  }
  throw ValidationError("unknown corpus '" + name + "'");
}

std::vector<ConvexBody> resolve_corpus_entry(const std::string& name, std::uint64_t seed) {
  for (const std::string& c : corpus_names()) {
    if (c == name) return corpus(name, seed);
  }
  for (ConvexBody& k : corpus("all", seed)) {
    if (k.name == name) return {std::move(k)};
  }
  throw ValidationError("unknown corpus or corpus body '" + name + "'");
}

}  // namespace quermass
