#include "quermass/bodies/operations.hpp"

#include <cmath>
#include <vector>

#include "quermass/core/constants.hpp"
#include "quermass/core/errors.hpp"
#include "quermass/polytope/lp.hpp"
#include "quermass/polytope/planar.hpp"

namespace quermass {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

ConvexBody keep_meta(ConvexBody out, const ConvexBody& from) {
  out.flags = from.flags;
  out.name = from.name;
  return out;
}

/// Box as constraints A x <= b.
void box_constraints(const Box& b, Mat& a, Vec& off) {
  const int n = static_cast<int>(b.center.size());
  a = Mat::Zero(2 * n, n);
  off.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 1.0;
    off(i) = b.center(i) + b.halfwidths(i);
    a(n + i, i) = -1.0;
    off(n + i) = -(b.center(i) - b.halfwidths(i));
  }
}

Section polytope_section(const Mat& a, const Vec& b, const Mat& basis, const Vec& x, double scale) {
  const int m = static_cast<int>(basis.cols());
  const Mat ab = a * basis;
  const Vec rhs = b - a * x;
  std::vector<int> rows;
  for (int i = 0; i < ab.rows(); ++i) {
    const double norm = ab.row(i).norm();
    if (norm <= 1e-12 * a.row(i).norm()) {
      if (rhs(i) < -1e-12 * scale) return Section{SectionStatus::empty, std::nullopt};
      continue;
    }
    rows.push_back(i);
  }
  Mat ar(rows.size(), m);
  Vec br(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const double norm = ab.row(rows[r]).norm();
    ar.row(r) = ab.row(rows[r]) / norm;
    br(r) = rhs(rows[r]) / norm;
  }
  const lp::ChebyshevBall cheb = lp::chebyshev_center(ar, br);
  if (!cheb.feasible || cheb.radius < -1e-12 * scale) return Section{SectionStatus::empty, std::nullopt};
  if (cheb.radius <= 1e-9 * scale) return Section{SectionStatus::degenerate, std::nullopt};
  try {
    return Section{SectionStatus::ok, polytope_from_constraints(std::move(ar), std::move(br), cheb.center)};
  } catch (const DegenerateInputError&) {
    return Section{SectionStatus::degenerate, std::nullopt};
  }
}

double zonotope_volume(const Mat& generators) {
  // Volume of sum of segments [0, g_i] in R^m: sum over m-subsets of |det|.
  const int m = static_cast<int>(generators.rows());
  const int count = static_cast<int>(generators.cols());
  if (count < m) return 0.0;
  std::vector<int> pick(m);
  for (int i = 0; i < m; ++i) pick[i] = i;
  std::vector<double> buf(m * m);
  CompensatedSum total;
  while (true) {
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) buf[r * m + c] = generators(c, pick[r]);
    }
    total.add(std::abs(det_inplace(buf.data(), m)));
    int r = m - 1;
    while (r >= 0 && pick[r] == count - m + r) --r;
    if (r < 0) break;
    ++pick[r];
    for (int s = r + 1; s < m; ++s) pick[s] = pick[s - 1] + 1;
  }
  return total.value();
}

double point_set_volume(const Mat& pts) {
  const int m = static_cast<int>(pts.rows());
  if (m == 1) return pts.maxCoeff() - pts.minCoeff();
  if (m == 2) return planar_intrinsics(pts).area;
  return hull_volume(pts);
}

}  // namespace

double support(const ConvexBody& k, const Vec& u) {
  return std::visit(Overloaded{
                        [&](const Ball& b) { return b.center.dot(u) + b.radius * u.norm(); },
                        [&](const Box& b) { return b.center.dot(u) + b.halfwidths.dot(u.cwiseAbs()); },
                        [&](const Ellipsoid& e) { return e.center.dot(u) + std::sqrt(u.dot(e.shape * u)); },
                        [&](const auto&) { return (k.hull().vertices.transpose() * u).maxCoeff(); },
                    },
                    k.rep());
}

bool contains(const ConvexBody& k, const Vec& x, double tol) {
  return std::visit(Overloaded{
                        [&](const Ball& b) { return (x - b.center).norm() <= b.radius + tol; },
                        [&](const Box& b) {
                          return ((x - b.center).cwiseAbs() - b.halfwidths).maxCoeff() <= tol;
                        },
                        [&](const Ellipsoid& e) {
                          const Vec d = x - e.center;
                          return std::sqrt(d.dot(k.ellipsoid_inverse() * d)) <= 1.0 + tol;
                        },
                        [&](const VPolytope&) { return k.hull().contains(x, tol); },
                        [&](const HPolytope& h) { return (h.normals * x - h.offsets).maxCoeff() <= tol; },
                    },
                    k.rep());
}

bool contains_by_lp(const ConvexBody& k, const Vec& x, double tol) {
  return lp::in_convex_hull(k.polytope_vertices(), x, tol);
}

double volume(const ConvexBody& k) {
  const int n = k.dim();
  return std::visit(Overloaded{
                        [&](const Ball& b) { return omega(n) * std::pow(b.radius, n); },
                        [&](const Box& b) { return (2.0 * b.halfwidths).prod(); },
                        [&](const Ellipsoid&) { return omega(n) * k.ellipsoid_factor().diagonal().prod(); },
                        [&](const auto&) { return k.hull().boundary.volume(); },
                    },
                    k.rep());
}

Vec barycenter(const ConvexBody& k) {
  return std::visit(Overloaded{
                        [](const Ball& b) { return b.center; },
                        [](const Box& b) { return b.center; },
                        [](const Ellipsoid& e) { return e.center; },
                        [&](const auto&) { return volume_and_centroid(k.hull()).centroid; },
                    },
                    k.rep());
}

ConvexBody translate(const ConvexBody& k, const Vec& shift) {
  ConvexBody out = std::visit(
      Overloaded{
          [&](const Ball& b) { return ConvexBody::ball(b.center + shift, b.radius); },
          [&](const Box& b) { return ConvexBody::box(b.center + shift, b.halfwidths); },
          [&](const Ellipsoid& e) { return ConvexBody::ellipsoid(e.center + shift, e.shape); },
          [&](const VPolytope& v) { return ConvexBody::vpolytope(v.vertices.colwise() + shift); },
          [&](const HPolytope& h) {
            return polytope_from_constraints(h.normals, h.offsets + h.normals * shift,
                                             k.hull().interior_point + shift);
          },
      },
      k.rep());
  return keep_meta(std::move(out), k);
}

ConvexBody scale(const ConvexBody& k, double factor) {
  if (!(factor > 0.0)) throw DomainError("scale factor must be positive");
  ConvexBody out = std::visit(
      Overloaded{
          [&](const Ball& b) { return ConvexBody::ball(factor * b.center, factor * b.radius); },
          [&](const Box& b) { return ConvexBody::box(factor * b.center, factor * b.halfwidths); },
          [&](const Ellipsoid& e) { return ConvexBody::ellipsoid(factor * e.center, factor * factor * e.shape); },
          [&](const VPolytope& v) { return ConvexBody::vpolytope(factor * v.vertices); },
          [&](const HPolytope& h) {
            return polytope_from_constraints(h.normals, factor * h.offsets, factor * k.hull().interior_point);
          },
      },
      k.rep());
  return keep_meta(std::move(out), k);
}

ConvexBody rotate(const ConvexBody& k, const Mat& u) {
  ConvexBody out = std::visit(
      Overloaded{
          [&](const Ball& b) { return ConvexBody::ball(u * b.center, b.radius); },
          [&](const Box&) { return ConvexBody::vpolytope(u * k.polytope_vertices()); },
          [&](const Ellipsoid& e) {
            Mat s = u * e.shape * u.transpose();
            return ConvexBody::ellipsoid(u * e.center, 0.5 * (s + s.transpose()));
          },
          [&](const VPolytope& v) { return ConvexBody::vpolytope(u * v.vertices); },
          [&](const HPolytope& h) {
            return polytope_from_constraints(h.normals * u.transpose(), h.offsets, u * k.hull().interior_point);
          },
      },
      k.rep());
  return keep_meta(std::move(out), k);
}

ConvexBody translate_to_centered(const ConvexBody& k) {
  const Vec c = barycenter(k);
  ConvexBody out = c.norm() == 0.0 ? k : translate(k, -c);
  out.flags.centered = true;
  return out;
}

ConvexBody project(const ConvexBody& k, const Subspace& f) {
  if (f.n() != k.dim()) throw DomainError("subspace and body dimensions differ");
  if (f.k() >= k.dim()) throw DomainError("projection needs dim F < dim K");
  const Mat& b = f.basis();
  ConvexBody out = std::visit(Overloaded{
                                  [&](const Ball& ball) {
                                    return ConvexBody::ball(b.transpose() * ball.center, ball.radius);
                                  },
                                  [&](const Ellipsoid& e) {
                                    Mat s = b.transpose() * e.shape * b;
                                    return ConvexBody::ellipsoid(b.transpose() * e.center, 0.5 * (s + s.transpose()));
                                  },
                                  [&](const auto&) {
                                    return ConvexBody::vpolytope(b.transpose() * k.polytope_vertices());
                                  },
                              },
                              k.rep());
  out.flags = k.flags;
  return out;
}

double projection_volume(const ConvexBody& k, const Mat& basis) {
  const int m = static_cast<int>(basis.cols());
  return std::visit(Overloaded{
                        [&](const Ball& b) { return omega(m) * std::pow(b.radius, m); },
                        [&](const Ellipsoid& e) {
                          const Mat s = basis.transpose() * e.shape * basis;
                          return omega(m) * std::sqrt(std::max(0.0, s.determinant()));
                        },
                        [&](const Box& b) {
                          const Mat g = basis.transpose() * (2.0 * b.halfwidths).asDiagonal();
                          return zonotope_volume(g);
                        },
                        [&](const auto&) { return point_set_volume(basis.transpose() * k.hull().vertices); },
                    },
                    k.rep());
}

Section affine_section(const ConvexBody& k, const Subspace& f, const Vec& x) {
  if (f.n() != k.dim()) throw DomainError("subspace and body dimensions differ");
  const Mat& basis = f.basis();
  const double scale = std::max(k.circumradius(), 1e-300);
  return std::visit(
      Overloaded{
          [&](const Ball& b) {
            const Vec e = b.center - x;
            const Vec z = basis.transpose() * e;
            const double r2 = b.radius * b.radius - (e.squaredNorm() - z.squaredNorm());
            if (r2 < 0.0) return Section{SectionStatus::empty, std::nullopt};
            const double r = std::sqrt(r2);
            if (r <= 1e-9 * b.radius) return Section{SectionStatus::degenerate, std::nullopt};
            return Section{SectionStatus::ok, ConvexBody::ball(z, r)};
          },
          [&](const Ellipsoid& el) {
            const Mat& q = k.ellipsoid_inverse();
            const Vec e = x - el.center;
            const Mat m = basis.transpose() * q * basis;
            const Vec g = basis.transpose() * q * e;
            Eigen::LLT<Mat> llt(m);
            const Vec mg = llt.solve(g);
            const double rho = 1.0 - e.dot(q * e) + g.dot(mg);
            if (rho < 0.0) return Section{SectionStatus::empty, std::nullopt};
            Mat shape = rho * llt.solve(Mat::Identity(m.rows(), m.cols()));
            shape = 0.5 * (shape + shape.transpose());
            try {
              return Section{SectionStatus::ok, ConvexBody::ellipsoid(-mg, shape)};
            } catch (const DegenerateInputError&) {
              return Section{SectionStatus::degenerate, std::nullopt};
            }
          },
          [&](const Box& b) {
            Mat a;
            Vec off;
            box_constraints(b, a, off);
            return polytope_section(a, off, basis, x, scale);
          },
          [&](const VPolytope&) {
            const HullComplex& h = k.hull();
            return polytope_section(h.facet_normals(), h.facet_offsets(), basis, x, scale);
          },
          [&](const HPolytope& h) { return polytope_section(h.normals, h.offsets, basis, x, scale); },
      },
      k.rep());
}

Section central_section(const ConvexBody& k, const Subspace& f) { return affine_section(k, f, Vec::Zero(k.dim())); }

ConvexBody minkowski_sum(const ConvexBody& k, const ConvexBody& d) {
  if (k.dim() != d.dim()) throw DomainError("Minkowski sum of bodies in different dimensions");
  if (k.dim() > 5) throw CapabilityError("Minkowski sum supports dimension <= 5");
  for (const ConvexBody* b : {&k, &d}) {
    if (!b->is_polytope() && !std::holds_alternative<Box>(b->rep())) {
      throw CapabilityError("Minkowski sum needs polytopes, got " + b->type_name());
    }
  }
  const Mat a = k.polytope_vertices();
  const Mat b = d.polytope_vertices();
  Mat sums(k.dim(), a.cols() * b.cols());
  for (int i = 0; i < a.cols(); ++i) {
    for (int j = 0; j < b.cols(); ++j) sums.col(i * b.cols() + j) = a.col(i) + b.col(j);
  }
  ConvexBody out = ConvexBody::vpolytope(sums);
  out.flags.symmetric = k.flags.symmetric && d.flags.symmetric;
  out.flags.centered = out.flags.symmetric;
  return out;
}

UniformSampler::UniformSampler(const ConvexBody& k) : body_(&k), dim_(k.dim()) {
  if (k.is_polytope()) {
    lo_ = k.lower_corner();
    span_ = k.upper_corner() - lo_;
    normals_ = k.hull().facet_normals();
    offsets_ = k.hull().facet_offsets();
  }
}

void UniformSampler::sample_into(Rng& rng, double* out) const {
  Eigen::Map<Vec> x(out, dim_);
  std::visit(Overloaded{
                 [&](const Ball& b) { x = b.center + b.radius * random_in_ball(dim_, rng); },
                 [&](const Box& b) {
                   for (int i = 0; i < dim_; ++i) x(i) = b.center(i) + b.halfwidths(i) * (2.0 * rng.uniform() - 1.0);
                 },
                 [&](const Ellipsoid& e) { x = e.center + body_->ellipsoid_factor() * random_in_ball(dim_, rng); },
                 [&](const auto&) {
                   constexpr std::uint64_t kMaxProposals = 100000000;
                   for (std::uint64_t p = 0; p < kMaxProposals; ++p) {
                     for (int i = 0; i < dim_; ++i) x(i) = lo_(i) + span_(i) * rng.uniform();
                     if (((normals_ * x - offsets_).array() <= 0.0).all()) return;
                   }
                   throw EfficiencyError("rejection sampler found no point");
                 },
             },
             body_->rep());
}

Vec UniformSampler::sample(Rng& rng) const {
  Vec x(dim_);
  sample_into(rng, x.data());
  return x;
}

SampleSet sample_uniform(const ConvexBody& k, int m, Rng& rng) {
  if (!(volume(k) > 0.0)) throw DegenerateInputError("sampling needs positive volume");
  SampleSet out;
  out.points.resize(k.dim(), m);
  if (!k.is_polytope()) {
    UniformSampler s(k);
    for (int i = 0; i < m; ++i) s.sample_into(rng, out.points.col(i).data());
    out.proposals = static_cast<std::uint64_t>(m);
    return out;
  }
  const Vec lo = k.lower_corner();
  const Vec span = k.upper_corner() - lo;
  const Mat a = k.hull().facet_normals();
  const Vec b = k.hull().facet_offsets();
  Vec x(k.dim());
  int accepted = 0;
  while (accepted < m) {
    for (int i = 0; i < k.dim(); ++i) x(i) = lo(i) + span(i) * rng.uniform();
    ++out.proposals;
    if (((a * x - b).array() <= 0.0).all()) out.points.col(accepted++) = x;
    if (out.proposals >= 100000 && out.proposals % 100000 == 0 &&
        static_cast<double>(accepted) < 1e-4 * static_cast<double>(out.proposals)) {
      throw EfficiencyError("rejection acceptance rate below 1e-4; precondition the body");
    }
  }
  return out;
}

}  // namespace quermass
