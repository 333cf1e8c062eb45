#include "quermass/polytope/hull.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "quermass/core/errors.hpp"

namespace quermass {

namespace {

using Index = std::array<int, kMaxHullDim>;

struct WorkFacet {
  Index v{};
  std::array<double, kMaxHullDim> n{};
  double offset = 0.0;
  bool alive = true;
};

double factorial(int d) {
  double f = 1.0;
  for (int i = 2; i <= d; ++i) f *= i;
  return f;
}

// Orthogonalizes `w` (length d) against `basis` twice; returns the residual norm.
double orthogonalize(double* w, const std::vector<std::array<double, kMaxHullDim>>& basis, int d) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& q : basis) {
      double dot = 0.0;
      for (int k = 0; k < d; ++k) dot += q[k] * w[k];
      for (int k = 0; k < d; ++k) w[k] -= dot * q[k];
    }
  }
  double norm = 0.0;
  for (int k = 0; k < d; ++k) norm += w[k] * w[k];
  return std::sqrt(norm);
}

// Hyperplane through the `d` columns `idx` of `p`, normal oriented away from `inside`.
void hyperplane(const Mat& p, const int* idx, int d, const double* inside, WorkFacet& f) {
  std::vector<std::array<double, kMaxHullDim>> basis;
  basis.reserve(d);
  const double* apex = p.col(idx[0]).data();
  for (int i = 1; i < d; ++i) {
    std::array<double, kMaxHullDim> w{};
    const double* q = p.col(idx[i]).data();
    for (int k = 0; k < d; ++k) w[k] = q[k] - apex[k];
    const double norm = orthogonalize(w.data(), basis, d);
    if (norm > 0.0) {
      for (int k = 0; k < d; ++k) w[k] /= norm;
      basis.push_back(w);
    }
  }
  // Complete with the coordinate axis farthest from the span.
  while (static_cast<int>(basis.size()) < d) {
    std::array<double, kMaxHullDim> best{};
    double best_norm = -1.0;
    for (int axis = 0; axis < d; ++axis) {
      std::array<double, kMaxHullDim> e{};
      e[axis] = 1.0;
      const double norm = orthogonalize(e.data(), basis, d);
      if (norm > best_norm) {
        best_norm = norm;
        best = e;
      }
    }
    for (int k = 0; k < d; ++k) best[k] /= best_norm;
    basis.push_back(best);
  }
  const auto& normal = basis.back();
  double side = 0.0;
  for (int k = 0; k < d; ++k) side += normal[k] * (inside[k] - apex[k]);
  const double s = side > 0.0 ? -1.0 : 1.0;
  double offset = 0.0;
  for (int k = 0; k < d; ++k) {
    f.n[k] = s * normal[k];
    offset += f.n[k] * apex[k];
  }
  f.offset = offset;
}

double diameter_bound(const Mat& p) {
  if (p.cols() == 0) return 0.0;
  const Vec lo = p.rowwise().minCoeff();
  const Vec hi = p.rowwise().maxCoeff();
  return (hi - lo).norm();
}

// Greedy affinely independent subset; size is (affine rank + 1).
std::vector<int> initial_simplex(const Mat& p, double rel_tol) {
  const int d = static_cast<int>(p.rows());
  const int count = static_cast<int>(p.cols());
  int first = 0;
  for (int i = 1; i < count; ++i) {
    for (int k = 0; k < d; ++k) {
      if (p(k, i) < p(k, first)) {
        first = i;
        break;
      }
      if (p(k, i) > p(k, first)) break;
    }
  }
  std::vector<int> chosen{first};
  std::vector<std::array<double, kMaxHullDim>> basis;
  double scale = 0.0;
  for (int step = 0; step < d; ++step) {
    int best = -1;
    double best_norm = 0.0;
    std::array<double, kMaxHullDim> best_w{};
    for (int i = 0; i < count; ++i) {
      std::array<double, kMaxHullDim> w{};
      for (int k = 0; k < d; ++k) w[k] = p(k, i) - p(k, first);
      const double norm = orthogonalize(w.data(), basis, d);
      if (norm > best_norm) {
        best_norm = norm;
        best = i;
        best_w = w;
      }
    }
    if (step == 0) scale = best_norm;
    if (best < 0 || scale == 0.0 || best_norm <= rel_tol * scale) break;
    for (int k = 0; k < d; ++k) best_w[k] /= best_norm;
    basis.push_back(best_w);
    chosen.push_back(best);
  }
  return chosen;
}

BoundaryTriangulation make_triangulation(const Mat& p, const std::vector<WorkFacet>& facets, const Vec& interior) {
  const int d = static_cast<int>(p.rows());
  BoundaryTriangulation t;
  t.dim = d;
  t.points = p;
  t.interior = interior;
  int alive = 0;
  for (const auto& f : facets) alive += f.alive ? 1 : 0;
  t.cells.reserve(static_cast<std::size_t>(alive) * d);
  t.normals.resize(d, alive);
  t.offsets.resize(alive);
  int c = 0;
  for (const auto& f : facets) {
    if (!f.alive) continue;
    for (int k = 0; k < d; ++k) {
      t.cells.push_back(f.v[k]);
      t.normals(k, c) = f.n[k];
    }
    t.offsets(c) = f.offset;
    ++c;
  }
  return t;
}

BoundaryTriangulation line_hull(const Mat& p, int lo, int hi) {
  std::vector<WorkFacet> facets(2);
  facets[0].v[0] = lo;
  facets[0].n[0] = -1.0;
  facets[0].offset = -p(0, lo);
  facets[1].v[0] = hi;
  facets[1].n[0] = 1.0;
  facets[1].offset = p(0, hi);
  Vec interior(1);
  interior(0) = 0.5 * (p(0, lo) + p(0, hi));
  return make_triangulation(p, facets, interior);
}

BoundaryTriangulation planar_hull(const Mat& p, double eps) {
  const int count = static_cast<int>(p.cols());
  std::vector<int> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (p(0, a) != p(0, b)) return p(0, a) < p(0, b);
    if (p(1, a) != p(1, b)) return p(1, a) < p(1, b);
    return a < b;
  });
  auto cross = [&](int o, int a, int b) {
    return (p(0, a) - p(0, o)) * (p(1, b) - p(1, o)) - (p(1, a) - p(1, o)) * (p(0, b) - p(0, o));
  };
  std::vector<int> chain(2 * count);
  int k = 0;
  for (int i = 0; i < count; ++i) {
    while (k >= 2) {
      const int a = chain[k - 2], b = chain[k - 1];
      const double len = std::hypot(p(0, b) - p(0, a), p(1, b) - p(1, a));
      if (cross(a, b, idx[i]) <= eps * len) --k; else break;
    }
    chain[k++] = idx[i];
  }
  for (int i = count - 2, lower = k + 1; i >= 0; --i) {
    while (k >= lower) {
      const int a = chain[k - 2], b = chain[k - 1];
      const double len = std::hypot(p(0, b) - p(0, a), p(1, b) - p(1, a));
      if (cross(a, b, idx[i]) <= eps * len) --k; else break;
    }
    chain[k++] = idx[i];
  }
  const int hull_size = k - 1;  // last point repeats the first
  Vec interior = Vec::Zero(2);
  for (int i = 0; i < hull_size; ++i) interior += p.col(chain[i]);
  interior /= hull_size;
  std::vector<WorkFacet> facets(hull_size);
  for (int i = 0; i < hull_size; ++i) {
    const int a = chain[i], b = chain[i + 1];
    const double dx = p(0, b) - p(0, a), dy = p(1, b) - p(1, a);
    const double len = std::hypot(dx, dy);
    WorkFacet& f = facets[i];
    f.v[0] = std::min(a, b);
    f.v[1] = std::max(a, b);
    f.n[0] = dy / len;  // counter-clockwise chain: outward is to the right
    f.n[1] = -dx / len;
    f.offset = f.n[0] * p(0, a) + f.n[1] * p(1, a);
  }
  return make_triangulation(p, facets, interior);
}

BoundaryTriangulation beneath_beyond(const Mat& p, const std::vector<int>& simplex, double eps) {
  const int d = static_cast<int>(p.rows());
  const int count = static_cast<int>(p.cols());
  Vec interior = Vec::Zero(d);
  for (int i : simplex) interior += p.col(i);
  interior /= static_cast<double>(simplex.size());

  std::vector<WorkFacet> facets;
  facets.reserve(4 * count + 16);
  for (int skip = 0; skip <= d; ++skip) {
    WorkFacet f;
    int m = 0;
    for (int t = 0; t <= d; ++t) {
      if (t != skip) f.v[m++] = simplex[t];
    }
    std::sort(f.v.begin(), f.v.begin() + d);
    hyperplane(p, f.v.data(), d, interior.data(), f);
    facets.push_back(f);
  }

  std::vector<char> used(count, 0);
  for (int i : simplex) used[i] = 1;
  std::vector<int> order;
  std::vector<double> dist(count, 0.0);
  for (int i = 0; i < count; ++i) {
    if (used[i]) continue;
    order.push_back(i);
    dist[i] = (p.col(i) - interior).squaredNorm();
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] > dist[b]; });

  std::vector<int> visible;
  struct Ridge {
    Index key;
    bool operator<(const Ridge& o) const { return key < o.key; }
    bool operator==(const Ridge& o) const { return key == o.key; }
  };
  std::vector<Ridge> ridges;
  int alive = static_cast<int>(facets.size());
  for (int pi : order) {
    const double* x = p.col(pi).data();
    visible.clear();
    for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi) {
      const WorkFacet& f = facets[fi];
      if (!f.alive) continue;
      double s = -f.offset;
      for (int k = 0; k < d; ++k) s += f.n[k] * x[k];
      if (s > eps) visible.push_back(fi);
    }
    if (visible.empty()) continue;
    ridges.clear();
    for (int fi : visible) {
      const WorkFacet& f = facets[fi];
      for (int skip = 0; skip < d; ++skip) {
        Ridge r;
        r.key.fill(-1);
        int m = 0;
        for (int t = 0; t < d; ++t) {
          if (t != skip) r.key[m++] = f.v[t];
        }
        ridges.push_back(r);
      }
    }
    std::sort(ridges.begin(), ridges.end());
    for (int fi : visible) facets[fi].alive = false;
    alive -= static_cast<int>(visible.size());
    for (std::size_t a = 0; a < ridges.size();) {
      std::size_t b = a + 1;
      while (b < ridges.size() && ridges[b] == ridges[a]) ++b;
      if (b - a == 1) {
        WorkFacet f;
        for (int t = 0; t < d - 1; ++t) f.v[t] = ridges[a].key[t];
        f.v[d - 1] = pi;
        std::sort(f.v.begin(), f.v.begin() + d);
        hyperplane(p, f.v.data(), d, interior.data(), f);
        facets.push_back(f);
        ++alive;
      }
      a = b;
    }
    if (static_cast<int>(facets.size()) > 4 * alive + 64) {
      std::erase_if(facets, [](const WorkFacet& f) { return !f.alive; });
    }
  }
  return make_triangulation(p, facets, interior);
}

}  // namespace

TriangulationResult triangulate_boundary(const Mat& points, double rel_tol) {
  const int d = static_cast<int>(points.rows());
  if (d < 1 || d > kMaxHullDim) {
    throw CapabilityError("convex hull supports dimensions 1.." + std::to_string(kMaxHullDim));
  }
  TriangulationResult result;
  if (points.cols() == 0) return result;
  const std::vector<int> simplex = initial_simplex(points, rel_tol);
  result.affine_rank = static_cast<int>(simplex.size()) - 1;
  if (result.affine_rank < d) return result;
  const double eps = rel_tol * diameter_bound(points);
  if (d == 1) {
    result.hull = line_hull(points, simplex[0], simplex[1]);
  } else if (d == 2) {
    result.hull = planar_hull(points, eps);
  } else {
    result.hull = beneath_beyond(points, simplex, eps);
  }
  return result;
}

double hull_volume(const Mat& points) {
  const TriangulationResult r = triangulate_boundary(points);
  return r.hull ? r.hull->volume() : 0.0;
}

double BoundaryTriangulation::volume() const {
  double v = 0.0;
  centroid(v);
  return v;
}

Vec BoundaryTriangulation::centroid(double& vol) const {
  const int d = dim;
  std::array<double, kMaxHullDim * kMaxHullDim> buf{};
  CompensatedSum total;
  Vec weighted = Vec::Zero(d);
  for (int c = 0; c < cell_count(); ++c) {
    const int* v = cell(c);
    for (int r = 0; r < d; ++r) {
      for (int k = 0; k < d; ++k) buf[r * d + k] = points(k, v[r]) - interior(k);
    }
    const double cone = std::abs(det_inplace(buf.data(), d)) / factorial(d);
    total.add(cone);
    Vec center = interior;
    for (int r = 0; r < d; ++r) center += points.col(v[r]);
    weighted += cone * center / (d + 1.0);
  }
  vol = total.value();
  return vol > 0.0 ? Vec(weighted / vol) : interior;
}

double BoundaryTriangulation::boundary_measure() const {
  const int d = dim;
  if (d == 1) return static_cast<double>(cell_count());
  std::array<double, kMaxHullDim * kMaxHullDim> buf{};
  CompensatedSum total;
  for (int c = 0; c < cell_count(); ++c) {
    const int* v = cell(c);
    for (int r = 1; r < d; ++r) {
      for (int k = 0; k < d; ++k) buf[(r - 1) * d + k] = points(k, v[r]) - points(k, v[0]);
    }
    for (int k = 0; k < d; ++k) buf[(d - 1) * d + k] = normals(k, c);
    total.add(std::abs(det_inplace(buf.data(), d)) / factorial(d - 1));
  }
  return total.value();
}

void BoundaryTriangulation::prepare_sampling() {
  const int d = dim;
  std::array<double, kMaxHullDim * kMaxHullDim> buf{};
  cumulative_volume.resize(cell_count());
  double acc = 0.0;
  for (int c = 0; c < cell_count(); ++c) {
    const int* v = cell(c);
    for (int r = 0; r < d; ++r) {
      for (int k = 0; k < d; ++k) buf[r * d + k] = points(k, v[r]) - interior(k);
    }
    acc += std::abs(det_inplace(buf.data(), d));
    cumulative_volume[c] = acc;
  }
}

Vec BoundaryTriangulation::sample(Rng& rng) const {
  const double target = rng.uniform() * cumulative_volume.back();
  const int c = static_cast<int>(std::lower_bound(cumulative_volume.begin(), cumulative_volume.end(), target) -
                                 cumulative_volume.begin());
  const int* v = cell(std::min(c, cell_count() - 1));
  // Dirichlet(1, ..., 1) weights over the cone's d + 1 corners.
  std::array<double, kMaxHullDim + 1> w{};
  double total = 0.0;
  for (int i = 0; i <= dim; ++i) {
    w[i] = -std::log(rng.uniform());
    total += w[i];
  }
  Vec x = (w[dim] / total) * interior;
  for (int i = 0; i < dim; ++i) x += (w[i] / total) * points.col(v[i]);
  return x;
}

Mat HullComplex::facet_normals() const {
  Mat a(facets.size(), dim);
  for (std::size_t i = 0; i < facets.size(); ++i) a.row(i) = facets[i].normal.transpose();
  return a;
}

Vec HullComplex::facet_offsets() const {
  Vec b(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i) b(i) = facets[i].offset;
  return b;
}

bool HullComplex::contains(const Vec& x, double tol) const {
  for (const auto& f : facets) {
    if (f.normal.dot(x) - f.offset > tol) return false;
  }
  return true;
}

HullResult convex_hull(const Mat& points) {
  HullResult result;
  TriangulationResult tri = triangulate_boundary(points);
  result.affine_rank = tri.affine_rank;
  if (!tri.hull) return result;
  BoundaryTriangulation& t = *tri.hull;
  const int d = t.dim;
  const int count = static_cast<int>(points.cols());
  const double eps = kVisibilityTolerance * diameter_bound(points);

  // A point is a vertex iff the normals of its incident cells span R^d.
  std::vector<std::vector<int>> incident(count);
  for (int c = 0; c < t.cell_count(); ++c) {
    for (int r = 0; r < d; ++r) incident[t.cell(c)[r]].push_back(c);
  }
  std::vector<int> remap(count, -1);
  int vertex_count = 0;
  for (int i = 0; i < count; ++i) {
    if (incident[i].empty()) continue;
    std::vector<std::array<double, kMaxHullDim>> basis;
    for (int c : incident[i]) {
      std::array<double, kMaxHullDim> w{};
      for (int k = 0; k < d; ++k) w[k] = t.normals(k, c);
      const double norm = orthogonalize(w.data(), basis, d);
      if (norm > 1e-7) {
        for (int k = 0; k < d; ++k) w[k] /= norm;
        basis.push_back(w);
        if (static_cast<int>(basis.size()) == d) break;
      }
    }
    if (static_cast<int>(basis.size()) == d) remap[i] = vertex_count++;
  }

  HullComplex hull;
  hull.dim = d;
  hull.vertices.resize(d, vertex_count);
  for (int i = 0; i < count; ++i) {
    if (remap[i] >= 0) hull.vertices.col(remap[i]) = points.col(i);
  }
  hull.interior_point = t.interior;

  // Merge coplanar cells into facets.
  std::vector<int> group_of(t.cell_count(), -1);
  for (int c = 0; c < t.cell_count(); ++c) {
    int g = -1;
    for (int h = 0; h < static_cast<int>(hull.facets.size()); ++h) {
      const HullFacet& f = hull.facets[h];
      if ((f.normal - t.normals.col(c)).norm() < 1e-8 && std::abs(f.offset - t.offsets(c)) <= 10.0 * eps + 1e-14) {
        g = h;
        break;
      }
    }
    if (g < 0) {
      HullFacet f;
      f.normal = t.normals.col(c);
      f.offset = t.offsets(c);
      hull.facets.push_back(std::move(f));
      g = static_cast<int>(hull.facets.size()) - 1;
    }
    group_of[c] = g;
    for (int r = 0; r < d; ++r) {
      const int v = remap[t.cell(c)[r]];
      if (v >= 0) hull.facets[g].vertices.push_back(v);
    }
  }
  for (auto& f : hull.facets) {
    std::sort(f.vertices.begin(), f.vertices.end());
    f.vertices.erase(std::unique(f.vertices.begin(), f.vertices.end()), f.vertices.end());
  }
  hull.boundary = std::move(t);
  result.hull = std::move(hull);
  return result;
}

VolumeCentroid volume_and_centroid(const HullComplex& hull) {
  VolumeCentroid vc;
  vc.centroid = hull.boundary.centroid(vc.volume);
  return vc;
}

int edge_count_3d(const HullComplex& hull) {
  if (hull.dim != 3) throw DomainError("edge_count_3d requires a 3-dimensional hull");
  const int v = static_cast<int>(hull.vertices.cols());
  int edges = 0;
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      int shared = 0;
      for (const auto& f : hull.facets) {
        const bool has_a = std::binary_search(f.vertices.begin(), f.vertices.end(), a);
        const bool has_b = std::binary_search(f.vertices.begin(), f.vertices.end(), b);
        if (has_a && has_b) ++shared;
      }
      if (shared >= 2) ++edges;
    }
  }
  return edges;
}

AffineFrame affine_frame(const Mat& points, std::optional<Vec> origin, double rel_tol) {
  const int n = static_cast<int>(points.rows());
  const int count = static_cast<int>(points.cols());
  AffineFrame frame;
  frame.origin = origin ? *origin : Vec(points.col(0));
  Mat diff = points.colwise() - frame.origin;
  std::vector<Vec> basis;
  double scale = 0.0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    double best_norm = 0.0;
    Vec best_w;
    for (int i = 0; i < count; ++i) {
      Vec w = diff.col(i);
      for (int pass = 0; pass < 2; ++pass) {
        for (const Vec& q : basis) w -= q.dot(w) * q;
      }
      const double norm = w.norm();
      if (norm > best_norm) {
        best_norm = norm;
        best = i;
        best_w = std::move(w);
      }
    }
    if (step == 0) scale = best_norm;
    if (best < 0 || scale == 0.0 || best_norm <= rel_tol * scale) break;
    basis.push_back(best_w / best_norm);
  }
  frame.rank = static_cast<int>(basis.size());
  frame.basis.resize(n, frame.rank);
  for (int i = 0; i < frame.rank; ++i) frame.basis.col(i) = basis[i];
  frame.coords = frame.basis.transpose() * diff;
  return frame;
}

}  // namespace quermass
