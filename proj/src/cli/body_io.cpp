#include "quermass/cli/body_io.hpp"

#include <fstream>
#include <variant>

#include "quermass/bodies/operations.hpp"
#include "quermass/cli/corpus.hpp"
#include "quermass/core/errors.hpp"

namespace quermass {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

const json& field(const json& doc, const std::string& key, const std::string& path) {
  if (!doc.contains(key)) invalid(path + "." + key, "missing");
  return doc.at(key);
}

Vec read_vec(const json& v, int dim, const std::string& path) {
  if (!v.is_array()) invalid(path, "expected an array of numbers");
  if (dim >= 0 && static_cast<int>(v.size()) != dim) {
    invalid(path, "expected " + std::to_string(dim) + " entries, got " + std::to_string(v.size()));
  }
  Vec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) invalid(path + "[" + std::to_string(i) + "]", "expected a number");
    out(static_cast<Eigen::Index>(i)) = v[i].get<double>();
  }
  return out;
}

/// Rows of the JSON matrix as rows of the result.
Mat read_rows(const json& m, int cols, const std::string& path) {
  if (!m.is_array() || m.empty()) invalid(path, "expected a non-empty array of rows");
  Mat out(static_cast<Eigen::Index>(m.size()), cols);
  for (std::size_t i = 0; i < m.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = read_vec(m[i], cols, path + "[" + std::to_string(i) + "]").transpose();
  }
  return out;
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json rows_json(const Mat& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i).transpose()));
  return a;
}

ConvexBody build(const json& doc, const std::string& path) {
  if (!doc.is_object()) invalid(path, "expected an object");
  const json& type = field(doc, "type", path);
  if (!type.is_string()) invalid(path + ".type", "expected a string");
  const json& dim_field = field(doc, "dim", path);
  if (!dim_field.is_number_integer() || dim_field.get<int>() < 1) invalid(path + ".dim", "expected a positive integer");
  const int n = dim_field.get<int>();
  const std::string t = type.get<std::string>();
  try {
    if (t == "ball") {
      const double r = field(doc, "radius", path).get<double>();
      if (!(r > 0)) invalid(path + ".radius", "must be positive");
      return ConvexBody::ball(read_vec(field(doc, "center", path), n, path + ".center"), r);
    }
    if (t == "box") {
      return ConvexBody::box(read_vec(field(doc, "center", path), n, path + ".center"),
                             read_vec(field(doc, "halfwidths", path), n, path + ".halfwidths"));
    }
    if (t == "ellipsoid") {
      const Mat shape = read_rows(field(doc, "shape", path), n, path + ".shape");
      if (shape.rows() != n) invalid(path + ".shape", "expected " + std::to_string(n) + " rows");
      return ConvexBody::ellipsoid(read_vec(field(doc, "center", path), n, path + ".center"), shape);
    }
    if (t == "vpolytope") {
      return ConvexBody::vpolytope(read_rows(field(doc, "vertices", path), n, path + ".vertices").transpose());
    }
    if (t == "hpolytope") {
      const Mat a = read_rows(field(doc, "normals", path), n, path + ".normals");
      const Vec b = read_vec(field(doc, "offsets", path), static_cast<int>(a.rows()), path + ".offsets");
      return ConvexBody::hpolytope(a, b);
    }
  } catch (const json::exception& e) {
    invalid(path, e.what());
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception& e) {
    invalid(path, e.what());
  }
  invalid(path + ".type", "unknown body type '" + t + "'");
}

}  // namespace

BodyFlags detect_flags(const ConvexBody& k) {
  const double tol = 1e-9 * std::max(1.0, k.circumradius());
  BodyFlags f;
  f.centered = barycenter(k).norm() <= tol;
  if (const auto* b = std::get_if<Ball>(&k.rep())) {
    f.symmetric = b->center.norm() <= tol;
  } else if (const auto* b = std::get_if<Box>(&k.rep())) {
    f.symmetric = b->center.norm() <= tol;
  } else if (const auto* e = std::get_if<Ellipsoid>(&k.rep())) {
    f.symmetric = e->center.norm() <= tol;
  } else {
    const Mat v = k.polytope_vertices();
    f.symmetric = true;
    for (Eigen::Index i = 0; i < v.cols() && f.symmetric; ++i) f.symmetric = contains(k, -v.col(i), tol);
  }
  return f;
}

ConvexBody body_from_json(const json& doc, const std::string& path) {
  ConvexBody k = build(doc, path);
  const BodyFlags actual = detect_flags(k);
  BodyFlags flags = actual;
  if (doc.contains("flags")) {
    const json& f = doc.at("flags");
    if (!f.is_object()) invalid(path + ".flags", "expected an object");
    for (const char* key : {"symmetric", "centered"}) {
      if (!f.contains(key)) continue;
      if (!f.at(key).is_boolean()) invalid(path + ".flags." + key, "expected a boolean");
      const bool declared = f.at(key).get<bool>();
      const bool holds = std::string(key) == "symmetric" ? actual.symmetric : actual.centered;
      if (declared && !holds) invalid(path + ".flags." + key, "declared true but the body is not " + std::string(key));
      (std::string(key) == "symmetric" ? flags.symmetric : flags.centered) = declared;
    }
  }
  k.flags = flags;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) invalid(path + ".name", "expected a string");
    k.name = doc.at("name").get<std::string>();
  }
  return k;
}

json body_to_json(const ConvexBody& k) {
  json doc;
  doc["type"] = k.type_name();
  doc["dim"] = k.dim();
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Ball>) {
          doc["center"] = vec_json(r.center);
          doc["radius"] = r.radius;
        } else if constexpr (std::is_same_v<T, Box>) {
          doc["center"] = vec_json(r.center);
          doc["halfwidths"] = vec_json(r.halfwidths);
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          doc["center"] = vec_json(r.center);
          doc["shape"] = rows_json(r.shape);
        } else if constexpr (std::is_same_v<T, VPolytope>) {
          doc["vertices"] = rows_json(r.vertices.transpose());
        } else {
          doc["normals"] = rows_json(r.normals);
          doc["offsets"] = vec_json(r.offsets);
        }
      },
      k.rep());
  if (!k.name.empty()) doc["name"] = k.name;
  doc["flags"] = {{"symmetric", k.flags.symmetric}, {"centered", k.flags.centered}};
  return doc;
}

ConvexBody load_body_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ValidationError(file + ": cannot open body file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError(file + ": " + e.what());
  }
  return body_from_json(doc, file);
}

std::vector<ConvexBody> resolve_body_argument(const std::string& arg) {
  const std::string prefix = "corpus:";
  if (arg.rfind(prefix, 0) == 0) return resolve_corpus_entry(arg.substr(prefix.size()));
  return {load_body_file(arg)};
}

}  // namespace quermass
