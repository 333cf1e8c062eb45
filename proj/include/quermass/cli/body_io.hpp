#pragma once

#include <string>

#include <json.hpp>

#include "quermass/bodies/convex_body.hpp"

namespace quermass {

/// Parses a body document:
///   {"type": "ball" | "box" | "ellipsoid" | "vpolytope" | "hpolytope", "dim": n,
///    ...representation fields..., "name": "...",
///    "flags": {"symmetric": bool, "centered": bool}}
/// Fields: ball {center, radius}; box {center, halfwidths}; ellipsoid
/// {center, shape}; vpolytope {vertices: one row per point}; hpolytope
/// {normals: one row per constraint, offsets}. Missing flags are inferred.
/// Declared flags are checked against the body. Errors are ValidationError
/// messages prefixed with the field path under `path`.
ConvexBody body_from_json(const nlohmann::json& doc, const std::string& path = "body");
nlohmann::json body_to_json(const ConvexBody& k);

ConvexBody load_body_file(const std::string& file);

/// "corpus:<name>" entries resolve through the corpus, anything else is a file.
std::vector<ConvexBody> resolve_body_argument(const std::string& arg);

/// Flags that hold for the body, to tolerance 1e-9 relative to its size.
BodyFlags detect_flags(const ConvexBody& k);

}  // namespace quermass
