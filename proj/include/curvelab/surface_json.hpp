#pragma once

#include <filesystem>
#include <json.hpp>
#include <string>

#include "curvelab/surface.hpp"

namespace curvelab {

using Json = nlohmann::ordered_json;

/// {"pants":[...], "curves":[{"id","ends":[[pants,slot],...]}],
///  "boundary":[[pants,slot]], "frontier":[...]} in that key order.
Json surface_to_json(const GluingGraph& g);

/// Structural parse only; call validate() for the invariants.
/// Throws Error("MalformedJson").
GluingGraph surface_from_json(const Json& j);

/// Reads and parses a surface file. Throws Error("IoError") or
/// Error("MalformedJson").
GluingGraph load_surface(const std::filesystem::path& path);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

/// Compact single-line serialization with a trailing newline.
std::string dump(const Json& j);

}  // namespace curvelab
