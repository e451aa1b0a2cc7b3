#include "curvelab/surface_json.hpp"

#include <fstream>
#include <sstream>

#include "curvelab/error.hpp"

namespace curvelab {

namespace {

Json slot_to_json(const PantsSlot& s) { return Json::array({s.pants, s.slot}); }

PantsSlot slot_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_number_integer()) {
    throw Error("MalformedJson", "slot must be [pants, index], got " + j.dump());
  }
  return PantsSlot{j[0].get<std::string>(), j[1].get<int>()};
}

std::vector<std::string> strings_from_json(const Json& j, const char* field) {
  if (!j.is_array()) throw Error("MalformedJson", std::string(field) + " must be an array");
  std::vector<std::string> out;
  for (const Json& e : j) {
    if (!e.is_string()) throw Error("MalformedJson", std::string(field) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

Json surface_to_json(const GluingGraph& g) {
  Json j;
  j["pants"] = g.pants;
  Json curves = Json::array();
  for (const Curve& c : g.curves) {
    Json ends = Json::array();
    for (const PantsSlot& s : c.ends) ends.push_back(slot_to_json(s));
    Json entry;
    entry["id"] = c.id;
    entry["ends"] = std::move(ends);
    curves.push_back(std::move(entry));
  }
  j["curves"] = std::move(curves);
  Json boundary = Json::array();
  for (const PantsSlot& s : g.boundary) boundary.push_back(slot_to_json(s));
  j["boundary"] = std::move(boundary);
  j["frontier"] = g.frontier;
  return j;
}

GluingGraph surface_from_json(const Json& j) {
  if (!j.is_object()) throw Error("MalformedJson", "surface must be an object");
  for (const char* key : {"pants", "curves"}) {
    if (!j.contains(key)) throw Error("MalformedJson", std::string("missing field ") + key);
  }
  GluingGraph g;
  g.pants = strings_from_json(j.at("pants"), "pants");
  const Json& curves = j.at("curves");
  if (!curves.is_array()) throw Error("MalformedJson", "curves must be an array");
  for (const Json& c : curves) {
    if (!c.is_object() || !c.contains("id") || !c.contains("ends") || !c["id"].is_string() ||
        !c["ends"].is_array()) {
      throw Error("MalformedJson", "curve entries need string id and ends array");
    }
    Curve curve{c["id"].get<std::string>(), {}};
    for (const Json& e : c["ends"]) curve.ends.push_back(slot_from_json(e));
    g.curves.push_back(std::move(curve));
  }
  if (j.contains("boundary")) {
    if (!j["boundary"].is_array()) throw Error("MalformedJson", "boundary must be an array");
    for (const Json& s : j["boundary"]) g.boundary.push_back(slot_from_json(s));
  }
  if (j.contains("frontier")) g.frontier = strings_from_json(j["frontier"], "frontier");
  return g;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("MalformedJson", path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("IoError", "cannot write " + path.string());
  out << dump(j);
}

GluingGraph load_surface(const std::filesystem::path& path) {
  return surface_from_json(read_json_file(path));
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace curvelab
