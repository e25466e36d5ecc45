#include "ucon/io.hpp"

#include <fstream>
#include <sstream>

namespace ucon {

using nlohmann::json;

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw IoError(std::string("missing numeric field '") + key + "'");
  return j.at(key).get<double>();
}

Point2 point_field(const json& j, const char* key) {
  if (!j.contains(key)) throw IoError(std::string("missing field '") + key + "'");
  return point_from_json(j.at(key));
}
}  // namespace

json point_to_json(Point2 p) { return json::array({p.x, p.y}); }

Point2 point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw IoError("a point must be a [x, y] number array");
  return {j[0].get<double>(), j[1].get<double>()};
}

json region_to_json(const Region& r) {
  return std::visit(
      overloaded{
          [](const FixedPoint& f) { return json{{"type", "point"}, {"p", point_to_json(f.p)}}; },
          [](const PointPair& p) {
            return json{{"type", "pair"}, {"a", point_to_json(p.a)}, {"b", point_to_json(p.b)}};
          },
          [](const SegmentRegion& s) {
            return json{
                {"type", "segment"}, {"a", point_to_json(s.s.a)}, {"b", point_to_json(s.s.b)}};
          },
          [](const Disk& d) {
            return json{{"type", "disk"}, {"center", point_to_json(d.center)}, {"radius", d.radius}};
          },
          [](const Square& q) {
            return json{{"type", "square"}, {"corner", point_to_json(q.corner)}, {"side", q.side}};
          },
      },
      r);
}

Region region_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    throw IoError("region must be an object with a string 'type'");
  const auto type = j.at("type").get<std::string>();
  if (type == "point") return FixedPoint{point_field(j, "p")};
  if (type == "pair") return PointPair{point_field(j, "a"), point_field(j, "b")};
  if (type == "segment") return SegmentRegion{{point_field(j, "a"), point_field(j, "b")}};
  if (type == "disk") {
    const double r = j.contains("radius") ? number_field(j, "radius") : 1.0;
    return Disk{point_field(j, "center"), r};
  }
  if (type == "square") return Square{point_field(j, "corner"), number_field(j, "side")};
  throw IoError("unknown region type '" + type + "'");
}

json instance_to_json(const Instance& inst) {
  json j = json::object();
  if (inst.name) j["name"] = *inst.name;
  json regions = json::array();
  for (const auto& r : inst.regions) regions.push_back(region_to_json(r));
  j["regions"] = std::move(regions);
  return j;
}

Instance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("regions") || !j.at("regions").is_array())
    throw IoError("instance must be an object with a 'regions' array");
  Instance inst;
  if (j.contains("name") && j.at("name").is_string()) inst.name = j.at("name").get<std::string>();
  std::size_t i = 0;
  for (const auto& r : j.at("regions")) {
    try {
      inst.regions.push_back(region_from_json(r));
    } catch (const IoError& e) {
      throw IoError("region " + std::to_string(i) + ": " + e.what());
    }
    ++i;
  }
  check_instance(inst);
  return inst;
}

json selection_to_json(const Selection& sel) {
  json pts = json::array();
  for (const auto& p : sel.points) pts.push_back(point_to_json(p));
  return json{{"points", std::move(pts)}};
}

Selection selection_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j.at("points").is_array())
    throw IoError("selection must be an object with a 'points' array");
  Selection sel;
  for (const auto& p : j.at("points")) sel.points.push_back(point_from_json(p));
  return sel;
}

json solution_to_json(const SpanningSolution& s) {
  json edges = json::array();
  for (const auto& [a, b] : s.edges) edges.push_back(json::array({a, b}));
  return json{{"edges", std::move(edges)},
              {"lengths_desc", s.lengths_desc},
              {"bottleneck", s.bottleneck},
              {"alpha", s.alpha}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ucon
