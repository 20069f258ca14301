// SPDX-License-Identifier: Apache-2.0
#include <polygap/polygon_io.hpp>

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace polygap {

using nlohmann::json;

namespace {

Mode coordinate_mode(const json& value) {
  if (value.is_number()) return Mode::kFloat;
  if (value.is_string()) return Mode::kExact;
  throw UsageError("polygon coordinates must be numbers (float) or \"p/q\" strings (exact)");
}

}  // namespace

AnyPolygon parse_polygon_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("invalid polygon JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw UsageError("polygon JSON must be an object with a \"vertices\" array");
  }
  const json& rows = doc["vertices"];
  if (rows.empty()) throw UsageError("polygon has no vertices");

  std::optional<Mode> mode;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != 2) throw UsageError("each vertex must be a pair [x, y]");
    for (const auto& c : row) {
      const Mode m = coordinate_mode(c);
      if (mode && *mode != m) throw UsageError("polygon mixes float and exact coordinates");
      mode = m;
    }
  }

  if (*mode == Mode::kExact) {
    std::vector<Vec2<Rational>> vertices;
    for (const auto& row : rows) {
      vertices.push_back({parse_rational(row[0].get<std::string>()), parse_rational(row[1].get<std::string>())});
    }
    return ConvexPolygon<Rational>::make(std::move(vertices));
  }
  std::vector<Vec2<double>> vertices;
  for (const auto& row : rows) vertices.push_back({row[0].get<double>(), row[1].get<double>()});
  return ConvexPolygon<double>::make(std::move(vertices));
}

AnyPolygon read_polygon_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open polygon file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_polygon_json(buffer.str());
}

template <Number T>
std::string polygon_to_json(const ConvexPolygon<T>& polygon) {
  json rows = json::array();
  for (const auto& p : polygon.vertices()) {
    if constexpr (mode_of<T> == Mode::kExact) {
      rows.push_back({to_string(p.x), to_string(p.y)});
    } else {
      rows.push_back({p.x, p.y});
    }
  }
  return json{{"vertices", rows}}.dump();
}

template std::string polygon_to_json<double>(const ConvexPolygon<double>&);
template std::string polygon_to_json<Rational>(const ConvexPolygon<Rational>&);

}  // namespace polygap
