// SPDX-License-Identifier: Apache-2.0
//
// Polygon file format: {"vertices": [[x, y], ...]} in counterclockwise order.
// Float polygons use JSON numbers; exact polygons use strings "p/q".
#pragma once

#include <polygap/geometry.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

namespace polygap {

using AnyPolygon = std::variant<ConvexPolygon<double>, ConvexPolygon<Rational>>;

/// Throws UsageError on malformed JSON or mixed number/string coordinates and
/// GeometryError when the vertices are not strictly convex.
AnyPolygon parse_polygon_json(std::string_view text);
AnyPolygon read_polygon_file(const std::filesystem::path& path);

template <Number T>
std::string polygon_to_json(const ConvexPolygon<T>& polygon);

}  // namespace polygap
