// SPDX-License-Identifier: Apache-2.0
#include <polygap/geometry.hpp>

#include <numbers>
#include <sstream>

namespace polygap {

namespace {

template <Number T>
T cross(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.y - a.y * b.x;
}

template <Number T>
std::string describe(const Vec2<T>& p) {
  std::ostringstream out;
  if constexpr (mode_of<T> == Mode::kExact) {
    out << '(' << to_string(p.x) << ", " << to_string(p.y) << ')';
  } else {
    out.precision(17);
    out << '(' << p.x << ", " << p.y << ')';
  }
  return out.str();
}

// Threshold a cross product must exceed to count as a strict left turn.
template <Number T>
T turn_threshold(std::span<const Vec2<T>> vertices) {
  if constexpr (mode_of<T> == Mode::kExact) {
    return T(0);
  } else {
    double scale = 0.0;
    for (const auto& p : vertices) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    return kFloatConvexityTolerance * scale * scale;
  }
}

}  // namespace

template <Number T>
std::string convexity_violation(std::span<const Vec2<T>> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) return "polygon needs at least 3 vertices, got " + std::to_string(n);
  const T threshold = turn_threshold(vertices);

  for (std::size_t k = 0; k < n; ++k) {
    const auto& prev = vertices[(k + n - 1) % n];
    const auto& cur = vertices[k];
    const auto& next = vertices[(k + 1) % n];
    if (!(cross<T>(cur - prev, next - cur) > threshold)) {
      return "turn at vertex " + std::to_string(k) + " " + describe(cur) + " is not a strict left turn";
    }
  }
  // Local left turns alone admit self-overlapping windings; every vertex must
  // also lie strictly left of every edge it does not touch.
  for (std::size_t k = 0; k < n; ++k) {
    const auto& a = vertices[k];
    const auto& b = vertices[(k + 1) % n];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k || j == (k + 1) % n) continue;
      if (!(cross<T>(b - a, vertices[j] - a) > threshold)) {
        return "vertex " + std::to_string(j) + " " + describe(vertices[j]) + " is not strictly left of edge " +
               std::to_string(k) + "->" + std::to_string((k + 1) % n);
      }
    }
  }
  return {};
}

template <Number T>
ConvexPolygon<T> ConvexPolygon<T>::make(std::vector<Vec2<T>> vertices) {
  if (auto problem = convexity_violation<T>(vertices); !problem.empty()) {
    throw GeometryError("not a strictly convex counterclockwise polygon: " + problem);
  }
  return ConvexPolygon(std::move(vertices));
}

template <Number T>
const Vec2<T>& ConvexPolygon<T>::vertex(std::ptrdiff_t k) const {
  const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((k % n) + n) % n)];
}

template <Number T>
ConvexPolygon<T> ConvexPolygon<T>::without_vertex(std::size_t index) const {
  if (vertices_.size() < 4) throw UsageError("cannot remove a vertex from a triangle");
  if (index >= vertices_.size()) throw UsageError("vertex index out of range");
  std::vector<Vec2<T>> rest;
  rest.reserve(vertices_.size() - 1);
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (k != index) rest.push_back(vertices_[k]);
  }
  // Removing a vertex of a strictly convex polygon keeps it strictly convex.
  return ConvexPolygon(std::move(rest));
}

template <Number T>
ConvexPolygon<T> ConvexPolygon<T>::subpolygon(std::span<const std::size_t> indices) const {
  if (indices.size() < 3) throw UsageError("a subpolygon needs at least 3 vertices");
  std::vector<Vec2<T>> picked;
  picked.reserve(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= vertices_.size() || (i > 0 && indices[i] <= indices[i - 1])) {
      throw UsageError("subpolygon indices must be strictly increasing and in range");
    }
    picked.push_back(vertices_[indices[i]]);
  }
  return ConvexPolygon(std::move(picked));
}

template <Number T>
T polygon_area(const ConvexPolygon<T>& polygon) {
  const auto v = polygon.vertices();
  T twice(0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    twice += cross(v[k], v[(k + 1) % v.size()]);
  }
  return twice / 2;
}

template <Number T>
T polygon_area_about(const ConvexPolygon<T>& polygon, const Vec2<T>& anchor) {
  const auto v = polygon.vertices();
  T total(0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    total += wedge(v[k] - anchor, v[(k + 1) % v.size()] - anchor);
  }
  return total;
}

template <Number T>
std::vector<T> ear_areas(const ConvexPolygon<T>& polygon) {
  const auto n = static_cast<std::ptrdiff_t>(polygon.size());
  std::vector<T> ears;
  ears.reserve(polygon.size());
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    ears.push_back(triangle_area(polygon.vertex(k - 1), polygon.vertex(k), polygon.vertex(k + 1)));
  }
  return ears;
}

template <Number T>
EarMinimum<T> min_ear_ratio(const ConvexPolygon<T>& polygon) {
  const auto ears = ear_areas(polygon);
  std::size_t best = 0;
  for (std::size_t k = 1; k < ears.size(); ++k) {
    if (strictly_less(ears[k], ears[best])) best = k;
  }
  T ratio = ears[best] / polygon_area(polygon);
  return {best, std::move(ratio)};
}

template <Number T>
AffineMap<T> AffineMap<T>::make(T a, T b, T c, T d, Vec2<T> translation) {
  T det = a * d - b * c;
  bool singular = false;
  if constexpr (mode_of<T> == Mode::kExact) {
    singular = det == 0;
  } else {
    singular = !(std::abs(det) > 1e-12);
  }
  if (singular) throw UsageError("affine map has a singular linear part");
  return AffineMap(std::move(a), std::move(b), std::move(c), std::move(d), std::move(translation));
}

template <Number T>
ConvexPolygon<T> apply_affine(const AffineMap<T>& map, const ConvexPolygon<T>& polygon) {
  const auto v = polygon.vertices();
  std::vector<Vec2<T>> image;
  image.reserve(v.size());
  image.push_back(map(v[0]));
  if (map.determinant() > 0) {
    for (std::size_t k = 1; k < v.size(); ++k) image.push_back(map(v[k]));
  } else {
    for (std::size_t k = v.size() - 1; k >= 1; --k) image.push_back(map(v[k]));
  }
  return ConvexPolygon<T>::make(std::move(image));
}

ConvexPolygon<double> regular_polygon(std::size_t n, double circumradius, double phase) {
  if (n < 3) throw UsageError("regular polygon needs n >= 3");
  if (!(circumradius > 0)) throw UsageError("circumradius must be positive");
  std::vector<Vec2<double>> vertices;
  vertices.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = phase + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    vertices.push_back({circumradius * std::cos(angle), circumradius * std::sin(angle)});
  }
  return ConvexPolygon<double>::make(std::move(vertices));
}

ConvexPolygon<double> to_double(const ConvexPolygon<Rational>& polygon) {
  std::vector<Vec2<double>> vertices;
  vertices.reserve(polygon.size());
  for (const auto& p : polygon.vertices()) vertices.push_back({p.x.get_d(), p.y.get_d()});
  return ConvexPolygon<double>::make(std::move(vertices));
}

ConvexPolygon<Rational> snap_to_rational(const ConvexPolygon<double>& polygon, std::int64_t max_denominator) {
  std::vector<Vec2<Rational>> vertices;
  vertices.reserve(polygon.size());
  for (const auto& p : polygon.vertices()) {
    vertices.push_back({snap_rational(p.x, max_denominator), snap_rational(p.y, max_denominator)});
  }
  return ConvexPolygon<Rational>::make(std::move(vertices));
}

#define POLYGAP_INSTANTIATE(T)                                                              \
  template class ConvexPolygon<T>;                                                          \
  template class AffineMap<T>;                                                              \
  template std::string convexity_violation<T>(std::span<const Vec2<T>>);                    \
  template T polygon_area<T>(const ConvexPolygon<T>&);                                      \
  template T polygon_area_about<T>(const ConvexPolygon<T>&, const Vec2<T>&);                \
  template std::vector<T> ear_areas<T>(const ConvexPolygon<T>&);                            \
  template EarMinimum<T> min_ear_ratio<T>(const ConvexPolygon<T>&);                         \
  template ConvexPolygon<T> apply_affine<T>(const AffineMap<T>&, const ConvexPolygon<T>&);

POLYGAP_INSTANTIATE(double)
POLYGAP_INSTANTIATE(Rational)
#undef POLYGAP_INSTANTIATE

}  // namespace polygap
