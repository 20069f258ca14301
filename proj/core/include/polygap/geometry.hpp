// SPDX-License-Identifier: Apache-2.0
//
// Two-dimensional geometry kernel shared by every other module. All types are
// immutable values templated on the number type: Rational for exact
// verification, double for search.
#pragma once

#include <polygap/errors.hpp>
#include <polygap/scalar.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace polygap {

template <Number T>
struct Vec2 {
  T x;
  T y;

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(const T& s, const Vec2& a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

/// Outer product: half the cross product, i.e. the signed area of the
/// triangle (origin, u, v). Positive when v is counterclockwise from u.
template <Number T>
T wedge(const Vec2<T>& u, const Vec2<T>& v) {
  T twice = u.x * v.y - u.y * v.x;
  return twice / 2;
}

/// Signed area of triangle (a, b, c).
template <Number T>
T triangle_area(const Vec2<T>& a, const Vec2<T>& b, const Vec2<T>& c) {
  return wedge(b - a, c - a);
}

/// Relative tolerance used for float-mode tie detection (argmin/argmax).
inline constexpr double kFloatTieTolerance = 1e-12;
/// Float-mode strict convexity: cross product must exceed this times scale^2.
inline constexpr double kFloatConvexityTolerance = 1e-12;

/// `candidate` beats `incumbent` for a minimum. Float ties within the relative
/// tolerance keep the incumbent, so the smallest index wins.
template <Number T>
bool strictly_less(const T& candidate, const T& incumbent) {
  if constexpr (mode_of<T> == Mode::kExact) {
    return candidate < incumbent;
  } else {
    const double scale = std::max(std::abs(candidate), std::abs(incumbent));
    return candidate < incumbent - kFloatTieTolerance * scale;
  }
}

template <Number T>
bool strictly_greater(const T& candidate, const T& incumbent) {
  return strictly_less(incumbent, candidate);
}

/// A strictly convex polygon with vertices in counterclockwise order, n >= 3.
/// Construction validates the invariant; every instance is valid.
template <Number T>
class ConvexPolygon {
 public:
  /// Throws GeometryError naming the violated turn or vertex.
  static ConvexPolygon make(std::vector<Vec2<T>> vertices);

  std::size_t size() const { return vertices_.size(); }
  std::span<const Vec2<T>> vertices() const { return vertices_; }
  /// Cyclic access; any integer index is reduced modulo n.
  const Vec2<T>& vertex(std::ptrdiff_t k) const;

  /// Same polygon with vertex `index` removed. Requires n >= 4.
  ConvexPolygon without_vertex(std::size_t index) const;
  /// Polygon on a strictly increasing subset of vertex indices (size >= 3).
  ConvexPolygon subpolygon(std::span<const std::size_t> indices) const;

  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  explicit ConvexPolygon(std::vector<Vec2<T>> vertices) : vertices_(std::move(vertices)) {}
  std::vector<Vec2<T>> vertices_;
};

/// Checks strict convexity without constructing; returns an empty string when
/// valid, otherwise a description of the first violation.
template <Number T>
std::string convexity_violation(std::span<const Vec2<T>> vertices);

template <Number T>
T polygon_area(const ConvexPolygon<T>& polygon);

/// Shoelace sum taken about an arbitrary anchor; equals polygon_area exactly
/// in rational mode.
template <Number T>
T polygon_area_about(const ConvexPolygon<T>& polygon, const Vec2<T>& anchor);

/// Entry k is the area of ear (k-1, k, k+1), indices cyclic.
template <Number T>
std::vector<T> ear_areas(const ConvexPolygon<T>& polygon);

template <Number T>
struct EarMinimum {
  std::size_t index;
  T ratio;  // smallest ear area / polygon area
};

/// Smallest ear relative to the polygon area; ties go to the smallest index.
template <Number T>
EarMinimum<T> min_ear_ratio(const ConvexPolygon<T>& polygon);

/// x -> linear * x + translation, with linear = [[a, b], [c, d]].
template <Number T>
class AffineMap {
 public:
  /// Throws UsageError when the linear part is singular (|det| <= 1e-12 in
  /// float mode).
  static AffineMap make(T a, T b, T c, T d, Vec2<T> translation = {T(0), T(0)});
  static AffineMap identity() { return make(T(1), T(0), T(0), T(1)); }

  T determinant() const { return a_ * d_ - b_ * c_; }
  Vec2<T> operator()(const Vec2<T>& p) const {
    return {a_ * p.x + b_ * p.y + translation_.x, c_ * p.x + d_ * p.y + translation_.y};
  }

 private:
  AffineMap(T a, T b, T c, T d, Vec2<T> t)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), translation_(std::move(t)) {}
  T a_, b_, c_, d_;
  Vec2<T> translation_;
};

/// Vertex-wise image. An orientation-reversing map keeps vertex 0 first and
/// reverses the rest, so the result is counterclockwise again.
template <Number T>
ConvexPolygon<T> apply_affine(const AffineMap<T>& map, const ConvexPolygon<T>& polygon);

/// Regular n-gon with the given circumradius, vertex 0 at angle `phase`.
ConvexPolygon<double> regular_polygon(std::size_t n, double circumradius = 1.0, double phase = 0.0);

ConvexPolygon<double> to_double(const ConvexPolygon<Rational>& polygon);

/// Snaps every coordinate to a rational with denominator <= max_denominator.
/// Throws GeometryError if snapping destroys strict convexity.
ConvexPolygon<Rational> snap_to_rational(const ConvexPolygon<double>& polygon, std::int64_t max_denominator);

}  // namespace polygap
