// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <polygap/geometry.hpp>
#include <polygap/rng.hpp>

#include <cstdint>

namespace polygap {

/// Resolution of the integer grid the generator samples on.
inline constexpr std::int64_t kRandomPolygonGrid = std::int64_t{1} << 20;

/// Random convex n-gon in the unit square by Valtr's method: sorted random
/// coordinates are split into two chains per axis, the resulting edge
/// vectors are paired by a random permutation, sorted by angle and chained.
/// Sampling happens on an integer grid, so the exact polygon has rational
/// coordinates with a common denominator. Degenerate draws (parallel or zero
/// edges) are redrawn; throws GeometryError after 1000 failed attempts.
ConvexPolygon<Rational> random_convex_polygon_exact(std::size_t n, Rng& rng);
ConvexPolygon<Rational> random_convex_polygon_exact(std::size_t n, std::uint64_t seed);

/// Float view of the same draw (explicit rational-to-float conversion).
ConvexPolygon<double> random_convex_polygon(std::size_t n, Rng& rng);
ConvexPolygon<double> random_convex_polygon(std::size_t n, std::uint64_t seed);

}  // namespace polygap
