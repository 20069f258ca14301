// SPDX-License-Identifier: Apache-2.0
//
// Largest-area m-gons whose vertices are vertices of a convex polygon, and
// smallest-ear peeling chains.
#pragma once

#include <polygap/geometry.hpp>

#include <cstddef>
#include <vector>

namespace polygap {

template <Number T>
struct InscribedResult {
  std::vector<std::size_t> indices;  // strictly increasing vertex indices of P
  T area;
  T ratio;  // area / polygon_area(P)
};

/// Largest n for which the exhaustive oracle runs.
inline constexpr std::size_t kBruteForceMaxVertices = 20;

/// Exhaustive search over all C(n, m) vertex subsets. Ties resolve to the
/// lexicographically smallest index list.
template <Number T>
InscribedResult<T> max_inscribed_bruteforce(const ConvexPolygon<T>& polygon, std::size_t m);

/// Dynamic program: for each anchor i (smallest chosen index) a table over
/// (vertices still to place, current vertex) of the best fan-triangle sum
/// about i. O(m n^3) overall. Same tie-break as the brute force.
template <Number T>
InscribedResult<T> max_inscribed_dp(const ConvexPolygon<T>& polygon, std::size_t m);

template <Number T>
struct PeelStep {
  ConvexPolygon<T> polygon;
  std::size_t removed_index;  // index within the input polygon
  T step_ratio;               // area(result) / area(input)
};

/// Removes the vertex whose ear is smallest (smallest index on ties).
template <Number T>
PeelStep<T> peel_smallest_ear(const ConvexPolygon<T>& polygon);

template <Number T>
struct PeelChain {
  std::vector<ConvexPolygon<T>> polygons;     // P_n, P_{n-1}, ..., P_m
  std::vector<std::size_t> removed_indices;  // index removed from polygons[k] to get polygons[k+1]
  std::vector<T> step_ratios;                // area(polygons[k+1]) / area(polygons[k])

  /// Product of the step ratios, i.e. area(P_m) / area(P_n).
  T product() const;
};

template <Number T>
PeelChain<T> peel_chain(const ConvexPolygon<T>& polygon, std::size_t m);

}  // namespace polygap
