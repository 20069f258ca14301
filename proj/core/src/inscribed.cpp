// SPDX-License-Identifier: Apache-2.0
#include <polygap/inscribed.hpp>

#include <optional>

namespace polygap {

namespace {

void check_m(std::size_t n, std::size_t m) {
  if (m < 3 || m > n) {
    throw UsageError("m must satisfy 3 <= m <= n (n = " + std::to_string(n) + ", m = " + std::to_string(m) + ")");
  }
}

// Dense n x n x n table of fan triangles (i, j, k) for i < j < k.
template <Number T>
class TriangleTable {
 public:
  explicit TriangleTable(const ConvexPolygon<T>& polygon) : n_(polygon.size()), data_(n_ * n_ * n_) {
    const auto v = polygon.vertices();
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        for (std::size_t k = j + 1; k < n_; ++k) data_[(i * n_ + j) * n_ + k] = triangle_area(v[i], v[j], v[k]);
      }
    }
  }
  const T& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * n_ + j) * n_ + k]; }

 private:
  std::size_t n_;
  std::vector<T> data_;
};

// Qualifies as optimal: not beaten by the best value under the tie rule.
template <Number T>
bool ties_best(const T& value, const T& best) {
  return !strictly_less(value, best);
}

template <Number T>
struct AnchorBest {
  T area;
  std::vector<std::size_t> indices;
};

template <Number T>
AnchorBest<T> best_for_anchor(const ConvexPolygon<T>& polygon, std::size_t anchor, std::size_t m) {
  const std::size_t n = polygon.size();
  const auto v = polygon.vertices();
  const std::size_t steps = m - 2;  // fan triangles after the anchor

  // fan[j][l] = area of triangle (anchor, j, l) for anchor < j < l.
  std::vector<T> fan(n * n);
  for (std::size_t j = anchor + 1; j < n; ++j) {
    for (std::size_t l = j + 1; l < n; ++l) fan[j * n + l] = triangle_area(v[anchor], v[j], v[l]);
  }

  // best[r][j]: largest sum of r fan triangles on a chain starting at j.
  // Feasible iff j + r <= n - 1.
  std::vector<std::vector<std::optional<T>>> best(steps + 1, std::vector<std::optional<T>>(n));
  for (std::size_t j = anchor + 1; j < n; ++j) best[0][j] = T(0);
  for (std::size_t r = 1; r <= steps; ++r) {
    for (std::size_t j = anchor + 1; j + r < n; ++j) {
      std::optional<T> top;
      for (std::size_t l = j + 1; l + (r - 1) < n; ++l) {
        T candidate = fan[j * n + l] + *best[r - 1][l];
        if (!top || strictly_greater(candidate, *top)) top = std::move(candidate);
      }
      best[r][j] = std::move(top);
    }
  }

  // Greedy smallest-index reconstruction gives the lexicographically
  // smallest optimal chain for this anchor.
  std::optional<T> total;
  for (std::size_t j = anchor + 1; j + steps < n; ++j) {
    if (!total || strictly_greater(*best[steps][j], *total)) total = *best[steps][j];
  }
  AnchorBest<T> out{*total, {anchor}};
  std::size_t current = 0;
  for (std::size_t j = anchor + 1; j + steps < n; ++j) {
    if (ties_best(*best[steps][j], *total)) {
      current = j;
      break;
    }
  }
  out.indices.push_back(current);
  for (std::size_t r = steps; r >= 1; --r) {
    for (std::size_t l = current + 1; l + (r - 1) < n; ++l) {
      T candidate = fan[current * n + l] + *best[r - 1][l];
      if (ties_best(candidate, *best[r][current])) {
        current = l;
        break;
      }
    }
    out.indices.push_back(current);
  }
  return out;
}

}  // namespace

template <Number T>
InscribedResult<T> max_inscribed_bruteforce(const ConvexPolygon<T>& polygon, std::size_t m) {
  const std::size_t n = polygon.size();
  check_m(n, m);
  if (n > kBruteForceMaxVertices) {
    throw UsageError("brute force is limited to n <= " + std::to_string(kBruteForceMaxVertices) + " (n = " +
                     std::to_string(n) + "); use max_inscribed_dp");
  }
  const TriangleTable<T> tri(polygon);

  // Lexicographic enumeration of m-combinations of {0..n-1}.
  std::vector<std::size_t> pick(m);
  for (std::size_t k = 0; k < m; ++k) pick[k] = k;
  std::optional<T> best_area;
  std::vector<std::size_t> best_pick;
  while (true) {
    T area(0);
    for (std::size_t t = 1; t + 1 < m; ++t) area += tri(pick[0], pick[t], pick[t + 1]);
    if (!best_area || strictly_greater(area, *best_area)) {
      best_area = std::move(area);
      best_pick = pick;
    }
    std::size_t k = m;
    while (k > 0 && pick[k - 1] == n - m + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t t = k; t < m; ++t) pick[t] = pick[t - 1] + 1;
  }
  T ratio = *best_area / polygon_area(polygon);
  return {std::move(best_pick), std::move(*best_area), std::move(ratio)};
}

template <Number T>
InscribedResult<T> max_inscribed_dp(const ConvexPolygon<T>& polygon, std::size_t m) {
  const std::size_t n = polygon.size();
  check_m(n, m);
  std::optional<AnchorBest<T>> best;
  for (std::size_t anchor = 0; anchor + m <= n; ++anchor) {
    auto candidate = best_for_anchor(polygon, anchor, m);
    if (!best || strictly_greater(candidate.area, best->area)) best = std::move(candidate);
  }
  T ratio = best->area / polygon_area(polygon);
  return {std::move(best->indices), std::move(best->area), std::move(ratio)};
}

template <Number T>
PeelStep<T> peel_smallest_ear(const ConvexPolygon<T>& polygon) {
  if (polygon.size() < 4) throw UsageError("cannot peel an ear from a triangle");
  const auto smallest = min_ear_ratio(polygon);
  T step_ratio = T(1) - smallest.ratio;
  return {polygon.without_vertex(smallest.index), smallest.index, std::move(step_ratio)};
}

template <Number T>
T PeelChain<T>::product() const {
  T total(1);
  for (const auto& r : step_ratios) total *= r;
  return total;
}

template <Number T>
PeelChain<T> peel_chain(const ConvexPolygon<T>& polygon, std::size_t m) {
  const std::size_t n = polygon.size();
  if (m < 3 || m >= n) {
    throw UsageError("peel_chain needs 3 <= m < n (n = " + std::to_string(n) + ", m = " + std::to_string(m) + ")");
  }
  PeelChain<T> chain;
  chain.polygons.push_back(polygon);
  while (chain.polygons.back().size() > m) {
    auto step = peel_smallest_ear(chain.polygons.back());
    chain.removed_indices.push_back(step.removed_index);
    chain.step_ratios.push_back(std::move(step.step_ratio));
    chain.polygons.push_back(std::move(step.polygon));
  }
  return chain;
}

#define POLYGAP_INSTANTIATE(T)                                                                 \
  template InscribedResult<T> max_inscribed_bruteforce<T>(const ConvexPolygon<T>&, std::size_t); \
  template InscribedResult<T> max_inscribed_dp<T>(const ConvexPolygon<T>&, std::size_t);         \
  template PeelStep<T> peel_smallest_ear<T>(const ConvexPolygon<T>&);                            \
  template struct PeelChain<T>;                                                                  \
  template PeelChain<T> peel_chain<T>(const ConvexPolygon<T>&, std::size_t);

POLYGAP_INSTANTIATE(double)
POLYGAP_INSTANTIATE(Rational)
#undef POLYGAP_INSTANTIATE

}  // namespace polygap
