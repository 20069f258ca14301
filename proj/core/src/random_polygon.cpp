// SPDX-License-Identifier: Apache-2.0
#include <polygap/random_polygon.hpp>

#include <algorithm>
#include <array>
#include <optional>

namespace polygap {

namespace {

using IVec = std::array<std::int64_t, 2>;

constexpr int kMaxAttempts = 1000;

std::vector<std::int64_t> sorted_samples(std::size_t n, Rng& rng) {
  std::vector<std::int64_t> values(n);
  for (auto& v : values) v = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(kRandomPolygonGrid)));
  std::sort(values.begin(), values.end());
  return values;
}

// Splits sorted samples into two monotone chains from min to max and returns
// the n signed steps walked around the closed loop.
std::vector<std::int64_t> chain_components(const std::vector<std::int64_t>& sorted, Rng& rng) {
  const std::size_t n = sorted.size();
  std::vector<std::int64_t> steps;
  steps.reserve(n);
  std::int64_t upper = sorted.front();
  std::int64_t lower = sorted.front();
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (rng.coin()) {
      steps.push_back(sorted[k] - upper);
      upper = sorted[k];
    } else {
      steps.push_back(lower - sorted[k]);
      lower = sorted[k];
    }
  }
  steps.push_back(sorted.back() - upper);
  steps.push_back(lower - sorted.back());
  return steps;
}

// Upper half-plane (angle in [0, pi)) first, then by cross product.
bool angle_less(const IVec& p, const IVec& q) {
  auto half = [](const IVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
  const int hp = half(p);
  const int hq = half(q);
  if (hp != hq) return hp < hq;
  return p[0] * q[1] - p[1] * q[0] > 0;
}

std::optional<ConvexPolygon<Rational>> try_draw(std::size_t n, Rng& rng) {
  const auto xs = chain_components(sorted_samples(n, rng), rng);
  auto ys = chain_components(sorted_samples(n, rng), rng);
  for (std::size_t k = n - 1; k > 0; --k) std::swap(ys[k], ys[rng.below(k + 1)]);

  std::vector<IVec> edges(n);
  for (std::size_t k = 0; k < n; ++k) {
    edges[k] = {xs[k], ys[k]};
    if (xs[k] == 0 && ys[k] == 0) return std::nullopt;
  }
  std::sort(edges.begin(), edges.end(), angle_less);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& p = edges[k];
    const auto& q = edges[(k + 1) % n];
    if (p[0] * q[1] - p[1] * q[0] <= 0) return std::nullopt;  // parallel or reflex
  }

  std::vector<IVec> points(n);
  IVec at{0, 0};
  for (std::size_t k = 0; k < n; ++k) {
    points[k] = at;
    at[0] += edges[k][0];
    at[1] += edges[k][1];
  }
  std::int64_t min_x = points[0][0], max_x = min_x, min_y = points[0][1], max_y = min_y;
  for (const auto& p : points) {
    min_x = std::min(min_x, p[0]);
    max_x = std::max(max_x, p[0]);
    min_y = std::min(min_y, p[1]);
    max_y = std::max(max_y, p[1]);
  }
  const std::int64_t span = std::max(max_x - min_x, max_y - min_y);
  if (span <= 0) return std::nullopt;

  std::vector<Vec2<Rational>> vertices;
  vertices.reserve(n);
  for (const auto& p : points) {
    const mpz_class denominator(static_cast<long>(span));
    Rational x(mpz_class(static_cast<long>(p[0] - min_x)), denominator);
    Rational y(mpz_class(static_cast<long>(p[1] - min_y)), denominator);
    x.canonicalize();
    y.canonicalize();
    vertices.push_back({std::move(x), std::move(y)});
  }
  if (!convexity_violation<Rational>(vertices).empty()) return std::nullopt;
  return ConvexPolygon<Rational>::make(std::move(vertices));
}

}  // namespace

ConvexPolygon<Rational> random_convex_polygon_exact(std::size_t n, Rng& rng) {
  if (n < 3) throw UsageError("random_convex_polygon needs n >= 3");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    if (auto polygon = try_draw(n, rng)) return std::move(*polygon);
  }
  throw GeometryError("random_convex_polygon: no nondegenerate draw after repeated attempts");
}

ConvexPolygon<Rational> random_convex_polygon_exact(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_convex_polygon_exact(n, rng);
}

ConvexPolygon<double> random_convex_polygon(std::size_t n, Rng& rng) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto exact = random_convex_polygon_exact(n, rng);
    std::vector<Vec2<double>> vertices;
    vertices.reserve(n);
    for (const auto& p : exact.vertices()) vertices.push_back({p.x.get_d(), p.y.get_d()});
    if (convexity_violation<double>(vertices).empty()) return ConvexPolygon<double>::make(std::move(vertices));
  }
  throw GeometryError("random_convex_polygon: no draw survives float convexity checks");
}

ConvexPolygon<double> random_convex_polygon(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_convex_polygon(n, rng);
}

}  // namespace polygap
