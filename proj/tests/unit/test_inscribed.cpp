// SPDX-License-Identifier: Apache-2.0
#include <polygap/inscribed.hpp>
#include <polygap/random_polygon.hpp>

#include <test_support.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace polygap {
namespace {

using testing::unit_square;

const double kSqrt5 = std::sqrt(5.0);

TEST(MaxInscribed, UnitSquareTriangle) {
  for (auto solver : {max_inscribed_dp<Rational>, max_inscribed_bruteforce<Rational>}) {
    const auto result = solver(unit_square<Rational>(), 3);
    EXPECT_EQ(result.area, Rational(1, 2));
    EXPECT_EQ(result.ratio, Rational(1, 2));
    EXPECT_EQ(result.indices, (std::vector<std::size_t>{0, 1, 2}));
  }
}

TEST(MaxInscribed, FullSubsetHasRatioOne) {
  Rng rng(3);
  for (std::size_t n = 3; n <= 9; ++n) {
    const auto polygon = random_convex_polygon_exact(n, rng);
    for (auto solver : {max_inscribed_dp<Rational>, max_inscribed_bruteforce<Rational>}) {
      const auto result = solver(polygon, n);
      EXPECT_EQ(result.ratio, 1);
      ASSERT_EQ(result.indices.size(), n);
      for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(result.indices[k], k);
    }
  }
}

TEST(MaxInscribed, RegularPolygonValues) {
  const auto pentagon = regular_polygon(5);
  const auto hexagon = regular_polygon(6);
  EXPECT_NEAR(max_inscribed_bruteforce(pentagon, 4).ratio, (5 + kSqrt5) / 10, 1e-12);
  EXPECT_NEAR(max_inscribed_dp(pentagon, 4).ratio, (5 + kSqrt5) / 10, 1e-12);
  EXPECT_NEAR(max_inscribed_dp(pentagon, 3).ratio, 1 / kSqrt5, 1e-12);
  EXPECT_NEAR(max_inscribed_dp(hexagon, 5).ratio, 5.0 / 6.0, 1e-12);
  EXPECT_NEAR(max_inscribed_dp(hexagon, 4).ratio, 2.0 / 3.0, 1e-12);
}

TEST(MaxInscribed, FloatTiesResolveToLexicographicallySmallest) {
  // Every 5-subset of the regular hexagon has the same area up to rounding.
  EXPECT_EQ(max_inscribed_dp(regular_polygon(6), 5).indices, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(max_inscribed_bruteforce(regular_polygon(6), 5).indices, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(max_inscribed_dp(unit_square<double>(), 3).indices, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(MaxInscribed, RangeErrors) {
  const auto square = unit_square<Rational>();
  EXPECT_THROW(max_inscribed_dp(square, 2), UsageError);
  EXPECT_THROW(max_inscribed_dp(square, 5), UsageError);
  EXPECT_THROW(max_inscribed_bruteforce(square, 2), UsageError);
  EXPECT_THROW(max_inscribed_bruteforce(regular_polygon(21), 5), UsageError);
  EXPECT_NO_THROW(max_inscribed_dp(regular_polygon(21), 5));
}

// Exhaustive reference that shares no code with either solver.
Rational reference_best_area(const ConvexPolygon<Rational>& polygon, std::size_t m) {
  const std::size_t n = polygon.size();
  Rational best = -1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != m) continue;
    std::vector<Vec2<Rational>> chosen;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (1u << k)) chosen.push_back(polygon.vertex(static_cast<std::ptrdiff_t>(k)));
    }
    Rational twice = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const auto& p = chosen[k];
      const auto& q = chosen[(k + 1) % m];
      twice += p.x * q.y - p.y * q.x;
    }
    if (twice / 2 > best) best = twice / 2;
  }
  return best;
}

TEST(MaxInscribed, DpMatchesBruteForceExactly) {
  Rng rng(1234);
  for (std::size_t n = 4; n <= 12; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto polygon = random_convex_polygon_exact(n, rng);
      for (std::size_t m = 3; m <= n; ++m) {
        const auto dp = max_inscribed_dp(polygon, m);
        const auto bf = max_inscribed_bruteforce(polygon, m);
        ASSERT_EQ(dp.area, bf.area) << "n=" << n << " m=" << m;
        ASSERT_EQ(dp.indices, bf.indices) << "n=" << n << " m=" << m;
        ASSERT_EQ(polygon_area(polygon.subpolygon(dp.indices)), dp.area);
      }
    }
  }
}

TEST(MaxInscribed, AgreesWithIndependentSubsetEnumeration) {
  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4 + static_cast<std::size_t>(trial % 7);
    const auto polygon = random_convex_polygon_exact(n, rng);
    for (std::size_t m = 3; m <= n; ++m) EXPECT_EQ(max_inscribed_dp(polygon, m).area, reference_best_area(polygon, m));
  }
}

TEST(MaxInscribed, FloatDpMatchesBruteForceWithinTolerance) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto polygon = random_convex_polygon(4 + static_cast<std::size_t>(trial % 9), rng);
    for (std::size_t m = 3; m <= polygon.size(); ++m) {
      const double dp = max_inscribed_dp(polygon, m).area;
      const double bf = max_inscribed_bruteforce(polygon, m).area;
      EXPECT_LE(std::abs(dp - bf), 1e-12 * bf);
    }
  }
}

TEST(MaxInscribed, RatioIsMonotoneInM) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto polygon = random_convex_polygon_exact(4 + static_cast<std::size_t>(trial % 9), rng);
    Rational previous = 0;
    for (std::size_t m = 3; m <= polygon.size(); ++m) {
      const Rational ratio = max_inscribed_dp(polygon, m).ratio;
      EXPECT_GE(ratio, previous);
      EXPECT_GT(ratio, 0);
      EXPECT_LE(ratio, 1);
      previous = ratio;
    }
  }
}

TEST(MaxInscribed, BestNMinusOneGonDropsTheSmallestEar) {
  Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4 + static_cast<std::size_t>(trial % 9);
    const auto polygon = random_convex_polygon_exact(n, rng);
    const auto ears = ear_areas(polygon);
    const auto minimum = min_ear_ratio(polygon);
    EXPECT_EQ(max_inscribed_dp(polygon, n - 1).area, polygon_area(polygon) - ears[minimum.index]);
    // Removing vertex i leaves at least as much as removing j iff ear(i) <= ear(j).
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const bool larger_remainder =
            polygon_area(polygon.without_vertex(i)) >= polygon_area(polygon.without_vertex(j));
        EXPECT_EQ(larger_remainder, ears[i] <= ears[j]);
      }
    }
  }
}

// --- peeling ---------------------------------------------------------------

TEST(Peel, Examples) {
  const auto hexagon = peel_smallest_ear(regular_polygon(6));
  EXPECT_EQ(hexagon.removed_index, 0u);
  EXPECT_NEAR(hexagon.step_ratio, 5.0 / 6.0, 1e-12);
  EXPECT_EQ(hexagon.polygon.size(), 5u);

  const auto square = peel_smallest_ear(unit_square<Rational>());
  EXPECT_EQ(square.removed_index, 0u);
  EXPECT_EQ(square.step_ratio, Rational(1, 2));

  EXPECT_THROW(peel_smallest_ear(ConvexPolygon<Rational>::make({{0, 0}, {1, 0}, {0, 1}})), UsageError);
}

TEST(Peel, StepRatioIsOneMinusMinEarRatio) {
  const auto octagon = random_convex_polygon_exact(8, std::uint64_t{42});
  const auto step = peel_smallest_ear(octagon);
  EXPECT_EQ(step.step_ratio, 1 - min_ear_ratio(octagon).ratio);
  const double s = std::sin(2 * std::numbers::pi / 8);
  EXPECT_GE(step.step_ratio.get_d(), 1 - 4.0 / 8.0 * s * s);
  // Oracle: remove each vertex directly and keep the largest remainder.
  Rational best = 0;
  for (std::size_t k = 0; k < 8; ++k) best = std::max(best, Rational(polygon_area(octagon.without_vertex(k))));
  EXPECT_EQ(polygon_area(step.polygon), best);
}

TEST(PeelChain, Examples) {
  const auto chain = peel_chain(regular_polygon(6), 3);
  EXPECT_EQ(chain.step_ratios.size(), 3u);
  EXPECT_EQ(chain.polygons.size(), 4u);
  EXPECT_GE(chain.product(), 3.0 / 6.0);

  Rng rng(7);
  const auto single = random_convex_polygon_exact(7, rng);
  const auto one = peel_chain(single, 6);
  const auto step = peel_smallest_ear(single);
  ASSERT_EQ(one.step_ratios.size(), 1u);
  EXPECT_EQ(one.step_ratios[0], step.step_ratio);
  EXPECT_EQ(one.removed_indices[0], step.removed_index);
  EXPECT_EQ(one.polygons.back(), step.polygon);

  const auto decagon = random_convex_polygon_exact(10, std::uint64_t{7});
  EXPECT_GE(peel_chain(decagon, 5).product(), Rational(1, 2));

  EXPECT_THROW(peel_chain(single, 7), UsageError);
  EXPECT_THROW(peel_chain(single, 2), UsageError);
}

TEST(PeelChain, ProductIsAreaRatioAndBoundedByDp) {
  Rng rng(555);
  for (std::size_t n = 6; n <= 12; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto polygon = random_convex_polygon_exact(n, rng);
      for (std::size_t m = 5; m < n; ++m) {
        const auto chain = peel_chain(polygon, m);
        const Rational product = chain.product();
        EXPECT_EQ(product, polygon_area(chain.polygons.back()) / polygon_area(polygon));
        for (const auto& ratio : chain.step_ratios) {
          EXPECT_GT(ratio, 0);
          EXPECT_LT(ratio, 1);
        }
        EXPECT_GE(max_inscribed_dp(polygon, m).ratio, product);
        EXPECT_GE(product, Rational(static_cast<long>(m)) / static_cast<long>(n));
      }
    }
  }
}

}  // namespace
}  // namespace polygap
