// SPDX-License-Identifier: Apache-2.0
//
// Min-max search over convex n-gons:
//   f_n(m) = inf over P of  max_inscribed(P, m).ratio
//   g_n    = sup over P of  min_ear_ratio(P).ratio
// plus sweeps of the closed-form bounds on g_n.
#pragma once

#include <polygap/families.hpp>
#include <polygap/geometry.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polygap {

enum class Parametrization { kAuto, kPentagon, kHexagon, kCircle };

std::string_view to_string(Parametrization p);
/// Accepts "auto", "pentagon"/"pentagon-params", "hexagon"/"hexagon-params",
/// "circle"/"circle-angles". Throws UsageError otherwise.
Parametrization parse_parametrization(std::string_view text);

struct SearchConfig {
  std::size_t n = 5;
  std::optional<std::size_t> m;  // present for f, absent for g
  std::size_t restarts = 64;
  std::size_t max_iters = 2000;  // per simplex run
  std::uint64_t seed = 42;
  double tolerance = 1e-9;  // simplex characteristic size
  Parametrization parametrization = Parametrization::kAuto;
  /// Pentagon chart only: every evaluated candidate whose smallest ear is DEA
  /// is re-checked in rational arithmetic against pentagon_min_ear_constraints.
  bool audit_min_ear_constraints = false;
};

/// kAuto resolves to pentagon for n = 5, hexagon for n = 6, circle otherwise.
Parametrization resolve_parametrization(const SearchConfig& config);

/// Throws UsageError on n < 3, restarts == 0, m outside [3, n), or a chart that
/// does not fit n.
void validate(const SearchConfig& config, bool expects_m);

struct SearchResult {
  double estimate = 0.0;
  ConvexPolygon<double> witness;
  std::vector<double> restart_bests;  // objective of each restart, in restart order
  std::uint64_t seed = 0;
  bool converged = false;
  Parametrization parametrization = Parametrization::kCircle;
  std::size_t evaluations = 0;
  // Filled when audit_min_ear_constraints is set.
  std::size_t audit_checked = 0;
  std::size_t audit_violations = 0;
};

/// Minimizes the largest inscribed m-gon ratio. Worker count is capped by the
/// POLYGAP_THREADS environment variable; results do not depend on it.
SearchResult estimate_f(const SearchConfig& config);

/// Maximizes the smallest ear ratio; config.m must be empty.
SearchResult estimate_g(const SearchConfig& config);

/// Objective values re-evaluated on a polygon, as the estimators define them.
double f_objective(const ConvexPolygon<double>& polygon, std::size_t m);
double g_objective(const ConvexPolygon<double>& polygon);

/// Known closed forms: f_4(3), f_5(3), f_5(4), f_6(3), f_6(4), f_6(5) and
/// g_4, g_5, g_6 (g_n = 1 - f_n(n-1)).
std::optional<double> known_f(std::size_t n, std::size_t m);
std::optional<double> known_g(std::size_t n);

/// Witness snapped to rationals and re-evaluated exactly.
struct ExactConfirmation {
  ConvexPolygon<Rational> polygon;
  Rational value;
  double abs_difference;  // |value - estimate|
};

/// `m` empty means the g objective. Throws GeometryError if snapping breaks
/// strict convexity.
ExactConfirmation confirm_exact(const SearchResult& result, std::optional<std::size_t> m,
                                std::int64_t max_denominator = 1'000'000);

/// (4/n) sin^2(pi/n): smallest ear ratio of the regular n-gon.
double g_lower_bound(std::size_t n);
/// (4/n) sin^2(2 pi/n), valid for every n >= 4.
double g_upper_bound_sine(std::size_t n);
/// min(1/n, g_upper_bound_sine(n)) for n >= 6; the sine bound alone below.
double g_upper_bound(std::size_t n);

struct BoundReport {
  std::size_t n = 0;
  double lower = 0.0;
  double upper = 0.0;       // g_upper_bound(n)
  double upper_sine = 0.0;  // asserted against every sample
  double empirical_max_min_ear = 0.0;
  std::size_t argmax_sample = 0;
  std::size_t samples = 0;
  double regular_ratio = 0.0;
  std::uint64_t seed = 0;
};

/// For each n in [n_min, n_max]: `samples` random convex n-gons drawn from
/// Rng::stream(seed, n). Every sample must satisfy min_ear_ratio <= sine bound;
/// for n >= 6 also <= 1/n. The regular n-gon must reproduce the lower bound
/// within 1e-12. Any violation throws VerificationFailure naming the polygon.
std::vector<BoundReport> verify_g_bounds(std::size_t n_min, std::size_t n_max, std::size_t samples,
                                         std::uint64_t seed);

struct RecursionRow {
  std::size_t n = 0;
  double g_n = 0.0;
  double g_next = 0.0;
  double bound = 0.0;   // g_n / (1 + g_n)
  double margin = 0.0;  // bound - g_next
  bool ok = false;      // g_next <= bound + kRecursionSlack
};

inline constexpr double kRecursionSlack = 5e-3;

struct RecursionTable {
  std::vector<RecursionRow> rows;
  std::vector<SearchResult> estimates;  // one per n in [n_min, n_max]
  bool passed() const;
};

/// Runs estimate_g for n_min..n_max with `base` (n overridden) and checks
/// consecutive pairs. Requires n_min >= 4 and n_max > n_min.
RecursionTable verify_g_recursion(std::size_t n_min, std::size_t n_max, const SearchConfig& base);

}  // namespace polygap
