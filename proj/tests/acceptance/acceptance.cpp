// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Each criterion carries its own wall-clock budget; exceeding it is a FAIL.
#include <polygap/extremal.hpp>
#include <polygap/families.hpp>
#include <polygap/inscribed.hpp>
#include <polygap/random_polygon.hpp>
#include <polygap/symcheck.hpp>

#include <test_support.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace polygap;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::string fmt(double x, int digits = 10) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

bool close_relative(double got, double want, double tolerance) {
  return std::abs(got - want) <= tolerance * std::abs(want);
}

Outcome regular_values() {
  const double r5 = std::sqrt(5.0);
  struct Case {
    std::string name;
    ConvexPolygon<double> polygon;
    std::size_t m;
    double expected;
  };
  const std::vector<Case> cases{
      {"pentagon m=4", regular_polygon(5), 4, (5 + r5) / 10},
      {"pentagon m=3", regular_polygon(5), 3, 1 / r5},
      {"hexagon m=5", regular_polygon(6), 5, 5.0 / 6.0},
      {"hexagon m=4", regular_polygon(6), 4, 2.0 / 3.0},
      {"unit square m=3", testing::unit_square<double>(), 3, 0.5},
  };
  Outcome out;
  for (const auto& c : cases) {
    const double got = max_inscribed_dp(c.polygon, c.m).ratio;
    const bool ok = close_relative(got, c.expected, 1e-12);
    out.ok = out.ok && ok;
    out.detail += c.name + "=" + fmt(got, 16) + (ok ? "" : " (expected " + fmt(c.expected, 16) + ")") + "; ";
  }
  return out;
}

Outcome certificates() {
  Outcome out;
  std::size_t passed = 0;
  const auto reports = run_all_certificates();
  for (const auto& r : reports) {
    if (r.passed()) {
      ++passed;
    } else {
      out.detail += "failed " + r.name + "; ";
    }
  }
  std::size_t formulas = 0;
  std::size_t matching = 0;
  for (const auto& rows : {derive_pentagon_formulas(), derive_hexagon_formulas()}) {
    for (const auto& row : rows) {
      ++formulas;
      if (row.matches()) {
        ++matching;
      } else {
        out.detail += "formula mismatch " + row.name + "; ";
      }
    }
  }
  out.ok = reports.size() == 12 && passed == 12 && matching == formulas;
  out.detail += std::to_string(passed) + "/" + std::to_string(reports.size()) + " certificates, " +
                std::to_string(matching) + "/" + std::to_string(formulas) + " derived formulas";
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  std::size_t comparisons = 0;
  Rng rng(20240901);
  for (std::size_t n = 4; n <= 12; ++n) {
    for (int trial = 0; trial < 500; ++trial) {
      const auto polygon = random_convex_polygon_exact(n, rng);
      for (std::size_t m = 3; m <= n; ++m) {
        const auto dp = max_inscribed_dp(polygon, m);
        const auto bf = max_inscribed_bruteforce(polygon, m);
        ++comparisons;
        if (dp.area != bf.area) {
          out.ok = false;
          out.detail = "mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m) + " trial " +
                       std::to_string(trial) + "; ";
          return out;
        }
      }
    }
  }
  out.detail = std::to_string(comparisons) + " exact comparisons, 0 mismatches";
  return out;
}

Outcome bound_sweeps() {
  Outcome out;
  // Hard failures throw VerificationFailure and are reported by the runner.
  const auto reports = verify_g_bounds(4, 12, 10000, 42);
  for (const auto& r : reports) {
    if (!(std::abs(r.regular_ratio - r.lower) <= 1e-12) || r.empirical_max_min_ear > r.upper_sine) {
      out.ok = false;
      out.detail += "sweep n=" + std::to_string(r.n) + " out of bounds; ";
    }
  }
  out.detail += std::to_string(reports.size()) + " sweeps x 10000 samples clean; ";
  // Combined bound min(1/n, sine) against the search estimates.
  for (std::size_t n = 4; n <= 12; ++n) {
    SearchConfig config;
    config.n = n;
    const auto result = estimate_g(config);
    const bool ok = result.estimate <= g_upper_bound(n) + 1e-12 && result.estimate >= g_lower_bound(n) - 2e-3;
    out.ok = out.ok && ok;
    out.detail += "g" + std::to_string(n) + "=" + fmt(result.estimate, 6) + (ok ? " " : "(!) ");
  }
  return out;
}

Outcome ratio_floor_sweep() {
  Outcome out;
  std::size_t checks = 0;
  Rng rng(777);
  for (std::size_t n = 6; n <= 10; ++n) {
    for (int trial = 0; trial < 1000; ++trial) {
      const auto polygon = random_convex_polygon_exact(n, rng);
      for (std::size_t m = 5; m < n; ++m) {
        const Rational floor(static_cast<long>(m), static_cast<long>(n));
        const Rational ratio = max_inscribed_dp(polygon, m).ratio;
        const Rational product = peel_chain(polygon, m).product();
        checks += 2;
        if (ratio < floor || product < floor) {
          out.ok = false;
          out.detail = "violation at n=" + std::to_string(n) + " m=" + std::to_string(m) + " trial " +
                       std::to_string(trial);
          return out;
        }
      }
    }
  }
  out.detail = std::to_string(checks) + " exact checks, 0 violations";
  return out;
}

Outcome pentagon_inequalities() {
  Outcome out;
  Rng rng(424242);
  std::size_t ineq_samples = 0;
  std::size_t small_ear_samples = 0;
  for (int s = 0; s < 100000; ++s) {
    const auto p = testing::random_pentagon_params(rng);
    if (!pentagon_is_convex(p)) continue;
    const auto ears = pentagon_ear_formulas(p);
    const auto tris = pentagon_triangle_formulas(p);
    if (ears[3] <= std::min(ears[2], ears[4])) {
      ++small_ear_samples;
      if (ears[3] > std::min(tris[0], tris[1])) {
        out.ok = false;
        out.detail += "small-ear bound violated at sample " + std::to_string(s) + "; ";
      }
    }
    if (pentagon_min_ear_constraints(p) && p.a <= p.b) {
      ++ineq_samples;
      const Rational cd = p.c + p.d;
      if (!testing::sqrt5_times_at_most(cd - 1, 5 + 2 * p.a + 2 * p.b + 2 * p.a * p.b - 3 * cd)) {
        out.ok = false;
        out.detail += "quadrilateral inequality violated at sample " + std::to_string(s) + "; ";
      }
      const Rational best = std::max({tris[1], tris[2], ears[1]});
      if (!testing::sqrt5_times_at_most(-best, -pentagon_area_formula(p))) {
        out.ok = false;
        out.detail += "triangle inequality violated at sample " + std::to_string(s) + "; ";
      }
    }
  }
  if (ineq_samples == 0 || small_ear_samples == 0) out.ok = false;
  out.detail += std::to_string(ineq_samples) + " samples for the pentagon inequalities, " +
                std::to_string(small_ear_samples) + " for the small-ear bound";
  return out;
}

Criterion extremal_line(int id, std::string label, std::optional<std::size_t> m, std::size_t n,
                        std::function<bool(double)> accept, std::string target) {
  return {id, "extremal " + label, 120.0, [=] {
            SearchConfig config;
            config.n = n;
            config.m = m;
            config.restarts = 64;
            config.seed = 42;
            const auto result = m ? estimate_f(config) : estimate_g(config);
            return Outcome{accept(result.estimate), "estimate " + fmt(result.estimate, 10) + ", target " + target};
          }};
}

}  // namespace

int main() {
  const double r5 = std::sqrt(5.0);
  auto within = [](double want, double tolerance) {
    return [=](double got) { return std::abs(got - want) <= tolerance; };
  };
  std::vector<Criterion> criteria{
      {1, "regular polygon values", 1.0, regular_values},
      {2, "symbolic certificates", 1.0, certificates},
      {3, "dp equals brute force", 60.0, oracle_equivalence},
      extremal_line(4, "f(5,3)", 3, 5, within(0.4472136, 2e-3), "0.4472136 +- 2e-3"),
      extremal_line(4, "f(5,4)", 4, 5, within(0.7236068, 2e-3), "0.7236068 +- 2e-3"),
      extremal_line(4, "f(6,4)", 4, 6, within(2.0 / 3.0, 5e-3), "2/3 +- 5e-3"),
      extremal_line(4, "f(6,5)", 5, 6, within(5.0 / 6.0, 5e-3), "5/6 +- 5e-3"),
      extremal_line(4, "f(4,3)", 3, 4, within(0.5, 1e-6), "1/2 +- 1e-6"),
      extremal_line(4, "f(6,3)", 3, 6, [](double got) { return got <= 0.4489; }, "<= 0.4489"),
      extremal_line(4, "g(5)", std::nullopt, 5, within((5 - r5) / 10, 2e-3), "0.2763932 +- 2e-3"),
      extremal_line(4, "g(6)", std::nullopt, 6, within(1.0 / 6.0, 2e-3), "1/6 +- 2e-3"),
      {5, "ear bound sweeps", 300.0, bound_sweeps},
      {6, "inscribed ratio floor m/n", 600.0, ratio_floor_sweep},
      {7, "sampled pentagon inequalities", 30.0, pentagon_inequalities},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = seconds <= c.budget_seconds;
    const bool ok = outcome.ok && in_time;
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << std::fixed
              << std::setprecision(2) << seconds << " s, budget " << c.budget_seconds << " s)" << std::defaultfloat
              << ": " << outcome.detail << (in_time ? "" : " [over budget]") << '\n'
              << std::flush;
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << '\n';
  return failures == 0 ? 0 : 1;
}
