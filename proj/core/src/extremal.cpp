// SPDX-License-Identifier: Apache-2.0
#include <polygap/extremal.hpp>
#include <polygap/inscribed.hpp>
#include <polygap/random_polygon.hpp>
#include <polygap/rng.hpp>
#include <polygap/simplex.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <thread>

namespace polygap {

namespace {

constexpr double kPenaltyWeight = 1e3;
constexpr double kLogLimit = 12.0;          // log-parameters beyond this are penalized
constexpr double kTurnMargin = 1e-9;        // normalized cross product a feasible turn must exceed
constexpr std::size_t kMaxRounds = 12;      // simplex re-launches per restart
constexpr int kMaxStartAttempts = 1000;
constexpr std::int64_t kAuditDenominator = 1'000'000'000;

struct Decoded {
  std::vector<Vec2<double>> vertices;
  double violation = 0.0;
};

std::size_t chart_dimension(Parametrization chart, std::size_t n) {
  switch (chart) {
    case Parametrization::kPentagon: return 4;
    case Parametrization::kHexagon: return 6;
    default: return 2 * n - 1;
  }
}

double clamped_exp(double x, double& violation) {
  if (std::abs(x) > kLogLimit) {
    violation += std::abs(x) - kLogLimit;
    x = std::clamp(x, -kLogLimit, kLogLimit);
  }
  return std::exp(x);
}

// Family vertex positions without the convexity check of build_*.
std::vector<Vec2<double>> pentagon_vertices(double a, double b, double c, double d) {
  const Vec2<double> u{1, 0};
  const Vec2<double> v{0, 2};
  return {v, (-a) * u, (-b) * v, u, c * u + d * v};
}

std::vector<Vec2<double>> hexagon_vertices(const std::array<double, 6>& p) {
  const Vec2<double> u{1, 0};
  const Vec2<double> v{0, 2};
  const Vec2<double> w = v - u;
  const Vec2<double> M{0, 0};
  return {M - p[0] * u, M - p[1] * v, u - p[2] * w, u + p[3] * u, v + p[4] * v, v + p[5] * w};
}

// Penalizes reflex or flat turns, measured relative to the bounding box.
double turn_violation(const std::vector<Vec2<double>>& vs) {
  double lo_x = vs[0].x, hi_x = lo_x, lo_y = vs[0].y, hi_y = lo_y;
  for (const auto& p : vs) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const double scale = std::max(hi_x - lo_x, hi_y - lo_y);
  if (!(scale > 0)) return 1.0;
  double violation = 0.0;
  const std::size_t n = vs.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& prev = vs[(k + n - 1) % n];
    const auto& next = vs[(k + 1) % n];
    const double cross = (vs[k].x - prev.x) * (next.y - vs[k].y) - (vs[k].y - prev.y) * (next.x - vs[k].x);
    violation += std::max(0.0, kTurnMargin - cross / (scale * scale));
  }
  return violation;
}

Decoded decode(Parametrization chart, std::size_t n, std::span<const double> x) {
  Decoded out;
  switch (chart) {
    case Parametrization::kPentagon: {
      std::array<double, 4> p{};
      for (std::size_t k = 0; k < 4; ++k) p[k] = clamped_exp(x[k], out.violation);
      out.vertices = pentagon_vertices(p[0], p[1], p[2], p[3]);
      break;
    }
    case Parametrization::kHexagon: {
      std::array<double, 6> p{};
      for (std::size_t k = 0; k < 6; ++k) p[k] = clamped_exp(x[k], out.violation);
      out.vertices = hexagon_vertices(p);
      break;
    }
    default: {
      // Gap 0 has weight 1; gaps 1..n-1 have weights exp(x[0..n-2]).
      std::vector<double> gaps(n, 1.0);
      for (std::size_t k = 1; k < n; ++k) gaps[k] = clamped_exp(x[k - 1], out.violation);
      double total = 0.0;
      for (double g : gaps) total += g;
      double angle = 0.0;
      out.vertices.reserve(n);
      for (std::size_t k = 0; k < n; ++k) {
        const double radius = 0.75 + 0.25 * std::tanh(x[n - 1 + k]);
        out.vertices.push_back({radius * std::cos(angle), radius * std::sin(angle)});
        angle += 2 * std::numbers::pi * gaps[k] / total;
      }
      break;
    }
  }
  out.violation += turn_violation(out.vertices);
  if (out.violation == 0.0 && !convexity_violation<double>(out.vertices).empty()) out.violation = 1.0;
  return out;
}

std::vector<double> random_start(Parametrization chart, std::size_t n, Rng& rng) {
  std::vector<double> x(chart_dimension(chart, n));
  if (chart == Parametrization::kCircle) {
    for (std::size_t k = 0; k + 1 < n; ++k) x[k] = rng.uniform(-0.3, 0.3);
    for (std::size_t k = n - 1; k < x.size(); ++k) x[k] = rng.uniform(-1.0, 1.0);
  } else {
    for (auto& xi : x) xi = rng.uniform(-1.0, 1.0);
  }
  return x;
}

std::size_t worker_count(std::size_t jobs) {
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("POLYGAP_THREADS")) {
    char* end = nullptr;
    const long requested = std::strtol(env, &end, 10);
    if (end != env && requested > 0) workers = static_cast<std::size_t>(requested);
  }
  return std::max<std::size_t>(1, std::min(workers, jobs));
}

template <class Job>
void run_parallel(std::size_t jobs, const Job& job) {
  const std::size_t workers = worker_count(jobs);
  if (workers == 1) {
    for (std::size_t k = 0; k < jobs; ++k) job(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < jobs; k = next++) job(k);
    });
  }
  for (auto& t : pool) t.join();
}

struct RestartOutcome {
  std::vector<double> x;
  double value = 0.0;
  bool converged = false;
  std::size_t evaluations = 0;
  std::size_t audit_checked = 0;
  std::size_t audit_violations = 0;
};

class Search {
 public:
  Search(const SearchConfig& config, Parametrization chart) : config_(config), chart_(chart) {}

  // Minimized value: the f ratio, or the negated smallest-ear ratio for g.
  double evaluate(std::span<const double> x, RestartOutcome& stats) const {
    ++stats.evaluations;
    const Decoded d = decode(chart_, config_.n, x);
    const bool for_f = config_.m.has_value();
    if (d.violation > 0.0) return (for_f ? 1.0 : 0.0) + kPenaltyWeight * d.violation;
    const auto polygon = ConvexPolygon<double>::make(d.vertices);
    if (config_.audit_min_ear_constraints && chart_ == Parametrization::kPentagon) audit(x, stats);
    return for_f ? f_objective(polygon, *config_.m) : -g_objective(polygon);
  }

  RestartOutcome run_restart(std::size_t index) const {
    Rng rng = Rng::stream(config_.seed, index);
    RestartOutcome out;
    std::vector<double> x = random_start(chart_, config_.n, rng);
    // Restart 0 of the circle chart starts at the origin: equal gaps and equal
    // radii, i.e. the regular n-gon. Keeps the search from ending below it.
    if (index == 0 && chart_ == Parametrization::kCircle) std::fill(x.begin(), x.end(), 0.0);
    for (int attempt = 1; attempt < kMaxStartAttempts; ++attempt) {
      if (decode(chart_, config_.n, x).violation == 0.0) break;
      x = random_start(chart_, config_.n, rng);
    }
    const Objective objective = [&](std::span<const double> p) { return evaluate(p, out); };
    out.x = x;
    out.value = objective(x);

    SimplexOptions options;
    options.max_iterations = config_.max_iters;
    options.size_tolerance = config_.tolerance;
    for (std::size_t round = 0; round < kMaxRounds; ++round) {
      const SimplexOutcome run = minimize_simplex(objective, out.x, options);
      const bool improved = run.value < out.value - 1e-15 * std::max(1.0, std::abs(out.value));
      if (improved) {
        out.x = run.x;
        out.value = run.value;
      }
      out.converged = run.converged;
      if (!improved) break;
      options.initial_step = std::max(options.initial_step * 0.5, 1e-3);
    }
    return out;
  }

 private:
  // DEA is ear index 3 in the pentagon labeling.
  static void audit(std::span<const double> x, RestartOutcome& stats) {
    double unused = 0.0;
    const auto ears = pentagon_ear_formulas(PentagonParams<double>{
        clamped_exp(x[0], unused), clamped_exp(x[1], unused), clamped_exp(x[2], unused), clamped_exp(x[3], unused)});
    if (*std::min_element(ears.begin(), ears.end()) < ears[3]) return;
    PentagonParams<Rational> exact;
    for (std::size_t k = 0; k < 4; ++k) {
      const Rational r = snap_rational(clamped_exp(x[k], unused), kAuditDenominator);
      if (r <= 0) return;
      (k == 0 ? exact.a : k == 1 ? exact.b : k == 2 ? exact.c : exact.d) = r;
    }
    if (!pentagon_is_convex(exact) || !pentagon_dea_is_min_ear(exact)) return;
    ++stats.audit_checked;
    if (!pentagon_min_ear_constraints(exact)) ++stats.audit_violations;
  }

  const SearchConfig& config_;
  Parametrization chart_;
};

SearchResult run_search(const SearchConfig& config) {
  const Parametrization chart = resolve_parametrization(config);
  const Search search(config, chart);
  std::vector<RestartOutcome> outcomes(config.restarts);
  run_parallel(config.restarts, [&](std::size_t k) { outcomes[k] = search.run_restart(k); });

  std::size_t best = 0;
  for (std::size_t k = 1; k < outcomes.size(); ++k) {
    if (outcomes[k].value < outcomes[best].value) best = k;
  }
  const bool for_f = config.m.has_value();
  const Decoded d = decode(chart, config.n, outcomes[best].x);
  if (d.violation > 0.0) throw GeometryError("search found no feasible polygon");
  auto witness = ConvexPolygon<double>::make(d.vertices);
  const double estimate = for_f ? f_objective(witness, *config.m) : g_objective(witness);

  SearchResult result{.estimate = estimate,
                      .witness = std::move(witness),
                      .restart_bests = {},
                      .seed = config.seed,
                      .converged = outcomes[best].converged,
                      .parametrization = chart};
  for (const auto& o : outcomes) {
    result.restart_bests.push_back(for_f ? o.value : -o.value);
    result.evaluations += o.evaluations;
    result.audit_checked += o.audit_checked;
    result.audit_violations += o.audit_violations;
  }
  return result;
}

}  // namespace

std::string_view to_string(Parametrization p) {
  switch (p) {
    case Parametrization::kAuto: return "auto";
    case Parametrization::kPentagon: return "pentagon-params";
    case Parametrization::kHexagon: return "hexagon-params";
    case Parametrization::kCircle: return "circle-angles";
  }
  return "?";
}

Parametrization parse_parametrization(std::string_view text) {
  if (text == "auto") return Parametrization::kAuto;
  if (text == "pentagon" || text == "pentagon-params") return Parametrization::kPentagon;
  if (text == "hexagon" || text == "hexagon-params") return Parametrization::kHexagon;
  if (text == "circle" || text == "circle-angles") return Parametrization::kCircle;
  throw UsageError("unknown parametrization '" + std::string(text) + "'");
}

Parametrization resolve_parametrization(const SearchConfig& config) {
  if (config.parametrization != Parametrization::kAuto) return config.parametrization;
  if (config.n == 5) return Parametrization::kPentagon;
  if (config.n == 6) return Parametrization::kHexagon;
  return Parametrization::kCircle;
}

void validate(const SearchConfig& config, bool expects_m) {
  if (config.n < 3) throw UsageError("n must be at least 3");
  if (config.restarts == 0) throw UsageError("restarts must be at least 1");
  if (config.max_iters == 0) throw UsageError("max_iters must be at least 1");
  if (!(config.tolerance > 0)) throw UsageError("tolerance must be positive");
  if (expects_m) {
    if (!config.m) throw UsageError("estimate_f needs m");
    if (*config.m < 3 || *config.m >= config.n) throw UsageError("m must satisfy 3 <= m < n");
  } else if (config.m) {
    throw UsageError("estimate_g takes no m");
  }
  const Parametrization chart = resolve_parametrization(config);
  if (chart == Parametrization::kPentagon && config.n != 5) throw UsageError("pentagon-params needs n = 5");
  if (chart == Parametrization::kHexagon && config.n != 6) throw UsageError("hexagon-params needs n = 6");
  if (config.audit_min_ear_constraints && chart != Parametrization::kPentagon) {
    throw UsageError("the min-ear audit needs the pentagon chart");
  }
}

double f_objective(const ConvexPolygon<double>& polygon, std::size_t m) {
  return max_inscribed_dp(polygon, m).ratio;
}

double g_objective(const ConvexPolygon<double>& polygon) { return min_ear_ratio(polygon).ratio; }

SearchResult estimate_f(const SearchConfig& config) {
  validate(config, true);
  return run_search(config);
}

SearchResult estimate_g(const SearchConfig& config) {
  validate(config, false);
  return run_search(config);
}

std::optional<double> known_f(std::size_t n, std::size_t m) {
  const double s5 = std::sqrt(5.0);
  if (n == 4 && m == 3) return 0.5;
  if (n == 5 && m == 3) return 1.0 / s5;
  if (n == 5 && m == 4) return (5.0 + s5) / 10.0;
  if (n == 6 && m == 3) return 4.0 / 9.0;
  if (n == 6 && m == 4) return 2.0 / 3.0;
  if (n == 6 && m == 5) return 5.0 / 6.0;
  return std::nullopt;
}

std::optional<double> known_g(std::size_t n) {
  if (n < 4) return std::nullopt;
  if (auto f = known_f(n, n - 1)) return 1.0 - *f;
  return std::nullopt;
}

ExactConfirmation confirm_exact(const SearchResult& result, std::optional<std::size_t> m,
                                std::int64_t max_denominator) {
  auto polygon = snap_to_rational(result.witness, max_denominator);
  Rational value = m ? max_inscribed_dp(polygon, *m).ratio : min_ear_ratio(polygon).ratio;
  const double difference = std::abs(value.get_d() - result.estimate);
  return {std::move(polygon), std::move(value), difference};
}

double g_lower_bound(std::size_t n) {
  const double s = std::sin(std::numbers::pi / static_cast<double>(n));
  return 4.0 / static_cast<double>(n) * s * s;
}

double g_upper_bound_sine(std::size_t n) {
  const double s = std::sin(2.0 * std::numbers::pi / static_cast<double>(n));
  return 4.0 / static_cast<double>(n) * s * s;
}

double g_upper_bound(std::size_t n) {
  // The 1/n cap holds only from n = 6 on (g_4 = 1/2 > 1/4).
  if (n < 6) return g_upper_bound_sine(n);
  return std::min(1.0 / static_cast<double>(n), g_upper_bound_sine(n));
}

namespace {

std::string describe(const ConvexPolygon<double>& polygon) {
  std::ostringstream out;
  out.precision(17);
  out << '[';
  for (std::size_t k = 0; k < polygon.size(); ++k) {
    const auto& p = polygon.vertex(static_cast<std::ptrdiff_t>(k));
    out << (k ? ", " : "") << '(' << p.x << ", " << p.y << ')';
  }
  out << ']';
  return out.str();
}

constexpr double kBoundSlack = 1e-12;

}  // namespace

std::vector<BoundReport> verify_g_bounds(std::size_t n_min, std::size_t n_max, std::size_t samples,
                                         std::uint64_t seed) {
  if (n_min < 4 || n_max < n_min) throw UsageError("verify_g_bounds needs 4 <= n_min <= n_max");
  std::vector<BoundReport> reports;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    BoundReport r;
    r.n = n;
    r.lower = g_lower_bound(n);
    r.upper = g_upper_bound(n);
    r.upper_sine = g_upper_bound_sine(n);
    r.samples = samples;
    r.seed = seed;
    r.regular_ratio = g_objective(regular_polygon(n));
    if (std::abs(r.regular_ratio - r.lower) > kBoundSlack) {
      throw VerificationFailure("regular " + std::to_string(n) + "-gon smallest ear ratio " +
                                std::to_string(r.regular_ratio) + " differs from the lower bound");
    }
    Rng rng = Rng::stream(seed, n);
    for (std::size_t s = 0; s < samples; ++s) {
      const auto polygon = random_convex_polygon(n, rng);
      const double ratio = g_objective(polygon);
      const bool sine_violation = ratio > r.upper_sine + kBoundSlack;
      const bool inverse_violation = n >= 6 && ratio > 1.0 / static_cast<double>(n) + kBoundSlack;
      if (sine_violation || inverse_violation) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "n=" << n << " seed=" << seed << " sample=" << s << ": smallest ear ratio " << ratio
            << " exceeds " << (sine_violation ? "(4/n)sin^2(2pi/n) = " : "1/n = ")
            << (sine_violation ? r.upper_sine : 1.0 / static_cast<double>(n)) << "; polygon " << describe(polygon);
        throw VerificationFailure(msg.str());
      }
      if (s == 0 || ratio > r.empirical_max_min_ear) {
        r.empirical_max_min_ear = ratio;
        r.argmax_sample = s;
      }
    }
    reports.push_back(r);
  }
  return reports;
}

bool RecursionTable::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const RecursionRow& r) { return r.ok; });
}

RecursionTable verify_g_recursion(std::size_t n_min, std::size_t n_max, const SearchConfig& base) {
  if (n_min < 4 || n_max <= n_min) throw UsageError("verify_g_recursion needs 4 <= n_min < n_max");
  RecursionTable table;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    SearchConfig config = base;
    config.n = n;
    config.m.reset();
    if (config.parametrization != Parametrization::kCircle) config.parametrization = Parametrization::kAuto;
    config.audit_min_ear_constraints = false;
    table.estimates.push_back(estimate_g(config));
  }
  for (std::size_t k = 0; k + 1 < table.estimates.size(); ++k) {
    RecursionRow row;
    row.n = n_min + k;
    row.g_n = table.estimates[k].estimate;
    row.g_next = table.estimates[k + 1].estimate;
    row.bound = row.g_n / (1.0 + row.g_n);
    row.margin = row.bound - row.g_next;
    row.ok = row.g_next <= row.bound + kRecursionSlack;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace polygap
