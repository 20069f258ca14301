// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <polygap/errors.hpp>
#include <polygap/extremal.hpp>
#include <polygap/families.hpp>
#include <polygap/inscribed.hpp>
#include <polygap/polygon_io.hpp>
#include <polygap/symcheck.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#ifndef POLYGAP_VERSION
#define POLYGAP_VERSION "0.0.0"
#endif

namespace polygap::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return ec == std::errc() ? std::string(buffer, end) : std::to_string(value);
}

Json number(double value) { return value; }
Json number(const Rational& value) { return to_string(value); }

// A command's result: one table plus named extras. CSV prints the extras as
// "# key: value" comment lines above the table; JSON nests both.
struct Output {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  std::vector<std::pair<std::string, Json>> extras;
  int exit_code = kExitSuccess;
};

std::string csv_cell(const Json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return quoted + "\"";
  }
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_number_float()) return format_double(value.get<double>());
  if (value.is_array()) {
    std::string joined;
    for (const auto& item : value) joined += (joined.empty() ? "" : " ") + csv_cell(item);
    return joined;
  }
  return value.dump();
}

enum class Format { kCsv, kJson };

struct Command {
  CLI::App* app = nullptr;
  std::string format = "csv";
  std::optional<std::uint64_t>* seed = nullptr;  // echoed in the manifest when set
  std::function<Output()> run;
};

Json manifest_for(const Command& command, double seconds) {
  Json flags = Json::object();
  for (const CLI::Option* option : command.app->get_options()) {
    if (option->get_name() == "--help") continue;
    std::string key = option->get_name();
    key.erase(0, key.find_first_not_of('-'));
    if (option->count() > 0) {
      const auto& results = option->results();
      if (option->get_type_size() == 0) {
        flags[key] = true;
      } else {
        flags[key] = results.size() == 1 ? Json(results.front()) : Json(results);
      }
    } else if (!option->get_default_str().empty()) {
      flags[key] = option->get_default_str();
    } else if (option->get_type_size() == 0) {
      flags[key] = false;
    }
  }
  Json manifest;
  std::string name = command.app->get_name();
  for (const CLI::App* parent = command.app->get_parent(); parent && parent->get_parent(); parent = parent->get_parent()) {
    name = parent->get_name() + " " + name;
  }
  manifest["subcommand"] = name;
  manifest["flags"] = flags;
  manifest["seed"] = (command.seed && command.seed->has_value()) ? Json(**command.seed) : Json(nullptr);
  manifest["version"] = POLYGAP_VERSION;
  manifest["duration_seconds"] = seconds;
  return manifest;
}

void emit(const Output& output, const Json& manifest, Format format, std::ostream& out) {
  if (format == Format::kJson) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["manifest"] = manifest;
    for (const auto& [key, value] : output.extras) doc[key] = value;
    Json rows = Json::array();
    for (const auto& row : output.rows) {
      Json object = Json::object();
      for (std::size_t k = 0; k < output.columns.size(); ++k) object[output.columns[k]] = row[k];
      rows.push_back(std::move(object));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
    return;
  }
  out << "# manifest: " << manifest.dump() << '\n';
  for (const auto& [key, value] : output.extras) {
    out << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  for (std::size_t k = 0; k < output.columns.size(); ++k) out << (k ? "," : "") << output.columns[k];
  out << '\n';
  for (const auto& row : output.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << csv_cell(row[k]);
    out << '\n';
  }
}

Json polygon_json(const AnyPolygon& polygon) {
  return std::visit([](const auto& p) { return Json::parse(polygon_to_json(p)); }, polygon);
}

template <Number T>
Json polygon_json(const ConvexPolygon<T>& polygon) {
  return Json::parse(polygon_to_json(polygon));
}

// --- geometry commands ----------------------------------------------------

Output run_inscribe(const std::string& path, std::size_t m, const std::string& method) {
  if (method != "dp" && method != "bruteforce") throw UsageError("--method must be dp or bruteforce");
  const AnyPolygon polygon = read_polygon_file(path);
  return std::visit(
      [&](const auto& p) {
        const auto result = method == "dp" ? max_inscribed_dp(p, m) : max_inscribed_bruteforce(p, m);
        Output out;
        out.columns = {"mode", "n", "m", "indices", "area", "ratio", "ratio_float"};
        out.rows.push_back({to_string(mode_of<std::decay_t<decltype(result.ratio)>>), p.size(), m,
                            Json(result.indices), number(result.area), number(result.ratio),
                            to_double(result.ratio)});
        return out;
      },
      polygon);
}

Output run_ears(const std::string& path) {
  const AnyPolygon polygon = read_polygon_file(path);
  return std::visit(
      [&](const auto& p) {
        const auto ears = ear_areas(p);
        const auto area = polygon_area(p);
        const auto minimum = min_ear_ratio(p);
        Output out;
        out.columns = {"index", "ear_area", "ear_ratio", "is_min"};
        for (std::size_t k = 0; k < ears.size(); ++k) {
          const auto ratio = ears[k] / area;
          using T = std::decay_t<decltype(area)>;
          out.rows.push_back({k, number(ears[k]), number(T(ratio)), k == minimum.index});
        }
        out.extras.emplace_back("polygon_area", number(area));
        out.extras.emplace_back("min_index", minimum.index);
        out.extras.emplace_back("min_ratio", number(minimum.ratio));
        return out;
      },
      polygon);
}

Output run_peel(const std::string& path, std::size_t m) {
  const AnyPolygon polygon = read_polygon_file(path);
  return std::visit(
      [&](const auto& p) {
        const auto chain = peel_chain(p, m);
        using T = std::decay_t<decltype(chain.product())>;
        Output out;
        out.columns = {"step", "n_before", "removed_index", "step_ratio", "cumulative_ratio"};
        T cumulative(1);
        for (std::size_t k = 0; k < chain.step_ratios.size(); ++k) {
          cumulative = cumulative * chain.step_ratios[k];
          out.rows.push_back({k + 1, chain.polygons[k].size(), chain.removed_indices[k], number(chain.step_ratios[k]),
                              number(cumulative)});
        }
        const T product = chain.product();
        const T bound = T(static_cast<long>(m)) / T(static_cast<long>(p.size()));
        out.extras.emplace_back("product", number(product));
        out.extras.emplace_back("m_over_n", number(bound));
        out.extras.emplace_back("product_at_least_m_over_n", !(product < bound));
        out.extras.emplace_back("result", polygon_json(chain.polygons.back()));
        return out;
      },
      polygon);
}

// --- families -------------------------------------------------------------

template <Number T>
T parse_parameter(const std::string& name, const std::string& text) {
  try {
    const Rational value = parse_rational(text);
    if constexpr (mode_of<T> == Mode::kExact) {
      return value;
    } else {
      return value.get_d();
    }
  } catch (const UsageError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

template <Number T>
bool formula_matches(const T& formula, const T& geometry) {
  if constexpr (mode_of<T> == Mode::kExact) {
    return formula == geometry;
  } else {
    return std::abs(formula - geometry) <= 1e-9 * std::max(1.0, std::abs(geometry));
  }
}

template <Number T>
Output family_output(const ConvexPolygon<T>& polygon, const std::vector<FormulaCheck<T>>& report) {
  Output out;
  out.columns = {"name", "formula", "geometry", "match"};
  bool all = true;
  for (const auto& row : report) {
    const bool match = formula_matches(row.formula, row.geometry);
    all = all && match;
    out.rows.push_back({row.name, number(row.formula), number(row.geometry), match});
  }
  out.extras.emplace_back("mode", to_string(mode_of<T>));
  out.extras.emplace_back("polygon", polygon_json(polygon));
  out.extras.emplace_back("all_match", all);
  if (!all) out.exit_code = kExitVerificationFailure;
  return out;
}

template <Number T>
Output run_pentagon(const std::map<std::string, std::string>& raw) {
  const auto p = PentagonParams<T>::make(parse_parameter<T>("a", raw.at("a")), parse_parameter<T>("b", raw.at("b")),
                                         parse_parameter<T>("c", raw.at("c")), parse_parameter<T>("d", raw.at("d")));
  const auto polygon = build_pentagon(p);
  Output out = family_output(polygon, pentagon_report(p));
  out.extras.emplace_back("dea_is_min_ear", pentagon_dea_is_min_ear(p));
  out.extras.emplace_back("min_ear_constraints_hold", pentagon_min_ear_constraints(p));
  return out;
}

template <Number T>
Output run_hexagon(const std::map<std::string, std::string>& raw) {
  const auto h = HexagonParams<T>::make(parse_parameter<T>("a", raw.at("a")), parse_parameter<T>("b", raw.at("b")),
                                        parse_parameter<T>("c", raw.at("c")), parse_parameter<T>("d", raw.at("d")),
                                        parse_parameter<T>("e", raw.at("e")), parse_parameter<T>("f", raw.at("f")));
  return family_output(build_hexagon(h), hexagon_report(h));
}

// --- symbolic checks ------------------------------------------------------

Output run_verify_identities(const std::string& fixture) {
  std::vector<Certificate> certificates;
  if (fixture.empty()) {
    certificates = builtin_certificates();
  } else {
    std::ifstream in(fixture);
    if (!in) throw UsageError("cannot open fixture '" + fixture + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    certificates = load_certificates(buffer.str());
  }

  Output out;
  out.columns = {"kind", "name", "equal", "nonnegative_coefficients", "constant_term", "passed"};
  std::size_t passed = 0;
  const auto reports = run_all_certificates(certificates);
  for (const auto& r : reports) {
    passed += r.passed() ? 1 : 0;
    out.rows.push_back({"certificate", r.name, r.equal, r.nonnegative_coefficients, to_string(r.constant_term),
                        r.passed()});
  }
  std::size_t formulas_ok = 0;
  std::size_t formulas = 0;
  for (const auto& group : {derive_pentagon_formulas(), derive_hexagon_formulas()}) {
    for (const auto& f : group) {
      ++formulas;
      formulas_ok += f.matches() ? 1 : 0;
      out.rows.push_back({"formula", f.name, f.matches(), nullptr, nullptr, f.matches()});
    }
  }
  out.extras.emplace_back("certificates_passed", std::to_string(passed) + "/" + std::to_string(reports.size()));
  out.extras.emplace_back("formulas_matched", std::to_string(formulas_ok) + "/" + std::to_string(formulas));
  if (passed != reports.size() || formulas_ok != formulas) out.exit_code = kExitVerificationFailure;
  return out;
}

// --- extremal -------------------------------------------------------------

struct SearchFlags {
  std::size_t n = 5;
  std::size_t m = 0;
  std::size_t restarts = 64;
  std::size_t max_iters = 2000;
  std::optional<std::uint64_t> seed = std::uint64_t{42};
  double tolerance = 1e-9;
  std::string param = "auto";
  bool confirm = false;
};

SearchConfig make_config(const SearchFlags& flags, bool with_m) {
  SearchConfig config;
  config.n = flags.n;
  if (with_m) config.m = flags.m;
  config.restarts = flags.restarts;
  config.max_iters = flags.max_iters;
  config.seed = *flags.seed;
  config.tolerance = flags.tolerance;
  config.parametrization = parse_parametrization(flags.param);
  return config;
}

Output run_estimate(const SearchFlags& flags, bool for_f) {
  const SearchConfig config = make_config(flags, for_f);
  const SearchResult result = for_f ? estimate_f(config) : estimate_g(config);
  const std::optional<double> known = for_f ? known_f(config.n, *config.m) : known_g(config.n);

  Output out;
  out.columns = {"n", "m", "estimate", "known_value", "abs_error", "restarts", "seed", "converged"};
  out.rows.push_back({config.n, for_f ? Json(*config.m) : Json(nullptr), result.estimate,
                      known ? Json(*known) : Json(nullptr),
                      known ? Json(std::abs(result.estimate - *known)) : Json(nullptr), config.restarts, config.seed,
                      result.converged});
  out.extras.emplace_back("objective", for_f ? "f_n(m): min over polygons of the max inscribed m-gon ratio"
                                             : "g_n: max over polygons of the min ear ratio");
  out.extras.emplace_back("provenance", known ? "known closed form available" : "estimate (no closed form)");
  out.extras.emplace_back("parametrization", std::string(to_string(result.parametrization)));
  out.extras.emplace_back("evaluations", result.evaluations);
  out.extras.emplace_back("witness", polygon_json(result.witness));
  out.extras.emplace_back("restart_bests", result.restart_bests);
  if (flags.confirm) {
    const auto exact = confirm_exact(result, config.m);
    out.extras.emplace_back("exact_value", to_string(exact.value));
    out.extras.emplace_back("exact_value_float", exact.value.get_d());
    out.extras.emplace_back("exact_abs_difference", exact.abs_difference);
  }
  return out;
}

Output run_verify_bounds(std::size_t n_min, std::size_t n_max, std::size_t samples, std::uint64_t seed) {
  const auto reports = verify_g_bounds(n_min, n_max, samples, seed);
  Output out;
  out.columns = {"n", "lower", "upper", "upper_sine", "empirical_max_min_ear", "argmax_sample", "samples",
                 "regular_ratio", "seed"};
  for (const auto& r : reports) {
    out.rows.push_back({r.n, r.lower, r.upper, r.upper_sine, r.empirical_max_min_ear, r.argmax_sample, r.samples,
                        r.regular_ratio, r.seed});
  }
  out.extras.emplace_back("violations", 0);
  return out;
}

Output run_verify_recursion(std::size_t n_min, std::size_t n_max, const SearchFlags& flags) {
  SearchFlags copy = flags;
  copy.n = n_min;
  const RecursionTable table = verify_g_recursion(n_min, n_max, make_config(copy, false));
  Output out;
  out.columns = {"n", "g_n", "g_next", "bound", "margin", "ok", "g_n_source"};
  for (const auto& row : table.rows) {
    out.rows.push_back({row.n, row.g_n, row.g_next, row.bound, row.margin, row.ok,
                        known_g(row.n) ? "estimate (known closed form)" : "estimate"});
  }
  out.extras.emplace_back("slack", kRecursionSlack);
  out.extras.emplace_back("passed", table.passed());
  if (!table.passed()) out.exit_code = kExitVerificationFailure;
  return out;
}

// --- wiring ---------------------------------------------------------------

void add_format(CLI::App* app, Command& command) {
  app->add_option("--format", command.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_search_flags(CLI::App* app, SearchFlags& flags, bool with_n) {
  if (with_n) app->add_option("--n", flags.n, "Polygon size")->required();
  app->add_option("--restarts", flags.restarts, "Independent simplex restarts")->capture_default_str();
  app->add_option("--max-iters", flags.max_iters, "Iteration cap per simplex run")->capture_default_str();
  app->add_option("--seed", flags.seed, "Base seed")->capture_default_str();
  app->add_option("--tol", flags.tolerance, "Simplex size tolerance")->capture_default_str();
  app->add_option("--param", flags.param, "auto | pentagon-params | hexagon-params | circle-angles")
      ->capture_default_str();
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("polygap: inscribed polygons, ear bounds and extremal ratios of convex polygons", "polygap");
  app.require_subcommand(1);
  app.set_version_flag("--version", POLYGAP_VERSION);

  std::vector<Command> commands;
  commands.reserve(16);
  auto add = [&](const std::string& name, const std::string& description) -> Command& {
    Command& command = commands.emplace_back();
    command.app = app.add_subcommand(name, description);
    add_format(command.app, command);
    return command;
  };

  std::string polygon_path;
  std::size_t m = 0;
  std::string method = "dp";
  {
    Command& c = add("inscribe", "Largest-area inscribed m-gon");
    c.app->add_option("--polygon", polygon_path, "Polygon JSON file")->required();
    c.app->add_option("--m", m, "Vertices of the inscribed polygon")->required();
    c.app->add_option("--method", method, "dp | bruteforce")->capture_default_str();
    c.run = [&] { return run_inscribe(polygon_path, m, method); };
  }
  {
    Command& c = add("ears", "Ear areas and the smallest ear ratio");
    c.app->add_option("--polygon", polygon_path, "Polygon JSON file")->required();
    c.run = [&] { return run_ears(polygon_path); };
  }
  {
    Command& c = add("peel", "Repeatedly remove the smallest ear down to m vertices");
    c.app->add_option("--polygon", polygon_path, "Polygon JSON file")->required();
    c.app->add_option("--m", m, "Target vertex count")->required();
    c.run = [&] { return run_peel(polygon_path, m); };
  }

  std::map<std::string, std::string> params;
  bool exact = false;
  CLI::App* family = app.add_subcommand("family", "Parametrized pentagon or hexagon");
  family->require_subcommand(1);
  auto add_family = [&](const std::string& name, const std::string& letters) -> Command& {
    Command& command = commands.emplace_back();
    command.app = family->add_subcommand(name, "Build the " + name + " and compare closed forms with geometry");
    add_format(command.app, command);
    for (char letter : letters) {
      const std::string key(1, letter);
      command.app->add_option("--" + key, params[key], "Parameter " + key + " (> 0; decimal or p/q)")->required();
    }
    command.app->add_flag("--exact", exact, "Rational arithmetic");
    return command;
  };
  add_family("pentagon", "abcd").run = [&] { return exact ? run_pentagon<Rational>(params) : run_pentagon<double>(params); };
  add_family("hexagon", "abcdef").run = [&] { return exact ? run_hexagon<Rational>(params) : run_hexagon<double>(params); };

  std::string fixture;
  bool as_json = false;
  {
    Command& c = add("verify-identities", "Check the polynomial certificates and area formulas exactly");
    c.app->add_flag("--json", as_json, "Same as --format json");
    c.app->add_option("--fixture", fixture, "Certificate JSON (default: built-in)");
    c.run = [&] { return run_verify_identities(fixture); };
  }

  SearchFlags search;
  {
    Command& c = add("estimate-f", "Estimate f_n(m) by multi-start simplex search");
    add_search_flags(c.app, search, true);
    c.app->add_option("--m", search.m, "Inscribed vertex count")->required();
    c.app->add_flag("--confirm-exact", search.confirm, "Re-evaluate the snapped witness in rational arithmetic");
    c.seed = &search.seed;
    c.run = [&] { return run_estimate(search, true); };
  }
  {
    Command& c = add("estimate-g", "Estimate g_n by multi-start simplex search");
    add_search_flags(c.app, search, true);
    c.app->add_flag("--confirm-exact", search.confirm, "Re-evaluate the snapped witness in rational arithmetic");
    c.seed = &search.seed;
    c.run = [&] { return run_estimate(search, false); };
  }

  std::size_t n_min = 4;
  std::size_t n_max = 12;
  std::size_t samples = 10000;
  {
    Command& c = add("verify-bounds", "Sweep random polygons against the closed-form bounds on g_n");
    c.app->add_option("--n-min", n_min, "Smallest n")->capture_default_str();
    c.app->add_option("--n-max", n_max, "Largest n")->capture_default_str();
    c.app->add_option("--samples", samples, "Random polygons per n")->capture_default_str();
    c.app->add_option("--seed", search.seed, "Base seed")->capture_default_str();
    c.seed = &search.seed;
    c.run = [&] { return run_verify_bounds(n_min, n_max, samples, *search.seed); };
  }
  {
    Command& c = add("verify-recursion", "Check g_{n+1} <= g_n / (1 + g_n) on estimated values");
    c.app->add_option("--n-min", n_min, "Smallest n")->capture_default_str();
    c.app->add_option("--n-max", n_max, "Largest n")->capture_default_str();
    add_search_flags(c.app, search, false);
    c.seed = &search.seed;
    c.run = [&] { return run_verify_recursion(n_min, n_max, search); };
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    CLI::App* failing = &app;
    for (CLI::App* sub = &app; sub != nullptr;) {
      const auto chosen = sub->get_subcommands();
      if (chosen.empty()) break;
      failing = sub = chosen.front();
    }
    err << failing->help();
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  for (Command& command : commands) {
    if (!command.app->parsed()) continue;
    if (as_json) command.format = "json";
    try {
      const Output output = command.run();
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      emit(output, manifest_for(command, seconds), command.format == "json" ? Format::kJson : Format::kCsv, out);
      return output.exit_code;
    } catch (const VerificationFailure& e) {
      err << "verification failure: " << e.what() << '\n';
      return kExitVerificationFailure;
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << '\n' << command.app->help();
      return kExitUsage;
    } catch (const GeometryError& e) {
      err << "invalid polygon: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace polygap::cli
