// SPDX-License-Identifier: Apache-2.0
#include <polygap/errors.hpp>
#include <polygap/symcheck.hpp>

#include <json.hpp>

namespace polygap {

namespace {

MultiPoly var(Var v) { return MultiPoly::variable(v); }

SymVec2 vec(MultiPoly u, MultiPoly v) { return {std::move(u), std::move(v)}; }

MultiPoly tri(const SymVec2& x, const SymVec2& y, const SymVec2& z) { return sym_wedge(y - x, z - x); }

// Shoelace sum of wedges about the origin of the (u, v) frame.
MultiPoly area(const std::vector<SymVec2>& vertices) {
  MultiPoly total;
  for (std::size_t k = 0; k < vertices.size(); ++k) total += sym_wedge(vertices[k], vertices[(k + 1) % vertices.size()]);
  return total;
}

struct Hexagon {
  SymVec2 A, B, C, D, E, F;
};

Hexagon symbolic_hexagon() {
  const auto a = var(Var::a), b = var(Var::b), c = var(Var::c);
  const auto d = var(Var::d), e = var(Var::e), f = var(Var::f);
  const SymVec2 u = vec(1, 0);
  const SymVec2 v = vec(0, 1);
  const SymVec2 M = vec(0, 0);
  const SymVec2 N = u;
  const SymVec2 P = v;
  const SymVec2 w = v - u;
  return {M - a * u, M - b * v, N - c * w, N + d * u, P + e * v, P + f * w};
}

}  // namespace

std::vector<DerivedFormula> derive_pentagon_formulas() {
  const auto a = var(Var::a), b = var(Var::b), c = var(Var::c), d = var(Var::d);
  const SymVec2 u = vec(1, 0);
  const SymVec2 v = vec(0, 1);
  // O is the origin; OD = u, OA = v, BO = a u, CO = b v, OE = c u + d v.
  const SymVec2 A = v;
  const SymVec2 B = (-a) * u;
  const SymVec2 C = (-b) * v;
  const SymVec2 D = u;
  const SymVec2 E = c * u + d * v;

  auto row = [](std::string name, MultiPoly derived, std::string_view stated) {
    return DerivedFormula{std::move(name), std::move(derived), parse_poly(stated)};
  };
  return {
      row("area(ABCDE)", area({A, B, C, D, E}), "a+b+c+d+ab"),
      row("ear(ABC)", tri(A, B, C), "a+ab"),
      row("ear(BCD)", tri(B, C, D), "b+ba"),
      row("ear(CDE)", tri(C, D, E), "b+d-bc"),
      row("ear(DEA)", tri(D, E, A), "c+d-1"),
      row("ear(EAB)", tri(E, A, B), "a+c-ad"),
      row("tri(ABD)", tri(A, B, D), "a+1"),
      row("tri(ACD)", tri(A, C, D), "b+1"),
      row("tri(BCE)", tri(B, C, E), "ab+ad+bc"),
  };
}

std::vector<DerivedFormula> derive_hexagon_formulas() {
  const auto [A, B, C, D, E, F] = symbolic_hexagon();
  auto row = [](std::string name, MultiPoly derived, std::string_view stated) {
    return DerivedFormula{std::move(name), std::move(derived), parse_poly(stated)};
  };
  return {
      row("area(ABCDEF)", area({A, B, C, D, E, F}), "1+a+b+c+d+e+f+ab+bc+cd+de+ef+fa"),
      row("ear(ABC)", tri(A, B, C), "b(a+c+1)-ac"),
      row("ear(BCD)", tri(B, C, D), "c(b+d+1)-bd"),
      row("ear(CDE)", tri(C, D, E), "d(c+e+1)-ce"),
      row("ear(DEF)", tri(D, E, F), "e(d+f+1)-df"),
      row("ear(EFA)", tri(E, F, A), "f(e+a+1)-ea"),
      row("ear(FAB)", tri(F, A, B), "a(1+b+f)-bf"),
      row("ear(FAB), expanded form", tri(F, A, B), "a(1+f)+b(a-f)"),
      row("quad(BCDF)", area({B, C, D, F}), "1+b+c+d+f+bc+cd+bf+df"),
      row("quad(ACDE)", area({A, C, D, E}), "1+c+d+e+a+cd+de+ca+ea"),
      row("quad(BDEF)", area({B, D, E, F}), "1+d+e+f+b+de+ef+db+fb"),
      row("quad(BCEF)", area({B, C, E, F}), "1+b+c+e+f+bc+ef+bf+ce"),
  };
}

PolyEnvironment hexagon_environment() {
  const auto [A, B, C, D, E, F] = symbolic_hexagon();
  PolyEnvironment env;
  const MultiPoly H = area({A, B, C, D, E, F});
  env["H"] = H;
  env["FAB"] = tri(F, A, B);
  const std::array<MultiPoly, 4> quads{area({B, C, D, F}), area({A, C, D, E}), area({B, D, E, F}), area({B, C, E, F})};
  for (std::size_t k = 0; k < quads.size(); ++k) {
    env["Q" + std::to_string(k + 1)] = quads[k];
    env["T" + std::to_string(k + 1)] = quads[k].scaled(Rational(3)) - H.scaled(Rational(2));
  }
  return env;
}

CertificateReport check_certificate(const MultiPoly& lhs, const std::map<Var, MultiPoly>& substitutions,
                                    const MultiPoly& claimed_rhs, const Rational& min_constant) {
  for (const auto& [eliminated, replacement] : substitutions) {
    if (claimed_rhs.uses(eliminated)) {
      throw UsageError(std::string("claimed right-hand side still uses substituted variable '") +
                       var_name(eliminated) + "'");
    }
  }
  CertificateReport report;
  report.substituted_lhs = lhs.substitute(substitutions);
  report.claimed_rhs = claimed_rhs;
  report.equal = report.substituted_lhs == claimed_rhs;
  report.nonnegative_coefficients = claimed_rhs.all_coefficients_nonnegative();
  report.constant_term = claimed_rhs.constant_term();
  report.constant_ok = report.constant_term > 0 && report.constant_term >= min_constant;
  return report;
}

CertificateReport run_certificate(const Certificate& certificate, const PolyEnvironment& env) {
  std::map<Var, MultiPoly> substitutions;
  for (const auto& [name, expression] : certificate.substitutions) {
    substitutions[parse_var(name)] = parse_poly(expression, env);
  }
  auto report = check_certificate(parse_poly(certificate.lhs, env), substitutions,
                                  parse_poly(certificate.claimed_rhs, env), certificate.min_constant);
  report.name = certificate.name;
  return report;
}

std::vector<Certificate> load_certificates(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("invalid certificate fixture: ") + e.what());
  }
  if (doc.value("schema_version", 0) != 1) throw UsageError("unsupported certificate fixture schema_version");

  std::vector<Certificate> out;
  try {
    for (const auto& entry : doc.at("certificates")) {
      Certificate c;
      c.name = entry.at("name").get<std::string>();
      c.hypothesis = entry.value("hypothesis", "");
      c.lhs = entry.at("lhs").get<std::string>();
      for (const auto& pair : entry.at("substitutions")) {
        c.substitutions.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
      }
      c.claimed_rhs = entry.at("claimed_rhs").get<std::string>();
      c.min_constant = parse_rational(entry.value("min_constant", "1"));
      out.push_back(std::move(c));
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed certificate entry: ") + e.what());
  }
  return out;
}

std::vector<Certificate> builtin_certificates() { return load_certificates(builtin_certificates_json()); }

std::vector<CertificateReport> run_all_certificates() {
  const auto certificates = builtin_certificates();
  return run_all_certificates(certificates);
}

std::vector<CertificateReport> run_all_certificates(std::span<const Certificate> certificates) {
  const PolyEnvironment env = hexagon_environment();
  std::vector<CertificateReport> reports;
  reports.reserve(certificates.size());
  for (const auto& certificate : certificates) reports.push_back(run_certificate(certificate, env));
  return reports;
}

}  // namespace polygap
