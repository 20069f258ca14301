// SPDX-License-Identifier: Apache-2.0
#include <polygap/families.hpp>
#include <polygap/symcheck.hpp>

#include <test_support.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

namespace polygap {
namespace {

using testing::log_uniform_rational;
using testing::random_rational;

MultiPoly P(std::string_view text, const PolyEnvironment& env = {}) { return parse_poly(text, env); }
MultiPoly var(Var v) { return MultiPoly::variable(v); }

// Random polynomial of degree <= 3 in a..d, x1 with small rational coefficients.
MultiPoly random_poly(Rng& rng) {
  const std::array<Var, 5> vars{Var::a, Var::b, Var::c, Var::d, Var::x1};
  MultiPoly p;
  const std::size_t terms = 1 + rng.below(5);
  for (std::size_t t = 0; t < terms; ++t) {
    MultiPoly term(random_rational(rng, 5, 4));
    const std::size_t degree = rng.below(4);
    for (std::size_t k = 0; k < degree; ++k) term *= var(vars[rng.below(vars.size())]);
    p += term;
  }
  return p;
}

std::map<Var, Rational> random_point(Rng& rng) {
  std::map<Var, Rational> point;
  for (std::size_t k = 0; k < kVarCount; ++k) point[static_cast<Var>(k)] = random_rational(rng, 3, 9);
  return point;
}

// --- polynomial arithmetic ---------------------------------------------------

TEST(MultiPoly, Examples) {
  const auto a = var(Var::a);
  const auto b = var(Var::b);
  EXPECT_EQ((a + b) * (a - b), a * a - b * b);
  const std::map<Var, MultiPoly> shift{{Var::b, a + var(Var::x1)}};
  EXPECT_EQ((a * b).substitute(shift), a * a + a * var(Var::x1));
  std::map<Var, Rational> ones;
  for (Var v : {Var::a, Var::b, Var::c, Var::d}) ones[v] = 1;
  EXPECT_EQ(P("a+b+c+d+ab").eval(ones), 5);
}

TEST(MultiPoly, CanonicalFormDropsZeros) {
  const auto a = var(Var::a);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a - a), MultiPoly());
  EXPECT_EQ(P("2a+3b-2a"), P("3b"));
  for (const auto& [monomial, coefficient] : P("(a+b)^3-(a-b)^3").terms()) EXPECT_NE(coefficient, 0);
  EXPECT_EQ(P("(a+b)^3-(a-b)^3"), P("6a^2b+2b^3"));
}

TEST(MultiPoly, EvalNeedsEveryVariable) {
  EXPECT_THROW(P("a+b").eval({{Var::a, 1}}), UsageError);
  EXPECT_EQ(P("a+b").eval({{Var::a, 1}, {Var::b, 2}}), 3);
}

TEST(MultiPoly, RingAxiomsAtRandomPoints) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const MultiPoly p = random_poly(rng);
    const MultiPoly r = random_poly(rng);
    const MultiPoly s = random_poly(rng);
    const auto x = random_point(rng);
    EXPECT_EQ((p * r).eval(x), p.eval(x) * r.eval(x));
    EXPECT_EQ((p + r).eval(x), p.eval(x) + r.eval(x));
    EXPECT_EQ((p - r).eval(x), p.eval(x) - r.eval(x));
    EXPECT_EQ(p * r, r * p);
    EXPECT_EQ(p * (r + s), p * r + p * s);
    EXPECT_EQ((p * r) * s, p * (r * s));
    EXPECT_EQ(p.pow(3), p * p * p);
  }
}

TEST(MultiPoly, SubstituteIsARingHomomorphism) {
  Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly p = random_poly(rng);
    const MultiPoly r = random_poly(rng);
    const std::map<Var, MultiPoly> sigma{{Var::b, random_poly(rng)}, {Var::c, random_poly(rng)}};
    EXPECT_EQ((p * r).substitute(sigma), p.substitute(sigma) * r.substitute(sigma));
    EXPECT_EQ((p + r).substitute(sigma), p.substitute(sigma) + r.substitute(sigma));
  }
}

TEST(MultiPoly, SubstitutionIsSimultaneous) {
  const std::map<Var, MultiPoly> swap{{Var::a, var(Var::b)}, {Var::b, var(Var::a)}};
  EXPECT_EQ(P("a^2b").substitute(swap), P("ab^2"));
}

TEST(Parser, HandwrittenNotation) {
  EXPECT_EQ(P("ab+ad+bc"), var(Var::a) * var(Var::b) + var(Var::a) * var(Var::d) + var(Var::b) * var(Var::c));
  EXPECT_EQ(P("3x_1^2"), MultiPoly(3) * var(Var::x1) * var(Var::x1));
  EXPECT_EQ(P("x1x2"), var(Var::x1) * var(Var::x2));
  EXPECT_EQ(P("x_1x_2"), var(Var::x1) * var(Var::x2));
  EXPECT_EQ(P("(1+a)(1-a)"), P("1-a^2"));
  EXPECT_EQ(P("a/2+a/2"), P("a"));
  EXPECT_EQ(P("-(a-b)"), P("b-a"));
  const PolyEnvironment env{{"T1", P("a+1")}, {"FAB", P("b")}};
  EXPECT_EQ(P("2T_1+T1", env), P("3a+3"));
  EXPECT_EQ(P("H-6FAB", {{"H", P("c")}, {"FAB", P("b")}}), P("c-6b"));
}

TEST(Parser, Errors) {
  EXPECT_THROW(P("a+"), UsageError);
  EXPECT_THROW(P("(a+b"), UsageError);
  EXPECT_THROW(P("g"), UsageError);
  EXPECT_THROW(P("x_9"), UsageError);
  EXPECT_THROW(P("T_1"), UsageError);
  EXPECT_THROW(P("a/b"), UsageError);
  EXPECT_THROW(P("a/0"), UsageError);
  EXPECT_THROW(P("a^"), UsageError);
}

// --- symbolic wedge --------------------------------------------------------

TEST(SymWedge, Examples) {
  const SymVec2 u{1, 0};
  const SymVec2 v{0, 1};
  EXPECT_EQ(sym_wedge(u, v), 1);
  const auto a = var(Var::a);
  const auto b = var(Var::b);
  const SymVec2 p{P("a+c"), P("bd-1")};
  EXPECT_TRUE(sym_wedge(p, p).is_zero());
  EXPECT_EQ(sym_wedge((-a) * u - v, a * u - b * v), P("a+ab"));
  EXPECT_EQ(sym_wedge(u, v), -sym_wedge(v, u));
}

// --- derived formulas --------------------------------------------------------

TEST(DeriveFormulas, PentagonMatchesStatedForms) {
  const auto rows = derive_pentagon_formulas();
  EXPECT_EQ(rows.size(), 9u);
  std::map<std::string, MultiPoly> derived;
  for (const auto& row : rows) {
    EXPECT_TRUE(row.matches()) << row.name << ": derived " << row.derived.to_string();
    derived[row.name] = row.derived;
  }
  EXPECT_EQ(derived.at("ear(DEA)"), P("c+d-1"));
  EXPECT_EQ(derived.at("tri(BCE)"), P("ab+ad+bc"));
  EXPECT_EQ(derived.at("area(ABCDE)"), P("a+b+c+d+ab"));
}

TEST(DeriveFormulas, HexagonMatchesStatedForms) {
  const auto rows = derive_hexagon_formulas();
  EXPECT_EQ(rows.size(), 12u);
  std::map<std::string, MultiPoly> derived;
  for (const auto& row : rows) {
    EXPECT_TRUE(row.matches()) << row.name << ": derived " << row.derived.to_string();
    derived[row.name] = row.derived;
  }
  EXPECT_EQ(derived.at("area(ABCDEF)"), P("1+a+b+c+d+e+f+ab+bc+cd+de+ef+fa"));
  EXPECT_EQ(derived.at("ear(FAB)"), P("a+af+ab-bf"));
  EXPECT_EQ(derived.at("quad(BCEF)"), P("1+b+c+e+f+bc+ef+bf+ce"));
}

TEST(DeriveFormulas, MismatchIsReported) {
  DerivedFormula wrong{"ear(DEA)", P("c+d-1"), P("c+d")};
  EXPECT_FALSE(wrong.matches());
}

TEST(DeriveFormulas, AgreeWithFamilyGeometryAtRandomPoints) {
  Rng rng(41);
  const auto pentagon_rows = derive_pentagon_formulas();
  const auto hexagon_rows = derive_hexagon_formulas();
  int pentagons = 0;
  while (pentagons < 100) {
    const auto p = testing::random_pentagon_params(rng);
    if (!pentagon_is_convex(p)) continue;
    ++pentagons;
    const std::map<Var, Rational> point{{Var::a, p.a}, {Var::b, p.b}, {Var::c, p.c}, {Var::d, p.d}};
    const auto report = pentagon_report(p);
    std::map<std::string, Rational> geometry;
    for (const auto& row : report) geometry[row.name] = row.geometry;
    for (const auto& row : pentagon_rows) {
      ASSERT_TRUE(geometry.count(row.name)) << row.name;
      EXPECT_EQ(row.derived.eval(point), geometry.at(row.name)) << row.name;
    }
  }
  int hexagons = 0;
  while (hexagons < 100) {
    const auto h = testing::random_hexagon_params(rng);
    bool convex = true;
    for (const auto& ear : hexagon_ear_formulas(h)) convex = convex && ear > 0;
    if (!convex) continue;
    ++hexagons;
    const std::map<Var, Rational> point{{Var::a, h.a}, {Var::b, h.b}, {Var::c, h.c},
                                        {Var::d, h.d}, {Var::e, h.e}, {Var::f, h.f}};
    std::map<std::string, Rational> geometry;
    for (const auto& row : hexagon_report(h)) geometry[row.name] = row.geometry;
    for (const auto& row : hexagon_rows) {
      const std::string key = row.name.substr(0, row.name.find(','));
      ASSERT_TRUE(geometry.count(key)) << key;
      EXPECT_EQ(row.derived.eval(point), geometry.at(key)) << row.name;
    }
  }
}

// --- certificates ----------------------------------------------------------

TEST(Certificates, AllTwelvePass) {
  const auto reports = run_all_certificates();
  ASSERT_EQ(reports.size(), 12u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.equal) << r.name << ": difference " << r.difference().to_string();
    EXPECT_TRUE(r.nonnegative_coefficients) << r.name;
    EXPECT_TRUE(r.constant_ok) << r.name;
    EXPECT_TRUE(r.passed()) << r.name;
  }
  EXPECT_EQ(reports.front().name, "pentagon-in-hexagon");
  EXPECT_EQ(reports.front().constant_term, 1);
  for (std::size_t k = 1; k < reports.size(); ++k) EXPECT_EQ(reports[k].constant_term, 3) << reports[k].name;
}

TEST(Certificates, HexagonEnvironment) {
  const auto env = hexagon_environment();
  std::map<Var, Rational> ones;
  for (Var v : {Var::a, Var::b, Var::c, Var::d, Var::e, Var::f}) ones[v] = 1;
  EXPECT_EQ(env.at("H").eval(ones), 13);
  EXPECT_EQ(env.at("FAB").eval(ones), 2);
  for (const char* name : {"Q1", "Q2", "Q3", "Q4"}) EXPECT_EQ(env.at(name).eval(ones), 9);
  for (const char* name : {"T1", "T2", "T3", "T4"}) EXPECT_EQ(env.at(name).eval(ones), 1);
}

TEST(Certificates, ExplicitPentagonInHexagonIdentity) {
  const auto env = hexagon_environment();
  std::map<Var, MultiPoly> shift;
  for (auto [v, x] : {std::pair{Var::b, Var::x1}, {Var::c, Var::x2}, {Var::d, Var::x3}, {Var::e, Var::x4}, {Var::f, Var::x5}}) {
    shift[v] = var(Var::a) + var(x);
  }
  const auto report = check_certificate(P("H-6FAB", env), shift,
                                        P("1+(2a+1)(x1+x2+x3+x4+x5)+x1x2+x2x3+x3x4+x4x5+6x5x1"), 1);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.constant_term, 1);
}

TEST(Certificates, CorruptedCoefficientFailsEquality) {
  auto certificates = builtin_certificates();
  for (std::size_t k = 0; k < certificates.size(); ++k) {
    auto mutated = certificates;
    mutated[k].claimed_rhs += "+x_1x_2";
    const auto reports = run_all_certificates(mutated);
    for (std::size_t j = 0; j < reports.size(); ++j) EXPECT_EQ(reports[j].passed(), j != k) << reports[j].name;
    EXPECT_FALSE(reports[k].equal);
    EXPECT_FALSE(reports[k].difference().is_zero());
  }
}

TEST(Certificates, NegativeCoefficientOrSmallConstantFails) {
  const auto x1 = var(Var::x1);
  const auto negative = check_certificate(x1 * x1 - x1 + 1, {}, P("x1^2-x1+1"), 1);
  EXPECT_TRUE(negative.equal);
  EXPECT_FALSE(negative.nonnegative_coefficients);
  EXPECT_FALSE(negative.passed());
  const auto small = check_certificate(P("2+x1"), {}, P("2+x1"), 3);
  EXPECT_TRUE(small.equal);
  EXPECT_FALSE(small.constant_ok);
  const auto zero = check_certificate(P("x1"), {}, P("x1"), 0);
  EXPECT_FALSE(zero.constant_ok);
}

TEST(Certificates, RhsUsingEliminatedVariableIsAUsageError) {
  EXPECT_THROW(check_certificate(P("b"), {{Var::b, P("a+x1")}}, P("b"), 1), UsageError);
}

TEST(Certificates, RandomEvaluationOracle) {
  // Evaluate lhs at (a, b(a, x), ..., f(a, x)) and rhs at (a, x) numerically.
  const auto env = hexagon_environment();
  Rng rng(53);
  for (const auto& certificate : builtin_certificates()) {
    std::map<Var, MultiPoly> substitutions;
    for (const auto& [name, expr] : certificate.substitutions) substitutions[parse_var(name)] = P(expr, env);
    const MultiPoly lhs = P(certificate.lhs, env);
    const MultiPoly rhs = P(certificate.claimed_rhs, env);
    for (int trial = 0; trial < 100; ++trial) {
      std::map<Var, Rational> point;
      point[Var::a] = log_uniform_rational(rng, 1000);
      for (Var x : {Var::x1, Var::x2, Var::x3, Var::x4, Var::x5}) point[x] = log_uniform_rational(rng, 1000);
      std::map<Var, Rational> full = point;
      for (const auto& [v, expr] : substitutions) full[v] = expr.eval(point);
      for (Var v : {Var::b, Var::c, Var::d, Var::e, Var::f}) {
        if (!full.count(v)) full[v] = log_uniform_rational(rng, 1000);
      }
      ASSERT_EQ(lhs.eval(full), rhs.eval(full)) << certificate.name;
    }
    // All shifts zero: both sides reduce to the constant term at a = 0.
    std::map<Var, Rational> origin;
    for (std::size_t k = 0; k < kVarCount; ++k) origin[static_cast<Var>(k)] = 0;
    EXPECT_EQ(rhs.eval(origin), rhs.constant_term()) << certificate.name;
    std::map<Var, Rational> lhs_origin = origin;
    for (const auto& [v, expr] : substitutions) lhs_origin[v] = expr.eval(origin);
    EXPECT_EQ(lhs.eval(lhs_origin), rhs.constant_term()) << certificate.name;
  }
}

TEST(Certificates, FixtureFileMatchesEmbeddedCopy) {
  std::ifstream in(POLYGAP_CERTIFICATES_FILE);
  ASSERT_TRUE(in) << POLYGAP_CERTIFICATES_FILE;
  std::stringstream buffer;
  buffer << in.rdbuf();
  EXPECT_EQ(buffer.str(), builtin_certificates_json());
}

TEST(Certificates, LoaderRejectsMalformedFixtures) {
  EXPECT_THROW(load_certificates("{"), UsageError);
  EXPECT_THROW(load_certificates(R"({"schema_version": 2, "certificates": []})"), UsageError);
  EXPECT_THROW(load_certificates(R"({"schema_version": 1, "certificates": [{"name": "x"}]})"), UsageError);
  const auto one = load_certificates(
      R"({"schema_version": 1, "certificates": [{"name": "t", "lhs": "a", "substitutions": [["a", "1+x_1"]],
          "claimed_rhs": "1+x_1", "min_constant": "1"}]})");
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(run_certificate(one[0], {}).passed());
}

}  // namespace
}  // namespace polygap
