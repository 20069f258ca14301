// SPDX-License-Identifier: Apache-2.0
//
// Machine checks of the closed-form area formulas and of the polynomial
// nonnegativity certificates behind the hexagon bounds.
#pragma once

#include <polygap/multipoly.hpp>

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polygap {

/// A formula rebuilt from formal edge vectors next to its hand-derived form.
struct DerivedFormula {
  std::string name;
  MultiPoly derived;
  MultiPoly stated;

  bool matches() const { return derived == stated; }
};

/// Pentagon area, the five ears and triangles ABD, ACD, BCE.
std::vector<DerivedFormula> derive_pentagon_formulas();

/// Hexagon area, the six ears (FAB in both written forms) and quadrilaterals
/// BCDF, ACDE, BDEF, BCEF.
std::vector<DerivedFormula> derive_hexagon_formulas();

/// Symbols available to certificate left-hand sides: H (hexagon area), FAB,
/// Q1..Q4 and T1..T4 = 3 Qi - 2 H, all derived from the hexagon geometry.
PolyEnvironment hexagon_environment();

/// Certificate as stored in the fixture: after substituting, `lhs` must
/// expand to `claimed_rhs`, whose coefficients are all nonnegative and whose
/// constant term is at least `min_constant`.
struct Certificate {
  std::string name;
  std::string hypothesis;
  std::string lhs;
  std::vector<std::pair<std::string, std::string>> substitutions;
  std::string claimed_rhs;
  Rational min_constant;
};

struct CertificateReport {
  std::string name;
  MultiPoly substituted_lhs;
  MultiPoly claimed_rhs;
  bool equal = false;
  bool nonnegative_coefficients = false;
  Rational constant_term;
  bool constant_ok = false;

  bool passed() const { return equal && nonnegative_coefficients && constant_ok; }
  /// lhs - rhs after substitution; zero when `equal`.
  MultiPoly difference() const { return substituted_lhs - claimed_rhs; }
};

/// Substitutes into `lhs`, compares with `claimed_rhs` exactly and inspects the
/// expanded coefficients. Throws UsageError when `claimed_rhs` still uses a
/// variable that the substitution eliminates.
CertificateReport check_certificate(const MultiPoly& lhs, const std::map<Var, MultiPoly>& substitutions,
                                    const MultiPoly& claimed_rhs, const Rational& min_constant = Rational(1));

CertificateReport run_certificate(const Certificate& certificate, const PolyEnvironment& env);

/// Parses the fixture format (schema_version 1).
std::vector<Certificate> load_certificates(std::string_view json_text);
std::vector<Certificate> builtin_certificates();
/// The fixture compiled into the library.
std::string_view builtin_certificates_json();

std::vector<CertificateReport> run_all_certificates();
std::vector<CertificateReport> run_all_certificates(std::span<const Certificate> certificates);

}  // namespace polygap
