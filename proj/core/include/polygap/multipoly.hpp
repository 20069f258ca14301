// SPDX-License-Identifier: Apache-2.0
//
// Sparse multivariate polynomials with rational coefficients over the fixed
// variable set {a, b, c, d, e, f, x1, ..., x5}, plus formal plane vectors
// expressed in a basis (u, v) with u ^ v = 1.
#pragma once

#include <polygap/rational.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace polygap {

enum class Var : std::uint8_t { a, b, c, d, e, f, x1, x2, x3, x4, x5 };
inline constexpr std::size_t kVarCount = 11;

const char* var_name(Var var);
/// Accepts "a".."f", "x1".."x5" and "x_1".."x_5"; throws UsageError otherwise.
Var parse_var(std::string_view name);

using Exponents = std::array<std::uint8_t, kVarCount>;

/// Total degree first, then lexicographic on the exponent vector.
struct GradedLexLess {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational, GradedLexLess>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(int constant) : MultiPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  static MultiPoly variable(Var var);

  /// No stored coefficient is zero, so equal polynomials have equal maps.
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational constant_term() const;
  Rational coefficient(const Exponents& monomial) const;
  unsigned total_degree() const;
  bool uses(Var var) const;
  bool all_coefficients_nonnegative() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator-(const MultiPoly& p);
  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) { return lhs.terms_ == rhs.terms_; }

  MultiPoly scaled(const Rational& factor) const;
  MultiPoly pow(unsigned exponent) const;

  /// Simultaneous substitution var -> polynomial; a ring homomorphism.
  MultiPoly substitute(const std::map<Var, MultiPoly>& replacements) const;

  /// Throws UsageError when a variable used by the polynomial has no value.
  Rational eval(const std::map<Var, Rational>& point) const;

  /// Human-readable form, e.g. "1 + 2*a + a*x1^2".
  std::string to_string() const;

 private:
  void add_term(const Exponents& monomial, const Rational& coefficient);
  Terms terms_;
};

/// Named polynomials that may appear in parsed expressions (e.g. "H", "T_1").
using PolyEnvironment = std::map<std::string, MultiPoly>;

/// Parses expressions written the way they are typeset by hand:
///   3+(3+6a+3x_1)(x_1+x_4)+3x_1^2     implicit products, ^ powers
///   a+b+c+d+ab                         adjacent lowercase letters multiply
///   T_2+T_3+T_4, H-6FAB               uppercase names come from `env`
/// Division is allowed only by nonzero constants. Unknown names throw
/// UsageError.
MultiPoly parse_poly(std::string_view text, const PolyEnvironment& env = {});

/// Formal vector coeff_u * u + coeff_v * v.
struct SymVec2 {
  MultiPoly u;
  MultiPoly v;

  friend SymVec2 operator+(const SymVec2& p, const SymVec2& q) { return {p.u + q.u, p.v + q.v}; }
  friend SymVec2 operator-(const SymVec2& p, const SymVec2& q) { return {p.u - q.u, p.v - q.v}; }
  friend SymVec2 operator*(const MultiPoly& s, const SymVec2& p) { return {s * p.u, s * p.v}; }
};

/// p ^ q = coeff_u(p) coeff_v(q) - coeff_v(p) coeff_u(q), using u ^ v = 1.
MultiPoly sym_wedge(const SymVec2& p, const SymVec2& q);

}  // namespace polygap
