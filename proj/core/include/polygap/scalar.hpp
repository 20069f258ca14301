// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <polygap/rational.hpp>

#include <concepts>
#include <string>
#include <variant>

namespace polygap {

/// Numeric types the geometry kernel is instantiated for: exact rationals on
/// verification paths, doubles on optimization paths.
template <class T>
concept Number = std::same_as<T, double> || std::same_as<T, Rational>;

enum class Mode { kExact, kFloat };

template <Number T>
inline constexpr Mode mode_of = std::same_as<T, Rational> ? Mode::kExact : Mode::kFloat;

const char* to_string(Mode mode);

/// Runtime-tagged number used where the mode is only known at run time
/// (polygon files, command-line values). Arithmetic never switches modes:
/// combining an exact and a float Scalar throws UsageError.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(double value) : value_(value) {}               // NOLINT(google-explicit-constructor)

  Mode mode() const { return std::holds_alternative<Rational>(value_) ? Mode::kExact : Mode::kFloat; }
  bool is_exact() const { return mode() == Mode::kExact; }

  const Rational& exact() const;
  double as_float() const;
  /// Explicit rational-to-float view; valid in either mode.
  double to_double() const;

  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, double> value_;
};

}  // namespace polygap
