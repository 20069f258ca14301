// SPDX-License-Identifier: Apache-2.0
#include <polygap/errors.hpp>
#include <polygap/scalar.hpp>

#include <sstream>

namespace polygap {

const char* to_string(Mode mode) { return mode == Mode::kExact ? "exact" : "float"; }

namespace {

[[noreturn]] void mode_mismatch(const char* op) {
  throw UsageError(std::string("Scalar mode mismatch in '") + op + "': exact and float values do not mix");
}

template <class ExactOp, class FloatOp>
Scalar combine(const Scalar& a, const Scalar& b, const char* name, ExactOp exact_op, FloatOp float_op) {
  if (a.mode() != b.mode()) mode_mismatch(name);
  if (a.is_exact()) return Scalar(Rational(exact_op(a.exact(), b.exact())));
  return Scalar(float_op(a.as_float(), b.as_float()));
}

}  // namespace

const Rational& Scalar::exact() const {
  if (!is_exact()) throw UsageError("Scalar is in float mode; exact value requested");
  return std::get<Rational>(value_);
}

double Scalar::as_float() const {
  if (is_exact()) throw UsageError("Scalar is in exact mode; float value requested");
  return std::get<double>(value_);
}

double Scalar::to_double() const {
  return is_exact() ? std::get<Rational>(value_).get_d() : std::get<double>(value_);
}

std::string Scalar::to_string() const {
  if (is_exact()) return polygap::to_string(std::get<Rational>(value_));
  std::ostringstream out;
  out.precision(17);
  out << std::get<double>(value_);
  return out.str();
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, "+", [](const Rational& x, const Rational& y) { return x + y; },
                 [](double x, double y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, "-", [](const Rational& x, const Rational& y) { return x - y; },
                 [](double x, double y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, "*", [](const Rational& x, const Rational& y) { return x * y; },
                 [](double x, double y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) mode_mismatch("/");
  if (a.is_exact()) {
    if (b.exact() == 0) throw UsageError("division by zero");
    return Scalar(Rational(a.exact() / b.exact()));
  }
  return Scalar(a.as_float() / b.as_float());
}

Scalar operator-(const Scalar& a) {
  if (a.is_exact()) return Scalar(Rational(-a.exact()));
  return Scalar(-a.as_float());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) mode_mismatch("==");
  return a.is_exact() ? a.exact() == b.exact() : a.as_float() == b.as_float();
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) mode_mismatch("<");
  return a.is_exact() ? a.exact() < b.exact() : a.as_float() < b.as_float();
}

}  // namespace polygap
