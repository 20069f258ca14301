// SPDX-License-Identifier: Apache-2.0
#include <polygap/rational.hpp>

#include <polygap/errors.hpp>

#include <cctype>
#include <cmath>
#include <string>

namespace polygap {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Rational parse_decimal(std::string_view text) {
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto dot = body.find('.');
  std::string_view whole = body.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw UsageError("empty number: '" + std::string(text) + "'");
  if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
      (dot != std::string_view::npos && frac.empty() && whole.empty())) {
    throw UsageError("not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class numerator(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, frac.size());
  Rational value(numerator, denominator);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);

  const Rational num = parse_decimal(text.substr(0, slash));
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw UsageError("zero denominator: '" + std::string(text) + "'");
  Rational value = num / den;
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational snap_rational(double value, std::int64_t max_denominator) {
  if (!std::isfinite(value)) throw UsageError("cannot snap a non-finite value");
  if (max_denominator < 1) throw UsageError("max_denominator must be >= 1");

  // Convergents h/k of the continued fraction of `value`.
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(value));
  mpz_class k_prev = 0, k = 1;
  double remainder = value - std::floor(value);
  while (remainder > 1e-300) {
    const double inverse = 1.0 / remainder;
    const double term_d = std::floor(inverse);
    if (term_d > 1e15) break;
    const mpz_class term = static_cast<long>(term_d);
    const mpz_class k_next = term * k + k_prev;
    if (k_next > max_denominator) break;
    const mpz_class h_next = term * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    remainder = inverse - term_d;
  }
  Rational snapped(h, k);
  snapped.canonicalize();
  return snapped;
}

}  // namespace polygap
