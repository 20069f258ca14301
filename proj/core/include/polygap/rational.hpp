// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace polygap {

/// Exact rational number. GMP keeps every value canonical: the denominator
/// is positive and coprime with the numerator.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a finite decimal literal ("-0.125") exactly.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }
inline double to_double(double value) { return value; }

/// Best rational approximation of `value` with denominator at most
/// `max_denominator` (continued fractions). This is a lossy, named snapping
/// step; doubles never convert to Rational implicitly anywhere in the library.
Rational snap_rational(double value, std::int64_t max_denominator);

}  // namespace polygap
