// SPDX-License-Identifier: Apache-2.0
//
// Parametrized pentagons and hexagons with closed-form areas.
//
// Pentagon ABCDE: O is the intersection of diagonals AC and BD, u = OD,
// v = OA, normalized so that u ^ v = 1. Then B = -a u, C = -b v and
// E = c u + d v. Concretely u = (1, 0), v = (0, 2).
//
// Hexagon ABCDEF: the long diagonals AD, BE, CF bound a triangle MNP with
// M = AD n BE, N = AD n CF, P = CF n BE; u = MN, v = MP, u ^ v = 1. Then
// A = M - a u, D = N + d u, B = M - b v, C = N - c (v - u), E = P + e v and
// F = P + f (v - u). Same concrete u and v as the pentagon.
//
// Labeling assumptions such as "DEA is the smallest ear" or "a <= b" are
// exposed as predicates, never enforced by the builders.
#pragma once

#include <polygap/geometry.hpp>

#include <array>
#include <string>
#include <vector>

namespace polygap {

template <Number T>
struct PentagonParams {
  T a, b, c, d;

  /// Throws UsageError unless every parameter is positive.
  static PentagonParams make(T a, T b, T c, T d);
};

template <Number T>
struct HexagonParams {
  T a, b, c, d, e, f;

  static HexagonParams make(T a, T b, T c, T d, T e, T f);
};

/// Vertices A..E as indices 0..4. Throws GeometryError (naming the turn) when
/// the parameters do not give a strictly convex pentagon.
template <Number T>
ConvexPolygon<T> build_pentagon(const PentagonParams<T>& p);

/// a + b + c + d + ab
template <Number T>
T pentagon_area_formula(const PentagonParams<T>& p);

/// Ears (ABC, BCD, CDE, DEA, EAB) = (a+ab, b+ab, b+d-bc, c+d-1, a+c-ad).
template <Number T>
std::array<T, 5> pentagon_ear_formulas(const PentagonParams<T>& p);

/// (ABD, ACD, BCE) = (a+1, b+1, ab+ad+bc).
template <Number T>
std::array<T, 3> pentagon_triangle_formulas(const PentagonParams<T>& p);

/// c <= 1, d <= 1 and c + d <= 1 + a + ab: necessary for DEA to be the
/// smallest ear.
template <Number T>
bool pentagon_min_ear_constraints(const PentagonParams<T>& p);

/// All five formula ears positive, i.e. build_pentagon would succeed.
template <Number T>
bool pentagon_is_convex(const PentagonParams<T>& p);

/// DEA is a smallest ear (ties allowed).
template <Number T>
bool pentagon_dea_is_min_ear(const PentagonParams<T>& p);

/// Recovers (a, b, c, d) from a convex pentagon whose vertices are taken as
/// A..E in order. Inverse of build_pentagon up to an affine map.
PentagonParams<double> fit_pentagon_params(const ConvexPolygon<double>& pentagon);

/// Vertices A..F as indices 0..5.
template <Number T>
ConvexPolygon<T> build_hexagon(const HexagonParams<T>& h);

/// 1 + a+b+c+d+e+f + ab+bc+cd+de+ef+fa
template <Number T>
T hexagon_area_formula(const HexagonParams<T>& h);

/// Ears (ABC, BCD, CDE, DEF, EFA, FAB).
template <Number T>
std::array<T, 6> hexagon_ear_formulas(const HexagonParams<T>& h);

/// Quadrilaterals (BCDF, ACDE, BDEF, BCEF), each the hexagon minus two ears.
template <Number T>
std::array<T, 4> hexagon_quad_formulas(const HexagonParams<T>& h);

/// One row of a formula-versus-geometry comparison.
template <Number T>
struct FormulaCheck {
  std::string name;
  T formula;
  T geometry;
};

/// Every pentagon formula next to the value measured on build_pentagon(p).
template <Number T>
std::vector<FormulaCheck<T>> pentagon_report(const PentagonParams<T>& p);

template <Number T>
std::vector<FormulaCheck<T>> hexagon_report(const HexagonParams<T>& h);

}  // namespace polygap
