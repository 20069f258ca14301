// SPDX-License-Identifier: Apache-2.0
#include <polygap/families.hpp>

namespace polygap {

namespace {

template <Number T>
void require_positive(const T& value, const char* name) {
  if (!(value > 0)) throw UsageError(std::string("parameter ") + name + " must be positive");
}

template <Number T>
Vec2<T> basis_u() {
  return {T(1), T(0)};
}

template <Number T>
Vec2<T> basis_v() {
  return {T(0), T(2)};
}

template <Number T>
ConvexPolygon<T> build_checked(std::vector<Vec2<T>> vertices, const char* labels) {
  if (auto problem = convexity_violation<T>(vertices); !problem.empty()) {
    throw GeometryError(std::string("parameters do not give a strictly convex polygon ") + labels + ": " + problem);
  }
  return ConvexPolygon<T>::make(std::move(vertices));
}

}  // namespace

template <Number T>
PentagonParams<T> PentagonParams<T>::make(T a, T b, T c, T d) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(c, "c");
  require_positive(d, "d");
  return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

template <Number T>
HexagonParams<T> HexagonParams<T>::make(T a, T b, T c, T d, T e, T f) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(c, "c");
  require_positive(d, "d");
  require_positive(e, "e");
  require_positive(f, "f");
  return {std::move(a), std::move(b), std::move(c), std::move(d), std::move(e), std::move(f)};
}

template <Number T>
ConvexPolygon<T> build_pentagon(const PentagonParams<T>& p) {
  const auto u = basis_u<T>();
  const auto v = basis_v<T>();
  T neg_a = -p.a;
  T neg_b = -p.b;
  std::vector<Vec2<T>> vertices{
      v,                          // A
      neg_a * u,                  // B
      neg_b * v,                  // C
      u,                          // D
      p.c * u + p.d * v,          // E
  };
  return build_checked(std::move(vertices), "ABCDE");
}

template <Number T>
T pentagon_area_formula(const PentagonParams<T>& p) {
  T area = p.a + p.b + p.c + p.d + p.a * p.b;
  return area;
}

template <Number T>
std::array<T, 5> pentagon_ear_formulas(const PentagonParams<T>& p) {
  const auto& [a, b, c, d] = p;
  return {T(a + a * b), T(b + a * b), T(b + d - b * c), T(c + d - 1), T(a + c - a * d)};
}

template <Number T>
std::array<T, 3> pentagon_triangle_formulas(const PentagonParams<T>& p) {
  const auto& [a, b, c, d] = p;
  return {T(a + 1), T(b + 1), T(a * b + a * d + b * c)};
}

template <Number T>
bool pentagon_min_ear_constraints(const PentagonParams<T>& p) {
  const auto& [a, b, c, d] = p;
  return c <= 1 && d <= 1 && c + d <= 1 + a + a * b;
}

template <Number T>
bool pentagon_is_convex(const PentagonParams<T>& p) {
  for (const auto& ear : pentagon_ear_formulas(p)) {
    if (!(ear > 0)) return false;
  }
  return true;
}

template <Number T>
bool pentagon_dea_is_min_ear(const PentagonParams<T>& p) {
  const auto ears = pentagon_ear_formulas(p);
  for (const auto& ear : ears) {
    if (ears[3] > ear) return false;
  }
  return true;
}

PentagonParams<double> fit_pentagon_params(const ConvexPolygon<double>& pentagon) {
  if (pentagon.size() != 5) throw UsageError("fit_pentagon_params needs a pentagon");
  const auto& A = pentagon.vertex(0);
  const auto& B = pentagon.vertex(1);
  const auto& C = pentagon.vertex(2);
  const auto& D = pentagon.vertex(3);
  const auto& E = pentagon.vertex(4);
  auto cross = [](const Vec2<double>& p, const Vec2<double>& q) { return p.x * q.y - p.y * q.x; };

  // O = A + s (C - A) on BD.
  const auto ac = C - A;
  const auto bd = D - B;
  const double s = cross(B - A, bd) / cross(ac, bd);
  const Vec2<double> O = A + s * ac;
  const auto u = D - O;
  const auto v = A - O;
  const double uu = u.x * u.x + u.y * u.y;
  const double vv = v.x * v.x + v.y * v.y;
  const auto ob = B - O;
  const auto oc = C - O;
  const auto oe = E - O;
  const double det = cross(u, v);
  return PentagonParams<double>::make(-(ob.x * u.x + ob.y * u.y) / uu, -(oc.x * v.x + oc.y * v.y) / vv,
                                      cross(oe, v) / det, cross(u, oe) / det);
}

template <Number T>
ConvexPolygon<T> build_hexagon(const HexagonParams<T>& h) {
  const auto u = basis_u<T>();
  const auto v = basis_v<T>();
  const Vec2<T> M{T(0), T(0)};
  const Vec2<T> N = u;
  const Vec2<T> P = v;
  const auto w = v - u;
  std::vector<Vec2<T>> vertices{
      M - h.a * u,  // A
      M - h.b * v,  // B
      N - h.c * w,  // C
      N + h.d * u,  // D
      P + h.e * v,  // E
      P + h.f * w,  // F
  };
  return build_checked(std::move(vertices), "ABCDEF");
}

template <Number T>
T hexagon_area_formula(const HexagonParams<T>& h) {
  const auto& [a, b, c, d, e, f] = h;
  T area = 1 + a + b + c + d + e + f + a * b + b * c + c * d + d * e + e * f + f * a;
  return area;
}

template <Number T>
std::array<T, 6> hexagon_ear_formulas(const HexagonParams<T>& h) {
  const auto& [a, b, c, d, e, f] = h;
  return {
      T(b * (a + c + 1) - a * c),  // ABC
      T(c * (b + d + 1) - b * d),  // BCD
      T(d * (c + e + 1) - c * e),  // CDE
      T(e * (d + f + 1) - d * f),  // DEF
      T(f * (e + a + 1) - e * a),  // EFA
      T(a * (f + b + 1) - f * b),  // FAB
  };
}

template <Number T>
std::array<T, 4> hexagon_quad_formulas(const HexagonParams<T>& h) {
  const auto& [a, b, c, d, e, f] = h;
  return {
      T(1 + b + c + d + f + b * c + c * d + b * f + d * f),  // BCDF
      T(1 + c + d + e + a + c * d + d * e + c * a + e * a),  // ACDE
      T(1 + d + e + f + b + d * e + e * f + d * b + f * b),  // BDEF
      T(1 + b + c + e + f + b * c + e * f + b * f + c * e),  // BCEF
  };
}

template <Number T>
std::vector<FormulaCheck<T>> pentagon_report(const PentagonParams<T>& p) {
  const auto polygon = build_pentagon(p);
  auto at = [&](int k) -> const Vec2<T>& { return polygon.vertex(k); };
  enum { A, B, C, D, E };
  const auto ears = pentagon_ear_formulas(p);
  const auto tris = pentagon_triangle_formulas(p);
  return {
      {"area(ABCDE)", pentagon_area_formula(p), polygon_area(polygon)},
      {"ear(ABC)", ears[0], triangle_area(at(A), at(B), at(C))},
      {"ear(BCD)", ears[1], triangle_area(at(B), at(C), at(D))},
      {"ear(CDE)", ears[2], triangle_area(at(C), at(D), at(E))},
      {"ear(DEA)", ears[3], triangle_area(at(D), at(E), at(A))},
      {"ear(EAB)", ears[4], triangle_area(at(E), at(A), at(B))},
      {"tri(ABD)", tris[0], triangle_area(at(A), at(B), at(D))},
      {"tri(ACD)", tris[1], triangle_area(at(A), at(C), at(D))},
      {"tri(BCE)", tris[2], triangle_area(at(B), at(C), at(E))},
  };
}

template <Number T>
std::vector<FormulaCheck<T>> hexagon_report(const HexagonParams<T>& h) {
  const auto polygon = build_hexagon(h);
  const auto ears = hexagon_ear_formulas(h);
  const auto quads = hexagon_quad_formulas(h);
  const auto measured_ears = ear_areas(polygon);  // entry k is the ear at vertex k
  auto quad = [&](std::vector<std::size_t> idx) { return polygon_area(polygon.subpolygon(idx)); };
  return {
      {"area(ABCDEF)", hexagon_area_formula(h), polygon_area(polygon)},
      {"ear(ABC)", ears[0], measured_ears[1]},
      {"ear(BCD)", ears[1], measured_ears[2]},
      {"ear(CDE)", ears[2], measured_ears[3]},
      {"ear(DEF)", ears[3], measured_ears[4]},
      {"ear(EFA)", ears[4], measured_ears[5]},
      {"ear(FAB)", ears[5], measured_ears[0]},
      {"quad(BCDF)", quads[0], quad({1, 2, 3, 5})},
      {"quad(ACDE)", quads[1], quad({0, 2, 3, 4})},
      {"quad(BDEF)", quads[2], quad({1, 3, 4, 5})},
      {"quad(BCEF)", quads[3], quad({1, 2, 4, 5})},
  };
}

#define POLYGAP_INSTANTIATE(T)                                                             \
  template struct PentagonParams<T>;                                                       \
  template struct HexagonParams<T>;                                                        \
  template ConvexPolygon<T> build_pentagon<T>(const PentagonParams<T>&);                   \
  template T pentagon_area_formula<T>(const PentagonParams<T>&);                           \
  template std::array<T, 5> pentagon_ear_formulas<T>(const PentagonParams<T>&);            \
  template std::array<T, 3> pentagon_triangle_formulas<T>(const PentagonParams<T>&);       \
  template bool pentagon_min_ear_constraints<T>(const PentagonParams<T>&);                 \
  template bool pentagon_is_convex<T>(const PentagonParams<T>&);                           \
  template bool pentagon_dea_is_min_ear<T>(const PentagonParams<T>&);                      \
  template ConvexPolygon<T> build_hexagon<T>(const HexagonParams<T>&);                     \
  template T hexagon_area_formula<T>(const HexagonParams<T>&);                             \
  template std::array<T, 6> hexagon_ear_formulas<T>(const HexagonParams<T>&);              \
  template std::array<T, 4> hexagon_quad_formulas<T>(const HexagonParams<T>&);             \
  template std::vector<FormulaCheck<T>> pentagon_report<T>(const PentagonParams<T>&);      \
  template std::vector<FormulaCheck<T>> hexagon_report<T>(const HexagonParams<T>&);

POLYGAP_INSTANTIATE(double)
POLYGAP_INSTANTIATE(Rational)
#undef POLYGAP_INSTANTIATE

}  // namespace polygap
