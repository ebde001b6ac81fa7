#pragma once

// The 27-dimensional exceptional Jordan algebra over Q:
//   B = [[a, c3, conj(c2)], [conj(c3), b, c1], [c2, conj(c1), c]].

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "e7lift/octonion.hpp"

namespace e7lift {

struct JordanElement {
  Rational a, b, c;
  Octonion c1, c2, c3;

  static JordanElement identity();
  static JordanElement diag(const Rational& a, const Rational& b, const Rational& c);

  Rational trace() const { return a + b + c; }
  Rational det() const;
  /// adj(B) = B x B
  JordanElement sharp() const;
  bool is_zero() const;
  bool is_integral(const OctonionOrder& order = OctonionOrder::maximal()) const;

  JordanElement& operator+=(const JordanElement& o);
  JordanElement& operator-=(const JordanElement& o);
  JordanElement& operator*=(const Rational& s);
  friend JordanElement operator+(JordanElement x, const JordanElement& y) { return x += y; }
  friend JordanElement operator-(JordanElement x, const JordanElement& y) { return x -= y; }
  friend JordanElement operator*(const Rational& s, JordanElement x) { return x *= s; }
  bool operator==(const JordanElement& o) const = default;
  std::strong_ordering operator<=>(const JordanElement& o) const;

  nlohmann::json to_json() const;
  static JordanElement from_json(const nlohmann::json& j);
  std::string to_string() const;
};

inline std::strong_ordering JordanElement::operator<=>(const JordanElement& o) const {
  if (int s = cmp(a, o.a); s != 0) return s <=> 0;
  if (int s = cmp(b, o.b); s != 0) return s <=> 0;
  if (int s = cmp(c, o.c); s != 0) return s <=> 0;
  if (auto s = c3 <=> o.c3; s != 0) return s;
  if (auto s = c2 <=> o.c2; s != 0) return s;
  return c1 <=> o.c1;
}

Rational jordan_det(const JordanElement& B);
/// Trace form with (E, E) = 3
Rational jordan_pair(const JordanElement& X, const JordanElement& Y);
/// X x Y = ((X+Y)# - X# - Y#) / 2
JordanElement jordan_cross(const JordanElement& X, const JordanElement& Y);

struct RankInfo {
  int rank = 0;
  bool positive_definite = false;
};
RankInfo is_positive_rank(const JordanElement& B);

// --- 2x2 slices and the translation action -------------------------------------

/// [[a, c3], [conj(c3), b]]
struct Hermitian2 {
  Rational a, b;
  Octonion c3;
  static Hermitian2 identity() { return {Rational(1), Rational(1), Octonion{}}; }
  Rational det() const { return a * b - c3.norm(); }
  bool positive_definite() const { return a > 0 && det() > 0; }
  bool operator==(const Hermitian2&) const = default;
};

using OctPair = std::array<Octonion, 2>;

/// Trace pairing of 2x2 hermitian matrices.
Rational pair2(const Hermitian2& S, const Hermitian2& T);
/// sigma(x, y)_{ij} = x_i conj(y_j) + y_i conj(x_j)
Hermitian2 sigma(const OctPair& x, const OctPair& y);
/// sigma_S(x, y) = (S, sigma(x, y)) / 2
Rational sigma_S(const Hermitian2& S, const OctPair& x, const OctPair& y);

/// X (+) r as a 3x3 element
JordanElement block(const Hermitian2& X, const Rational& r);
Hermitian2 upper_block(const JordanElement& B);

/// R_{r,x} = [[X, Xx], [x^H X, r + sigma_X(x, x)]]
JordanElement act_translation_v1(const OctPair& x, const Hermitian2& X, const Rational& r);
/// U^H B U with U = [[1, 0, x1], [0, 1, x2], [0, 0, 1]]; agrees with
/// act_translation_v1 on block-diagonal input.
JordanElement translate_up(const OctPair& x, const JordanElement& B);
/// U B U^H, the adjoint of translate_up for the trace form.
JordanElement translate_down(const OctPair& x, const JordanElement& B);

// --- Freudenthal quadruples ----------------------------------------------------

struct FreudenthalQuadruple {
  JordanElement X;
  Rational xi;
  JordanElement Xp;
  Rational xip;
  bool operator==(const FreudenthalQuadruple&) const = default;
  FreudenthalQuadruple& operator+=(const FreudenthalQuadruple& o);
  FreudenthalQuadruple& operator*=(const Rational& s);
};

/// h(a)(X, xi, X', xi') = (X + 4(1/a - 1) e3 x (e3 x X) + (a - 1)(e3, X) e3, a xi,
///                        X' + (1/a - 1)(e3, X') e3 + 4(a - 1) e3 x (e3 x X'), xi' / a)
FreudenthalQuadruple act_h(const Rational& a, const FreudenthalQuadruple& q);

// --- enumeration ---------------------------------------------------------------

/// All positive definite integral B with det(B) <= det_bound and trace <= trace_bound,
/// sorted ascending, no duplicates.
std::vector<JordanElement> enumerate_positive(long det_bound, long trace_bound,
                                              const OctonionOrder& order = OctonionOrder::maximal());

}  // namespace e7lift
