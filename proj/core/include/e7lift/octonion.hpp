#pragma once

// Cayley octonions over Q with e_i e_{i+1} = e_{i+3} (indices cyclic in 1..7),
// and a maximal integral order built from an extended Hamming code.

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "e7lift/numeric.hpp"

namespace e7lift {

class Octonion {
 public:
  std::array<Rational, 8> c{};

  Octonion() = default;
  explicit Octonion(const std::array<Rational, 8>& coords) : c(coords) {}
  static Octonion real(const Rational& r);
  /// e_0 = 1, e_1 .. e_7
  static Octonion unit(int i);

  Octonion conj() const;
  Rational norm() const;
  Rational trace() const { return 2 * c[0]; }
  bool is_zero() const;

  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  Octonion& operator*=(const Rational& s);
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator*(Octonion a, const Rational& s) { return a *= s; }
  friend Octonion operator*(const Rational& s, Octonion a) { return a *= s; }
  friend Octonion operator*(const Octonion& a, const Octonion& b);
  Octonion operator-() const;
  bool operator==(const Octonion& o) const { return c == o.c; }
  std::strong_ordering operator<=>(const Octonion& o) const {
    for (int i = 0; i < 8; ++i) {
      if (int s = cmp(c[i], o.c[i]); s != 0) return s <=> 0;
    }
    return std::strong_ordering::equal;
  }

  std::vector<std::string> to_strings() const;
  static Octonion from_strings(const std::vector<std::string>& s);
  std::string to_string() const;
};

Octonion oct_mul(const Octonion& x, const Octonion& y);
/// T((xy)z), equal to T(x(yz)) for octonions
Rational trace3(const Octonion& x, const Octonion& y, const Octonion& z);

class OctonionOrder {
 public:
  /// Validates closure under multiplication and conjugation, that 1 lies in the
  /// lattice, and unimodularity for the trace form; throws std::invalid_argument.
  explicit OctonionOrder(const std::array<Octonion, 8>& basis);

  /// A maximal order Z^8 + C/2 for the first multiplicatively closed
  /// doubly-even [8,4,4] code C in a fixed deterministic enumeration.
  static const OctonionOrder& maximal();

  const std::array<Octonion, 8>& basis() const { return basis_; }
  bool contains(const Octonion& x) const;
  /// Integer coordinates of x in the basis; throws if x is not in the lattice.
  std::array<Integer, 8> coordinates(const Octonion& x) const;
  Octonion from_coordinates(const std::array<long, 8>& v) const;
  /// Gram matrix of N with respect to the basis: N(sum v_i b_i) = v^T G v
  const std::array<std::array<Rational, 8>, 8>& norm_gram() const { return gram_; }

  /// All elements of norm n, sorted.
  std::vector<Octonion> elements_of_norm_at_most(const Rational& n) const;
  std::vector<Octonion> units() const;

 private:
  std::array<Octonion, 8> basis_;
  std::array<std::array<Rational, 8>, 8> inverse_{};  // row i: coefficient of e_i -> basis
  std::array<std::array<Rational, 8>, 8> gram_{};
};

}  // namespace e7lift
