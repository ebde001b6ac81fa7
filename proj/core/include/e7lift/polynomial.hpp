#pragma once

// Dense univariate polynomials with rational coefficients, ascending order.

#include <string>
#include <vector>

#include "e7lift/numeric.hpp"

namespace e7lift {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  Complex operator()(const Complex& x) const;
  /// f(c x)
  Polynomial scale_argument(const Rational& c) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace e7lift
