#pragma once

// Exact algebraic numbers of the shape needed by the coefficient engine:
// Q-linear combinations of monomials  prod sqrt(p)^{0|1} * prod alpha_p^{e},
// where alpha_p is a Satake root satisfying alpha^2 = t_p alpha - chi_p.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "e7lift/numeric.hpp"

namespace e7lift {

class AlphaField;

class ExactValue {
 public:
  struct Factor {
    std::uint64_t p = 0;
    int root = 0;   // exponent of sqrt(p), kept in {0, 1}
    long alpha = 0; // exponent of alpha_p
    auto operator<=>(const Factor&) const = default;
  };
  using Monomial = std::vector<Factor>;  // sorted by p, no trivial factors

  ExactValue() = default;
  ExactValue(const Rational& q);  // NOLINT(google-explicit-constructor)
  ExactValue(long n) : ExactValue(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  /// p^{k/2}
  static ExactValue prime_power_half(std::uint64_t p, long k);
  /// alpha_p^e (unreduced)
  static ExactValue alpha(std::uint64_t p, long e = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_value() const;  // throws if !is_rational()
  bool has_alpha() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  ExactValue& operator+=(const ExactValue& o);
  ExactValue& operator-=(const ExactValue& o);
  ExactValue& operator*=(const ExactValue& o);
  friend ExactValue operator+(ExactValue a, const ExactValue& b) { return a += b; }
  friend ExactValue operator-(ExactValue a, const ExactValue& b) { return a -= b; }
  friend ExactValue operator*(ExactValue a, const ExactValue& b) { return a *= b; }
  ExactValue operator-() const;
  bool operator==(const ExactValue& o) const { return terms_ == o.terms_; }

  /// Rewrites every alpha_p power into {1, alpha_p} using the field relations.
  ExactValue reduced(const AlphaField& field) const;
  Complex evaluate(const AlphaField& field) const;
  std::string to_string() const;

 private:
  void add_term(Monomial m, Rational c);
  std::map<Monomial, Rational> terms_;
};

/// Relations alpha_p^2 = t_p alpha_p - chi_p together with a numeric root.
class AlphaField {
 public:
  struct Relation {
    ExactValue trace;  // t_p, free of alpha symbols
    Rational chi;      // alpha * beta
    Complex root;      // numeric alpha_p
  };

  void add(std::uint64_t p, Relation rel);
  bool contains(std::uint64_t p) const { return rel_.count(p) != 0; }
  const Relation& at(std::uint64_t p) const;

 private:
  std::map<std::uint64_t, Relation> rel_;
};

/// A scalar carrying an exact form when one is available and always a numeric value.
struct Value {
  std::optional<ExactValue> exact;
  Complex numeric;

  Value() : numeric(Real(0)) {}
  static Value from_rational(const Rational& q);
  static Value from_exact(const ExactValue& x, const AlphaField& field);
  static Value from_numeric(const Complex& z);

  bool is_exact() const { return exact.has_value(); }
  std::string to_string(int digits = 30) const;

  friend Value operator*(const Value& a, const Value& b);
  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b);
};

Value mul_reduce(const Value& a, const Value& b, const AlphaField& field);

/// Exact zero test when both sides are exact and the difference reduces to 0;
/// otherwise relative numeric comparison against tol.
bool values_agree(const Value& a, const Value& b, const AlphaField& field, const Real& tol);

}  // namespace e7lift
