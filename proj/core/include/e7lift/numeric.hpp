#pragma once

// Exact and multiprecision scalar types shared by every module.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <boost/multiprecision/mpfr.hpp>

namespace e7lift {

using Integer = mpz_class;
using Rational = mpq_class;
using Real = boost::multiprecision::mpfr_float;

/// Default working precision for numeric evaluation of algebraic values.
inline constexpr unsigned kDefaultPrecisionBits = 256;

/// Sets the MPFR default precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits10_;
};

unsigned bits_to_digits10(unsigned bits);

/// Relative tolerance matching a working precision, with 16 guard bits.
Real precision_epsilon(unsigned bits);

// --- rationals ---------------------------------------------------------------

/// Parses "p", "-p", "p/q" (canonicalized). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
bool is_integer(const Rational& q);
Real to_real(const Rational& q);
Real to_real(const Integer& z);
Rational pow(const Rational& base, long exponent);

// --- primes ------------------------------------------------------------------

bool is_prime(std::uint64_t n);
/// Prime factorization of n >= 1 by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
std::vector<std::pair<std::uint64_t, int>> factorize(const Integer& n);
/// p-adic valuation; q must be non-zero.
int valuation(const Integer& z, std::uint64_t p);
int valuation(const Rational& q, std::uint64_t p);
bool is_square_free(std::uint64_t n);

// --- complex multiprecision ------------------------------------------------

struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  static Complex from_rational(const Rational& q) { return Complex(to_real(q)); }
  /// exp(2 pi i * num/den)
  static Complex root_of_unity(long num, long den);

  Complex conj() const { return {re, -im}; }
  Real norm() const { return re * re + im * im; }
  Real abs() const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  Complex operator-() const { return {-re, -im}; }
};

Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long exponent);
/// |a - b| / max(|b|, floor); floor guards comparisons against zero.
Real relative_error(const Complex& a, const Complex& b, const Real& floor = Real(1));

std::string format_real(const Real& x, int digits);
std::string format_complex(const Complex& z, int digits);

}  // namespace e7lift
