#include "e7lift/numeric.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace e7lift {

unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits10_(Real::default_precision()) {
  Real::default_precision(bits_to_digits10(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits10_); }

Real precision_epsilon(unsigned bits) {
  const unsigned guard = bits > 32 ? bits - 16 : bits / 2;
  return pow(Real(2), -static_cast<int>(guard));
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("malformed rational literal: " + s);
    return Rational(Integer(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-') {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Real to_real(const Integer& z) { return Real(z.get_mpz_t()); }

Real to_real(const Rational& q) { return Real(q.get_mpq_t()); }

Rational pow(const Rational& base, long exponent) {
  Rational result(1);
  Rational b = exponent >= 0 ? base : Rational(1) / base;
  unsigned long e = exponent >= 0 ? static_cast<unsigned long>(exponent)
                                  : static_cast<unsigned long>(-exponent);
  while (e) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize(0)");
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::pair<std::uint64_t, int>> factorize(const Integer& n) {
  Integer a = abs(n);
  if (a == 0) throw std::invalid_argument("factorize(0)");
  if (!a.fits_ulong_p()) throw std::invalid_argument("factorize: argument too large");
  return factorize(static_cast<std::uint64_t>(a.get_ui()));
}

int valuation(const Integer& z, std::uint64_t p) {
  if (z == 0) throw std::invalid_argument("valuation of zero");
  Integer a = z;
  int v = 0;
  const unsigned long pp = static_cast<unsigned long>(p);
  while (mpz_divisible_ui_p(a.get_mpz_t(), pp)) {
    mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), pp);
    ++v;
  }
  return v;
}

int valuation(const Rational& q, std::uint64_t p) {
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

bool is_square_free(std::uint64_t n) {
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

Complex Complex::root_of_unity(long num, long den) {
  if (den == 0) throw std::invalid_argument("root_of_unity: zero denominator");
  // quarter turns are returned exactly
  long r = ((num % den) + den) % den;
  if ((4 * r) % den == 0) {
    switch ((4 * r) / den) {
      case 0: return Complex(Real(1));
      case 1: return {Real(0), Real(1)};
      case 2: return Complex(Real(-1));
      default: return {Real(0), Real(-1)};
    }
  }
  const Real theta = Real(2) * boost::math::constants::pi<Real>() * Real(num) / Real(den);
  return {cos(theta), sin(theta)};
}

Real Complex::abs() const { return boost::multiprecision::sqrt(norm()); }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  const Real d = o.norm();
  if (d == 0) throw std::domain_error("complex division by zero");
  Real r = (re * o.re + im * o.im) / d;
  Real i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex sqrt(const Complex& z) {
  // take the larger component directly and derive the other from im / 2, avoiding cancellation
  const Real m = z.abs();
  if (m == 0) return Complex(Real(0));
  if (z.re >= 0) {
    const Real r = boost::multiprecision::sqrt((m + z.re) / 2);
    return {r, z.im / (2 * r)};
  }
  Real i = boost::multiprecision::sqrt((m - z.re) / 2);
  if (z.im < 0) i = -i;
  return {z.im / (2 * i), i};
}

Complex pow(const Complex& z, long exponent) {
  Complex result(Real(1));
  Complex b = exponent >= 0 ? z : Complex(Real(1)) / z;
  unsigned long e = exponent >= 0 ? static_cast<unsigned long>(exponent)
                                  : static_cast<unsigned long>(-exponent);
  while (e) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

Real relative_error(const Complex& a, const Complex& b, const Real& floor) {
  const Real scale = std::max(b.abs(), floor);
  return (a - b).abs() / scale;
}

std::string format_real(const Real& x, int digits) {
  return x.str(digits, std::ios_base::scientific);
}

std::string format_complex(const Complex& z, int digits) {
  std::ostringstream os;
  os << format_real(z.re, digits);
  if (z.im != 0) os << (z.im < 0 ? " - " : " + ") << format_real(abs(z.im), digits) << "i";
  return os.str();
}

}  // namespace e7lift
