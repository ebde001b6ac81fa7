#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "e7lift/jordan.hpp"
#include "e7lift/numeric.hpp"

namespace e7lift {

/// det of the 16x16 Gram matrix of x -> sigma_R(x, x) on pairs of real octonions.
Rational gram_sigma_det(const Hermitian2& R);

struct SL2 {
  double a = 1, b = 0, c = 0, d = 1;
  static SL2 n(double x) { return {1, x, 0, 1}; }
  static SL2 m(double t) { return {t, 0, 0, 1 / t}; }
  static SL2 k(double theta);
  std::complex<double> act(std::complex<double> z) const { return (a * z + b) / (c * z + d); }
  std::complex<double> j(std::complex<double> z) const { return c * z + d; }
  double det() const { return a * d - b * c; }
};
SL2 operator*(const SL2& x, const SL2& y);

/// e(z) = exp(2 pi i z)
std::complex<double> e_char(std::complex<double> z);

/// r^{l/2} e(r h(i)) j(h, i)^{-l}
std::complex<double> whittaker_sl2(double r, int l, const SL2& h);

/// W_B at n(b_shift) h, h in the SL2 factor acting on the last diagonal entry.
std::complex<double> whittaker_numeric(const JordanElement& B, int l, const SL2& h, double b_shift = 0);

/// q^{n/2} * scale with q > 0.
struct HalfPower {
  Rational base;
  long twice_exp = 0;
  Rational scale{1};

  Rational squared() const;
  Real numeric() const;
  std::string to_string() const;
};

struct ConstantsReport {
  Rational det;
  long k = 0;
  long l = 0;
  std::map<std::uint64_t, HalfPower> c_local;  // |det|_p^{-9/2} at p dividing det
  HalfPower c1;
  HalfPower c3;
  HalfPower c_r_stated;
  HalfPower c_r_derived;
  bool identity_holds = false;  // C3 = C1 det^{9/2}
  bool c_r_discrepancy = false;

  nlohmann::json to_json(int digits = 30) const;
};

ConstantsReport constants_report(const Hermitian2& S, long k);

}  // namespace e7lift
