#include "e7lift/archimedean.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "e7lift/errors.hpp"
#include "e7lift/lattice.hpp"

namespace e7lift {

Rational gram_sigma_det(const Hermitian2& R) {
  if (!R.positive_definite()) throw DomainError("gram_sigma_det: R is not positive definite");
  std::array<OctPair, 16> basis;
  for (int i = 0; i < 16; ++i) {
    basis[i][0] = Octonion();
    basis[i][1] = Octonion();
    basis[i][i / 8] = Octonion::unit(i % 8);
  }
  RationalMatrix g(16, std::vector<Rational>(16));
  for (int i = 0; i < 16; ++i) {
    for (int j = i; j < 16; ++j) g[i][j] = g[j][i] = sigma_S(R, basis[i], basis[j]);
  }
  return determinant(g);
}

SL2 SL2::k(double theta) { return {std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta)}; }

SL2 operator*(const SL2& x, const SL2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::complex<double> e_char(std::complex<double> z) {
  return std::exp(std::complex<double>(0, 2 * std::numbers::pi) * z);
}

namespace {

void check_sl2(const SL2& h) {
  if (std::abs(h.det() - 1) > 1e-12) throw DomainError("element is not in SL2(R)");
}

}  // namespace

std::complex<double> whittaker_sl2(double r, int l, const SL2& h) {
  if (!(r > 0)) throw DomainError("whittaker_sl2: r must be positive");
  check_sl2(h);
  const std::complex<double> i(0, 1);
  return std::pow(r, l / 2.0) * e_char(r * h.act(i)) * std::pow(h.j(i), -l);
}

std::complex<double> whittaker_numeric(const JordanElement& B, int l, const SL2& h, double b_shift) {
  if (!is_positive_rank(B).positive_definite) throw DomainError("whittaker_numeric: B is not positive definite");
  check_sl2(h);
  const std::complex<double> i(0, 1);
  const double det = B.det().get_d();
  const std::complex<double> tau = h.act(i) + b_shift;
  const std::complex<double> pairing = i * (B.a.get_d() + B.b.get_d()) + B.c.get_d() * tau;
  return std::pow(det, l / 2.0) * e_char(pairing) * std::pow(h.j(i), -l);
}

Rational HalfPower::squared() const { return pow(base, twice_exp) * scale * scale; }

Real HalfPower::numeric() const {
  return boost::multiprecision::pow(to_real(base), Real(twice_exp) / 2) * to_real(scale);
}

std::string HalfPower::to_string() const {
  std::ostringstream os;
  if (twice_exp % 2 == 0) {
    os << Rational(pow(base, twice_exp / 2) * scale).get_str();
  } else {
    if (scale != 1) os << scale.get_str() << "*";
    os << "(" << base.get_str() << ")^(" << twice_exp << "/2)";
  }
  return os.str();
}

ConstantsReport constants_report(const Hermitian2& S, long k) {
  ConstantsReport r;
  r.det = S.det();
  if (r.det == 0) throw DomainError("constants_report: det S = 0");
  r.k = k;
  r.l = k + 8;
  const Rational two16 = pow(Rational(2), -16);
  const Rational ad = abs(r.det);

  std::map<std::uint64_t, int> primes;
  for (const auto& n : {r.det.get_num(), Integer(r.det.get_den())}) {
    if (abs(n) == 1) continue;
    for (const auto& [p, e] : factorize(n)) primes[p] = 0;
  }
  for (auto& [p, v] : primes) {
    v = valuation(r.det, p);
    // |det|_p^{-9/2} = p^{9v/2}
    r.c_local[p] = {Rational(static_cast<unsigned long>(p)), 9L * v, Rational(1)};
  }

  r.c1 = {ad, r.l - 8, two16};
  r.c3 = {ad, k + 9, two16};
  r.c_r_stated = {ad, 2 * (r.l - 4), two16};
  r.c_r_derived = {ad, r.l - 8, two16};
  // both sides are positive, so compare squares
  r.identity_holds = r.c3.squared() == r.c1.squared() * pow(ad, 9);
  r.c_r_discrepancy = r.c_r_stated.squared() != r.c_r_derived.squared();
  return r;
}

nlohmann::json ConstantsReport::to_json(int digits) const {
  auto hp = [&](const HalfPower& h) {
    return nlohmann::json{{"exact", h.to_string()}, {"squared", h.squared().get_str()},
                          {"numeric", format_real(h.numeric(), digits)}};
  };
  nlohmann::json local = nlohmann::json::object();
  for (const auto& [p, h] : c_local) local[std::to_string(p)] = hp(h);
  return {{"det", det.get_str()},
          {"k", k},
          {"l", l},
          {"C_local", local},
          {"C1", hp(c1)},
          {"C3", hp(c3)},
          {"C3_over_C1", HalfPower{abs(det), 9, Rational(1)}.to_string()},
          {"identity_C3_eq_C1_det_9_2", identity_holds},
          {"C_R", {{"stated", hp(c_r_stated)}, {"derived", hp(c_r_derived)}, {"discrepancy", c_r_discrepancy}}}};
}

}  // namespace e7lift
