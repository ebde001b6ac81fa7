#include <gtest/gtest.h>

#include "e7lift/exact.hpp"
#include "e7lift/lattice.hpp"
#include "e7lift/numeric.hpp"
#include "e7lift/polynomial.hpp"

using namespace e7lift;

TEST(Numeric, ParseRational) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational(" -7 "), Rational(-7));
  EXPECT_EQ(parse_rational("+4/2"), Rational(2));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Numeric, FactorAndValuation) {
  const auto f = factorize(std::uint64_t{360});
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], std::make_pair(std::uint64_t{2}, 3));
  EXPECT_EQ(f[2], std::make_pair(std::uint64_t{5}, 1));
  EXPECT_EQ(valuation(Rational(9, 44), 2), -2);
  EXPECT_EQ(valuation(Rational(9, 44), 3), 2);
  EXPECT_TRUE(is_square_free(66));
  EXPECT_FALSE(is_square_free(44));
  EXPECT_TRUE(is_prime(10007));
  EXPECT_FALSE(is_prime(10001));
}

TEST(Numeric, QuarterTurnsAreExact) {
  EXPECT_EQ(Complex::root_of_unity(1, 4).im, 1);
  EXPECT_EQ(Complex::root_of_unity(1, 4).re, 0);
  EXPECT_EQ(Complex::root_of_unity(3, 2).re, -1);
  EXPECT_EQ(Complex::root_of_unity(-1, 4).im, -1);
  EXPECT_THROW(Complex::root_of_unity(1, 0), std::invalid_argument);
  const Complex z = Complex::root_of_unity(1, 3);
  EXPECT_LT(abs(pow(z, 3).re - 1), Real(1e-60));
}

TEST(Exact, SquareRootsCollapse) {
  const ExactValue r = ExactValue::prime_power_half(11, 1);
  EXPECT_EQ((r * r).rational_value(), 11);
  EXPECT_EQ(ExactValue::prime_power_half(11, -3).to_string(), "1/121*sqrt(11)");
  EXPECT_EQ((ExactValue::prime_power_half(2, 1) * ExactValue::prime_power_half(3, 1)).to_string(),
            "sqrt(2)*sqrt(3)");
}

TEST(Exact, AlphaReduction) {
  // alpha^2 = alpha - 1: a primitive sixth root of unity
  AlphaField f;
  f.add(7, {ExactValue(1), Rational(1), Complex::root_of_unity(1, 6)});
  EXPECT_EQ(ExactValue::alpha(7, 3).reduced(f), ExactValue(-1));
  EXPECT_EQ(ExactValue::alpha(7, 6).reduced(f), ExactValue(1));
  EXPECT_EQ(ExactValue::alpha(7, -1).reduced(f), ExactValue(1) - ExactValue::alpha(7));
  const ExactValue x = ExactValue::alpha(7, 5) + ExactValue::alpha(7, -5);
  EXPECT_EQ(x.reduced(f), ExactValue(1));
  const Complex n = ExactValue::alpha(7, 4).evaluate(f);
  const Complex m = ExactValue::alpha(7, 4).reduced(f).evaluate(f);
  EXPECT_LT((n - m).abs(), Real(1e-60));
}

TEST(Exact, ValuesAgree) {
  AlphaField f;
  const Real tol = pow(Real(10), -20);
  const Value a = Value::from_exact(ExactValue::prime_power_half(2, 1), f);
  const Value b = Value::from_numeric(Complex(boost::multiprecision::sqrt(Real(2))));
  EXPECT_TRUE(values_agree(a, b, f, tol));
  EXPECT_FALSE(values_agree(a, Value::from_rational(Rational(141421, 100000)), f, tol));
}

TEST(Polynomial, Basics) {
  const Polynomial p({Rational(-1), Rational(0), Rational(1)});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(Rational(3)), 8);
  EXPECT_EQ(p.scale_argument(Rational(2)), Polynomial({Rational(-1), Rational(0), Rational(4)}));
  EXPECT_EQ((p * p).degree(), 4);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(Lattice, DeterminantAndInverse) {
  RationalMatrix m{{Rational(2), Rational(1)}, {Rational(1), Rational(2)}};
  EXPECT_EQ(determinant(m), 3);
  const auto inv = inverse(m);
  EXPECT_EQ(inv[0][0], Rational(2, 3));
  EXPECT_EQ(inv[0][1], Rational(-1, 3));
  EXPECT_THROW(inverse({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}), std::domain_error);
}

TEST(Lattice, ShortVectorsAgreeWithBoxScan) {
  RationalMatrix g{{Rational(2), Rational(1), Rational(0)},
                   {Rational(1), Rational(2), Rational(1, 2)},
                   {Rational(0), Rational(1, 2), Rational(3)}};
  const Rational bound(7);
  long box = 0;
  for (long x = -4; x <= 4; ++x) {
    for (long y = -4; y <= 4; ++y) {
      for (long z = -4; z <= 4; ++z) {
        const long v[3] = {x, y, z};
        Rational q(0);
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) q += g[i][j] * v[i] * v[j];
        }
        box += q <= bound;
      }
    }
  }
  EXPECT_EQ(static_cast<long>(short_vectors(g, bound).size()), box);
}
