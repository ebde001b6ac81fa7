#include <gtest/gtest.h>

#include <algorithm>

#include "e7lift/errors.hpp"
#include "e7lift/siegel.hpp"

using namespace e7lift;

namespace {

bool fails(const ValidationReport& r, const std::string& name) {
  const auto f = r.failed();
  return std::find(f.begin(), f.end(), name) != f.end();
}

std::vector<Rational> q(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(Siegel, Validator) {
  EXPECT_TRUE(validate({2, 0, q({1})}, 0).ok());
  EXPECT_TRUE(fails(validate({2, 1, q({1, 2})}, 1), "monic"));
  EXPECT_TRUE(fails(validate({2, 1, q({1, 1})}, 2), "degree"));
  const ValidationReport big = validate({3, 1, {pow(Rational(3), 12), Rational(1)}}, 1);
  EXPECT_TRUE(fails(big, "coefficient_bound"));
  EXPECT_FALSE(fails(big, "monic"));
  EXPECT_TRUE(validate({3, 1, {pow(Rational(3), 11), Rational(1)}}, 1).ok());
  EXPECT_TRUE(fails(validate({2, 1, {Rational(1, 2), Rational(1)}}, 1), "integral"));
  EXPECT_TRUE(fails(validate({2, 0, q({2})}, 0), "monic"));
}

TEST(Siegel, Gamma) {
  const GammaFactor g = gamma_p(2);
  EXPECT_EQ(g.inverse(), Polynomial({Rational(1), Rational(-273), Rational(4368), Rational(-4096)}));
  // gamma(9) = zeta_2(9) zeta_2(5) zeta_2(1)
  const Rational z9 = 1 / (1 - pow(Rational(2), -9));
  const Rational z5 = 1 / (1 - pow(Rational(2), -5));
  const Rational z1 = 1 / (1 - pow(Rational(2), -1));
  EXPECT_EQ(g.at(9), z9 * z5 * z1);
  EXPECT_EQ(siegel_series_b({2, 0, q({1})}), g.inverse());
}

TEST(Siegel, SeriesIdentity) {
  // b(t) = gamma^{-1}(t) f(p^9 t)
  const SiegelPolynomial f{3, 1, q({-1, 1})};
  const Polynomial b = siegel_series_b(f);
  const Rational t(1, 7);
  EXPECT_EQ(b(t), gamma_p(3).inverse()(t) * (pow(Rational(3), 9) * t - 1));
}

TEST(SiegelProvider, ParseAndLookup) {
  SiegelProvider p;
  p.load_text("# comment\np 2 key 1 coeffs -1 1\np 2 key 0,0,1 coeffs 3 1 steinberg 1/2\n", "mem");
  EXPECT_EQ(p.size(), 2u);
  const JordanElement B = JordanElement::diag(Rational(1), Rational(1), Rational(2));
  const auto lk = p.lookup(B, 2);
  ASSERT_NE(lk.entry, nullptr);
  EXPECT_EQ(lk.source, "mem:3");  // triple beats degree
  EXPECT_EQ(p.lookup(B, 3).source, "builtin");
  EXPECT_EQ(valuation_triple(B, 2), (std::array<long, 3>{0, 0, 1}));
}

TEST(SiegelProvider, MissingEntryNamesKey) {
  SiegelProvider p;
  const JordanElement B = JordanElement::diag(Rational(1), Rational(1), Rational(4));
  try {
    p.lookup(B, 2);
    FAIL();
  } catch (const SiegelUnavailable& e) {
    EXPECT_EQ(e.prime(), 2u);
    EXPECT_EQ(e.key(), "d=2");
  }
}

TEST(SiegelProvider, RejectsInvalidTables) {
  SiegelProvider p;
  EXPECT_THROW(p.load_text("p 2 key 1 coeffs 1 2\n", "m"), DataError);
  EXPECT_THROW(p.load_text("p 4 key 1 coeffs -1 1\n", "m"), DataError);
  EXPECT_THROW(p.load_text("p 2 key 1 coeffs 1/2 1\n", "m"), DataError);
  EXPECT_THROW(p.load_text("p 2 key 2,1,0 coeffs 1\n", "m"), DataError);
  EXPECT_THROW(p.load_text("p 2 key 1 coeffs -1 1 steinberg\n", "m"), DataError);
  EXPECT_THROW(p.load_text("p 2 key 1 coeffs -1 1\np 2 key 1 coeffs 0 1\n", "m"), DataError);
  try {
    p.load_text("\n\np 2 key 1 coeffs 5 2\n", "tbl");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("tbl:3", 0), 0u) << e.what();
  }
}

TEST(SiegelProvider, DemoTableLoads) {
  SiegelProvider p;
  p.load_file(std::string(E7LIFT_TEST_DATA) + "/siegel/demo.tbl");
  EXPECT_GE(p.size(), 5u);
}

TEST(Whittaker, UnramifiedValues) {
  SiegelProvider p;
  p.load_text("p 2 key 1 coeffs -1 1\n", "m");
  AlphaField f;
  const JordanElement E = JordanElement::identity();
  const Value mu = Value::from_rational(Rational(1));
  EXPECT_EQ(whittaker_unramified(E, 2, mu, p, f).exact->rational_value(), 1);
  // f(1) = 0 at mu = 1 for X - 1
  const JordanElement B = JordanElement::diag(Rational(1), Rational(1), Rational(2));
  EXPECT_TRUE(whittaker_unramified(B, 2, mu, p, f).exact->is_zero());
  // 2^{-9/2} f(3) = 2^{-7/2}
  const Value w = whittaker_unramified(B, 2, Value::from_rational(Rational(3)), p, f);
  EXPECT_EQ(w.exact->to_string(), "1/16*sqrt(2)");
  std::string src;
  whittaker_unramified(B, 2, mu, p, f, &src);
  EXPECT_EQ(src, "m:1");
}

TEST(Whittaker, Steinberg) {
  SiegelProvider p;
  p.load_text("p 11 key 1 coeffs -1 1 steinberg 1/11\np 2 key 1 coeffs -1 1\n", "m");
  EXPECT_EQ(whittaker_steinberg(JordanElement::identity(), 11, p).exact->rational_value(), 1);
  const JordanElement B = JordanElement::diag(Rational(1), Rational(1), Rational(11));
  EXPECT_EQ(whittaker_steinberg(B, 11, p).exact->rational_value(), Rational(1, 11));
  const JordanElement C = JordanElement::diag(Rational(1), Rational(1), Rational(2));
  EXPECT_THROW(whittaker_steinberg(C, 2, p), SiegelUnavailable);
}
