#include <gtest/gtest.h>

#include "e7lift/coefficients.hpp"
#include "e7lift/errors.hpp"

using namespace e7lift;

namespace {

const CoeffContext& ctx11() {
  static const CoeffContext c(load_newform(std::string(E7LIFT_TEST_DATA) + "/newforms/11a.json"));
  return c;
}

std::string exact(const Value& v) { return v.exact ? v.exact->to_string() : "<numeric>"; }

}  // namespace

TEST(Coefficients, One) { EXPECT_EQ(exact(c_value(ctx11(), std::uint64_t{1})), "1"); }

TEST(Coefficients, SteinbergPrime) {
  // eps p^{-(l-1)/2} (1 - 1/p) = -(10/11) / sqrt(11)
  EXPECT_EQ(exact(c_prime(ctx11(), 11)), "-10/121*sqrt(11)");
}

TEST(Coefficients, UnramifiedPrimeIsAlphaOverP) {
  const Value c = c_prime(ctx11(), 3);
  EXPECT_EQ(exact(c), "1/3*alpha3");
  EXPECT_LT(abs(c.numeric.abs() - Real(1) / 3), Real(1e-40));
}

TEST(Coefficients, SquareClassAtSteinberg) {
  EXPECT_EQ(exact(c_value(ctx11(), std::uint64_t{121})), "1/11");
}

TEST(Coefficients, NonIntegralIsZero) {
  EXPECT_TRUE(c_value(ctx11(), Rational(3, 2)).exact->is_zero());
  EXPECT_TRUE(c_value(ctx11(), Rational(1, 4)).exact->is_zero());
  EXPECT_EQ(exact(c_value(ctx11(), parse_rational("8/2"))), exact(c_value(ctx11(), std::uint64_t{4})));
}

TEST(Coefficients, SquareClassRelation) {
  const auto& c = ctx11();
  for (std::uint64_t r : {1, 2, 3, 5, 6, 7, 10, 11, 13, 22, 30}) {
    for (std::uint64_t a : {2, 3, 5, 6, 11, 12}) {
      Value rhs = c_value(c, r);
      for (const auto& [p, e] : factorize(a)) {
        for (int i = 0; i < e; ++i) rhs = mul_reduce(rhs, c.mu_f_inverse(p), c.field());
      }
      EXPECT_TRUE(values_agree(c_value(c, a * a * r), rhs, c.field(), pow(Real(10), -30))) << a << "^2*" << r;
    }
  }
}

TEST(Coefficients, MultiplicativityOracle) {
  // 6^l c_6 w_2 w_3 = a(2) a(3) = 2
  const auto& c = ctx11();
  const Value v = reconstruct_coefficient(c, 6);
  ASSERT_TRUE(v.exact);
  EXPECT_EQ(v.exact->to_string(), "2");
}

TEST(Coefficients, Reconstruction) {
  const auto& c = ctx11();
  const auto& rec = c.record();
  for (std::uint64_t n = 1; n <= 300; ++n) {
    if (!is_square_free(n) || n % 11 == 0) continue;
    const Value v = reconstruct_coefficient(c, n);
    ASSERT_TRUE(v.exact && v.exact->is_rational()) << n << ": " << v.to_string();
    EXPECT_EQ(v.exact->rational_value(), *rec.a(n).exact) << n;
  }
  EXPECT_THROW(reconstruct_coefficient(c, 22), DomainError);
  EXPECT_THROW(reconstruct_coefficient(c, 12), DomainError);
}

TEST(Coefficients, BoundCertified) {
  const auto& c = ctx11();
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const BoundCheck b = check_bound(c, n);
    ASSERT_TRUE(b.pass) << n;
    ASSERT_TRUE(b.certified) << n;
  }
  const BoundCheck b = check_bound(c, 12);
  EXPECT_EQ(b.m, 3u);
}

TEST(Coefficients, WhittakerValues) {
  PrecisionScope prec(256);
  const CoeffContext c(load_newform(std::string(E7LIFT_TEST_DATA) + "/newforms/11a.json"));
  // p^{-1/2} (1 + beta/alpha) at p = 2
  const Value w = sl2_whittaker_value(c, 2);
  const auto s = satake(c.record(), 2);
  const Complex ref = Complex(boost::multiprecision::sqrt(Real(1) / 2)) * (Complex(Real(1)) + s.beta / s.alpha);
  EXPECT_LT((w.numeric - ref).abs(), Real(1e-40));
}

TEST(Coefficients, CsvExport) {
  const std::string csv = coefficient_table_csv(ctx11(), 3);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,c_n,bound,pass");
  EXPECT_NE(csv.find("1,\"1\","), std::string::npos);
}
