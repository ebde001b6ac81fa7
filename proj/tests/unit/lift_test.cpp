#include <gtest/gtest.h>

#include <random>

#include "e7lift/errors.hpp"
#include "e7lift/lift.hpp"

using namespace e7lift;

namespace {

const CoeffContext& ctx11() {
  static const CoeffContext c(load_newform(std::string(E7LIFT_TEST_DATA) + "/newforms/11a.json"));
  return c;
}

const SiegelProvider& demo() {
  static const SiegelProvider p = [] {
    SiegelProvider s;
    s.load_file(std::string(E7LIFT_TEST_DATA) + "/siegel/demo.tbl");
    return s;
  }();
  return p;
}

}  // namespace

TEST(Lift, IdentityCoefficientIsOne) {
  const LiftCoefficient c = lift_coefficient(JordanElement::identity(), ctx11(), SiegelProvider{});
  ASSERT_TRUE(c.value.exact);
  EXPECT_EQ(c.value.exact->to_string(), "1");
  EXPECT_EQ(c.to_json()["value"], "1");
}

TEST(Lift, TableAtSmallBounds) {
  const LiftTable t = lift_table(1, 3, ctx11(), SiegelProvider{});
  ASSERT_EQ(t.entries.size(), 1u);
  EXPECT_FALSE(t.partial());
  EXPECT_TRUE(lift_table(0, 5, ctx11(), SiegelProvider{}).entries.empty());
}

TEST(Lift, BreakdownProductEqualsValue) {
  const LiftTable t = lift_table(2, 4, ctx11(), demo());
  ASSERT_FALSE(t.partial());
  for (const auto& e : t.entries) {
    ASSERT_TRUE(e.coeff);
    const Value prod = e.coeff->breakdown_product(ctx11().field());
    EXPECT_TRUE(values_agree(prod, e.coeff->value, ctx11().field(), pow(Real(10), -30)));
  }
}

TEST(Lift, DetOnlyDependence) {
  const LiftTable t = lift_table(2, 4, ctx11(), demo());
  std::map<std::string, std::string> by_det;
  for (const auto& e : t.entries) {
    const auto [it, fresh] = by_det.emplace(e.coeff->det.get_str(), e.coeff->value.to_string());
    if (!fresh) EXPECT_EQ(it->second, e.coeff->value.to_string());
  }
  EXPECT_EQ(by_det.size(), 2u);
}

TEST(Lift, MissingEntriesAreReported) {
  const LiftTable t = lift_table(2, 4, ctx11(), SiegelProvider{});
  EXPECT_TRUE(t.partial());
  ASSERT_EQ(t.missing_keys().size(), 1u);
  EXPECT_EQ(t.missing_keys()[0], "(2, d=1)");
  long missing = 0;
  for (const auto& e : t.entries) missing += e.missing.has_value();
  EXPECT_EQ(missing, 3);
}

TEST(Lift, Deterministic) {
  const LiftTable a = lift_table(2, 4, ctx11(), demo());
  const LiftTable b = lift_table(2, 4, ctx11(), demo());
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) EXPECT_EQ(a.entries[i].to_json(), b.entries[i].to_json());
}

TEST(Lift, PowerFactor) {
  // det 2, k = 2: 2^{(k+8)/2} = 32
  const LiftCoefficient c = lift_coefficient(JordanElement::diag(Rational(1), Rational(1), Rational(2)), ctx11(), demo());
  EXPECT_EQ(c.power.exact->to_string(), "32");
  ASSERT_EQ(c.local.size(), 2u);
  EXPECT_EQ(c.local[0].p, 2u);
  EXPECT_EQ(c.local[0].kind, "unramified");
  EXPECT_EQ(c.local[1].kind, "steinberg");
}

TEST(Lift, RejectsNonPositive) {
  EXPECT_THROW(lift_coefficient(JordanElement::diag(Rational(1), Rational(-1), Rational(1)), ctx11(), demo()),
               DomainError);
  EXPECT_THROW(lift_coefficient(JordanElement::diag(Rational(1, 2), Rational(1), Rational(2)), ctx11(), demo()),
               DomainError);
}

TEST(Equivariance, Examples) {
  const Hermitian2 E2 = Hermitian2::identity();
  EXPECT_TRUE(equivariance_check(E2, Rational(2), {Octonion{}, Octonion{}}, ctx11(), demo()).equal);
  EXPECT_TRUE(equivariance_check(E2, Rational(2), {Octonion::unit(1), Octonion{}}, ctx11(), demo()).equal);
}

TEST(Equivariance, Randomized) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> d(-1, 1);
  const auto& order = OctonionOrder::maximal();
  for (int t = 0; t < 30; ++t) {
    std::array<long, 8> u{}, v{};
    for (auto& x : u) x = d(rng);
    for (auto& x : v) x = d(rng);
    const OctPair x{order.from_coordinates(u), order.from_coordinates(v)};
    const Hermitian2 X{Rational(2), Rational(1), Octonion{}};
    const auto rep = equivariance_check(X, Rational(1 + t % 3), x, ctx11(), demo());
    EXPECT_TRUE(rep.equal) << rep.detail;
  }
}
