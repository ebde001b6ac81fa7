#include <gtest/gtest.h>

#include "e7lift/errors.hpp"
#include "e7lift/newform.hpp"
#include "oracles/eta_product.hpp"

using namespace e7lift;

namespace {

const NewformRecord& rec11() {
  static const NewformRecord r = load_newform(std::string(E7LIFT_TEST_DATA) + "/newforms/11a.json");
  return r;
}

nlohmann::json minimal(long level, int weight, std::vector<std::string> a) {
  return {{"level", level}, {"weight", weight}, {"character", "trivial"}, {"coefficients", a}};
}

}  // namespace

TEST(Newform, Level11MatchesEtaProduct) {
  const auto& r = rec11();
  EXPECT_EQ(r.level, 11);
  EXPECT_EQ(r.weight, 2);
  ASSERT_GE(r.max_n(), 10000u);
  const auto ref = oracle::eta_11(r.max_n());
  for (std::size_t n = 1; n <= r.max_n(); ++n) {
    ASSERT_TRUE(r.a(n).exact);
    ASSERT_EQ(*r.a(n).exact, Rational(ref[n])) << "n = " << n;
  }
  EXPECT_TRUE(r.all_exact());
  EXPECT_EQ(r.atkin_lehner.at(11), -1);
}

TEST(Newform, SatakeAtTwo) {
  const auto s = satake(rec11(), 2);
  // a_2 = -2: alpha + beta = -sqrt(2), alpha beta = 1
  ASSERT_TRUE(s.trace && s.chi);
  EXPECT_EQ(*s.chi, 1);
  EXPECT_EQ(s.trace->to_string(), "-sqrt(2)");
  EXPECT_GT(s.alpha.im, 0);
  EXPECT_LT(((s.alpha * s.beta) - Complex(Real(1))).abs(), Real(1e-50));
  EXPECT_THROW(satake(rec11(), 11), DomainError);
}

TEST(Newform, LocalTypes) {
  EXPECT_EQ(local_type_name(classify_local(rec11(), 11)), "steinberg");
  EXPECT_EQ(local_type_name(classify_local(rec11(), 3)), "unramified");
}

TEST(Newform, RejectsBadRecords) {
  EXPECT_THROW(parse_newform(minimal(1, 12, {"2", "-24"})), DataError);   // a_1 != 1
  EXPECT_THROW(parse_newform(minimal(1, 1, {"1"})), DataError);           // weight
  auto j = minimal(11, 2, {"1", "-2", "-1", "2", "1", "2", "-2", "0", "-2", "-2", "1"});
  EXPECT_THROW(parse_newform(j), DataError);  // missing Atkin-Lehner sign
  j["atkin_lehner"] = {{"11", 1}};
  EXPECT_THROW(parse_newform(j), DataError);  // a_11 = -eps
  j["atkin_lehner"] = {{"11", -1}};
  EXPECT_NO_THROW(parse_newform(j));
  j["atkin_lehner"] = {{"11", 2}};
  EXPECT_THROW(parse_newform(j), DataError);
}

TEST(Newform, ErrorsAreCollected) {
  auto j = minimal(11, 1, {"3"});
  try {
    parse_newform(j);
    FAIL();
  } catch (const DataError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("a_1"), std::string::npos) << what;
    EXPECT_NE(what.find("weight"), std::string::npos) << what;
  }
}

TEST(Newform, NonSquareFreeLevelIsRejectedLocally) {
  auto j = minimal(4, 6, {"1", "0", "-12", "0", "54", "0"});
  j["atkin_lehner"] = nlohmann::json::object();
  const NewformRecord r = parse_newform(j);
  EXPECT_FALSE(r.square_free_at(2));
  EXPECT_FALSE(r.warnings.empty());
  EXPECT_THROW(classify_local(r, 2), UnsupportedInput);
}

TEST(Newform, CharacterParity) {
  auto j = minimal(3, 2, {"1"});
  j["character"] = {{"modulus", 3}, {"values", {{"2", "-1"}}}};
  EXPECT_THROW(parse_newform(j), DataError);  // chi(-1) = -1 but weight even
}

TEST(Newform, WeightTenLevelTwo) {
  const auto r = load_newform(std::string(E7LIFT_TEST_DATA) + "/newforms/2a_w10.json");
  EXPECT_EQ(r.weight, 10);
  EXPECT_EQ(local_type_name(classify_local(r, 2)), "steinberg");
}
