#include <gtest/gtest.h>

#include <random>

#include "e7lift/octonion.hpp"
#include "oracles/int_octonion.hpp"

using namespace e7lift;

namespace {

Octonion from_oracle(const oracle::Oct& x) {
  Octonion o;
  for (int i = 0; i < 8; ++i) o.c[i] = Rational(x.d[i], 2), o.c[i].canonicalize();
  return o;
}

}  // namespace

TEST(Octonion, TableMatchesOracle) {
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      oracle::Oct a, b;
      a.d[i] = 2;
      b.d[j] = 2;
      EXPECT_EQ(Octonion::unit(i) * Octonion::unit(j), from_oracle(oracle::mul(a, b))) << i << "," << j;
    }
  }
}

TEST(Octonion, CyclicRule) {
  for (int i = 1; i <= 7; ++i) {
    const int j = i % 7 + 1;
    const int k = (i + 2) % 7 + 1;
    EXPECT_EQ(Octonion::unit(i) * Octonion::unit(j), Octonion::unit(k));
  }
}

TEST(Octonion, ConjugationAndNorm) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int t = 0; t < 200; ++t) {
    Octonion x, y;
    for (int i = 0; i < 8; ++i) {
      x.c[i] = Rational(d(rng), 3);
      y.c[i] = Rational(d(rng), 2);
      x.c[i].canonicalize();
      y.c[i].canonicalize();
    }
    EXPECT_EQ((x * y).conj(), y.conj() * x.conj());
    EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
    EXPECT_EQ(x * x.conj(), Octonion::real(x.norm()));
    EXPECT_EQ(trace3(x, y, x), trace3(y, x, x));
  }
}

TEST(Octonion, NonAssociative) {
  const Octonion a = Octonion::unit(1), b = Octonion::unit(2), c = Octonion::unit(3);
  EXPECT_NE((a * b) * c, a * (b * c));
}

TEST(OctonionOrder, MaximalOrderBasis) {
  const auto& o = OctonionOrder::maximal();
  EXPECT_TRUE(o.contains(Octonion::real(Rational(1))));
  for (int i = 0; i < 8; ++i) EXPECT_TRUE(o.contains(Octonion::unit(i)));
  Octonion h;
  h.c[4] = h.c[5] = h.c[6] = h.c[7] = Rational(1, 2);
  EXPECT_TRUE(o.contains(h));
  Octonion bad;
  bad.c[0] = Rational(1, 2);
  EXPECT_FALSE(o.contains(bad));
}

TEST(OctonionOrder, UnitsMatchBoxScan) {
  const auto lib = OctonionOrder::maximal().units();
  const auto ref = oracle::elements_of_norm_at_most(1);
  std::vector<Octonion> ref1;
  for (const auto& x : ref) {
    if (oracle::norm4(x) == 4) ref1.push_back(from_oracle(x));
  }
  std::sort(ref1.begin(), ref1.end());
  ASSERT_EQ(lib.size(), 240u);
  EXPECT_EQ(ref1.size(), 240u);
  EXPECT_EQ(lib, ref1);
}

TEST(OctonionOrder, ClosureOnRandomElements) {
  const auto& o = OctonionOrder::maximal();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int t = 0; t < 300; ++t) {
    std::array<long, 8> u{}, v{};
    for (auto& x : u) x = d(rng);
    for (auto& x : v) x = d(rng);
    const Octonion x = o.from_coordinates(u);
    const Octonion y = o.from_coordinates(v);
    EXPECT_TRUE(o.contains(x * y));
    EXPECT_TRUE(o.contains(x.conj()));
    const auto back = o.coordinates(x);
    for (int i = 0; i < 8; ++i) EXPECT_EQ(back[i], u[i]);
  }
}

TEST(OctonionOrder, NormTwoCount) {
  // theta series of E8: 1 + 240 q + 2160 q^2
  const auto v = OctonionOrder::maximal().elements_of_norm_at_most(Rational(2));
  EXPECT_EQ(v.size(), 1u + 240u + 2160u);
}

TEST(OctonionOrder, RejectsNonOrder) {
  std::array<Octonion, 8> basis;
  for (int i = 0; i < 8; ++i) basis[i] = Octonion::unit(i);
  basis[1] = Rational(2) * Octonion::unit(1);
  EXPECT_THROW(OctonionOrder{basis}, std::invalid_argument);
}
