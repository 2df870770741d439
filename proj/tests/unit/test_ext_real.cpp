#include <gtest/gtest.h>

#include <cmath>

#include "geoconvex/errors.hpp"
#include "geoconvex/ext_real.hpp"

using namespace geoconvex;

TEST(ExtReal, RejectsNegativeAndNan) {
  EXPECT_THROW(ExtReal(-1.0), Error);
  EXPECT_THROW(ExtReal(std::nan("")), Error);
  EXPECT_NO_THROW(ExtReal(0.0));
  EXPECT_NO_THROW((void)ExtReal(kInf));
}

TEST(ExtReal, InfinityArithmetic) {
  const ExtReal inf = ExtReal::infinity();
  EXPECT_TRUE((inf + 1.0).is_infinite());
  EXPECT_TRUE((2.0 * inf).is_infinite());
  EXPECT_EQ((0.0 * inf).value(), 0.0);
  EXPECT_EQ(inf.reciprocal().value(), 0.0);
  EXPECT_TRUE(ExtReal(0.0).reciprocal().is_infinite());
  EXPECT_DOUBLE_EQ(ExtReal(4.0).reciprocal().value(), 0.25);
}

TEST(ExtReal, ConvexCombinationUsesZeroTimesInfinity) {
  EXPECT_EQ(convex_combination(kInf, 0.0, 1.0), 0.0);
  EXPECT_EQ(convex_combination(3.0, kInf, 0.0), 3.0);
  EXPECT_EQ(convex_combination(kInf, 0.0, 0.5), kInf);
  EXPECT_DOUBLE_EQ(convex_combination(2.0, 4.0, 0.25), 2.5);
}

TEST(ExtReal, PMeanSpecialExponents) {
  EXPECT_DOUBLE_EQ(p_mean(2.0, 8.0, {0.0, 0.5}).value(), 4.0);
  EXPECT_DOUBLE_EQ(p_mean(2.0, 6.0, {1.0, 0.5}).value(), 4.0);
  EXPECT_DOUBLE_EQ(p_mean(2.0, 6.0, {-1.0, 0.5}).value(), 3.0);
  EXPECT_DOUBLE_EQ(p_mean(2.0, 6.0, {kInf, 0.5}).value(), 6.0);
  EXPECT_DOUBLE_EQ(p_mean(2.0, 6.0, {-kInf, 0.5}).value(), 2.0);
  EXPECT_DOUBLE_EQ(p_mean(2.0, 6.0, {-1.0, 0.0}).value(), 2.0);
  EXPECT_DOUBLE_EQ(p_mean(2.0, 6.0, {-1.0, 1.0}).value(), 6.0);
}

TEST(ExtReal, PMeanWithInfiniteOperand) {
  // The harmonic mean with +inf behaves like the radial mean of an unbounded direction.
  EXPECT_DOUBLE_EQ(p_mean(2.0, kInf, {-1.0, 0.5}).value(), 4.0);
  EXPECT_TRUE(p_mean(2.0, kInf, {1.0, 0.5}).is_infinite());
  EXPECT_EQ(p_mean(0.0, 5.0, {-1.0, 0.5}).value(), 0.0);
  EXPECT_EQ(p_mean(0.0, 5.0, {0.0, 0.5}).value(), 0.0);
}

TEST(ExtReal, PMeanIsMonotoneInP) {
  const double a = 1.3;
  const double b = 7.1;
  double prev = 0.0;
  for (double p : {-kInf, -4.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0, kInf}) {
    const double m = p_mean(a, b, {p, 0.3}).value();
    EXPECT_GE(m, prev - 1e-14);
    prev = m;
  }
}

TEST(Tolerances, Validate) {
  EXPECT_NO_THROW(kDefaultTolerances.validate());
  Tolerances bad;
  bad.rel_tol = -1.0;
  EXPECT_THROW(bad.validate(), Error);
}
