#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <vector>

#include "signrmt/numeric.hpp"

using namespace signrmt;

TEST(Numeric, BinomialIsTotal) {
  EXPECT_EQ(binomial(6, 1), 6);
  EXPECT_EQ(binomial(12, 2), 66);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Numeric, DoubleFactorial) {
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(5), 15);
  EXPECT_EQ(double_factorial(13), 135135);
  // (2k-1)!! first leaves 64 bits at k = 18.
  const BigInt u64_max(std::numeric_limits<std::uint64_t>::max());
  EXPECT_LT(double_factorial(33), u64_max);
  EXPECT_GT(double_factorial(35), u64_max);
}

TEST(Numeric, Catalan) {
  EXPECT_EQ(catalan(0), 1);
  EXPECT_EQ(catalan(3), 5);
  EXPECT_EQ(catalan(5), 42);
  EXPECT_EQ(catalan(7), 429);
}

TEST(Numeric, MatchingCount) {
  EXPECT_EQ(matching_count(0), 1);
  EXPECT_EQ(matching_count(3), 0);
  EXPECT_EQ(matching_count(6), 15);
}

TEST(Numeric, SignedWeightAndFormatting) {
  EXPECT_EQ(signed_weight(Rational(3, 4), 4), Rational(1, 16));
  EXPECT_EQ(signed_weight(Rational(1, 2), 0), 1);
  EXPECT_EQ(signed_weight(Rational(1, 2), 2), 0);
  EXPECT_EQ(to_string(Rational(4, 3)), "4/3");
  EXPECT_EQ(to_string(Rational(6, 3)), "2");
  EXPECT_EQ(exact_rational(0.75), Rational(3, 4));
  EXPECT_NE(exact_rational(0.6), Rational(3, 5));
  EXPECT_DOUBLE_EQ(to_double(Rational(16, 5)), 3.2);
}

TEST(Numeric, PairwiseSumMatchesExactForSmallIntegers) {
  std::vector<double> v;
  for (int i = 1; i <= 1000; ++i) v.push_back(i);
  EXPECT_EQ(pairwise_sum(v), 500500.0);
  EXPECT_EQ(pairwise_sum(std::vector<double>{}), 0.0);
}
