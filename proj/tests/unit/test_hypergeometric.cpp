#include <gtest/gtest.h>

#include <cmath>

#include "signrmt/errors.hpp"
#include "signrmt/hypergeometric.hpp"

using namespace signrmt;

TEST(Hyp2f1, EqualParametersGiveBinomialSeries) {
  // 2F1(a, b; b; z) = (1 - z)^{-a}.
  EXPECT_NEAR(hyp2f1_at_minus_one(1.0, 2.5, 2.5), 0.5, 1e-14);
  EXPECT_NEAR(hyp2f1_at_minus_one(2.0, 0.75, 0.75), 0.25, 1e-14);
}

TEST(Hyp2f1, SeriesAgainstLogarithm) {
  // 2F1(1, 1; 2; z) = -log(1 - z) / z.
  EXPECT_NEAR(hyp2f1_series(1.0, 1.0, 2.0, 0.5), 2.0 * std::log(2.0), 1e-14);
  // Terminating: 2F1(-2, 1; 1; z) = (1 - z)^2.
  EXPECT_NEAR(hyp2f1_series(-2.0, 1.0, 1.0, 3.0), 4.0, 1e-14);
}

TEST(Hyp2f1, RoutesAgreeOnBothFamilies) {
  for (int k = 2; k <= 20; ++k) {
    const double a = hyp2f1_at_minus_one(1.0, 0.5 + k, 1.5, PfaffRoute::ScaleA);
    const double b = hyp2f1_at_minus_one(1.0, 0.5 + k, 1.5, PfaffRoute::ScaleB);
    EXPECT_NEAR(a, b, 1e-12 * std::abs(b)) << k;
  }
  // The (1, 3/2, 5/2-k) family terminates under ScaleA; Auto picks it.
  for (int k = 3; k <= 20; ++k) {
    EXPECT_EQ(hyp2f1_at_minus_one(1.0, 1.5, 2.5 - k),
              hyp2f1_at_minus_one(1.0, 1.5, 2.5 - k, PfaffRoute::ScaleA));
  }
}

TEST(Hyp2f1, Errors) {
  EXPECT_THROW(hyp2f1_at_minus_one(1.0, 1.5, 0.0), PoleError);
  EXPECT_THROW(hyp2f1_at_minus_one(1.0, 1.5, -3.0), PoleError);
  EXPECT_THROW(hyp2f1_at_minus_one(NAN, 1.5, 2.0), InvalidArgument);
}
