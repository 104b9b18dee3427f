#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "signrmt/ensembles.hpp"
#include "signrmt/errors.hpp"
#include "signrmt/json_io.hpp"
#include "signrmt/numeric.hpp"

using namespace signrmt;

namespace {

EnsembleSpec make(EnsembleKind kind, std::size_t n, int degree = 0, std::uint64_t seed = 3) {
  EnsembleSpec s;
  s.kind = kind;
  s.dimension = n;
  s.palindromicity = degree;
  s.seed = seed;
  return s;
}

}  // namespace

TEST(Spec, Validation) {
  EXPECT_THROW(make(EnsembleKind::Toeplitz, 0).validate(), InvalidArgument);
  auto s = make(EnsembleKind::Toeplitz, 8);
  s.p = 0.4;
  EXPECT_THROW(s.validate(), InvalidArgument);
  s.p = 1.01;
  EXPECT_THROW(s.validate(), InvalidArgument);
  EXPECT_THROW(make(EnsembleKind::HighlyPalindromic, 12, 3).validate(), InvalidArgument);
  EXPECT_THROW(make(EnsembleKind::HighlyPalindromic, 12, 0).validate(), InvalidArgument);
  EXPECT_NO_THROW(make(EnsembleKind::HighlyPalindromic, 16, 3).validate());
  EXPECT_THROW(sample_matrix(make(EnsembleKind::HighlyPalindromic, 6, 2)), InvalidArgument);
}

TEST(Sample, ToeplitzIsConstantAlongDiagonals) {
  const auto a = sample_matrix(make(EnsembleKind::Toeplitz, 17));
  for (std::size_t i = 0; i < 17; ++i) {
    for (std::size_t j = 0; j < 17; ++j) {
      EXPECT_EQ(a(i, j), a(0, i > j ? i - j : j - i));
    }
  }
}

TEST(Sample, PalindromicFirstRow) {
  const std::size_t n = 10;
  const auto a = sample_matrix(make(EnsembleKind::PalindromicToeplitz, n));
  for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(a(0, j), a(0, n - 1 - j));
  std::set<double> distinct;
  for (std::size_t j = 0; j < n; ++j) distinct.insert(a(0, j));
  EXPECT_EQ(distinct.size(), n / 2);
}

TEST(Sample, HighlyPalindromicRowIsRepeatedPalindrome) {
  const std::size_t n = 24;
  const int degree = 2;
  const std::size_t len = n >> degree;
  const auto a = sample_matrix(make(EnsembleKind::HighlyPalindromic, n, degree));
  for (std::size_t j = 0; j < n; ++j) {
    EXPECT_EQ(a(0, j), a(0, j % len));
    EXPECT_EQ(a(0, j % len), a(0, len - 1 - j % len));
  }
}

TEST(Sample, SymmetricAndReproducible) {
  for (auto kind : {EnsembleKind::FullSymmetric, EnsembleKind::Toeplitz,
                    EnsembleKind::PalindromicToeplitz, EnsembleKind::HighlyPalindromic}) {
    const auto spec = make(kind, 16, kind == EnsembleKind::HighlyPalindromic ? 1 : 0);
    const auto a = sample_matrix(spec);
    EXPECT_TRUE(a.is_symmetric());
    EXPECT_EQ(a, sample_matrix(spec));
    auto other = spec;
    other.seed += 1;
    EXPECT_NE(a, sample_matrix(other));
  }
  const auto f = sample_matrix(make(EnsembleKind::FullSymmetric, 2));
  EXPECT_EQ(f(0, 1), f(1, 0));
}

TEST(Occurrences, HighlyPalindromicFirstRow) {
  const auto counts = first_row_occurrences(make(EnsembleKind::HighlyPalindromic, 8, 1));
  ASSERT_EQ(counts.size(), 2u);
  for (const auto& [id, c] : counts) EXPECT_EQ(c, 4u);
  for (int degree = 1; degree <= 3; ++degree) {
    for (std::size_t len : {4u, 6u, 10u}) {
      const auto spec = make(EnsembleKind::HighlyPalindromic, len << degree, degree);
      for (const auto& [id, c] : first_row_occurrences(spec)) {
        EXPECT_EQ(c, std::size_t{2} << degree);
      }
      EXPECT_EQ(first_row_occurrences(spec).size(), variable_count(spec));
    }
  }
}

TEST(Occurrences, PerRowCountDoesNotGrowWithN) {
  for (int degree = 1; degree <= 2; ++degree) {
    std::size_t first = 0;
    for (std::size_t len : {8u, 16u, 32u}) {
      const auto m = max_row_occurrences(make(EnsembleKind::HighlyPalindromic, len << degree, degree));
      EXPECT_LE(m, std::size_t{4} << degree);
      if (first == 0) first = m;
      EXPECT_EQ(m, first);
    }
  }
  EXPECT_EQ(max_row_occurrences(make(EnsembleKind::Toeplitz, 12)), 2u);
  EXPECT_EQ(max_row_occurrences(make(EnsembleKind::FullSymmetric, 12)), 1u);
}

TEST(SignMask, Degenerate) {
  const auto e = sample_sign_mask(20, 1.0, 4);
  for (std::size_t i = 0; i < 20; ++i) {
    for (std::size_t j = 0; j < 20; ++j) EXPECT_EQ(e(i, j), 1);
  }
  EXPECT_THROW(sample_sign_mask(4, 0.3, 1), InvalidArgument);
}

TEST(SignMask, MeanIsTwoPMinusOne) {
  const std::size_t n = 200;
  const double slots = n * (n + 1) / 2.0;
  for (double p : {0.5, 0.75, 0.9}) {
    const auto e = sample_sign_mask(n, p, 11);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        ASSERT_TRUE(e(i, j) == 1 || e(i, j) == -1);
        ASSERT_EQ(e(i, j), e(j, i));
        sum += e(i, j);
      }
    }
    const double sd = std::sqrt(1.0 - (2 * p - 1) * (2 * p - 1));
    EXPECT_LE(std::abs(sum / slots - (2 * p - 1)), 5.0 * sd / std::sqrt(slots)) << p;
  }
}

TEST(Hadamard, Properties) {
  const auto a = sample_matrix(make(EnsembleKind::FullSymmetric, 9));
  EXPECT_EQ(hadamard(a, SignMatrix(9)), a);
  const auto e = sample_sign_mask(9, 0.5, 2);
  const auto b = hadamard(a, e);
  EXPECT_EQ(hadamard(b, e), a);
  EXPECT_TRUE(b.is_symmetric());
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) EXPECT_EQ(b(i, j), e(i, j) == 1 ? a(i, j) : -a(i, j));
  }
  EXPECT_THROW(hadamard(a, SignMatrix(8)), InvalidArgument);
}

TEST(Base, TabulatedMoments) {
  EXPECT_EQ(base_moment(BaseDistribution::StandardGaussian, 4), 3.0);
  EXPECT_EQ(base_moment(BaseDistribution::StandardGaussian, 6), 15.0);
  EXPECT_EQ(base_moment(BaseDistribution::Rademacher, 8), 1.0);
  EXPECT_DOUBLE_EQ(base_moment(BaseDistribution::UniformScaled, 4), 9.0 / 5.0);
  EXPECT_EQ(base_moment(BaseDistribution::UniformScaled, 3), 0.0);
  EXPECT_EQ(base_moment(BaseDistribution::Rademacher, 0), 1.0);
}

TEST(Base, SampleMeanAndVariance) {
  const int n = 1000000;
  for (auto base : {BaseDistribution::StandardGaussian, BaseDistribution::Rademacher,
                    BaseDistribution::UniformScaled}) {
    StreamRng rng(7, static_cast<std::uint64_t>(base));
    std::vector<double> x(n), x2(n);
    for (int i = 0; i < n; ++i) {
      x[static_cast<std::size_t>(i)] = sample_base(base, rng);
      x2[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    }
    const double mean = pairwise_sum(x) / n;
    const double second = pairwise_sum(x2) / n;
    const double m4 = base_moment(base, 4);
    EXPECT_LE(std::abs(mean), 5.0 / std::sqrt(n)) << to_string(base);
    EXPECT_LE(std::abs(second - 1.0), 5.0 * std::sqrt((m4 - 1.0) / n) + 1e-12) << to_string(base);
  }
}

TEST(Io, SpecRoundTripAndCsv) {
  auto spec = make(EnsembleKind::HighlyPalindromic, 16, 2, 77);
  spec.p = 0.75;
  spec.base = BaseDistribution::UniformScaled;
  const auto back = spec_from_json(to_json(spec));
  EXPECT_EQ(back.kind, spec.kind);
  EXPECT_EQ(back.dimension, 16u);
  EXPECT_EQ(back.palindromicity, 2);
  EXPECT_EQ(back.p, 0.75);
  EXPECT_EQ(back.base, spec.base);
  EXPECT_EQ(back.seed, 77u);
  EXPECT_THROW(spec_from_json(Json{{"kind", "circulant"}, {"N", 4}}), InvalidArgument);
  EXPECT_THROW(spec_from_json(Json{{"N", 4}}), InvalidArgument);

  std::ostringstream out;
  write_csv(out, sample_matrix(make(EnsembleKind::Toeplitz, 3)));
  const std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
  EXPECT_EQ(std::count(text.begin(), text.end(), ','), 6);
}

TEST(Io, ParseNames) {
  EXPECT_EQ(parse_ensemble_kind("toeplitz"), EnsembleKind::Toeplitz);
  EXPECT_EQ(parse_base_distribution("rademacher"), BaseDistribution::Rademacher);
  EXPECT_THROW(parse_base_distribution("cauchy"), InvalidArgument);
}
