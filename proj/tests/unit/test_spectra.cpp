#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "signrmt/errors.hpp"
#include "signrmt/spectra.hpp"
#include "signrmt/verify.hpp"

using namespace signrmt;

namespace {

EnsembleSpec make(EnsembleKind kind, std::size_t n, double p, std::uint64_t seed) {
  EnsembleSpec s;
  s.kind = kind;
  s.dimension = n;
  s.palindromicity = kind == EnsembleKind::HighlyPalindromic ? 1 : 0;
  s.p = p;
  s.seed = seed;
  return s;
}

const EnsembleKind kAllKinds[] = {EnsembleKind::FullSymmetric, EnsembleKind::Toeplitz,
                                  EnsembleKind::PalindromicToeplitz,
                                  EnsembleKind::HighlyPalindromic};

}  // namespace

TEST(Eigen, DiagonalAndSwap) {
  SymmetricMatrix d(4);
  d.set(0, 0, 3.0);
  d.set(1, 1, -1.0);
  d.set(2, 2, 2.0);
  d.set(3, 3, 0.5);
  EXPECT_EQ(eigenvalues(d).eigenvalues, (std::vector<double>{-1.0, 0.5, 2.0, 3.0}));

  SymmetricMatrix swap(2);
  swap.set(0, 1, 1.0);
  const auto s = eigenvalues(swap).eigenvalues;
  EXPECT_NEAR(s[0], -1.0, 1e-15);
  EXPECT_NEAR(s[1], 1.0, 1e-15);
}

TEST(Eigen, RejectsNonFinite) {
  SymmetricMatrix a(3);
  a.set(0, 2, std::numeric_limits<double>::quiet_NaN());
  EXPECT_THROW(eigenvalues(a), InvalidArgument);
  a.set(0, 2, std::numeric_limits<double>::infinity());
  EXPECT_THROW(eigenpairs(a), InvalidArgument);
}

TEST(Eigen, ReconstructionResidual) {
  const auto a = simulation_sample(make(EnsembleKind::FullSymmetric, 48, 0.75, 5), 0);
  const auto pairs = eigenpairs(a);
  const std::size_t n = a.size();
  double norm = 0.0;
  for (double v : a.data()) norm += v * v;
  norm = std::sqrt(norm);
  for (std::size_t c = 0; c < n; c += 7) {
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double av = 0.0;
      for (std::size_t j = 0; j < n; ++j) av += a(i, j) * pairs.vectors[c * n + j];
      const double r = av - pairs.values[c] * pairs.vectors[c * n + i];
      residual += r * r;
    }
    EXPECT_LE(std::sqrt(residual), 1e-8 * norm);
  }
}

TEST(Eigen, TraceIdentityEveryKind) {
  for (auto kind : kAllKinds) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto a = simulation_sample(make(kind, 64, seed % 2 ? 0.75 : 1.0, seed), 0);
      const auto traces = verify::trace_powers(a, 8);
      const auto spectrum = eigenvalues(a);
      for (int k = 2; k <= 8; k += 2) {
        double sum = 0.0;
        for (double l : spectrum.eigenvalues) sum += std::pow(l, k);
        EXPECT_LE(std::abs(sum - traces[static_cast<std::size_t>(k)]),
                  1e-8 * std::abs(traces[static_cast<std::size_t>(k)]));
      }
      // Rescaled moment is the normalized trace.
      for (int k = 0; k <= 8; ++k) {
        const double expected =
            traces[static_cast<std::size_t>(k)] / std::pow(64.0, k / 2.0 + 1.0);
        EXPECT_NEAR(rescaled_moment(spectrum, k), expected,
                    1e-8 * std::max(1.0, std::abs(expected)));
      }
    }
  }
}

TEST(Moments, ZerothIsOneAndSecondNearOne) {
  for (auto kind : kAllKinds) {
    for (double p : {0.5, 0.75, 1.0}) {
      const auto r = ensemble_moments(make(kind, 256, p, 13), 20, 3);
      EXPECT_EQ(r.mean[0], 1.0);
      EXPECT_EQ(r.std_error[0], 0.0);
      EXPECT_LE(std::abs(r.mean[2] - 1.0), 5 * r.std_error[2]) << to_string(kind) << " " << p;
      EXPECT_LE(std::abs(r.mean[1]), 5 * r.std_error[1]);
      EXPECT_LE(std::abs(r.mean[3]), 5 * r.std_error[3]);
    }
  }
}

TEST(Moments, WorkerIndependent) {
  const auto spec = make(EnsembleKind::PalindromicToeplitz, 128, 0.75, 21);
  const auto a = simulate(spec, 6, 6, HistogramSpec{20, -3, 3}, 1);
  const auto b = simulate(spec, 6, 6, HistogramSpec{20, -3, 3}, 3);
  EXPECT_EQ(a.moments.mean, b.moments.mean);
  EXPECT_EQ(a.moments.std_error, b.moments.std_error);
  EXPECT_EQ(a.histogram->counts, b.histogram->counts);
}

TEST(Moments, Preconditions) {
  const auto spec = make(EnsembleKind::Toeplitz, 8, 1.0, 1);
  EXPECT_THROW(ensemble_moments(spec, 1, 4), InvalidArgument);
  EXPECT_THROW(spectral_histogram(spec, 2, HistogramSpec{0, -1, 1}), InvalidArgument);
  EXPECT_THROW(spectral_histogram(spec, 2, HistogramSpec{4, 1, 1}), InvalidArgument);
}

TEST(Histogram, NormalizedAndSemicircleSupport) {
  const auto h = spectral_histogram(make(EnsembleKind::PalindromicToeplitz, 1024, 0.5, 4), 4,
                                    HistogramSpec{88, -4.4, 4.4});
  double integral = 0.0;
  double outside = 0.0;
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    const double width = h.edges[b + 1] - h.edges[b];
    integral += h.density[b] * width;
    const double mid = 0.5 * (h.edges[b] + h.edges[b + 1]);
    if (std::abs(mid) > 2.2) outside += h.density[b] * width;
  }
  EXPECT_NEAR(integral, 1.0, 1e-12);
  EXPECT_EQ(h.in_range + h.below + h.above, 4u * 1024u);
  EXPECT_LT(outside, 0.005);
}

TEST(Histogram, ToeplitzHasMassBeyondTwo) {
  const auto h = spectral_histogram(make(EnsembleKind::Toeplitz, 1024, 1.0, 4), 4,
                                    HistogramSpec{80, -8, 8});
  double outside = 0.0;
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    if (h.edges[b] >= 2.0 || h.edges[b + 1] <= -2.0) outside += static_cast<double>(h.counts[b]);
  }
  EXPECT_GT(outside / static_cast<double>(h.in_range), 0.01);
}
