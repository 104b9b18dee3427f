#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "signrmt/ensembles.hpp"
#include "signrmt/numeric.hpp"
#include "signrmt/pairing.hpp"
#include "signrmt/spectra.hpp"

namespace signrmt {

/// E(eps_{i1 i2} eps_{i2 i3} ... eps_{i_{2k} i1}) for independent symmetric
/// signs with Prob(+1) = p. Factors are grouped by unordered index pair; an
/// odd group contributes 2p - 1 and an even group 1.
double epsilon_weight(std::span<const std::size_t> cycle, double p);
Rational epsilon_weight(std::span<const std::size_t> cycle, const Rational& p);

/// Number of unordered index pairs used an odd number of times by the cycle.
int odd_pair_count(std::span<const std::size_t> cycle);

enum class XMethod { ExactOne, MonteCarloVolume };

std::string_view to_string(XMethod m);

/// One line of a prediction: either a census row (label = m, count =
/// Cr_{2k,2m}) or a rotation class (label = class index, count = orbit size).
struct PredictionTerm {
  int label = 0;
  int crossing_vertices = 0;  // exponent of (2p - 1)
  std::string count;          // decimal
  double weight = 0.0;        // (2p - 1)^crossing_vertices
  double x = 1.0;
  std::optional<double> x_ci;
  XMethod x_method = XMethod::ExactOne;
  double contribution = 0.0;  // count * x * weight
};

struct SignedMomentPrediction {
  int k = 0;          // the moment is M_{2k}
  int order = 0;      // 2k, or the odd order of a vanishing moment
  double p = 1.0;
  bool supported = true;
  std::string note;   // why a prediction is missing, or what it assumes
  double value = 0.0;
  std::optional<double> ci;  // 99% half-width when any x(c) is sampled
  std::string method;
  std::vector<PredictionTerm> decomposition;
};

/// M_{2k}(p) = sum_m Cr_{2k,2m} (2p-1)^{2m}, exact. Uses the closed forms
/// when k <= 5 and the exhaustive census beyond (k <= cap).
Rational signed_moment_palindromic_exact(int k, const Rational& p,
                                         int cap = kDefaultEnumerationCap);
SignedMomentPrediction signed_moment_palindromic(int k, double p,
                                                 int cap = kDefaultEnumerationCap);

/// Cr_{2k,2m} for m = 0..k, from closed forms where they cover every m.
std::vector<BigInt> crossing_counts(int k, int cap = kDefaultEnumerationCap);

struct VolumeEstimate {
  double estimate = 0.0;
  double ci_half_width = 0.0;  // 99%
  std::uint64_t samples = 0;
  std::uint64_t accepted = 0;
};

/// Monte Carlo volume of the Toeplitz pairing polytope: draw a start
/// u in [0, 1] and one difference y in [-1, 1] per edge, walk the cycle
/// subtracting y at the edge's first vertex and adding it at the second,
/// and accept when every visited index stays in [0, 1]. The estimate is
/// 2^k times the acceptance rate. Requires samples >= 10^4.
VolumeEstimate toeplitz_x(const Pairing& c, std::uint64_t samples, std::uint64_t seed,
                          unsigned workers = 0);

inline constexpr std::uint64_t kMinVolumeSamples = 10000;

/// sum over rotation classes of multiplicity * x(c) * (2p-1)^{e(c)}, with
/// x = 1 for non-crossing classes and Monte Carlo otherwise. The 99%
/// half-widths of the classes are combined in quadrature.
SignedMomentPrediction signed_moment_toeplitz(int k, double p, std::uint64_t samples,
                                              std::uint64_t seed, unsigned workers = 0,
                                              int cap = kDefaultEnumerationCap);

inline constexpr double kBruteForceBudget = 1e7;

/// Exact E(M_{order,N}) = N^{-(order/2+1)} sum over index cycles of
/// E(eps product) E(b product) with base moments tabulated per law.
/// Throws InvalidArgument when N^order exceeds the budget.
double brute_force_finite_moment(std::size_t n_dim, int order, EnsembleKind kind, double p,
                                 BaseDistribution base, int palindromicity = 0,
                                 unsigned workers = 0);

struct PredictionOptions {
  std::uint64_t mc_samples = 200000;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  int cap = kDefaultEnumerationCap;
};

/// Limit of the rescaled moment of the given order for an ensemble. Odd
/// orders give 0. Full symmetric gives C_k at every p (signs do not change
/// the law of a symmetric entry). Singly palindromic uses the census,
/// Toeplitz the sampled volumes. Highly palindromic ensembles are only
/// predicted at p = 1/2; elsewhere `supported` is false.
SignedMomentPrediction predict_moment(EnsembleKind kind, int palindromicity, int order, double p,
                                      const PredictionOptions& options = {});

/// Fills report.theory for every order the ensemble supports.
void attach_theory(MomentReport& report, const PredictionOptions& options = {});

}  // namespace signrmt
