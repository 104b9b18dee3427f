#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "signrmt/numeric.hpp"
#include "signrmt/pairing.hpp"
#include "signrmt/rng.hpp"

namespace signrmt {

// Statistics of Y_{2k}, the number of vertices lying on a crossing edge of
// a uniformly random pairing of 2k circle vertices.

enum class CrossingMethod { Enumeration, ExactSum, Hypergeometric, MonteCarlo };

std::string_view to_string(CrossingMethod m);

struct CrossingStatsReport {
  int k = 0;
  CrossingMethod method = CrossingMethod::ExactSum;
  std::optional<Rational> mean_exact;
  double mean_float = 0.0;          // the method's own estimate
  double mean_hypergeometric = 0.0;
  double mean_asymptotic = 0.0;     // 2k - 2 - 2/k
  std::optional<Rational> variance_exact;
  double variance = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double std_error = 0.0;           // of the mean (Monte Carlo only)
};

/// E(Y_{2k}) = 2k(2k-3)/(2k-1) - 2k/(2k-1) * sum_{m=2}^{k-1}
///   binom(k-2, m-2) / binom(2k-3, 2m-3). Requires k >= 2.
Rational mean_crossing_exact(int k);

/// Terms binom(k-2, m-2) / binom(2k-3, 2m-3) of the sum above, m = 2..k-1.
std::vector<Rational> mean_crossing_sum_terms(int k);

/// (2k/(2k-1)) (2k - 2 - F1/(2k-3) - (2k-1) F2) with F1 = 2F1(1, 3/2; 5/2-k; -1)
/// and F2 = 2F1(1, 1/2+k; 3/2; -1), each via Pfaff transformation.
double mean_crossing_hypergeometric(int k);

/// 2k - 2 - 2/k.
double mean_crossing_asymptotic(int k);

struct ExactMoments {
  Rational mean;
  Rational variance;
};

/// Mean and variance of Y_{2k} over all (2k-1)!! pairings.
ExactMoments crossing_moments_enumerated(int k, int cap = kDefaultEnumerationCap,
                                         unsigned workers = 0);

/// N_{k,m,p,q}: completions of the fixed non-crossing edges {1,m}, {p,q}
/// (1 < m < p < q <= 2k, 1-based labels) in which at most one of the two
/// edges is crossed.
BigInt n_kmpq(int k, int m, int p, int q);

struct ChordCrossingProbs {
  Rational p_a;  // two distinct edges cross each other
  Rational p_b;  // both crossed, given they do not cross each other
};

/// p_a from its closed-form sum (always 1/3) and p_b from the N_{k,m,p,q}
/// sum. O(k^3) big-integer work. Requires k >= 3.
ChordCrossingProbs chord_crossing_probs(int k);

/// p_a alone; cheap. Requires k >= 2.
Rational chord_crossing_pa(int k);

/// 1 - 3/k - 3/(2k^2).
double pb_asymptotic(int k);

/// Var(Y_{2k}) = 4k p_cross + (4k^2 - 4k)(p_a + (1 - p_a) p_b) - E(Y)^2.
Rational variance_exact(int k);

/// Uniform random matchings by Fisher-Yates shuffling 2k labels and
/// pairing consecutive entries. Trials run in fixed blocks, each with its
/// own derived stream, merged in block order; the result does not depend
/// on `workers`.
CrossingStatsReport monte_carlo_crossing(int k, std::uint64_t trials, std::uint64_t seed,
                                         unsigned workers = 0);

/// Draws one uniform matching into `partner` (resized to 2k).
void sample_uniform_pairing(int k, StreamRng& rng, std::vector<int>& labels,
                            std::vector<int>& partner);

/// Exact mean, hypergeometric mean, asymptotic mean and (optionally)
/// exact variance in one report.
CrossingStatsReport exact_crossing_report(int k, bool with_variance);

}  // namespace signrmt
