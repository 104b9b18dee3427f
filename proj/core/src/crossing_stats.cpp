#include "signrmt/crossing_stats.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "signrmt/census.hpp"
#include "signrmt/errors.hpp"
#include "signrmt/hypergeometric.hpp"
#include "signrmt/parallel.hpp"

namespace signrmt {

std::string_view to_string(CrossingMethod m) {
  switch (m) {
    case CrossingMethod::Enumeration: return "enumeration";
    case CrossingMethod::ExactSum: return "exact_sum";
    case CrossingMethod::Hypergeometric: return "hypergeometric";
    case CrossingMethod::MonteCarlo: return "monte_carlo";
  }
  return "unknown";
}

namespace {

void require_k_at_least(int k, int lo, const char* what) {
  if (k < lo) {
    throw InvalidArgument(std::string(what) + ": k must be >= " + std::to_string(lo));
  }
}

}  // namespace

std::vector<Rational> mean_crossing_sum_terms(int k) {
  require_k_at_least(k, 2, "mean_crossing_sum_terms");
  std::vector<Rational> terms;
  for (int m = 2; m <= k - 1; ++m) {
    terms.emplace_back(binomial(k - 2, m - 2), binomial(2 * k - 3, 2 * m - 3));
  }
  return terms;
}

Rational mean_crossing_exact(int k) {
  require_k_at_least(k, 2, "mean_crossing_exact");
  Rational sum = 0;
  for (const Rational& t : mean_crossing_sum_terms(k)) sum += t;
  const Rational two_k = 2 * k;
  return two_k * Rational(2 * k - 3, 2 * k - 1) - two_k / Rational(2 * k - 1) * sum;
}

double mean_crossing_hypergeometric(int k) {
  require_k_at_least(k, 2, "mean_crossing_hypergeometric");
  const double kk = k;
  const double f1 = hyp2f1_at_minus_one(1.0, 1.5, 2.5 - kk);
  const double f2 = hyp2f1_at_minus_one(1.0, 0.5 + kk, 1.5);
  return (2.0 * kk / (2.0 * kk - 1.0)) *
         (2.0 * kk - 2.0 - f1 / (2.0 * kk - 3.0) - (2.0 * kk - 1.0) * f2);
}

double mean_crossing_asymptotic(int k) {
  require_k_at_least(k, 1, "mean_crossing_asymptotic");
  return 2.0 * k - 2.0 - 2.0 / k;
}

ExactMoments crossing_moments_enumerated(int k, int cap, unsigned workers) {
  const CrossingCensus census = crossing_census(k, cap, workers);
  BigInt sum_y = 0;
  BigInt sum_y2 = 0;
  for (int m = 0; m <= k; ++m) {
    const BigInt y = 2 * m;
    sum_y += census.cr(m) * y;
    sum_y2 += census.cr(m) * y * y;
  }
  ExactMoments out;
  out.mean = Rational(sum_y, census.pairing_count);
  out.variance = Rational(sum_y2, census.pairing_count) - out.mean * out.mean;
  return out;
}

BigInt n_kmpq(int k, int m, int p, int q) {
  require_k_at_least(k, 3, "n_kmpq");
  if (!(1 < m && m < p && p < q && q <= 2 * k)) {
    throw InvalidArgument("n_kmpq: need 1 < m < p < q <= 2k");
  }
  const int left = m - 2;
  const int middle = p - m - 1 + 2 * k - q;
  const int right = q - p - 1;
  if (left == 0 || right == 0) return double_factorial(2 * k - 5);
  return matching_count(left + middle) * matching_count(right) +
         matching_count(right + middle) * matching_count(left) -
         matching_count(left) * matching_count(middle) * matching_count(right);
}

Rational chord_crossing_pa(int k) {
  require_k_at_least(k, 2, "chord_crossing_pa");
  // Partner m of vertex 1 (prob 1/(2k-1)); the other edge straddles it with
  // probability 2 (m-2)/(2k-2) * (2k-m)/(2k-3).
  Rational sum = 0;
  for (int m = 2; m <= 2 * k; ++m) {
    sum += Rational(2 * (m - 2) * (2 * k - m),
                    BigInt(2 * k - 1) * BigInt(2 * k - 2) * BigInt(2 * k - 3));
  }
  return sum;
}

namespace {

// p_b for k >= 2. Groups the (m, p, q) triples by the region sizes: with
// L = m-2 and R = q-p-1 fixed there are M+1 placements of p.
Rational pb_exact(int k) {
  const int free_vertices = 2 * k - 4;
  std::vector<BigInt> pm(static_cast<std::size_t>(free_vertices + 1));
  for (int x = 0; x <= free_vertices; ++x) pm[static_cast<std::size_t>(x)] = matching_count(x);
  auto P = [&](int x) -> const BigInt& { return pm[static_cast<std::size_t>(x)]; };
  const BigInt full = double_factorial(2 * k - 5);

  BigInt total = 0;
  for (int left = 0; left <= free_vertices; ++left) {
    for (int right = 0; left + right <= free_vertices; ++right) {
      const int middle = free_vertices - left - right;
      BigInt n;
      if (left == 0 || right == 0) {
        n = full;
      } else {
        n = P(left + middle) * P(right) + P(right + middle) * P(left) - P(left) * P(middle) * P(right);
      }
      total += n * (middle + 1);
    }
  }
  return 1 - Rational(total, binomial(2 * k - 1, 3) * full);
}

}  // namespace

ChordCrossingProbs chord_crossing_probs(int k) {
  require_k_at_least(k, 3, "chord_crossing_probs");
  return {chord_crossing_pa(k), pb_exact(k)};
}

double pb_asymptotic(int k) {
  require_k_at_least(k, 1, "pb_asymptotic");
  const double kk = k;
  return 1.0 - 3.0 / kk - 3.0 / (2.0 * kk * kk);
}

Rational variance_exact(int k) {
  require_k_at_least(k, 2, "variance_exact");
  const Rational mean = mean_crossing_exact(k);
  const Rational p_cross = mean / (2 * k);
  const Rational pa = chord_crossing_pa(k);
  const Rational pb = pb_exact(k);
  const BigInt kk = k;
  const Rational second = 4 * kk * p_cross + (4 * kk * kk - 4 * kk) * (pa + (1 - pa) * pb);
  return second - mean * mean;
}

void sample_uniform_pairing(int k, StreamRng& rng, std::vector<int>& labels,
                            std::vector<int>& partner) {
  const auto n = static_cast<std::size_t>(2 * k);
  labels.resize(n);
  std::iota(labels.begin(), labels.end(), 0);
  for (std::size_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i + 1));
    std::swap(labels[i], labels[j]);
  }
  partner.resize(n);
  for (std::size_t i = 0; i < n; i += 2) {
    partner[static_cast<std::size_t>(labels[i])] = labels[i + 1];
    partner[static_cast<std::size_t>(labels[i + 1])] = labels[i];
  }
}

CrossingStatsReport monte_carlo_crossing(int k, std::uint64_t trials, std::uint64_t seed,
                                         unsigned workers) {
  require_k_at_least(k, 2, "monte_carlo_crossing");
  if (trials < 1) throw InvalidArgument("monte_carlo_crossing: trials must be >= 1");
  constexpr std::uint64_t kBlock = 1024;
  const std::uint64_t blocks = (trials + kBlock - 1) / kBlock;
  struct Sums {
    std::uint64_t y = 0;
    std::uint64_t y2 = 0;
  };
  std::vector<Sums> partial(static_cast<std::size_t>(blocks));
  parallel_for(static_cast<std::size_t>(blocks), workers, [&](std::size_t b) {
    StreamRng rng(seed, b);
    std::vector<int> labels;
    std::vector<int> partner;
    Classifier classifier;
    const std::uint64_t begin = b * kBlock;
    const std::uint64_t end = std::min(trials, begin + kBlock);
    Sums s;
    for (std::uint64_t t = begin; t < end; ++t) {
      sample_uniform_pairing(k, rng, labels, partner);
      const auto y = static_cast<std::uint64_t>(classifier.crossing_vertex_count(partner));
      s.y += y;
      s.y2 += y * y;
    }
    partial[b] = s;
  });
  Sums total;
  for (const Sums& s : partial) {
    total.y += s.y;
    total.y2 += s.y2;
  }

  CrossingStatsReport r;
  r.k = k;
  r.method = CrossingMethod::MonteCarlo;
  r.trials = trials;
  r.seed = seed;
  const double n = static_cast<double>(trials);
  r.mean_float = static_cast<double>(total.y) / n;
  if (trials > 1) {
    // Exact integer sums keep this independent of summation order.
    const Rational var = (Rational(BigInt(total.y2)) - Rational(BigInt(total.y)) * BigInt(total.y) / BigInt(trials)) /
                         BigInt(trials - 1);
    r.variance = to_double(var);
    r.std_error = std::sqrt(r.variance / n);
  }
  r.mean_asymptotic = mean_crossing_asymptotic(k);
  r.mean_hypergeometric = mean_crossing_hypergeometric(k);
  r.mean_exact = mean_crossing_exact(k);
  return r;
}

CrossingStatsReport exact_crossing_report(int k, bool with_variance) {
  require_k_at_least(k, 2, "exact_crossing_report");
  CrossingStatsReport r;
  r.k = k;
  r.method = CrossingMethod::ExactSum;
  r.mean_exact = mean_crossing_exact(k);
  r.mean_float = to_double(*r.mean_exact);
  r.mean_hypergeometric = mean_crossing_hypergeometric(k);
  r.mean_asymptotic = mean_crossing_asymptotic(k);
  if (with_variance) {
    r.variance_exact = variance_exact(k);
    r.variance = to_double(*r.variance_exact);
  }
  return r;
}

}  // namespace signrmt
