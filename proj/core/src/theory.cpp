#include "signrmt/theory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "signrmt/census.hpp"
#include "signrmt/errors.hpp"
#include "signrmt/parallel.hpp"
#include "signrmt/rng.hpp"

namespace signrmt {

namespace {

std::map<std::pair<std::size_t, std::size_t>, int> pair_multiplicities(
    std::span<const std::size_t> cycle) {
  std::map<std::pair<std::size_t, std::size_t>, int> groups;
  for (std::size_t j = 0; j < cycle.size(); ++j) {
    const std::size_t a = cycle[j];
    const std::size_t b = cycle[(j + 1) % cycle.size()];
    ++groups[{std::min(a, b), std::max(a, b)}];
  }
  return groups;
}

void require_p(double p) {
  if (!(p >= 0.5 && p <= 1.0)) throw InvalidArgument("p must lie in [1/2, 1]");
}

constexpr double kZ99 = 2.5758293035489004;

}  // namespace

int odd_pair_count(std::span<const std::size_t> cycle) {
  int odd = 0;
  for (const auto& [pair, mult] : pair_multiplicities(cycle)) odd += mult % 2;
  return odd;
}

double epsilon_weight(std::span<const std::size_t> cycle, double p) {
  return std::pow(2.0 * p - 1.0, odd_pair_count(cycle));
}

Rational epsilon_weight(std::span<const std::size_t> cycle, const Rational& p) {
  return signed_weight(p, odd_pair_count(cycle));
}

std::string_view to_string(XMethod m) {
  return m == XMethod::ExactOne ? "exact-one" : "monte-carlo-volume";
}

std::vector<BigInt> crossing_counts(int k, int cap) {
  if (k < 1) throw InvalidArgument("k must be positive");
  if (k <= 5) {
    std::vector<BigInt> out(static_cast<std::size_t>(k) + 1);
    for (int m = 0; m <= k; ++m) out[static_cast<std::size_t>(m)] = closed_form_cr(k, m);
    return out;
  }
  if (k > cap) throw InvalidArgument("k exceeds the enumeration cap and needs m > 5");
  return crossing_census(k, cap).totals;
}

Rational signed_moment_palindromic_exact(int k, const Rational& p, int cap) {
  if (p < Rational(1, 2) || p > 1) throw InvalidArgument("p must lie in [1/2, 1]");
  if (k == 0) return Rational(1);
  const auto counts = crossing_counts(k, cap);
  Rational total = 0;
  for (std::size_t m = 0; m < counts.size(); ++m) {
    total += Rational(counts[m]) * signed_weight(p, 2 * static_cast<int>(m));
  }
  return total;
}

SignedMomentPrediction signed_moment_palindromic(int k, double p, int cap) {
  require_p(p);
  SignedMomentPrediction out;
  out.k = k;
  out.order = 2 * k;
  out.p = p;
  out.method = "census";
  out.value = to_double(signed_moment_palindromic_exact(k, exact_rational(p), cap));
  if (k == 0) return out;
  const auto counts = crossing_counts(k, cap);
  for (std::size_t m = 0; m < counts.size(); ++m) {
    if (counts[m] == 0) continue;
    PredictionTerm t;
    t.label = static_cast<int>(m);
    t.crossing_vertices = 2 * static_cast<int>(m);
    t.count = to_string(counts[m]);
    t.weight = std::pow(2.0 * p - 1.0, t.crossing_vertices);
    t.contribution = to_double(counts[m]) * t.weight;
    out.decomposition.push_back(std::move(t));
  }
  return out;
}

VolumeEstimate toeplitz_x(const Pairing& c, std::uint64_t samples, std::uint64_t seed,
                          unsigned workers) {
  if (samples < kMinVolumeSamples) throw InvalidArgument("toeplitz_x needs at least 1e4 samples");
  const int k = c.k();
  const int n = c.vertex_count();
  // Edge index and sign of each vertex's step.
  std::vector<int> edge_of(static_cast<std::size_t>(n));
  std::vector<double> sign(static_cast<std::size_t>(n));
  {
    int next = 0;
    for (int v = 0; v < n; ++v) {
      const int w = c.partner(v);
      if (v < w) {
        edge_of[static_cast<std::size_t>(v)] = next;
        edge_of[static_cast<std::size_t>(w)] = next;
        sign[static_cast<std::size_t>(v)] = 1.0;
        sign[static_cast<std::size_t>(w)] = -1.0;
        ++next;
      }
    }
  }

  constexpr std::uint64_t kBlock = 4096;
  const std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<std::uint64_t> accepted(blocks, 0);
  parallel_for(blocks, workers, [&](std::size_t b) {
    StreamRng rng(seed, b);
    const std::uint64_t begin = b * kBlock;
    const std::uint64_t end = std::min(samples, begin + kBlock);
    std::vector<double> y(static_cast<std::size_t>(k));
    std::uint64_t hits = 0;
    for (std::uint64_t s = begin; s < end; ++s) {
      double index = rng.uniform01();
      for (double& v : y) v = 2.0 * rng.uniform01() - 1.0;
      bool inside = true;
      for (int v = 0; v < n && inside; ++v) {
        index -= sign[static_cast<std::size_t>(v)] * y[static_cast<std::size_t>(edge_of[static_cast<std::size_t>(v)])];
        inside = index >= 0.0 && index <= 1.0;
      }
      hits += inside ? 1 : 0;
    }
    accepted[b] = hits;
  });

  VolumeEstimate out;
  out.samples = samples;
  for (auto a : accepted) out.accepted += a;
  const double rate = static_cast<double>(out.accepted) / static_cast<double>(samples);
  const double volume = std::ldexp(1.0, k);
  out.estimate = volume * rate;
  out.ci_half_width = kZ99 * volume * std::sqrt(rate * (1.0 - rate) / static_cast<double>(samples));
  return out;
}

SignedMomentPrediction signed_moment_toeplitz(int k, double p, std::uint64_t samples,
                                              std::uint64_t seed, unsigned workers, int cap) {
  require_p(p);
  SignedMomentPrediction out;
  out.k = k;
  out.order = 2 * k;
  out.p = p;
  out.method = "toeplitz-volume";
  if (k == 0) {
    out.value = 1.0;
    return out;
  }
  const auto classes = configuration_classes(k, cap);
  double value = 0.0;
  double ci_sq = 0.0;
  bool sampled = false;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& cls = classes[i];
    PredictionTerm t;
    t.label = static_cast<int>(i);
    t.crossing_vertices = cls.summary.e;
    t.count = std::to_string(cls.multiplicity);
    t.weight = std::pow(2.0 * p - 1.0, t.crossing_vertices);
    if (cls.summary.e > 0) {
      const auto x = toeplitz_x(cls.canonical, samples, derive_seed(seed, i), workers);
      t.x = x.estimate;
      t.x_ci = x.ci_half_width;
      t.x_method = XMethod::MonteCarloVolume;
      const double scaled = cls.multiplicity * t.weight * x.ci_half_width;
      ci_sq += scaled * scaled;
      sampled = true;
    }
    t.contribution = cls.multiplicity * t.x * t.weight;
    value += t.contribution;
    out.decomposition.push_back(std::move(t));
  }
  out.value = value;
  if (sampled) out.ci = std::sqrt(ci_sq);
  return out;
}

double brute_force_finite_moment(std::size_t n_dim, int order, EnsembleKind kind, double p,
                                 BaseDistribution base, int palindromicity, unsigned workers) {
  require_p(p);
  if (order < 0) throw InvalidArgument("moment order must be nonnegative");
  EnsembleSpec spec;
  spec.kind = kind;
  spec.dimension = n_dim;
  spec.palindromicity = palindromicity;
  spec.p = p;
  spec.base = base;
  spec.validate();
  if (std::pow(static_cast<double>(n_dim), order) > kBruteForceBudget) {
    throw InvalidArgument("N^order exceeds the brute-force budget");
  }
  if (order == 0) return 1.0;

  const double sign_mean = 2.0 * p - 1.0;
  std::vector<double> moments(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) moments[static_cast<std::size_t>(j)] = base_moment(base, j);

  // Shard by the first index; each shard walks the remaining indices like
  // an odometer.
  std::vector<double> shard(n_dim, 0.0);
  parallel_for(n_dim, workers, [&](std::size_t first) {
    std::vector<std::size_t> cycle(static_cast<std::size_t>(order), 0);
    cycle[0] = first;
    std::map<std::size_t, int> var_groups;
    std::vector<double> terms;
    for (;;) {
      var_groups.clear();
      for (std::size_t j = 0; j < cycle.size(); ++j) {
        const std::size_t a = cycle[j];
        const std::size_t b = cycle[(j + 1) % cycle.size()];
        ++var_groups[variable_id(kind, n_dim, palindromicity, a, b)];
      }
      double b_part = 1.0;
      for (const auto& [id, mult] : var_groups) {
        b_part *= moments[static_cast<std::size_t>(mult)];
        if (b_part == 0.0) break;
      }
      if (b_part != 0.0) {
        terms.push_back(b_part * std::pow(sign_mean, odd_pair_count(cycle)));
      }
      std::size_t pos = cycle.size() - 1;
      while (pos >= 1 && ++cycle[pos] == n_dim) cycle[pos--] = 0;
      if (pos == 0) break;
    }
    shard[first] = pairwise_sum(terms);
  });
  const double total = pairwise_sum(shard);
  return total / std::pow(static_cast<double>(n_dim), order / 2.0 + 1.0);
}

SignedMomentPrediction predict_moment(EnsembleKind kind, int palindromicity, int order, double p,
                                      const PredictionOptions& options) {
  require_p(p);
  if (order < 0) throw InvalidArgument("moment order must be nonnegative");
  SignedMomentPrediction out;
  out.order = order;
  out.k = order / 2;
  out.p = p;
  if (order % 2 == 1) {
    out.method = "odd-vanishes";
    return out;
  }
  const int k = order / 2;
  switch (kind) {
    case EnsembleKind::FullSymmetric:
      out.method = "catalan";
      out.value = to_double(catalan(k));
      out.note = "sign masking preserves the law of symmetric entries";
      return out;
    case EnsembleKind::PalindromicToeplitz:
      return signed_moment_palindromic(k, p, options.cap);
    case EnsembleKind::Toeplitz:
      return signed_moment_toeplitz(k, p, options.mc_samples, options.seed, options.workers,
                                    options.cap);
    case EnsembleKind::HighlyPalindromic:
      if (palindromicity == 0) return signed_moment_palindromic(k, p, options.cap);
      if (p == 0.5) {
        out.method = "catalan";
        out.value = to_double(catalan(k));
        return out;
      }
      out.supported = false;
      out.method = "unsupported";
      out.note = "highly palindromic moments are not determined by crossings alone";
      return out;
  }
  return out;
}

void attach_theory(MomentReport& report, const PredictionOptions& options) {
  const auto orders = static_cast<std::size_t>(report.k_max) + 1;
  report.theory.assign(orders, std::nullopt);
  report.theory_ci.assign(orders, std::nullopt);
  std::string method;
  for (std::size_t k = 0; k < orders; ++k) {
    const auto pred = predict_moment(report.spec.kind, report.spec.palindromicity,
                                     static_cast<int>(k), report.spec.p, options);
    if (!pred.supported) {
      method = pred.method;
      continue;
    }
    report.theory[k] = pred.value;
    report.theory_ci[k] = pred.ci;
    if (k % 2 == 0 && k > 0) method = pred.method;
  }
  report.theory_method = method;
}

}  // namespace signrmt
