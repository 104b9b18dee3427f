#include "signrmt/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "signrmt/errors.hpp"
#include "signrmt/numeric.hpp"
#include "signrmt/parallel.hpp"
#include "signrmt/rng.hpp"

namespace signrmt {

namespace {

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMajor> as_eigen(const SymmetricMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.size());
  return Eigen::Map<const RowMajor>(a.data().data(), n, n);
}

void require_finite(const SymmetricMatrix& a) {
  for (double v : a.data()) {
    if (!std::isfinite(v)) throw InvalidArgument("matrix has non-finite entries");
  }
}

double scale_factor(std::size_t n, Scale scale) {
  return scale.c * std::pow(static_cast<double>(n), scale.r);
}

}  // namespace

Spectrum eigenvalues(const SymmetricMatrix& a, Scale scale) {
  require_finite(a);
  Spectrum s;
  s.scale = scale;
  if (a.size() == 0) return s;
  Eigen::MatrixXd m = as_eigen(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  const auto& values = solver.eigenvalues();
  s.eigenvalues.assign(values.data(), values.data() + values.size());
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

EigenPairs eigenpairs(const SymmetricMatrix& a) {
  require_finite(a);
  EigenPairs out;
  if (a.size() == 0) return out;
  Eigen::MatrixXd m = as_eigen(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  out.values.assign(values.data(), values.data() + values.size());
  out.vectors.assign(vectors.data(), vectors.data() + vectors.size());
  return out;
}

double rescaled_moment(const Spectrum& s, int k) {
  if (k < 0) throw InvalidArgument("moment order must be nonnegative");
  if (k == 0) return 1.0;
  if (s.eigenvalues.empty()) throw InvalidArgument("empty spectrum");
  const double factor = scale_factor(s.size(), s.scale);
  std::vector<double> terms(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double x = s.eigenvalues[i] / factor;
    double v = 1.0;
    for (int j = 0; j < k; ++j) v *= x;
    terms[i] = v;
  }
  return pairwise_sum(terms) / static_cast<double>(s.size());
}

void HistogramSpec::validate() const {
  if (bins < 1) throw InvalidArgument("histogram needs at least one bin");
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvalidArgument("histogram range is empty");
  }
}

SymmetricMatrix simulation_sample(const EnsembleSpec& spec, std::size_t index) {
  EnsembleSpec draw = spec;
  draw.seed = derive_seed(spec.seed, 2 * index);
  SymmetricMatrix a = sample_matrix(draw);
  if (spec.p < 1.0) {
    a = hadamard(a, sample_sign_mask(spec.dimension, spec.p, derive_seed(spec.seed, 2 * index + 1)));
  }
  return a;
}

SimulationResult simulate(const EnsembleSpec& spec, std::size_t samples, int k_max,
                          std::optional<HistogramSpec> histogram, unsigned workers, Scale scale) {
  spec.validate();
  if (samples < 1) throw InvalidArgument("need at least one sample");
  if (k_max < 0) throw InvalidArgument("k_max must be nonnegative");
  if (histogram) histogram->validate();

  const auto orders = static_cast<std::size_t>(k_max) + 1;
  std::vector<std::vector<double>> per_sample(samples);
  std::vector<std::vector<std::uint64_t>> per_sample_bins(histogram ? samples : 0);
  std::vector<std::uint64_t> below(samples, 0), above(samples, 0);

  parallel_for(samples, workers, [&](std::size_t s) {
    const Spectrum spectrum = eigenvalues(simulation_sample(spec, s), scale);
    const double factor = scale_factor(spectrum.size(), scale);
    const std::size_t n = spectrum.size();
    // powers[k][i] = x_i^k, built incrementally.
    std::vector<double> power(n, 1.0);
    std::vector<double> moments(orders, 0.0);
    moments[0] = 1.0;
    for (std::size_t k = 1; k < orders; ++k) {
      for (std::size_t i = 0; i < n; ++i) power[i] *= spectrum.eigenvalues[i] / factor;
      moments[k] = pairwise_sum(power) / static_cast<double>(n);
    }
    per_sample[s] = std::move(moments);
    if (histogram) {
      std::vector<std::uint64_t> counts(static_cast<std::size_t>(histogram->bins), 0);
      const double width = (histogram->hi - histogram->lo) / histogram->bins;
      for (double lambda : spectrum.eigenvalues) {
        const double x = lambda / factor;
        if (x < histogram->lo) {
          ++below[s];
        } else if (x > histogram->hi) {
          ++above[s];
        } else {
          auto bin = static_cast<std::size_t>((x - histogram->lo) / width);
          bin = std::min(bin, counts.size() - 1);
          ++counts[bin];
        }
      }
      per_sample_bins[s] = std::move(counts);
    }
  });

  SimulationResult result;
  MomentReport& report = result.moments;
  report.spec = spec;
  report.samples = samples;
  report.k_max = k_max;
  report.scale = scale;
  report.mean.assign(orders, 0.0);
  report.std_error.assign(orders, 0.0);
  report.theory.assign(orders, std::nullopt);
  report.theory_ci.assign(orders, std::nullopt);
  std::vector<double> column(samples);
  for (std::size_t k = 0; k < orders; ++k) {
    for (std::size_t s = 0; s < samples; ++s) column[s] = per_sample[s][k];
    const double mean = pairwise_sum(column) / static_cast<double>(samples);
    for (std::size_t s = 0; s < samples; ++s) {
      const double d = per_sample[s][k] - mean;
      column[s] = d * d;
    }
    report.mean[k] = mean;
    if (samples < 2) {
      report.std_error[k] = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    const double var = pairwise_sum(column) / static_cast<double>(samples - 1);
    report.std_error[k] = std::sqrt(var / static_cast<double>(samples));
  }

  if (histogram) {
    Histogram h;
    h.spec = *histogram;
    const auto bins = static_cast<std::size_t>(histogram->bins);
    const double width = (histogram->hi - histogram->lo) / histogram->bins;
    h.counts.assign(bins, 0);
    for (std::size_t s = 0; s < samples; ++s) {
      for (std::size_t b = 0; b < bins; ++b) h.counts[b] += per_sample_bins[s][b];
      h.below += below[s];
      h.above += above[s];
    }
    for (auto c : h.counts) h.in_range += c;
    h.edges.resize(bins + 1);
    for (std::size_t b = 0; b <= bins; ++b) h.edges[b] = histogram->lo + width * static_cast<double>(b);
    h.edges[bins] = histogram->hi;
    h.density.assign(bins, 0.0);
    if (h.in_range > 0) {
      for (std::size_t b = 0; b < bins; ++b) {
        h.density[b] = static_cast<double>(h.counts[b]) / (static_cast<double>(h.in_range) * width);
      }
    }
    result.histogram = std::move(h);
  }
  return result;
}

MomentReport ensemble_moments(const EnsembleSpec& spec, std::size_t samples, int k_max,
                              unsigned workers, Scale scale) {
  if (samples < 2) throw InvalidArgument("need at least two samples for standard errors");
  return simulate(spec, samples, k_max, std::nullopt, workers, scale).moments;
}

Histogram spectral_histogram(const EnsembleSpec& spec, std::size_t samples,
                             const HistogramSpec& bins, unsigned workers, Scale scale) {
  return *simulate(spec, samples, 0, bins, workers, scale).histogram;
}

}  // namespace signrmt
