#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "signrmt/ensembles.hpp"

namespace signrmt {

/// Eigenvalues are rescaled by 1 / (c N^r).
struct Scale {
  double c = 1.0;
  double r = 0.5;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  Scale scale;

  std::size_t size() const noexcept { return eigenvalues.size(); }
};

/// All eigenvalues, ascending. Throws InvalidArgument on non-finite entries.
Spectrum eigenvalues(const SymmetricMatrix& a, Scale scale = {});

struct EigenPairs {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column j is the unit eigenvector of values[j]; column-major
};

EigenPairs eigenpairs(const SymmetricMatrix& a);

/// (1/N) sum_i (lambda_i / (c N^r))^k. Exactly 1 for k = 0.
double rescaled_moment(const Spectrum& s, int k);

struct MomentReport {
  EnsembleSpec spec;
  std::size_t samples = 0;
  int k_max = 0;
  Scale scale;
  std::vector<double> mean;        // index k = 0..k_max
  std::vector<double> std_error;   // standard error of the mean over samples
  std::vector<std::optional<double>> theory;     // filled by attach_theory
  std::vector<std::optional<double>> theory_ci;  // 99% half-width when Monte Carlo
  std::string theory_method;       // empty when no theory attached
};

struct HistogramSpec {
  int bins = 100;
  double lo = -4.0;
  double hi = 4.0;

  void validate() const;
};

struct Histogram {
  HistogramSpec spec;
  std::vector<double> edges;          // bins + 1
  std::vector<std::uint64_t> counts;  // bins
  std::vector<double> density;        // counts / (in_range * width)
  std::uint64_t below = 0;
  std::uint64_t above = 0;
  std::uint64_t in_range = 0;
};

struct SimulationResult {
  MomentReport moments;
  std::optional<Histogram> histogram;
};

/// Draws `samples` (>= 1; standard errors are NaN for one) matrices from spec (sample s uses seeds derived from
/// (spec.seed, 2s) for the matrix and (spec.seed, 2s + 1) for the sign
/// mask), and pools rescaled moments and, optionally, a histogram of the
/// rescaled eigenvalues. The result does not depend on `workers`.
SimulationResult simulate(const EnsembleSpec& spec, std::size_t samples, int k_max,
                          std::optional<HistogramSpec> histogram = std::nullopt,
                          unsigned workers = 0, Scale scale = {});

/// Requires samples >= 2.
MomentReport ensemble_moments(const EnsembleSpec& spec, std::size_t samples, int k_max,
                              unsigned workers = 0, Scale scale = {});

Histogram spectral_histogram(const EnsembleSpec& spec, std::size_t samples,
                             const HistogramSpec& bins, unsigned workers = 0, Scale scale = {});

/// The matrix and sign mask of one simulation sample.
SymmetricMatrix simulation_sample(const EnsembleSpec& spec, std::size_t index);

}  // namespace signrmt
