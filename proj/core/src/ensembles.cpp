#include "signrmt/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <string>

#include "signrmt/errors.hpp"
#include "signrmt/numeric.hpp"

namespace signrmt {

std::string_view to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::FullSymmetric: return "full";
    case EnsembleKind::Toeplitz: return "toeplitz";
    case EnsembleKind::PalindromicToeplitz: return "palindromic";
    case EnsembleKind::HighlyPalindromic: return "highly-palindromic";
  }
  return "unknown";
}

std::string_view to_string(BaseDistribution base) {
  switch (base) {
    case BaseDistribution::StandardGaussian: return "gaussian";
    case BaseDistribution::Rademacher: return "rademacher";
    case BaseDistribution::UniformScaled: return "uniform";
  }
  return "unknown";
}

EnsembleKind parse_ensemble_kind(std::string_view text) {
  for (auto kind : {EnsembleKind::FullSymmetric, EnsembleKind::Toeplitz,
                    EnsembleKind::PalindromicToeplitz, EnsembleKind::HighlyPalindromic}) {
    if (text == to_string(kind)) return kind;
  }
  throw InvalidArgument("unknown ensemble kind '" + std::string(text) + "'");
}

BaseDistribution parse_base_distribution(std::string_view text) {
  for (auto base : {BaseDistribution::StandardGaussian, BaseDistribution::Rademacher,
                    BaseDistribution::UniformScaled}) {
    if (text == to_string(base)) return base;
  }
  throw InvalidArgument("unknown base distribution '" + std::string(text) + "'");
}

int EnsembleSpec::palindrome_degree() const noexcept {
  switch (kind) {
    case EnsembleKind::PalindromicToeplitz: return 0;
    case EnsembleKind::HighlyPalindromic: return palindromicity;
    default: return -1;
  }
}

void EnsembleSpec::validate() const {
  if (dimension == 0) throw InvalidArgument("dimension must be positive");
  if (!(p >= 0.5 && p <= 1.0)) throw InvalidArgument("p must lie in [1/2, 1]");
  if (palindromicity < 0) throw InvalidArgument("palindromicity must be nonnegative");
  if (kind == EnsembleKind::HighlyPalindromic) {
    if (palindromicity < 1) throw InvalidArgument("highly palindromic needs n >= 1");
    if (palindromicity >= 63 || dimension % (std::size_t{1} << palindromicity) != 0) {
      throw InvalidArgument("dimension must be a multiple of 2^n");
    }
  }
}

bool SymmetricMatrix::is_symmetric() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (data_[i * n_ + j] != data_[j * n_ + i]) return false;
    }
  }
  return true;
}

double sample_base(BaseDistribution base, StreamRng& rng) {
  switch (base) {
    case BaseDistribution::StandardGaussian: {
      std::normal_distribution<double> normal;
      return normal(rng);
    }
    case BaseDistribution::Rademacher:
      return (rng() >> 63) != 0 ? 1.0 : -1.0;
    case BaseDistribution::UniformScaled:
      return std::sqrt(3.0) * (2.0 * rng.uniform01() - 1.0);
  }
  return 0.0;
}

double base_moment(BaseDistribution base, int order) {
  if (order < 0) throw InvalidArgument("moment order must be nonnegative");
  if (order % 2 == 1) return 0.0;
  const int half = order / 2;
  switch (base) {
    case BaseDistribution::StandardGaussian: return to_double(double_factorial(order - 1));
    case BaseDistribution::Rademacher: return 1.0;
    case BaseDistribution::UniformScaled: return std::pow(3.0, half) / (2.0 * half + 1.0);
  }
  return 0.0;
}

namespace {

std::size_t palindrome_id(std::size_t d, std::size_t length) {
  const std::size_t t = d % length;
  return std::min(t, length - 1 - t);
}

}  // namespace

std::size_t variable_id(EnsembleKind kind, std::size_t n_dim, int palindromicity, std::size_t i,
                        std::size_t j) {
  const std::size_t d = i > j ? i - j : j - i;
  switch (kind) {
    case EnsembleKind::FullSymmetric: return std::min(i, j) * n_dim + std::max(i, j);
    case EnsembleKind::Toeplitz: return d;
    case EnsembleKind::PalindromicToeplitz: return palindrome_id(d, n_dim);
    case EnsembleKind::HighlyPalindromic:
      return palindrome_id(d, n_dim >> palindromicity);
  }
  return 0;
}

std::size_t variable_count(const EnsembleSpec& spec) {
  const std::size_t n = spec.dimension;
  switch (spec.kind) {
    case EnsembleKind::FullSymmetric: return n * (n + 1) / 2;
    case EnsembleKind::Toeplitz: return n;
    case EnsembleKind::PalindromicToeplitz: return (n + 1) / 2;
    case EnsembleKind::HighlyPalindromic: return ((n >> spec.palindromicity) + 1) / 2;
  }
  return 0;
}

SymmetricMatrix sample_matrix(const EnsembleSpec& spec) {
  spec.validate();
  const std::size_t n = spec.dimension;
  StreamRng rng(spec.seed, 0);
  SymmetricMatrix a(n);
  if (spec.kind == EnsembleKind::FullSymmetric) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) a.set(i, j, sample_base(spec.base, rng));
    }
    return a;
  }
  // Structured kinds: one draw per id of the first row.
  std::vector<double> values(variable_count(spec));
  for (double& v : values) v = sample_base(spec.base, rng);
  std::vector<double> row(n);
  for (std::size_t d = 0; d < n; ++d) {
    row[d] = values[variable_id(spec.kind, n, spec.palindromicity, 0, d)];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a.set(i, j, row[j - i]);
  }
  return a;
}

SignMatrix sample_sign_mask(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.5 && p <= 1.0)) throw InvalidArgument("p must lie in [1/2, 1]");
  StreamRng rng(seed, 1);
  SignMatrix e(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) e.set(i, j, rng.uniform01() < p ? 1 : -1);
  }
  return e;
}

SymmetricMatrix hadamard(const SymmetricMatrix& a, const SignMatrix& signs) {
  if (a.size() != signs.size()) throw InvalidArgument("hadamard: dimension mismatch");
  SymmetricMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) out.set(i, j, a(i, j) * signs(i, j));
  }
  return out;
}

std::map<std::size_t, std::size_t> first_row_occurrences(const EnsembleSpec& spec) {
  spec.validate();
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t j = 0; j < spec.dimension; ++j) {
    ++counts[variable_id(spec.kind, spec.dimension, spec.palindromicity, 0, j)];
  }
  return counts;
}

std::size_t max_row_occurrences(const EnsembleSpec& spec) {
  spec.validate();
  std::size_t best = 0;
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t i = 0; i < spec.dimension; ++i) {
    counts.clear();
    for (std::size_t j = 0; j < spec.dimension; ++j) {
      const auto c = ++counts[variable_id(spec.kind, spec.dimension, spec.palindromicity, i, j)];
      best = std::max(best, c);
    }
  }
  return best;
}

void write_csv(std::ostream& out, const SymmetricMatrix& m) {
  const auto old_precision = out.precision(17);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != 0) out << ',';
      out << m(i, j);
    }
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace signrmt
