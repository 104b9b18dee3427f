#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string_view>
#include <vector>

#include "signrmt/rng.hpp"

namespace signrmt {

enum class EnsembleKind {
  FullSymmetric,        // independent entries on and above the diagonal
  Toeplitz,             // a_ij = b_|i-j|
  PalindromicToeplitz,  // Toeplitz with a palindromic first row
  HighlyPalindromic,    // first row is 2^n copies of one palindrome
};

/// Mean 0, variance 1 base laws with tabulated moments.
enum class BaseDistribution {
  StandardGaussian,
  Rademacher,
  UniformScaled,  // uniform on [-sqrt(3), sqrt(3)]
};

std::string_view to_string(EnsembleKind kind);
std::string_view to_string(BaseDistribution base);
EnsembleKind parse_ensemble_kind(std::string_view text);
BaseDistribution parse_base_distribution(std::string_view text);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::PalindromicToeplitz;
  std::size_t dimension = 0;  // N
  int palindromicity = 0;     // n; only HighlyPalindromic uses n >= 1
  double p = 1.0;             // Prob(eps_ij = +1), in [1/2, 1]
  BaseDistribution base = BaseDistribution::StandardGaussian;
  std::uint64_t seed = 0;

  /// Effective palindromicity: 0 for PalindromicToeplitz, n for
  /// HighlyPalindromic, -1 (none) otherwise.
  int palindrome_degree() const noexcept;

  /// Throws InvalidArgument on N == 0, p outside [1/2, 1], negative n,
  /// HighlyPalindromic with n < 1, or N not divisible by 2^n.
  void validate() const;
};

/// Dense symmetric N x N matrix, row-major. set() writes both triangles so
/// a(i, j) == a(j, i) bit for bit.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) noexcept {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }
  const std::vector<double>& data() const noexcept { return data_; }

  bool is_symmetric() const noexcept;

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Symmetric +-1 matrix.
class SignMatrix {
 public:
  SignMatrix() = default;
  explicit SignMatrix(std::size_t n) : n_(n), data_(n * n, 1) {}

  std::size_t size() const noexcept { return n_; }
  int operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, int v) noexcept {
    data_[i * n_ + j] = static_cast<std::int8_t>(v);
    data_[j * n_ + i] = static_cast<std::int8_t>(v);
  }

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int8_t> data_;
};

/// One draw from the base law.
double sample_base(BaseDistribution base, StreamRng& rng);

/// E(b^order); zero for odd orders (all three laws are symmetric).
double base_moment(BaseDistribution base, int order);

/// Identifier of the independent variable feeding entry (i, j) for the
/// structured kinds; entries with equal ids are equal. For FullSymmetric it
/// is the upper-triangle slot min*N + max.
std::size_t variable_id(EnsembleKind kind, std::size_t n_dim, int palindromicity, std::size_t i,
                        std::size_t j);

/// Number of independent variables of a spec.
std::size_t variable_count(const EnsembleSpec& spec);

/// Draws a matrix from spec (unsigned; apply a sign mask separately).
SymmetricMatrix sample_matrix(const EnsembleSpec& spec);

/// Independent +-1 entries on and above the diagonal with Prob(+1) = p.
SignMatrix sample_sign_mask(std::size_t n, double p, std::uint64_t seed);

/// Entrywise product; throws InvalidArgument on size mismatch.
SymmetricMatrix hadamard(const SymmetricMatrix& a, const SignMatrix& signs);

/// How often each independent variable occurs in the first row, keyed by
/// variable id.
std::map<std::size_t, std::size_t> first_row_occurrences(const EnsembleSpec& spec);

/// Largest number of times any single variable occurs within one row.
std::size_t max_row_occurrences(const EnsembleSpec& spec);

/// Writes the matrix as N lines of comma-separated values.
void write_csv(std::ostream& out, const SymmetricMatrix& m);

}  // namespace signrmt
