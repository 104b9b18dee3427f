#pragma once

#include <map>
#include <utility>
#include <vector>

#include "signrmt/numeric.hpp"
#include "signrmt/pairing.hpp"

namespace signrmt {

/// Exact crossing census for one k. Indices are half-counts: totals[m] is
/// Cr_{2k,2m}, the number of pairings with exactly 2m crossing vertices, and
/// partitions[{m, i}] counts those whose crossing vertices split into i
/// groups separated by dividing edges.
struct CrossingCensus {
  int k = 0;
  std::vector<BigInt> totals;                       // index m = 0..k
  std::map<std::pair<int, int>, BigInt> partitions; // (m, i) -> count, m >= 2
  BigInt pairing_count;                             // (2k-1)!!

  const BigInt& cr(int m) const { return totals.at(static_cast<std::size_t>(m)); }
  BigInt partition(int m, int i) const;
};

/// Exhaustive census, sharded by the partner of vertex 0 across `workers`
/// threads (0 = all hardware threads). Result is independent of workers.
CrossingCensus crossing_census(int k, int cap = kDefaultEnumerationCap, unsigned workers = 0);

/// Closed forms for Cr_{2k,2m}, m = 0..5. Throws Unsupported for m > 5.
BigInt closed_form_cr(int k, int m);

/// Fully crossing counts Cr_{2m,2m} from the recursion
/// Cr_{2m,2m} = (2m-1)!! - sum_{l<m} Cr_{2m,2l}, valid while the closed
/// forms cover every l < m (m <= 6).
BigInt fully_crossing_count(int m);

/// P_{2k,2m,i} from the one- and two-partition formulas. `fully_crossing`
/// supplies Cr_{2a,2a} for a = 0..m (index a). Throws Unsupported for
/// i not in {1, 2}, InvalidArgument unless 2 <= m <= k.
BigInt partition_formula(int k, int m, int i, std::span<const BigInt> fully_crossing);
BigInt partition_formula(int k, int m, int i);

/// Ways to fill the remaining 2k-2v vertices with non-crossing,
/// non-dividing pairs around a partial pairing of 2v vertices:
/// binom(2k, k-v).
BigInt nc_nd_placement_count(int k, const Pairing& partial);

/// Brute force for the same quantity: every choice of 2v positions for the
/// partial pairing and every perfect matching of the rest whose edges stay
/// inside one gap and do not cross each other.
BigInt nc_nd_placement_bruteforce(int k, const Pairing& partial, int cap = kDefaultEnumerationCap);

struct ConvolutionSides {
  BigInt lhs;    // explicit sum over compositions
  Rational rhs;  // r/(2n-r) * binom(2n-r, n)
};

/// sum_{i_1+...+i_r = n, i_j >= 1} C_{i_1-1} ... C_{i_r-1}, both ways.
ConvolutionSides catalan_convolution(int n, int r);

struct ConfigurationClass {
  Pairing canonical;   // lexicographically smallest rotation
  int multiplicity = 0;  // orbit size under rotation; divides 2k
  CrossingSummary summary;
};

/// Rotation orbits of all pairings of 2k vertices, sorted by representative.
std::vector<ConfigurationClass> configuration_classes(int k, int cap = kDefaultEnumerationCap);

/// Smallest rotation of p and the number of rotations in [0, 2k) fixing p.
std::pair<Pairing, int> canonical_rotation(const Pairing& p);

}  // namespace signrmt
