#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "signrmt/census.hpp"
#include "signrmt/errors.hpp"
#include "signrmt/json_io.hpp"

using namespace signrmt;

namespace {

// Brute-force census values, tabulated independently of this library.
const std::map<int, std::vector<long long>> kCensus = {
    {1, {1, 0}},
    {2, {2, 0, 1}},
    {3, {5, 0, 6, 4}},
    {4, {14, 0, 28, 32, 31}},
    {5, {42, 0, 120, 180, 315, 288}},
    {6, {132, 0, 495, 880, 2112, 3504, 3272}},
    {7, {429, 0, 2002, 4004, 11830, 26936, 46354, 43580}},
};

}  // namespace

TEST(Census, MatchesTabulatedCounts) {
  for (const auto& [k, row] : kCensus) {
    const auto census = crossing_census(k);
    ASSERT_EQ(census.totals.size(), row.size());
    BigInt sum = 0;
    for (std::size_t m = 0; m < row.size(); ++m) {
      EXPECT_EQ(census.cr(static_cast<int>(m)), row[m]) << "k=" << k << " m=" << m;
      sum += census.cr(static_cast<int>(m));
    }
    EXPECT_EQ(sum, double_factorial(2 * k - 1));
    EXPECT_EQ(census.pairing_count, double_factorial(2 * k - 1));
    EXPECT_EQ(census.cr(0), catalan(k));
  }
}

TEST(Census, PartitionsSumToTotals) {
  for (int k = 2; k <= 7; ++k) {
    const auto census = crossing_census(k);
    for (int m = 2; m <= k; ++m) {
      BigInt sum = 0;
      for (int i = 1; i <= k; ++i) sum += census.partition(m, i);
      EXPECT_EQ(sum, census.cr(m));
    }
  }
}

TEST(Census, IndependentOfWorkerCount) {
  const auto one = crossing_census(7, kDefaultEnumerationCap, 1);
  const auto three = crossing_census(7, kDefaultEnumerationCap, 3);
  EXPECT_EQ(one.totals, three.totals);
  EXPECT_EQ(one.partitions, three.partitions);
}

TEST(Census, CapIsEnforced) {
  EXPECT_THROW(crossing_census(11), InvalidArgument);
  EXPECT_THROW(crossing_census(5, 4), InvalidArgument);
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(closed_form_cr(3, 2), 6);
  EXPECT_EQ(closed_form_cr(6, 4), 2112);
  for (int k = 1; k <= 20; ++k) EXPECT_EQ(closed_form_cr(k, 1), 0);
  EXPECT_THROW(closed_form_cr(8, 6), Unsupported);
}

TEST(ClosedForm, AgreesWithCensusThroughK8) {
  for (int k = 1; k <= 8; ++k) {
    const auto census = crossing_census(k);
    for (int m = 0; m <= std::min(k, 5); ++m) EXPECT_EQ(census.cr(m), closed_form_cr(k, m));
  }
}

TEST(ClosedForm, FullyCrossingRecursion) {
  EXPECT_EQ(fully_crossing_count(2), 1);
  EXPECT_EQ(fully_crossing_count(3), 4);
  EXPECT_EQ(fully_crossing_count(4), 31);
  EXPECT_EQ(fully_crossing_count(5), 288);
  EXPECT_EQ(fully_crossing_count(6), 3272);
}

TEST(PartitionFormula, Examples) {
  EXPECT_EQ(partition_formula(4, 4, 1), 31);
  EXPECT_EQ(partition_formula(4, 4, 2), 0);
  EXPECT_EQ(partition_formula(5, 4, 2), 5);
  EXPECT_EQ(partition_formula(6, 4, 2), 66);
  EXPECT_EQ(partition_formula(6, 5, 2), 48);
  EXPECT_THROW(partition_formula(5, 4, 3), Unsupported);
  EXPECT_THROW(partition_formula(5, 1, 1), InvalidArgument);
  EXPECT_THROW(partition_formula(5, 6, 1), InvalidArgument);
}

TEST(PartitionFormula, AgreesWithCensusThroughK8) {
  for (int k = 2; k <= 8; ++k) {
    const auto census = crossing_census(k);
    for (int m = 2; m <= k; ++m) {
      EXPECT_EQ(census.partition(m, 1), partition_formula(k, m, 1)) << k << " " << m;
      EXPECT_EQ(census.partition(m, 2), partition_formula(k, m, 2)) << k << " " << m;
    }
  }
}

TEST(Placement, ClosedFormExamples) {
  const auto crossing = Pairing::from_edges(2, {{0, 2}, {1, 3}});
  EXPECT_EQ(nc_nd_placement_count(2, crossing), 1);
  EXPECT_EQ(nc_nd_placement_count(3, crossing), 6);
  EXPECT_EQ(nc_nd_placement_count(4, crossing), 28);
  EXPECT_EQ(nc_nd_placement_bruteforce(4, crossing), 28);
  EXPECT_EQ(nc_nd_placement_bruteforce(3, crossing), closed_form_cr(3, 2));
  EXPECT_THROW(nc_nd_placement_count(1, crossing), InvalidArgument);
}

TEST(Placement, BruteForceMatchesBinomial) {
  for (int k = 1; k <= 6; ++k) {
    for (int v = 1; v <= k; ++v) {
      std::vector<int> partner(static_cast<std::size_t>(2 * v));
      for (int i = 0; i < v; ++i) {
        partner[static_cast<std::size_t>(i)] = v == 1 ? 1 : i + v;
        partner[static_cast<std::size_t>(v == 1 ? 1 : i + v)] = i;
      }
      const auto partial = Pairing::from_partners(partner);
      EXPECT_EQ(nc_nd_placement_bruteforce(k, partial), binomial(2 * k, k - v))
          << "k=" << k << " v=" << v;
    }
  }
}

TEST(CatalanConvolution, Examples) {
  auto s = catalan_convolution(2, 2);
  EXPECT_EQ(s.lhs, 1);
  EXPECT_EQ(s.rhs, 1);
  s = catalan_convolution(3, 2);
  EXPECT_EQ(s.lhs, 2);
  EXPECT_EQ(s.rhs, 2);
  for (int n = 1; n <= 12; ++n) {
    for (int r = 1; r <= n; ++r) {
      const auto sides = catalan_convolution(n, r);
      EXPECT_EQ(Rational(sides.lhs), sides.rhs) << n << " " << r;
    }
  }
}

TEST(Configurations, SmallK) {
  const auto two = configuration_classes(2);
  ASSERT_EQ(two.size(), 2u);
  std::vector<int> mult;
  for (const auto& c : two) mult.push_back(c.multiplicity);
  std::sort(mult.begin(), mult.end());
  EXPECT_EQ(mult, (std::vector<int>{1, 2}));
  for (const auto& c : two) {
    EXPECT_EQ(c.multiplicity == 1, c.summary.e == 4);
  }

  const auto three = configuration_classes(3);
  mult.clear();
  for (const auto& c : three) mult.push_back(c.multiplicity);
  std::sort(mult.begin(), mult.end());
  EXPECT_EQ(mult, (std::vector<int>{1, 2, 3, 3, 6}));
}

TEST(Configurations, OrbitsPartitionAllPairings) {
  for (int k = 1; k <= 6; ++k) {
    BigInt total = 0;
    for (const auto& c : configuration_classes(k)) {
      total += c.multiplicity;
      const auto [canonical, fixers] = canonical_rotation(c.canonical);
      EXPECT_EQ(canonical, c.canonical);
      EXPECT_EQ(c.multiplicity * fixers, 2 * k);
      EXPECT_EQ(summarize(c.canonical), c.summary);
    }
    EXPECT_EQ(total, double_factorial(2 * k - 1));
  }
}

TEST(CensusJson, Layout) {
  const auto j = to_json(crossing_census(4));
  EXPECT_EQ(j["k"], 4);
  EXPECT_EQ(j["totals"]["4"], "31");
  EXPECT_EQ(j["double_factorial"], "105");
  EXPECT_EQ(j["partitions"]["4"]["1"], "31");
}
