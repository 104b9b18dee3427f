#include "signrmt/census.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "signrmt/errors.hpp"
#include "signrmt/parallel.hpp"

namespace signrmt {

BigInt CrossingCensus::partition(int m, int i) const {
  const auto it = partitions.find({m, i});
  return it == partitions.end() ? BigInt(0) : it->second;
}

CrossingCensus crossing_census(int k, int cap, unsigned workers) {
  if (k < 1) throw InvalidArgument("crossing_census: k must be >= 1");
  if (k > cap) {
    throw InvalidArgument("crossing_census: k = " + std::to_string(k) + " exceeds cap " +
                          std::to_string(cap));
  }
  const auto width = static_cast<std::size_t>(k + 1);
  struct Shard {
    std::vector<std::uint64_t> totals;
    std::vector<std::uint64_t> parts;  // (m, i) flattened as m * width + i
  };
  const int shard_count = 2 * k - 1;
  std::vector<Shard> shards(static_cast<std::size_t>(shard_count));

  parallel_for(static_cast<std::size_t>(shard_count), workers, [&](std::size_t s) {
    Shard& shard = shards[s];
    shard.totals.assign(width, 0);
    shard.parts.assign(width * width, 0);
    Classifier classifier;
    for_each_pairing_in_shard(
        k, static_cast<int>(s) + 1,
        [&](std::span<const int> partner) {
          const CrossingSummary c = classifier.summarize(partner);
          const auto m = static_cast<std::size_t>(c.e / 2);
          ++shard.totals[m];
          if (m > 0) ++shard.parts[m * width + static_cast<std::size_t>(c.partition_count)];
        },
        cap);
  });

  CrossingCensus out;
  out.k = k;
  out.totals.assign(width, 0);
  for (const Shard& shard : shards) {
    for (std::size_t m = 0; m < width; ++m) out.totals[m] += shard.totals[m];
  }
  for (std::size_t m = 1; m < width; ++m) {
    for (std::size_t i = 1; i < width; ++i) {
      BigInt sum = 0;
      for (const Shard& shard : shards) sum += shard.parts[m * width + i];
      if (sum != 0) out.partitions[{static_cast<int>(m), static_cast<int>(i)}] = sum;
    }
  }
  out.pairing_count = double_factorial(2 * k - 1);
  return out;
}

BigInt closed_form_cr(int k, int m) {
  if (k < 1) throw InvalidArgument("closed_form_cr: k must be >= 1");
  if (m < 0) throw InvalidArgument("closed_form_cr: m must be >= 0");
  const std::int64_t n = 2 * static_cast<std::int64_t>(k);
  auto tail = [&](int mm) {
    BigInt s = 0;
    for (int d = 1; d <= k - mm; ++d) s += binomial(n, k - mm - d) * (mm + d);
    return s;
  };
  switch (m) {
    case 0: return catalan(k);
    case 1: return 0;
    case 2: return binomial(n, k - 2);
    case 3: return 4 * binomial(n, k - 3);
    case 4: return 31 * binomial(n, k - 4) + tail(4);
    case 5: return 288 * binomial(n, k - 5) + 8 * tail(5);
    default:
      throw Unsupported("closed_form_cr: no closed form for m = " + std::to_string(m) + " (m <= 5 only)");
  }
}

BigInt fully_crossing_count(int m) {
  if (m < 0) throw InvalidArgument("fully_crossing_count: m must be >= 0");
  if (m == 0) return 1;
  if (m > 6) throw Unsupported("fully_crossing_count: recursion needs closed forms for m - 1 <= 5");
  BigInt rest = double_factorial(2 * m - 1);
  for (int l = 0; l < m; ++l) rest -= closed_form_cr(m, l);
  return rest;
}

BigInt partition_formula(int k, int m, int i, std::span<const BigInt> fully_crossing) {
  if (i != 1 && i != 2) {
    throw Unsupported("partition_formula: only one or two partitions have a closed form");
  }
  if (m < 2 || m > k) throw InvalidArgument("partition_formula: need 2 <= m <= k");
  if (fully_crossing.size() <= static_cast<std::size_t>(m)) {
    throw InvalidArgument("partition_formula: fully crossing table too short");
  }
  const std::int64_t n = 2 * static_cast<std::int64_t>(k);
  auto fc = [&](int a) -> const BigInt& { return fully_crossing[static_cast<std::size_t>(a)]; };
  if (i == 1) return fc(m) * binomial(n, k - m);

  BigInt split = 0;
  for (int a = 1; a < m; ++a) split += fc(a) * fc(m - a);
  BigInt placements = 0;
  for (int d = 1; d <= k - m; ++d) placements += binomial(n, k - m - d) * (m + d);
  return placements * split;
}

BigInt partition_formula(int k, int m, int i) {
  if (m < 2 || m > k) throw InvalidArgument("partition_formula: need 2 <= m <= k");
  std::vector<BigInt> table;
  table.reserve(static_cast<std::size_t>(m + 1));
  for (int a = 0; a <= m; ++a) {
    if (a <= 6) {
      table.push_back(fully_crossing_count(a));
    } else {
      table.push_back(crossing_census(a).cr(a));
    }
  }
  return partition_formula(k, m, i, table);
}

BigInt nc_nd_placement_count(int k, const Pairing& partial) {
  const int v = partial.k();
  if (v < 1) throw InvalidArgument("nc_nd_placement_count: partial pairing must have v >= 1");
  if (v > k) throw InvalidArgument("nc_nd_placement_count: need v <= k");
  return binomial(2 * static_cast<std::int64_t>(k), k - v);
}

namespace {

// Counts perfect matchings of `free` (ascending vertices) whose edges join
// vertices of the same gap and never cross one another.
std::uint64_t count_gap_matchings(std::vector<int>& free, const std::vector<int>& gap_of,
                                  std::vector<std::pair<int, int>>& placed) {
  if (free.empty()) return 1;
  const int a = free.front();
  std::uint64_t total = 0;
  for (std::size_t j = 1; j < free.size(); ++j) {
    const int b = free[j];
    if (gap_of[static_cast<std::size_t>(a)] != gap_of[static_cast<std::size_t>(b)]) continue;
    bool crosses = false;
    for (const auto& [x, y] : placed) {
      if ((a < x && x < b) != (a < y && y < b)) {
        crosses = true;
        break;
      }
    }
    if (crosses) continue;
    std::vector<int> rest;
    rest.reserve(free.size() - 2);
    for (std::size_t i = 1; i < free.size(); ++i) {
      if (i != j) rest.push_back(free[i]);
    }
    placed.emplace_back(a, b);
    total += count_gap_matchings(rest, gap_of, placed);
    placed.pop_back();
  }
  return total;
}

}  // namespace

BigInt nc_nd_placement_bruteforce(int k, const Pairing& partial, int cap) {
  const int v = partial.k();
  if (v < 1 || v > k) throw InvalidArgument("nc_nd_placement_bruteforce: need 1 <= v <= k");
  if (k > cap) throw InvalidArgument("nc_nd_placement_bruteforce: k exceeds cap");
  const int n = 2 * k;
  const int chosen = 2 * v;

  // Iterate over position sets via a selection mask in lexicographic order.
  std::vector<int> select(static_cast<std::size_t>(n), 0);
  std::fill(select.end() - chosen, select.end(), 1);
  std::uint64_t total = 0;
  std::vector<int> gap_of(static_cast<std::size_t>(n), -1);
  do {
    std::vector<int> positions;
    std::vector<int> free;
    for (int x = 0; x < n; ++x) {
      (select[static_cast<std::size_t>(x)] ? positions : free).push_back(x);
    }
    // Gap g is the open arc from positions[g] to positions[g + 1]; the last
    // gap wraps around through vertex 0.
    for (std::size_t g = 0; g < positions.size(); ++g) {
      const int start = positions[g];
      const int stop = g + 1 < positions.size() ? positions[g + 1] : positions.front() + n;
      for (int x = start + 1; x < stop; ++x) gap_of[static_cast<std::size_t>(x % n)] = static_cast<int>(g);
    }
    // The wrap-around gap is one arc; re-base so chords inside it do not
    // appear to enclose the partial vertices.
    const int shift = n - positions.front();
    std::vector<int> shifted_free;
    std::vector<int> shifted_gap(static_cast<std::size_t>(n), -1);
    for (int x : free) {
      const int y = (x + shift) % n;
      shifted_free.push_back(y);
      shifted_gap[static_cast<std::size_t>(y)] = gap_of[static_cast<std::size_t>(x)];
    }
    std::sort(shifted_free.begin(), shifted_free.end());
    std::vector<std::pair<int, int>> placed;
    total += count_gap_matchings(shifted_free, shifted_gap, placed);
  } while (std::next_permutation(select.begin(), select.end()));
  return total;
}

namespace {

void composition_sum(int remaining, int parts, const std::vector<BigInt>& cat, const BigInt& acc,
                     BigInt& total) {
  if (parts == 0) {
    if (remaining == 0) total += acc;
    return;
  }
  for (int part = 1; part <= remaining - (parts - 1); ++part) {
    composition_sum(remaining - part, parts - 1, cat, acc * cat[static_cast<std::size_t>(part - 1)], total);
  }
}

}  // namespace

ConvolutionSides catalan_convolution(int n, int r) {
  if (n < 1 || r < 1 || r > n) throw InvalidArgument("catalan_convolution: need 1 <= r <= n");
  std::vector<BigInt> cat;
  for (int i = 0; i <= n; ++i) cat.push_back(catalan(i));
  ConvolutionSides out;
  composition_sum(n, r, cat, BigInt(1), out.lhs);
  out.rhs = Rational(BigInt(r) * binomial(2 * n - r, n), BigInt(2 * n - r));
  return out;
}

std::pair<Pairing, int> canonical_rotation(const Pairing& p) {
  const int n = p.vertex_count();
  Pairing best = p;
  int fixers = 0;
  for (int s = 0; s < n; ++s) {
    Pairing r = p.rotated(s);
    if (r == p) ++fixers;
    if (r < best) best = std::move(r);
  }
  return {best, fixers};
}

std::vector<ConfigurationClass> configuration_classes(int k, int cap) {
  std::vector<ConfigurationClass> out;
  Classifier classifier;
  for_each_pairing(
      k,
      [&](std::span<const int> partner) {
        Pairing p = Pairing::from_partners({partner.begin(), partner.end()});
        auto [canon, fixers] = canonical_rotation(p);
        if (canon != p) return;
        ConfigurationClass c;
        c.multiplicity = p.vertex_count() / fixers;
        c.summary = classifier.summarize(partner);
        c.canonical = std::move(p);
        out.push_back(std::move(c));
      },
      cap);
  std::sort(out.begin(), out.end(),
            [](const ConfigurationClass& a, const ConfigurationClass& b) { return a.canonical < b.canonical; });
  return out;
}

}  // namespace signrmt
