#include "signrmt/pairing.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "signrmt/errors.hpp"

namespace signrmt {

bool is_valid_partner_array(std::span<const int> partner) noexcept {
  const auto n = static_cast<int>(partner.size());
  if (n == 0 || n % 2 != 0) return false;
  for (int i = 0; i < n; ++i) {
    const int j = partner[static_cast<std::size_t>(i)];
    if (j < 0 || j >= n || j == i) return false;
    if (partner[static_cast<std::size_t>(j)] != i) return false;
  }
  return true;
}

Pairing Pairing::from_partners(std::vector<int> partner) {
  if (!is_valid_partner_array(partner)) {
    throw InvalidArgument("Pairing: partner array is not a fixed-point-free involution");
  }
  return Pairing(std::move(partner));
}

Pairing Pairing::from_edges(int k, std::span<const Edge> edges) {
  if (k < 1 || static_cast<int>(edges.size()) != k) {
    throw InvalidArgument("Pairing: need exactly k edges for k >= 1");
  }
  std::vector<int> partner(static_cast<std::size_t>(2 * k), -1);
  for (const Edge& e : edges) {
    if (e.first < 0 || e.second < 0 || e.first >= 2 * k || e.second >= 2 * k ||
        e.first == e.second) {
      throw InvalidArgument("Pairing: edge endpoint out of range");
    }
    auto& pa = partner[static_cast<std::size_t>(e.first)];
    auto& pb = partner[static_cast<std::size_t>(e.second)];
    if (pa != -1 || pb != -1) throw InvalidArgument("Pairing: vertex used twice");
    pa = e.second;
    pb = e.first;
  }
  return from_partners(std::move(partner));
}

Pairing Pairing::from_edges(int k, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [a, b] : edges) list.push_back({std::min(a, b), std::max(a, b)});
  return from_edges(k, list);
}

std::vector<Edge> Pairing::edges() const {
  std::vector<Edge> out;
  out.reserve(partner_.size() / 2);
  for (int v = 0; v < vertex_count(); ++v) {
    const int w = partner_[static_cast<std::size_t>(v)];
    if (v < w) out.push_back({v, w});
  }
  return out;
}

Pairing Pairing::rotated(int shift) const {
  const int n = vertex_count();
  const int s = ((shift % n) + n) % n;
  std::vector<int> out(partner_.size());
  for (int v = 0; v < n; ++v) {
    out[static_cast<std::size_t>((v + s) % n)] = (partner_[static_cast<std::size_t>(v)] + s) % n;
  }
  return Pairing(std::move(out));
}

namespace {

void check_enumeration_k(int k, int cap) {
  if (k < 1) throw InvalidArgument("enumeration: k must be >= 1");
  if (k > cap) {
    throw InvalidArgument("enumeration: k = " + std::to_string(k) + " exceeds cap " +
                          std::to_string(cap));
  }
}

// pools[d] holds the free vertices, ascending, after d edges are placed.
struct Enumerator {
  std::vector<int> partner;
  std::vector<std::vector<int>> pools;
  const PairingVisitor* visit = nullptr;

  explicit Enumerator(int k) : partner(static_cast<std::size_t>(2 * k), -1) {
    pools.resize(static_cast<std::size_t>(k + 1));
    for (int d = 0; d <= k; ++d) pools[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(2 * (k - d)));
    for (int v = 0; v < 2 * k; ++v) pools[0][static_cast<std::size_t>(v)] = v;
  }

  void place(std::size_t depth, std::size_t j) {
    const auto& pool = pools[depth];
    const int a = pool[0];
    const int b = pool[j];
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
    auto& next = pools[depth + 1];
    std::size_t w = 0;
    for (std::size_t i = 1; i < pool.size(); ++i) {
      if (i != j) next[w++] = pool[i];
    }
  }

  void recurse(std::size_t depth) {
    const auto& pool = pools[depth];
    if (pool.empty()) {
      (*visit)(partner);
      return;
    }
    for (std::size_t j = 1; j < pool.size(); ++j) {
      place(depth, j);
      recurse(depth + 1);
    }
  }
};

}  // namespace

void for_each_pairing(int k, const PairingVisitor& visit, int cap) {
  check_enumeration_k(k, cap);
  Enumerator en(k);
  en.visit = &visit;
  en.recurse(0);
}

void for_each_pairing_in_shard(int k, int first_partner, const PairingVisitor& visit, int cap) {
  check_enumeration_k(k, cap);
  if (first_partner < 1 || first_partner >= 2 * k) {
    throw InvalidArgument("enumeration: shard index out of range");
  }
  Enumerator en(k);
  en.visit = &visit;
  en.place(0, static_cast<std::size_t>(first_partner));
  en.recurse(1);
}

std::vector<Pairing> enumerate_pairings(int k, int cap) {
  std::vector<Pairing> out;
  for_each_pairing(
      k, [&](std::span<const int> p) { out.push_back(Pairing::from_partners({p.begin(), p.end()})); },
      cap);
  return out;
}

// ---------------------------------------------------------------------------

void Classifier::build_tables(std::span<const int> partner) {
  n_ = static_cast<int>(partner.size());
  levels_ = std::bit_width(static_cast<unsigned>(n_));
  const auto n = static_cast<std::size_t>(n_);
  min_table_.resize(n * static_cast<std::size_t>(levels_));
  max_table_.resize(n * static_cast<std::size_t>(levels_));
  std::copy(partner.begin(), partner.end(), min_table_.begin());
  std::copy(partner.begin(), partner.end(), max_table_.begin());
  for (int lvl = 1; lvl < levels_; ++lvl) {
    const std::size_t half = std::size_t{1} << (lvl - 1);
    const std::size_t span = std::size_t{1} << lvl;
    const std::size_t row = n * static_cast<std::size_t>(lvl);
    const std::size_t prev = row - n;
    for (std::size_t i = 0; i + span <= n; ++i) {
      min_table_[row + i] = std::min(min_table_[prev + i], min_table_[prev + i + half]);
      max_table_[row + i] = std::max(max_table_[prev + i], max_table_[prev + i + half]);
    }
  }
}

bool Classifier::edge_crosses(int a, int b) const {
  // Interior vertices a+1 .. b-1.
  const int lo = a + 1;
  const int hi = b - 1;
  if (lo > hi) return false;
  const int len = hi - lo + 1;
  const int lvl = std::bit_width(static_cast<unsigned>(len)) - 1;
  const std::size_t row = static_cast<std::size_t>(n_) * static_cast<std::size_t>(lvl);
  const std::size_t i1 = row + static_cast<std::size_t>(lo);
  const std::size_t i2 = row + static_cast<std::size_t>(hi - (1 << lvl) + 1);
  const int mn = std::min(min_table_[i1], min_table_[i2]);
  const int mx = std::max(max_table_[i1], max_table_[i2]);
  return mn < a || mx > b;
}

int Classifier::mark_crossing(std::span<const int> partner, std::vector<std::uint8_t>& crossing) {
  build_tables(partner);
  crossing.assign(partner.size(), 0);
  int e = 0;
  for (int a = 0; a < n_; ++a) {
    const int b = partner[static_cast<std::size_t>(a)];
    if (b < a) continue;
    if (edge_crosses(a, b)) {
      crossing[static_cast<std::size_t>(a)] = 1;
      crossing[static_cast<std::size_t>(b)] = 1;
      e += 2;
    }
  }
  return e;
}

int Classifier::crossing_vertex_count(std::span<const int> partner) {
  build_tables(partner);
  int e = 0;
  for (int a = 0; a < n_; ++a) {
    const int b = partner[static_cast<std::size_t>(a)];
    if (b > a && edge_crosses(a, b)) e += 2;
  }
  return e;
}

CrossingSummary Classifier::summarize(std::span<const int> partner) {
  CrossingSummary out;
  out.e = mark_crossing(partner, crossing_);
  if (out.e == 0) return out;

  const auto n = static_cast<std::size_t>(n_);
  prefix_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) prefix_[v + 1] = prefix_[v] + crossing_[v];

  dividing_.clear();
  for (int a = 0; a < n_; ++a) {
    const int b = partner[static_cast<std::size_t>(a)];
    if (b < a || crossing_[static_cast<std::size_t>(a)]) continue;
    const int inside = prefix_[static_cast<std::size_t>(b)] - prefix_[static_cast<std::size_t>(a + 1)];
    if (inside > 0 && inside < out.e) dividing_.push_back({a, b});
  }
  out.dividing_count = static_cast<int>(dividing_.size());
  if (dividing_.empty()) {
    out.partition_count = 1;
    return out;
  }

  // Side signature of every crossing edge against every dividing edge.
  const std::size_t words = (dividing_.size() + 63) / 64;
  signatures_.clear();
  std::size_t crossing_edges = 0;
  for (int a = 0; a < n_; ++a) {
    const int b = partner[static_cast<std::size_t>(a)];
    if (b < a || !crossing_[static_cast<std::size_t>(a)]) continue;
    const std::size_t base = signatures_.size();
    signatures_.resize(base + words, 0);
    for (std::size_t d = 0; d < dividing_.size(); ++d) {
      if (dividing_[d].first < a && a < dividing_[d].second) {
        signatures_[base + d / 64] |= std::uint64_t{1} << (d % 64);
      }
    }
    ++crossing_edges;
  }
  std::vector<std::span<const std::uint64_t>> sigs;
  sigs.reserve(crossing_edges);
  for (std::size_t i = 0; i < crossing_edges; ++i) {
    sigs.emplace_back(signatures_.data() + i * words, words);
  }
  auto less = [](std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  };
  auto equal = [](std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) {
    return std::equal(x.begin(), x.end(), y.begin(), y.end());
  };
  std::sort(sigs.begin(), sigs.end(), less);
  out.partition_count =
      static_cast<int>(std::unique(sigs.begin(), sigs.end(), equal) - sigs.begin());
  return out;
}

EdgeClassification Classifier::classify(std::span<const int> partner) {
  if (!is_valid_partner_array(partner)) {
    throw InvalidArgument("classify: invalid pairing");
  }
  const CrossingSummary summary = summarize(partner);
  EdgeClassification out;
  out.e = summary.e;
  out.dividing_count = summary.dividing_count;
  out.partition_count = summary.partition_count;
  for (int a = 0; a < n_; ++a) {
    const int b = partner[static_cast<std::size_t>(a)];
    if (b < a) continue;
    out.edges.push_back({a, b});
    if (summary.e > 0 && crossing_[static_cast<std::size_t>(a)]) {
      out.edge_class.push_back(EdgeClass::Crossing);
    } else if (summary.dividing_count > 0 &&
               std::find(dividing_.begin(), dividing_.end(), Edge{a, b}) != dividing_.end()) {
      out.edge_class.push_back(EdgeClass::Dividing);
    } else {
      out.edge_class.push_back(EdgeClass::NonCrossingNonDividing);
    }
  }
  return out;
}

EdgeClassification classify(const Pairing& p) {
  Classifier c;
  return c.classify(p.partners());
}

CrossingSummary summarize(const Pairing& p) {
  Classifier c;
  return c.summarize(p.partners());
}

}  // namespace signrmt
