#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace signrmt {

/// Largest k that exhaustive enumeration accepts unless the caller raises
/// it; (2*10-1)!! is about 6.5e8 pairings.
inline constexpr int kDefaultEnumerationCap = 10;

/// Chord endpoints with first < second.
struct Edge {
  int first = 0;
  int second = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A perfect matching of the 2k vertices 0..2k-1 placed clockwise on a
/// circle, stored as an involution without fixed points.
class Pairing {
 public:
  Pairing() = default;

  /// Validates partner[partner[i]] == i and partner[i] != i.
  static Pairing from_partners(std::vector<int> partner);
  static Pairing from_edges(int k, std::span<const Edge> edges);
  static Pairing from_edges(int k, std::initializer_list<std::pair<int, int>> edges);

  int k() const noexcept { return static_cast<int>(partner_.size() / 2); }
  int vertex_count() const noexcept { return static_cast<int>(partner_.size()); }
  int partner(int v) const { return partner_.at(static_cast<std::size_t>(v)); }
  std::span<const int> partners() const noexcept { return partner_; }

  /// Edges sorted by their smaller endpoint.
  std::vector<Edge> edges() const;

  /// Relabels vertex v as (v + shift) mod 2k.
  Pairing rotated(int shift) const;

  friend bool operator==(const Pairing&, const Pairing&) = default;
  friend auto operator<=>(const Pairing& a, const Pairing& b) { return a.partner_ <=> b.partner_; }

 private:
  explicit Pairing(std::vector<int> partner) : partner_(std::move(partner)) {}
  std::vector<int> partner_;
};

/// True iff `partner` is a fixed-point-free involution of even length.
bool is_valid_partner_array(std::span<const int> partner) noexcept;

/// Visitor over every pairing of 2k vertices. Order: the smallest free
/// vertex is matched to each larger free vertex in increasing order, then
/// the rest is filled recursively. The span is only valid during the call.
using PairingVisitor = std::function<void(std::span<const int> partner)>;

/// Throws InvalidArgument for k < 1 or k > cap.
void for_each_pairing(int k, const PairingVisitor& visit, int cap = kDefaultEnumerationCap);

/// Same stream restricted to pairings where vertex 0 is matched to
/// `first_partner` (1 <= first_partner < 2k). Concatenating the shards for
/// first_partner = 1..2k-1 reproduces for_each_pairing exactly.
void for_each_pairing_in_shard(int k, int first_partner, const PairingVisitor& visit,
                               int cap = kDefaultEnumerationCap);

/// Materialized enumeration; meant for small k.
std::vector<Pairing> enumerate_pairings(int k, int cap = kDefaultEnumerationCap);

enum class EdgeClass : std::uint8_t { Crossing, Dividing, NonCrossingNonDividing };

struct EdgeClassification {
  std::vector<Edge> edges;             // same order as Pairing::edges()
  std::vector<EdgeClass> edge_class;   // parallel to edges
  int e = 0;                           // vertices lying on crossing edges
  int dividing_count = 0;              // dividing edges
  int partition_count = 0;             // crossing groups separated by dividing edges
};

/// Summary without per-edge labels, for hot loops.
struct CrossingSummary {
  int e = 0;
  int dividing_count = 0;
  int partition_count = 0;
  friend bool operator==(const CrossingSummary&, const CrossingSummary&) = default;
};

/// Reusable scratch space for classifying many pairings of any size.
///
/// An edge (a, b) crosses iff some vertex strictly inside the arc a..b has
/// its partner outside it; this is answered with range-min/max queries over
/// the partner array. A non-crossing edge divides iff both open arcs hold a
/// crossing vertex. Two crossing edges share a partition iff every dividing
/// edge has them on the same side.
class Classifier {
 public:
  /// Marks crossing vertices into `crossing` (size 2k) and returns e.
  int mark_crossing(std::span<const int> partner, std::vector<std::uint8_t>& crossing);

  int crossing_vertex_count(std::span<const int> partner);
  CrossingSummary summarize(std::span<const int> partner);
  EdgeClassification classify(std::span<const int> partner);

 private:
  void build_tables(std::span<const int> partner);
  bool edge_crosses(int a, int b) const;

  int levels_ = 0;
  int n_ = 0;
  std::vector<int> min_table_;
  std::vector<int> max_table_;
  std::vector<std::uint8_t> crossing_;
  std::vector<int> prefix_;
  std::vector<Edge> dividing_;
  std::vector<std::uint64_t> signatures_;
};

EdgeClassification classify(const Pairing& p);
CrossingSummary summarize(const Pairing& p);

}  // namespace signrmt
