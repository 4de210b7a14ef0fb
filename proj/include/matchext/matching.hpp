#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <unordered_map>
#include <span>
#include <vector>

#include "matchext/graph.hpp"

namespace matchext {

/// Pairwise vertex-disjoint edges in canonical (sorted) order.
class Matching {
 public:
  Matching() = default;
  /// Throws NotAMatching if two edges share a vertex or an edge is a loop.
  explicit Matching(std::vector<Edge> edges);
  Matching(std::initializer_list<Edge> edges) : Matching(std::vector<Edge>(edges)) {}

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }

  bool saturates(Vertex v) const noexcept { return v < saturated_.size() && saturated_[v]; }
  VertexSet vertices() const;
  /// Every edge is an edge of `g`.
  bool valid_in(const Graph& g) const;
  bool is_perfect_for(const Graph& g) const { return valid_in(g) && 2 * size() == g.vertex_count(); }

  friend bool operator==(const Matching& a, const Matching& b) { return a.edges_ == b.edges_; }
  friend auto operator<=>(const Matching& a, const Matching& b) { return a.edges_ <=> b.edges_; }

 private:
  std::vector<Edge> edges_;
  std::vector<bool> saturated_;
};

/// Vertex set S' with o(G - S') - |S'| >= 2, proving G has no 1-factor.
struct TutteCertificate {
  VertexSet s_prime;
  std::vector<VertexSet> odd_components;
  std::int64_t deficiency_excess = 0;

  friend bool operator==(const TutteCertificate&, const TutteCertificate&) = default;
};

/// Maximum matching by Edmonds' blossom algorithm. Roots and neighbours are
/// scanned in ascending order, so the result is a function of the graph.
Matching maximum_matching(const Graph& g);
std::size_t matching_number(const Graph& g);

bool has_one_factor(const Graph& g);
bool has_near_one_factor(const Graph& g);

/// Lazily enumerates all matchings of a fixed size over a sorted edge list,
/// in lexicographic order of the canonical edge lists.
class KMatchingStream {
 public:
  KMatchingStream(std::vector<Edge> edges, std::size_t k);

  std::optional<Matching> next();

 private:
  bool advance(std::size_t start);
  Matching current() const;

  std::vector<Edge> edges_;
  std::size_t k_;
  std::vector<std::size_t> chosen_;
  std::vector<std::uint32_t> used_;  // saturation counts per vertex
  bool started_ = false;
  bool done_ = false;
};

/// Enumerates perfect matchings in canonical order by pairing the lowest
/// unmatched vertex with each of its neighbours in ascending order.
class OneFactorStream {
 public:
  explicit OneFactorStream(const Graph& g);

  std::optional<Matching> next();

 private:
  bool descend();
  bool backtrack();

  const Graph* graph_;
  std::vector<std::int64_t> mate_;
  // One frame per chosen edge: the low vertex and the index into its neighbour list.
  std::vector<std::pair<Vertex, std::size_t>> frames_;
  bool started_ = false;
  bool done_ = false;
};

KMatchingStream enumerate_k_matchings(const Graph& g, std::size_t k);
/// Throws OddOrder if |V(g)| is odd.
OneFactorStream enumerate_one_factors(const Graph& g);

template <class Stream>
std::vector<Matching> collect(Stream stream) {
  std::vector<Matching> out;
  while (auto m = stream.next()) out.push_back(std::move(*m));
  return out;
}

/// Gallai–Edmonds Tutte set: S' = A(g), the neighbours of the vertices missed
/// by some maximum matching. Absent when |V| is odd or g has a 1-factor.
std::optional<TutteCertificate> find_tutte_certificate(const Graph& g);

/// Recomputes o(g - S') and checks the certificate's claims.
bool certificate_is_valid(const Graph& g, const TutteCertificate& cert);

/// Does g - s - V(m) have a 1-factor? Throws OverlapError if s meets V(m),
/// NotAMatching if m is not a matching of g, OutOfRange for bad indices.
bool has_extension(const Graph& g, const VertexSet& s, const Matching& m);

/// Bitmask over the vertices of a host graph with at most 64 vertices.
using VertexMask = std::uint64_t;

inline VertexMask mask_of(const VertexSet& s) {
  VertexMask m = 0;
  for (Vertex v : s) m |= VertexMask{1} << v;
  return m;
}
inline VertexMask full_mask(std::size_t n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }
VertexSet set_of(VertexMask mask);
VertexMask mask_of(const Matching& m);

/// Memoized matching numbers of the induced subgraphs of one host graph,
/// keyed by the mask of surviving vertices.
class MatchingOracle {
 public:
  /// Throws std::length_error for hosts with more than 64 vertices.
  explicit MatchingOracle(const Graph& host);

  const Graph& host() const noexcept { return *host_; }
  std::size_t matching_number(VertexMask alive);
  bool has_one_factor(VertexMask alive);
  /// A maximum matching of host[alive], in host numbering. Not memoized.
  Matching maximum_matching(VertexMask alive) const;
  /// Host edges with both ends in `alive`, sorted.
  std::vector<Edge> edges_within(VertexMask alive) const;

  std::size_t cache_size() const noexcept { return table_.size(); }

 private:
  const Graph* host_;
  std::vector<Edge> edges_;
  std::unordered_map<VertexMask, std::uint32_t> table_;
};

}  // namespace matchext
