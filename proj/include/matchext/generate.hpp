#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "matchext/graph.hpp"

namespace matchext {

/// Graph on at most 16 vertices as adjacency bit rows.
struct SmallGraph {
  std::uint8_t n = 0;
  std::array<std::uint16_t, 16> rows{};

  bool adjacent(unsigned a, unsigned b) const noexcept { return (rows[a] >> b) & 1U; }
  std::size_t edge_count() const noexcept;
  Graph to_graph() const;
  /// Throws std::length_error above 16 vertices.
  static SmallGraph from_graph(const Graph& g);

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;
};

/// Orders up to this bound have canonical forms that fit in 64 bits.
inline constexpr std::size_t kMaxCanonicalOrder = 11;

struct CanonicalLabeling {
  /// Upper triangle of the relabelled adjacency matrix, column by column,
  /// most significant bit first. Equal forms <=> isomorphic graphs.
  std::uint64_t form = 0;
  /// order[i] is the vertex placed at canonical position i.
  std::array<std::uint8_t, 16> order{};
  /// Whether the search saw evidence of a non-identity automorphism.
  bool nontrivial_automorphisms = false;
};

CanonicalLabeling canonical_labeling(const SmallGraph& g);
/// Canonical form of g with `root` distinguished; equal for (g, u) and (g, w)
/// exactly when some automorphism maps u to w.
std::uint64_t rooted_canonical_form(const SmallGraph& g, unsigned root);

/// Visits one representative of every isomorphism class of graphs on
/// 0..max_vertices vertices, by increasing order, built by canonical vertex
/// augmentation. The visit order is deterministic. max_vertices <= 11.
void generate_graphs(std::size_t max_vertices, const std::function<void(const SmallGraph&)>& visit);

std::vector<SmallGraph> generate_graphs(std::size_t max_vertices);

}  // namespace matchext
