#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace matchext {

using Vertex = std::uint32_t;

/// Undirected edge stored with u < v once normalized.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool touches(Vertex x) const noexcept { return u == x || v == x; }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet range(Vertex first, Vertex last);  // [first, last)

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const noexcept;
  const std::vector<Vertex>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  VertexSet united(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  bool disjoint(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Vertex> members_;
};

/// Immutable simple undirected graph on vertices 0..vertex_count()-1.
///
/// Adjacency is kept both as sorted neighbour lists (scan order is ascending,
/// which the matching code relies on for determinism) and as a dense matrix
/// for constant-time adjacency tests. Labels are provenance metadata and take
/// no part in equality or in any algorithm.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints;
  /// repeated edges collapse.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);
  Graph(std::size_t vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return adjacency_.empty(); }

  bool adjacent(Vertex a, Vertex b) const noexcept {
    return a < vertex_count() && b < vertex_count() && matrix_[a * vertex_count() + b] != 0;
  }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const;
  VertexSet vertices() const { return VertexSet::range(0, static_cast<Vertex>(vertex_count())); }

  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;
  Graph with_label(const std::string& label) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Result of deleting vertices: the induced subgraph plus the index maps
/// between the subgraph's numbering and the original one.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;       // new index -> original index
  std::vector<std::int64_t> to_new;      // original index -> new index, -1 if deleted

  Vertex original(Vertex v) const { return to_original.at(v); }
  VertexSet original(const VertexSet& s) const;
  Edge original(Edge e) const { return Edge(original(e.u), original(e.v)); }
};

/// Connected components with odd/even counts; components sorted by smallest member.
struct ComponentReport {
  std::vector<VertexSet> components;
  std::size_t odd_count = 0;
  std::size_t even_count = 0;

  std::vector<VertexSet> odd_components() const;
};

Graph complete_graph(std::size_t m);
Graph empty_graph(std::size_t m);
Graph path_graph(std::size_t m);
Graph cycle_graph(std::size_t m);
Graph petersen_graph();

Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(std::initializer_list<Graph> parts);
/// Copies of `g`, `copies` times.
Graph repeat(const Graph& g, std::size_t copies);
Graph join(const Graph& g, const Graph& h);

/// G - S. Throws OutOfRange if `s` names a vertex outside `g`.
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s);
/// G[S].
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// E(S, T); an edge inside S ∩ T is reported once. Sorted.
std::vector<Edge> edges_between(const Graph& g, const VertexSet& s, const VertexSet& t);

ComponentReport components(const Graph& g);

/// Throws OutOfRange unless every member of `s` is a vertex of `g`.
void require_within(const Graph& g, const VertexSet& s);

}  // namespace matchext
