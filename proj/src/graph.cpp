#include "matchext/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "matchext/errors.hpp"

namespace matchext {

namespace {

const std::string kNoLabel;

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
  VertexSet s;
  for (Vertex v = first; v < last; ++v) s.members_.push_back(v);
  return s;
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::united(const VertexSet& other) const {
  VertexSet out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                      std::back_inserter(out.members_));
  return out;
}

bool VertexSet::disjoint(const VertexSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges)
    : adjacency_(vertex_count), matrix_(vertex_count * vertex_count, 0) {
  for (const Edge& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= vertex_count) throw std::invalid_argument("edge endpoint " + std::to_string(e.v) + " out of range");
    auto& cell = matrix_[e.u * vertex_count + e.v];
    if (cell) continue;
    cell = 1;
    matrix_[e.v * vertex_count + e.u] = 1;
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    ++edge_count_;
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

const std::string& Graph::label(Vertex v) const {
  return v < labels_.size() ? labels_[v] : kNoLabel;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  Graph g = *this;
  labels.resize(vertex_count());
  g.labels_ = std::move(labels);
  return g;
}

Graph Graph::with_label(const std::string& label) const {
  return with_labels(std::vector<std::string>(vertex_count(), label));
}

VertexSet InducedSubgraph::original(const VertexSet& s) const {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(original(v));
  return VertexSet(std::move(out));
}

std::vector<VertexSet> ComponentReport::odd_components() const {
  std::vector<VertexSet> out;
  for (const auto& c : components)
    if (c.size() % 2 == 1) out.push_back(c);
  return out;
}

Graph complete_graph(std::size_t m) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = u + 1; v < m; ++v) edges.emplace_back(u, v);
  return Graph(m, edges);
}

Graph empty_graph(std::size_t m) { return Graph(m, std::span<const Edge>{}); }

Graph path_graph(std::size_t m) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < m; ++v) edges.emplace_back(v - 1, v);
  return Graph(m, edges);
}

Graph cycle_graph(std::size_t m) {
  if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < m; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % m));
  return Graph(m, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, edges);
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.vertex_count();
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  bool labelled = false;
  Vertex offset = 0;
  for (const auto& p : parts) {
    for (Edge e : p.edges()) edges.emplace_back(e.u + offset, e.v + offset);
    for (Vertex v = 0; v < p.vertex_count(); ++v) labels.push_back(p.label(v));
    labelled = labelled || !p.labels().empty();
    offset += static_cast<Vertex>(p.vertex_count());
  }
  Graph g(total, edges);
  return labelled ? g.with_labels(std::move(labels)) : g;
}

Graph disjoint_union(std::initializer_list<Graph> parts) {
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

Graph repeat(const Graph& g, std::size_t copies) {
  std::vector<Graph> parts(copies, g);
  return disjoint_union(parts);
}

Graph join(const Graph& g, const Graph& h) {
  const Graph both = disjoint_union({g, h});
  std::vector<Edge> edges = both.edges();
  const auto gn = static_cast<Vertex>(g.vertex_count());
  for (Vertex a = 0; a < gn; ++a)
    for (Vertex b = 0; b < h.vertex_count(); ++b) edges.emplace_back(a, gn + b);
  Graph out(both.vertex_count(), edges);
  return both.labels().empty() ? out : out.with_labels(both.labels());
}

void require_within(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.members().back() >= g.vertex_count())
    throw OutOfRange("vertex " + std::to_string(s.members().back()) + " is not in a graph with " +
                     std::to_string(g.vertex_count()) + " vertices");
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  require_within(g, s);
  InducedSubgraph out;
  out.to_new.assign(g.vertex_count(), -1);
  for (Vertex v : s) {
    out.to_new[v] = static_cast<std::int64_t>(out.to_original.size());
    out.to_original.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (v < w && out.to_new[w] >= 0)
        edges.emplace_back(static_cast<Vertex>(out.to_new[v]), static_cast<Vertex>(out.to_new[w]));
  out.graph = Graph(s.size(), edges);
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (Vertex v : s) labels.push_back(g.label(v));
    out.graph = out.graph.with_labels(std::move(labels));
  }
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
  require_within(g, s);
  return induced_subgraph(g, g.vertices().minus(s));
}

std::vector<Edge> edges_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
  require_within(g, s);
  require_within(g, t);
  std::vector<Edge> out;
  for (Vertex a : s)
    for (Vertex b : g.neighbors(a))
      if (t.contains(b)) out.emplace_back(a, b);
  // Edges inside S ∩ T are found from both ends.
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ComponentReport components(const Graph& g) {
  ComponentReport report;
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> members;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    VertexSet c(std::move(members));
    (c.size() % 2 ? report.odd_count : report.even_count)++;
    report.components.push_back(std::move(c));
  }
  return report;
}

}  // namespace matchext
