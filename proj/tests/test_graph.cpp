#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "matchext/errors.hpp"
#include "matchext/graph.hpp"
#include "support/oracles.hpp"

using namespace matchext;

TEST(Constructors, CompleteGraphSizes) {
  EXPECT_EQ(complete_graph(0).vertex_count(), 0U);
  EXPECT_EQ(complete_graph(1).vertex_count(), 1U);
  EXPECT_EQ(complete_graph(1).edge_count(), 0U);
  EXPECT_EQ(complete_graph(4).vertex_count(), 4U);
  EXPECT_EQ(complete_graph(4).edge_count(), 6U);
}

TEST(Constructors, PathsCyclesPetersen) {
  EXPECT_EQ(path_graph(4).edge_count(), 3U);
  EXPECT_EQ(cycle_graph(6).edge_count(), 6U);
  const Graph p = petersen_graph();
  EXPECT_EQ(p.vertex_count(), 10U);
  EXPECT_EQ(p.edge_count(), 15U);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3U);
}

TEST(Constructors, RejectsLoopsAndBadEndpoints) {
  EXPECT_THROW(Graph(3, {Edge(1, 1)}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {Edge(0, 3)}), std::invalid_argument);
}

TEST(Constructors, DuplicateEdgesCollapse) {
  const Graph g(3, {Edge(0, 1), Edge(1, 0), Edge(1, 2)});
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(DisjointUnion, Examples) {
  EXPECT_EQ(disjoint_union({complete_graph(1)}), complete_graph(1));
  const Graph u = disjoint_union({complete_graph(3), complete_graph(2)});
  EXPECT_EQ(u.vertex_count(), 5U);
  EXPECT_EQ(u.edge_count(), 4U);
  EXPECT_EQ(components(u).components.size(), 2U);
  const Graph m = repeat(complete_graph(2), 3);
  EXPECT_EQ(m.vertex_count(), 6U);
  EXPECT_EQ(m.edges(), (std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}}));
}

TEST(Join, Examples) {
  EXPECT_EQ(join(complete_graph(1), complete_graph(1)), complete_graph(2));
  EXPECT_EQ(join(complete_graph(2), complete_graph(2)), complete_graph(4));
  const Graph k22 = join(empty_graph(2), empty_graph(2));
  EXPECT_EQ(k22.edge_count(), 4U);
  EXPECT_FALSE(k22.adjacent(0, 1));
  EXPECT_FALSE(k22.adjacent(2, 3));
}

TEST(DeleteVertices, Examples) {
  EXPECT_EQ(delete_vertices(complete_graph(4), {0}).graph, complete_graph(3));
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(delete_vertices(c5, {}).graph, c5);
  const InducedSubgraph p = delete_vertices(path_graph(3), {1});
  EXPECT_EQ(p.graph, empty_graph(2));
  EXPECT_EQ(p.to_original, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(p.to_new, (std::vector<std::int64_t>{0, -1, 1}));
  EXPECT_THROW(delete_vertices(path_graph(3), {3}), OutOfRange);
}

TEST(DeleteVertices, MapsBackToOriginalEdges) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(rng, 9, 0.4);
    const VertexSet s{static_cast<Vertex>(trial % 9), static_cast<Vertex>((trial * 5 + 3) % 9)};
    const InducedSubgraph sub = delete_vertices(g, s);
    ASSERT_EQ(sub.graph.vertex_count(), 9 - s.size());
    std::size_t expected = 0;
    for (const Edge& e : g.edges()) expected += !s.contains(e.u) && !s.contains(e.v);
    EXPECT_EQ(sub.graph.edge_count(), expected);
    for (const Edge& e : sub.graph.edges()) EXPECT_TRUE(g.adjacent(sub.original(e.u), sub.original(e.v)));
  }
}

TEST(InducedSubgraph, KeepsOnlyChosenVertices) {
  const InducedSubgraph sub = induced_subgraph(cycle_graph(6), {0, 1, 2, 4});
  EXPECT_EQ(sub.graph.edge_count(), 2U);
  EXPECT_EQ(sub.original(VertexSet{0, 3}), (VertexSet{0, 4}));
}

TEST(EdgesBetween, Examples) {
  EXPECT_EQ(edges_between(complete_graph(4), {0, 1}, {2, 3}).size(), 4U);
  EXPECT_TRUE(edges_between(complete_graph(4), {}, {0, 1, 2, 3}).empty());
  EXPECT_TRUE(edges_between(path_graph(3), {0}, {2}).empty());
  // An edge inside the overlap is reported once.
  EXPECT_EQ(edges_between(complete_graph(3), {0, 1}, {0, 1}), (std::vector<Edge>{{0, 1}}));
}

TEST(Components, Examples) {
  EXPECT_EQ(components(complete_graph(1)).odd_count, 1U);
  const ComponentReport r = components(disjoint_union({complete_graph(3), complete_graph(2), complete_graph(1)}));
  EXPECT_EQ(r.odd_count, 2U);
  EXPECT_EQ(r.even_count, 1U);
  EXPECT_EQ(r.odd_components(), (std::vector<VertexSet>{{0, 1, 2}, {5}}));
  EXPECT_EQ(components(Graph()).odd_count, 0U);
}

TEST(Components, PartitionTheVertexSet) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 14, 0.15);
    const ComponentReport r = components(g);
    std::vector<Vertex> seen;
    for (const VertexSet& c : r.components) seen.insert(seen.end(), c.begin(), c.end());
    std::sort(seen.begin(), seen.end());
    std::vector<Vertex> want(g.vertex_count());
    std::iota(want.begin(), want.end(), 0);
    EXPECT_EQ(seen, want);
    EXPECT_EQ(r.odd_count + r.even_count, r.components.size());
    const auto adj = oracle::adjacency(g);
    EXPECT_EQ(static_cast<int>(r.odd_count), oracle::odd_components(adj, oracle::all(g.vertex_count())));
    for (const Edge& e : g.edges())
      for (const VertexSet& c : r.components) EXPECT_EQ(c.contains(e.u), c.contains(e.v));
  }
}

TEST(VertexSet, SetOperations) {
  const VertexSet a{3, 1, 2, 1};
  EXPECT_EQ(a.members(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(a.united({5, 0}), (VertexSet{0, 1, 2, 3, 5}));
  EXPECT_EQ(a.minus({2}), (VertexSet{1, 3}));
  EXPECT_TRUE(a.disjoint({0, 4}));
  EXPECT_FALSE(a.disjoint({3}));
  EXPECT_EQ(VertexSet::range(2, 5), (VertexSet{2, 3, 4}));
}

TEST(Labels, CarriedButIgnoredByEquality) {
  const Graph g = complete_graph(2).with_label("core");
  EXPECT_EQ(g.label(1), "core");
  EXPECT_EQ(g, complete_graph(2));
  const Graph u = disjoint_union({g, complete_graph(1).with_label("x")});
  EXPECT_EQ(u.label(2), "x");
}
