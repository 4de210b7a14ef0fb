#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "matchext/errors.hpp"
#include "matchext/families.hpp"
#include "matchext/generate.hpp"
#include "matchext/graph_io.hpp"
#include "support/oracles.hpp"

using namespace matchext;

namespace {

// Reference graph6 decoder written straight from the format description.
Graph decode_reference(const std::string& s) {
  std::size_t pos = 0, n = 0;
  if (s[0] != 126) {
    n = static_cast<std::size_t>(s[0] - 63);
    pos = 1;
  } else if (s[1] != 126) {
    n = (static_cast<std::size_t>(s[1] - 63) << 12) | (static_cast<std::size_t>(s[2] - 63) << 6) |
        static_cast<std::size_t>(s[3] - 63);
    pos = 4;
  } else {
    for (int i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::size_t>(s[i] - 63);
    pos = 8;
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = s[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  return Graph(n, edges);
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("matchext_io_" + name);
  std::ofstream(path, std::ios::binary) << contents;
  return path.string();
}

}  // namespace

TEST(Graph6, Examples) {
  const Graph k2 = parse_graph6("A_");
  EXPECT_EQ(k2.vertex_count(), 2U);
  EXPECT_EQ(k2.edge_count(), 1U);
  EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
  const Graph k1 = parse_graph6("@");
  EXPECT_EQ(k1.vertex_count(), 1U);
  EXPECT_EQ(k1.edge_count(), 0U);
  EXPECT_EQ(parse_graph6("?").vertex_count(), 0U);
}

TEST(Graph6, SerializesKnownStrings) {
  EXPECT_EQ(serialize_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(serialize_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(serialize_graph6(complete_graph(1)), "@");
  EXPECT_EQ(serialize_graph6(petersen_graph()), serialize_graph6(decode_reference(serialize_graph6(petersen_graph()))));
}

TEST(Graph6, HeaderAndWhitespaceAccepted) {
  EXPECT_EQ(parse_graph6(">>graph6<<C~"), complete_graph(4));
  EXPECT_EQ(parse_graph6("C~\n"), complete_graph(4));
}

TEST(Graph6, MalformedInputReportsOffset) {
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      parse_graph6(text);
    } catch (const MalformedGraph6& e) {
      return e.offset();
    }
    ADD_FAILURE() << "accepted '" << text << "'";
    return 0;
  };
  EXPECT_EQ(offset_of("C ~"), 1U);     // space is outside 63..126
  EXPECT_EQ(offset_of("C"), 1U);       // missing adjacency byte
  EXPECT_EQ(offset_of("C~~"), 2U);     // one byte too many
  EXPECT_EQ(offset_of("A\x3e"), 1U);   // byte 62
  EXPECT_THROW(parse_graph6(""), MalformedGraph6);
  EXPECT_THROW(parse_graph6(":Fa@x^"), MalformedGraph6);
  EXPECT_THROW(parse_graph6("~?"), MalformedGraph6);
}

TEST(Graph6, RoundTripEveryGraphUpToSeven) {
  generate_graphs(7, [](const SmallGraph& s) {
    const Graph g = s.to_graph();
    const std::string text = serialize_graph6(g);
    ASSERT_EQ(parse_graph6(text), g);
    ASSERT_EQ(decode_reference(text), g);
  });
}

TEST(Graph6, RoundTripRandomGraphsUpToTwelveAndLarger) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = oracle::random_graph(rng, trial % 13, 0.5);
    const std::string text = serialize_graph6(g);
    ASSERT_EQ(parse_graph6(text), g);
    ASSERT_EQ(decode_reference(text), g);
  }
  for (std::size_t n : {62U, 63U, 64U, 100U, 300U}) {
    const Graph g = oracle::random_graph(rng, n, 0.1);
    const std::string text = serialize_graph6(g);
    EXPECT_EQ(parse_graph6(text), g) << n;
    EXPECT_EQ(decode_reference(text), g) << n;
  }
}

TEST(EdgeList, Examples) {
  EXPECT_EQ(parse_edge_list("n 2\n0 1"), complete_graph(2));
  EXPECT_THROW(parse_edge_list("n 3\n0 0"), SelfLoop);
  EXPECT_THROW(parse_edge_list("n 2\n0 1\n1 0"), DuplicateEdge);
}

TEST(EdgeList, CommentsBlankLinesAndLineNumbers) {
  EXPECT_EQ(parse_edge_list("# comment\n\nn 3\n0 1\n\n1 2\n"), path_graph(3));
  try {
    parse_edge_list("n 3\n0 1\n# note\n1 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4U);
  }
  try {
    parse_edge_list("n 2\n0 1\n1 0\n");
    FAIL();
  } catch (const DuplicateEdge& e) {
    EXPECT_EQ(e.line(), 3U);
  }
  EXPECT_THROW(parse_edge_list("0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list(""), ParseError);
}

TEST(EdgeList, RoundTrip) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, trial % 12, 0.4);
    EXPECT_EQ(parse_edge_list(serialize_edge_list(g)), g);
  }
}

TEST(Resolve, FamilyReferenceOrGraph6) {
  const GraphDocument fam = resolve_graph_ref("h1:2:0");
  EXPECT_EQ(fam.format, GraphFormat::FamilyRef);
  EXPECT_EQ(fam.resolved, build_h1(2, 0).graph);
  const GraphDocument g6 = resolve_graph_ref("C~");
  EXPECT_EQ(g6.format, GraphFormat::Graph6);
  EXPECT_EQ(g6.resolved, complete_graph(4));
  EXPECT_THROW(resolve_graph_ref("h9:1:1"), MalformedGraph6);
}

TEST(Files, LoadGraph6AndEdgeLists) {
  const std::string g6 = temp_file("k2.g6", "A_\n");
  EXPECT_EQ(load_graph_file(g6, GraphFormat::Graph6).resolved, complete_graph(2));
  const std::string many = temp_file("many.g6", ">>graph6<<A_\n\nC~\n@\n");
  const auto graphs = load_graph6_file(many);
  ASSERT_EQ(graphs.size(), 3U);
  EXPECT_EQ(graphs[1], complete_graph(4));
  const std::string edges = temp_file("p3.txt", "n 3\n0 1\n1 2\n");
  EXPECT_EQ(load_graph_file(edges, GraphFormat::EdgeList).resolved, path_graph(3));
  EXPECT_THROW(load_graph_file("/nonexistent/matchext.g6", GraphFormat::Graph6), Error);
}
