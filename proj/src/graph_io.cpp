#include "matchext/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "matchext/errors.hpp"
#include "matchext/families.hpp"

namespace matchext {

namespace {

constexpr char kLow = 63;
constexpr char kHigh = 126;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) {
    text.remove_prefix(header.size());
    base = header.size();
  }
  text = trim(text);
  if (text.empty()) throw MalformedGraph6("empty graph6 string", base);
  if (text.front() == ':' || text.front() == ';') throw MalformedGraph6("sparse6/digraph6 is not supported", base);
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] < kLow || text[i] > kHigh) throw MalformedGraph6("byte outside 63..126", base + i);

  std::size_t pos = 0;
  std::size_t n = 0;
  auto take6 = [&](std::size_t groups) {
    std::size_t value = 0;
    for (std::size_t g = 0; g < groups; ++g) {
      if (pos >= text.size()) throw MalformedGraph6("truncated size header", base + pos);
      value = (value << 6) | static_cast<std::size_t>(text[pos++] - kLow);
    }
    return value;
  };
  if (text[0] != kHigh) {
    n = take6(1);
  } else if (text.size() > 1 && text[1] != kHigh) {
    ++pos;
    n = take6(3);
  } else {
    pos += 2;
    n = take6(6);
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected)
    throw MalformedGraph6("expected " + std::to_string(expected) + " adjacency bytes, found " +
                              std::to_string(text.size() - pos),
                          base + std::min(text.size(), pos + expected));
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int group = text[pos + bit / 6] - kLow;
      if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  return Graph(n, edges);
}

std::string serialize_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kLow));
  } else if (n <= 258047) {
    out.push_back(kHigh);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kLow));
  } else {
    out.append(2, kHigh);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kLow));
  }
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kLow));
        group = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + kLow));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> seen;

  auto parse_number = [&](std::string_view token, std::size_t& value) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'", line_no);
  };
  auto split = [](std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
      if (j > i) out.push_back(s.substr(i, j - i));
      i = j;
    }
    return out;
  };

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto tokens = split(body);
    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "n") throw ParseError("first line must be 'n <count>'", line_no);
      std::size_t count = 0;
      parse_number(tokens[1], count);
      n = count;
      seen.assign(count, std::vector<bool>(count, false));
      continue;
    }
    if (tokens.size() != 2) throw ParseError("expected 'u v'", line_no);
    std::size_t u = 0, v = 0;
    parse_number(tokens[0], u);
    parse_number(tokens[1], v);
    if (u >= *n || v >= *n) throw ParseError("vertex index out of range", line_no);
    if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u), line_no);
    if (seen[u][v]) throw DuplicateEdge("duplicate edge " + std::to_string(u) + "-" + std::to_string(v), line_no);
    seen[u][v] = seen[v][u] = true;
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) throw ParseError("missing 'n <count>' line", line_no == 0 ? 1 : line_no);
  return Graph(*n, edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

GraphDocument resolve_graph_ref(const std::string& text) {
  GraphDocument doc;
  doc.payload = text;
  if (auto ref = parse_family_ref(text)) {
    doc.format = GraphFormat::FamilyRef;
    doc.resolved = build_family(ref->kind, ref->n, ref->k).graph;
  } else {
    doc.format = GraphFormat::Graph6;
    doc.resolved = parse_graph6(text);
  }
  return doc;
}

GraphDocument load_graph_file(const std::string& path, GraphFormat format) {
  GraphDocument doc;
  doc.format = format;
  doc.payload = read_file(path);
  if (format == GraphFormat::EdgeList) {
    doc.resolved = parse_edge_list(doc.payload);
    return doc;
  }
  std::istringstream in(doc.payload);
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    if (format == GraphFormat::FamilyRef) return resolve_graph_ref(std::string(body));
    doc.resolved = parse_graph6(body);
    return doc;
  }
  throw MalformedGraph6("no graph in " + path, 0);
}

std::vector<Graph> load_graph6_file(const std::string& path) {
  const std::string content = read_file(path);
  std::istringstream in(content);
  std::string line;
  std::vector<Graph> out;
  while (std::getline(in, line)) {
    const std::string_view body = trim(line);
    if (!body.empty()) out.push_back(parse_graph6(body));
  }
  return out;
}

}  // namespace matchext
