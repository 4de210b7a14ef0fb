#include "matchext/families.hpp"

#include <regex>

namespace matchext {

namespace {

FamilyInstance build(FamilyKind kind, std::size_t n, std::size_t k, std::size_t core_size, std::size_t pendants) {
  const Graph block = complete_graph(2 * n + 1);
  const Graph blocks = disjoint_union({block.with_label("block A"), block.with_label("block B")});
  const Graph core = complete_graph(core_size).with_label(kind == FamilyKind::H1 ? "K_n core" : "K_{n+2} core");
  const Graph pendant = repeat(complete_graph(2), pendants).with_label("pendant K2");

  FamilyInstance out;
  out.kind = kind;
  out.n = n;
  out.k = k;
  out.graph = join(blocks, disjoint_union({core, pendant}));

  const auto b = static_cast<Vertex>(2 * n + 1);
  out.clique_blocks = {VertexSet::range(0, b), VertexSet::range(b, 2 * b)};
  const auto core_end = static_cast<Vertex>(2 * b + core_size);
  out.core = VertexSet::range(2 * b, core_end);
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < pendants; ++i) {
    const auto u = static_cast<Vertex>(core_end + 2 * i);
    pairs.emplace_back(u, u + 1);
  }
  out.pendant_matching = Matching(std::move(pairs));
  return out;
}

}  // namespace

std::string FamilyInstance::reference() const {
  return std::string(kind == FamilyKind::H1 ? "h1" : "h2") + ":" + std::to_string(n) + ":" + std::to_string(k);
}

FamilyInstance build_h1(std::size_t n, std::size_t k) { return build(FamilyKind::H1, n, k, n, k + 2); }

FamilyInstance build_h2(std::size_t n, std::size_t k) { return build(FamilyKind::H2, n, k, n + 2, k); }

FamilyInstance build_family(FamilyKind kind, std::size_t n, std::size_t k) {
  return kind == FamilyKind::H1 ? build_h1(n, k) : build_h2(n, k);
}

std::optional<FamilyRef> parse_family_ref(const std::string& text) {
  static const std::regex pattern(R"(^(h1|h2):([0-9]{1,3}):([0-9]{1,3})$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) return std::nullopt;
  return FamilyRef{m[1] == "h1" ? FamilyKind::H1 : FamilyKind::H2, std::stoul(m[2]), std::stoul(m[3])};
}

}  // namespace matchext
