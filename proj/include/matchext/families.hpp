#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matchext/graph.hpp"
#include "matchext/matching.hpp"

namespace matchext {

enum class FamilyKind { H1, H2 };

/// A sharpness example with its named parts.
///
/// Vertex numbering is fixed: the two (2n+1)-cliques first, then the core
/// clique, then the pendant K2 pairs.
struct FamilyInstance {
  FamilyKind kind = FamilyKind::H1;
  std::size_t n = 0;
  std::size_t k = 0;
  Graph graph;
  std::vector<VertexSet> clique_blocks;
  VertexSet core;
  Matching pendant_matching;

  std::string reference() const;  // "h1:<n>:<k>"
};

/// (2K_{2n+1}) + (K_n ∪ (k+2)K_2), where + is the graph join.
FamilyInstance build_h1(std::size_t n, std::size_t k);
/// (2K_{2n+1}) + (K_{n+2} ∪ kK_2).
FamilyInstance build_h2(std::size_t n, std::size_t k);
FamilyInstance build_family(FamilyKind kind, std::size_t n, std::size_t k);

/// Parses "h1:<n>:<k>" / "h2:<n>:<k>"; nullopt if `text` is not a family reference.
struct FamilyRef {
  FamilyKind kind;
  std::size_t n;
  std::size_t k;
};
std::optional<FamilyRef> parse_family_ref(const std::string& text);

}  // namespace matchext
