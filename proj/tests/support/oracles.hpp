#pragma once

// Brute-force reference implementations. They read adjacency from Graph and
// nothing else, so they share no algorithmic code with the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "matchext/graph.hpp"

namespace oracle {

using matchext::Edge;
using matchext::Graph;
using matchext::Vertex;

using Mask = std::uint32_t;

inline std::vector<Mask> adjacency(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v)) adj[u] |= Mask{1} << v;
  return adj;
}

inline Mask all(std::size_t n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Does G[mask] have a perfect matching? Pairs the lowest vertex every possible way.
inline bool perfect(const std::vector<Mask>& adj, Mask mask) {
  if (mask == 0) return true;
  if (std::popcount(mask) % 2) return false;
  const int v = std::countr_zero(mask);
  const Mask rest = mask & ~(Mask{1} << v);
  for (Mask c = adj[v] & rest; c; c &= c - 1)
    if (perfect(adj, rest & ~(Mask{1} << std::countr_zero(c)))) return true;
  return false;
}

// Matching number of every induced subgraph, by DP over subsets (n <= 20).
inline std::vector<std::uint8_t> matching_table(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::uint8_t> nu(std::size_t{1} << n, 0);
  for (Mask mask = 1; mask < (Mask{1} << n); ++mask) {
    const int v = std::countr_zero(mask);
    const Mask rest = mask & ~(Mask{1} << v);
    std::uint8_t best = nu[rest];  // v unmatched
    for (Mask c = adj[v] & rest; c; c &= c - 1)
      best = std::max<std::uint8_t>(best, 1 + nu[rest & ~(Mask{1} << std::countr_zero(c))]);
    nu[mask] = best;
  }
  return nu;
}

inline std::size_t matching_number(const Graph& g) {
  return matching_table(adjacency(g)).back();
}

// Odd components of G[mask].
inline int odd_components(const std::vector<Mask>& adj, Mask mask) {
  int odd = 0;
  while (mask) {
    Mask comp = mask & (~mask + 1);
    for (Mask frontier = comp; frontier;) {
      Mask grow = 0;
      for (Mask f = frontier; f; f &= f - 1) grow |= adj[std::countr_zero(f)];
      grow &= mask & ~comp;
      comp |= grow;
      frontier = grow;
    }
    odd += std::popcount(comp) % 2;
    mask &= ~comp;
  }
  return odd;
}

// max over S of o(G - S) - |S|.
inline int max_deficiency(const Graph& g) {
  const auto adj = adjacency(g);
  const Mask full = all(g.vertex_count());
  int best = odd_components(adj, full);
  for (Mask s = 1; s <= full && s != 0; ++s) {
    best = std::max(best, odd_components(adj, full & ~s) - std::popcount(s));
    if (s == full) break;
  }
  return best;
}

inline std::vector<Edge> edges_in(const std::vector<Mask>& adj, Mask mask) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < adj.size(); ++u)
    if ((mask >> u) & 1U)
      for (Mask c = adj[u] & mask & ~((Mask{2} << u) - 1); c; c &= c - 1)
        out.emplace_back(u, static_cast<Vertex>(std::countr_zero(c)));
  return out;
}

// Calls visit(covered_mask) for every k-subset of `edges` that is a matching.
template <class Visit>
bool for_each_k_matching(const std::vector<Edge>& edges, std::size_t k, Visit&& visit, std::size_t from = 0,
                         Mask covered = 0) {
  if (k == 0) return visit(covered);
  for (std::size_t i = from; i < edges.size(); ++i) {
    const Mask e = (Mask{1} << edges[i].u) | (Mask{1} << edges[i].v);
    if (covered & e) continue;
    if (!for_each_k_matching(edges, k - 1, visit, i + 1, covered | e)) return false;
  }
  return true;
}

inline std::uint64_t count_k_matchings(const Graph& g, std::size_t k) {
  const auto adj = adjacency(g);
  std::uint64_t count = 0;
  for_each_k_matching(edges_in(adj, all(g.vertex_count())), k, [&](Mask) {
    ++count;
    return true;
  });
  return count;
}

inline std::uint64_t count_one_factors(const Graph& g) {
  if (g.vertex_count() % 2) return 0;
  return count_k_matchings(g, g.vertex_count() / 2);
}

// Literal double loop of the definition: every n-set S, G - S has a
// k-matching and every k-matching M of G - S leaves a perfectly matchable rest.
inline bool extendable(const Graph& g, std::size_t n, std::size_t k) {
  const auto adj = adjacency(g);
  const Mask full = all(g.vertex_count());
  for (Mask s = 0;; ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) == n) {
      const Mask rest = full & ~s;
      bool any = false;
      const bool ok = for_each_k_matching(edges_in(adj, rest), k, [&](Mask covered) {
        any = true;
        return perfect(adj, rest & ~covered);
      });
      if (!ok || !any) return false;
    }
    if (s == full) break;
  }
  return true;
}

// Direct k-extendability: a k-matching exists and each extends to a 1-factor.
inline bool k_extendable(const Graph& g, std::size_t k) {
  const auto adj = adjacency(g);
  const Mask full = all(g.vertex_count());
  bool any = false;
  const bool ok = for_each_k_matching(edges_in(adj, full), k, [&](Mask covered) {
    any = true;
    return perfect(adj, full & ~covered);
  });
  return ok && any;
}

// Direct n-factor-criticality: every n-set deletion leaves a 1-factor.
inline bool factor_critical(const Graph& g, std::size_t n) {
  const auto adj = adjacency(g);
  const Mask full = all(g.vertex_count());
  for (Mask s = 0;; ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) == n && !perfect(adj, full & ~s)) return false;
    if (s == full) break;
  }
  return true;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// Same graph with vertex v renamed perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.vertex_count(), edges);
}

}  // namespace oracle
