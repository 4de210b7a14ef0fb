#include "matchext/generate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace matchext {

std::size_t SmallGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (unsigned v = 0; v < n; ++v) twice += static_cast<std::size_t>(std::popcount(rows[v]));
  return twice / 2;
}

Graph SmallGraph::to_graph() const {
  std::vector<Edge> edges;
  for (unsigned v = 1; v < n; ++v)
    for (unsigned u = 0; u < v; ++u)
      if (adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

SmallGraph SmallGraph::from_graph(const Graph& g) {
  if (g.vertex_count() > 16)
    throw std::length_error("small graphs hold at most 16 vertices, got " + std::to_string(g.vertex_count()));
  SmallGraph s;
  s.n = static_cast<std::uint8_t>(g.vertex_count());
  for (const Edge& e : g.edges()) {
    s.rows[e.u] |= static_cast<std::uint16_t>(1U << e.v);
    s.rows[e.v] |= static_cast<std::uint16_t>(1U << e.u);
  }
  return s;
}

namespace {

// Ordered partition of the vertex set; each cell is a bit mask.
struct Partition {
  std::array<std::uint16_t, 16> cells{};
  unsigned count = 0;
};

// Equitable refinement. Every decision depends only on cell positions and
// neighbour counts, so the result commutes with relabelling.
void refine(const SmallGraph& g, Partition& p) {
  std::array<bool, 16> queued{};
  for (unsigned i = 0; i < p.count; ++i) queued[i] = true;
  for (;;) {
    unsigned w = 0;
    while (w < p.count && !queued[w]) ++w;
    if (w == p.count || p.count == g.n) return;
    queued[w] = false;
    const std::uint16_t splitter = p.cells[w];

    for (unsigned x = 0; x < p.count; ++x) {
      const std::uint16_t cell = p.cells[x];
      if (std::has_single_bit(cell)) continue;
      // Group the cell's vertices by neighbour count into the splitter.
      std::array<std::uint16_t, 17> by_count{};
      unsigned distinct = 0;
      for (std::uint16_t rest = cell; rest; rest &= rest - 1) {
        const unsigned v = static_cast<unsigned>(std::countr_zero(rest));
        const auto c = static_cast<unsigned>(std::popcount(static_cast<std::uint16_t>(g.rows[v] & splitter)));
        if (!by_count[c]) ++distinct;
        by_count[c] |= static_cast<std::uint16_t>(1U << v);
      }
      if (distinct == 1) continue;

      const unsigned extra = distinct - 1;
      for (unsigned i = p.count; i-- > x + 1;) {
        p.cells[i + extra] = p.cells[i];
        queued[i + extra] = queued[i];
      }
      unsigned at = x;
      for (unsigned c = 0; c <= 16; ++c) {
        if (!by_count[c]) continue;
        p.cells[at] = by_count[c];
        queued[at] = true;
        ++at;
      }
      p.count += extra;
      if (w > x) w += extra;
      x += extra;
    }
  }
}

std::uint64_t leaf_form(const SmallGraph& g, const Partition& p, std::array<std::uint8_t, 16>& order) {
  for (unsigned i = 0; i < g.n; ++i) order[i] = static_cast<std::uint8_t>(std::countr_zero(p.cells[i]));
  std::uint64_t form = 0;
  for (unsigned j = 1; j < g.n; ++j)
    for (unsigned i = 0; i < j; ++i) form = (form << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
  return form;
}

bool twins(const SmallGraph& g, unsigned u, unsigned v) {
  const auto bu = static_cast<std::uint16_t>(1U << u);
  const auto bv = static_cast<std::uint16_t>(1U << v);
  return (g.rows[u] & ~bv) == (g.rows[v] & ~bu);
}

// Individualization-refinement search for the maximum leaf form. Children of
// a node that differ by a transposition of twin vertices are explored once.
class Search {
 public:
  explicit Search(const SmallGraph& g) : g_(g) {}

  CanonicalLabeling run(Partition p) {
    refine(g_, p);
    visit(p);
    return best_;
  }

 private:
  void visit(const Partition& p) {
    if (p.count == g_.n) {
      std::array<std::uint8_t, 16> order{};
      const std::uint64_t form = leaf_form(g_, p, order);
      if (!found_ || form > best_.form) {
        found_ = true;
        best_.form = form;
        best_.order = order;
      } else if (form == best_.form) {
        best_.nontrivial_automorphisms = true;
      }
      return;
    }
    unsigned target = 0;
    while (std::has_single_bit(p.cells[target])) ++target;
    const std::uint16_t cell = p.cells[target];

    std::uint16_t explored = 0;
    for (std::uint16_t rest = cell; rest; rest &= rest - 1) {
      const unsigned v = static_cast<unsigned>(std::countr_zero(rest));
      bool skip = false;
      for (std::uint16_t e = explored; e; e &= e - 1)
        if (twins(g_, static_cast<unsigned>(std::countr_zero(e)), v)) {
          skip = true;
          break;
        }
      if (skip) {
        best_.nontrivial_automorphisms = true;
        continue;
      }
      explored |= static_cast<std::uint16_t>(1U << v);

      Partition child;
      child.count = p.count + 1;
      for (unsigned i = 0; i < target; ++i) child.cells[i] = p.cells[i];
      child.cells[target] = static_cast<std::uint16_t>(1U << v);
      child.cells[target + 1] = static_cast<std::uint16_t>(cell & ~(1U << v));
      for (unsigned i = target + 1; i < p.count; ++i) child.cells[i + 1] = p.cells[i];
      refine(g_, child);
      visit(child);
    }
  }

  const SmallGraph& g_;
  CanonicalLabeling best_;
  bool found_ = false;
};

// Cells of vertices grouped by ascending degree, optionally with `root` split off first.
Partition degree_partition(const SmallGraph& g, int root) {
  std::array<std::uint16_t, 17> by_degree{};
  for (unsigned v = 0; v < g.n; ++v) {
    if (static_cast<int>(v) == root) continue;
    by_degree[std::popcount(g.rows[v])] |= static_cast<std::uint16_t>(1U << v);
  }
  Partition p;
  if (root >= 0) p.cells[p.count++] = static_cast<std::uint16_t>(1U << root);
  for (auto cell : by_degree)
    if (cell) p.cells[p.count++] = cell;
  return p;
}

void require_canonical_order(const SmallGraph& g) {
  if (g.n > kMaxCanonicalOrder)
    throw std::length_error("canonical forms support at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
}

}  // namespace

CanonicalLabeling canonical_labeling(const SmallGraph& g) {
  require_canonical_order(g);
  if (g.n == 0) return {};
  return Search(g).run(degree_partition(g, -1));
}

std::uint64_t rooted_canonical_form(const SmallGraph& g, unsigned root) {
  require_canonical_order(g);
  return Search(g).run(degree_partition(g, static_cast<int>(root))).form;
}

namespace {

// Canonical vertex augmentation: a child is accepted when the new vertex lies
// in the canonically chosen orbit (maximum degree, then maximum neighbour
// degree sum, then maximum rooted canonical form). Isomorphic accepted
// children can only arise from the same parent via one of its
// automorphisms, so only children of symmetric parents are deduplicated.
template <class Visit>
void extend(const SmallGraph& parent, Visit&& visit) {
  const unsigned m = parent.n;  // index of the new vertex
  const bool symmetric = canonical_labeling(parent).nontrivial_automorphisms;
  std::array<unsigned, 16> degree{};
  unsigned top = 0;
  for (unsigned i = 0; i < m; ++i) {
    degree[i] = static_cast<unsigned>(std::popcount(parent.rows[i]));
    top = std::max(top, degree[i]);
  }
  std::vector<std::uint64_t> seen;

  SmallGraph child = parent;
  child.n = static_cast<std::uint8_t>(m + 1);
  const unsigned limit = 1U << m;
  for (unsigned nbrs = 0; nbrs < limit; ++nbrs) {
    const auto dv = static_cast<unsigned>(std::popcount(nbrs));
    if (dv < top) continue;

    std::array<unsigned, 16> deg = degree;
    for (unsigned i = 0; i < m; ++i) deg[i] += (nbrs >> i) & 1U;
    deg[m] = dv;
    std::uint16_t tied = static_cast<std::uint16_t>(1U << m);
    bool beaten = false;
    if (dv <= top + 1) {
      for (unsigned i = 0; i < m; ++i) {
        if (deg[i] > dv) beaten = true;
        if (deg[i] == dv) tied |= static_cast<std::uint16_t>(1U << i);
      }
    }
    if (beaten) continue;

    for (unsigned i = 0; i < m; ++i)
      child.rows[i] = static_cast<std::uint16_t>(parent.rows[i] | (((nbrs >> i) & 1U) << m));
    child.rows[m] = static_cast<std::uint16_t>(nbrs);

    if (!std::has_single_bit(tied)) {
      auto nbr_sum = [&](unsigned x) {
        unsigned s = 0;
        for (std::uint16_t r = child.rows[x]; r; r &= r - 1) s += deg[std::countr_zero(r)];
        return s;
      };
      const unsigned sv = nbr_sum(m);
      std::uint16_t still = 0;
      for (std::uint16_t t = tied; t; t &= t - 1) {
        const auto x = static_cast<unsigned>(std::countr_zero(t));
        const unsigned sx = nbr_sum(x);
        if (sx > sv) {
          beaten = true;
          break;
        }
        if (sx == sv) still |= static_cast<std::uint16_t>(1U << x);
      }
      if (beaten) continue;
      tied = still;
    }

    std::uint64_t key = 0;
    bool keyed = false;
    if (!std::has_single_bit(tied)) {
      key = rooted_canonical_form(child, m);
      keyed = true;
      for (std::uint16_t t = tied & ~(1U << m); t; t &= t - 1)
        if (rooted_canonical_form(child, static_cast<unsigned>(std::countr_zero(t))) > key) {
          beaten = true;
          break;
        }
      if (beaten) continue;
    }
    if (symmetric) {
      if (!keyed) key = rooted_canonical_form(child, m);
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
    }
    visit(child);
  }
}

}  // namespace

void generate_graphs(std::size_t max_vertices, const std::function<void(const SmallGraph&)>& visit) {
  if (max_vertices > kMaxCanonicalOrder)
    throw std::length_error("exhaustive generation supports at most " + std::to_string(kMaxCanonicalOrder) +
                            " vertices");
  std::vector<SmallGraph> level{SmallGraph{}};
  visit(level.front());
  for (std::size_t order = 1; order <= max_vertices; ++order) {
    const bool last = order == max_vertices;
    std::vector<SmallGraph> next;
    for (const SmallGraph& parent : level)
      extend(parent, [&](const SmallGraph& child) {
        visit(child);
        if (!last) next.push_back(child);
      });
    level = std::move(next);
  }
}

std::vector<SmallGraph> generate_graphs(std::size_t max_vertices) {
  std::vector<SmallGraph> out;
  generate_graphs(max_vertices, [&](const SmallGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace matchext
