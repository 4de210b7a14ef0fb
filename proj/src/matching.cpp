#include "matchext/matching.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "matchext/errors.hpp"

namespace matchext {

namespace {

// Edmonds' blossom algorithm over the vertices of `g` accepted by `alive`.
// Returns mate[v] (or -1). Roots are tried in ascending order and each BFS
// scans neighbour lists in ascending order.
template <class Alive>
class Blossom {
 public:
  Blossom(const Graph& g, Alive alive)
      : g_(g), alive_(alive), n_(static_cast<int>(g.vertex_count())),
        mate_(n_, -1), parent_(n_), base_(n_), used_(n_), blossom_(n_), lca_mark_(n_) {
    queue_.reserve(n_);
  }

  std::vector<int> run() {
    for (int v = 0; v < n_; ++v) {
      if (!alive_(v) || mate_[v] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        const int pv = parent_[u];
        const int ppv = mate_[pv];
        mate_[u] = pv;
        mate_[pv] = u;
        u = ppv;
      }
    }
    return std::move(mate_);
  }

 private:
  int lca(int a, int b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
    for (;;) {
      a = base_[a];
      lca_mark_[a] = 1;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (lca_mark_[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    queue_.clear();
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int v = queue_[head];
      for (Vertex w : g_.neighbors(static_cast<Vertex>(v))) {
        const int to = static_cast<int>(w);
        if (!alive_(to) || base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!alive_(i) || !blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              queue_.push_back(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = 1;
          queue_.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  Alive alive_;
  int n_;
  std::vector<int> mate_, parent_, base_;
  std::vector<char> used_, blossom_, lca_mark_;
  std::vector<int> queue_;
};

template <class Alive>
std::vector<int> blossom_mates(const Graph& g, Alive alive) {
  return Blossom<Alive>(g, alive).run();
}

Matching matching_from_mates(const std::vector<int>& mate) {
  std::vector<Edge> edges;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v)
    if (mate[v] > v) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(mate[v]));
  return Matching(std::move(edges));
}

std::size_t count_pairs(const std::vector<int>& mate) {
  std::size_t paired = 0;
  for (int m : mate) paired += m != -1;
  return paired / 2;
}

struct AllAlive {
  bool operator()(int) const noexcept { return true; }
};

struct MaskAlive {
  VertexMask mask;
  bool operator()(int v) const noexcept { return (mask >> v) & 1U; }
};

struct AllBut {
  int skipped;
  bool operator()(int v) const noexcept { return v != skipped; }
};

}  // namespace

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u == e.v) throw NotAMatching("loop " + std::to_string(e.u) + "-" + std::to_string(e.v));
    e = Edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  Vertex top = 0;
  for (const Edge& e : edges_) top = std::max(top, e.v);
  saturated_.assign(edges_.empty() ? 0 : top + 1, false);
  for (const Edge& e : edges_) {
    if (saturated_[e.u] || saturated_[e.v])
      throw NotAMatching("edges share a vertex near " + std::to_string(e.u) + "-" + std::to_string(e.v));
    saturated_[e.u] = saturated_[e.v] = true;
  }
}

VertexSet Matching::vertices() const {
  std::vector<Vertex> out;
  for (const Edge& e : edges_) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  return VertexSet(std::move(out));
}

bool Matching::valid_in(const Graph& g) const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return g.adjacent(e.u, e.v); });
}

Matching maximum_matching(const Graph& g) { return matching_from_mates(blossom_mates(g, AllAlive{})); }

std::size_t matching_number(const Graph& g) { return count_pairs(blossom_mates(g, AllAlive{})); }

bool has_one_factor(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return n % 2 == 0 && 2 * matching_number(g) == n;
}

bool has_near_one_factor(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return n % 2 == 1 && 2 * matching_number(g) == n - 1;
}

KMatchingStream::KMatchingStream(std::vector<Edge> edges, std::size_t k) : edges_(std::move(edges)), k_(k) {
  std::sort(edges_.begin(), edges_.end());
  Vertex top = 0;
  for (const Edge& e : edges_) top = std::max(top, e.v);
  used_.assign(top + 1, 0);
}

bool KMatchingStream::advance(std::size_t start) {
  for (;;) {
    bool pushed = false;
    for (std::size_t i = start; i + (k_ - chosen_.size()) <= edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (used_[e.u] || used_[e.v]) continue;
      chosen_.push_back(i);
      used_[e.u] = used_[e.v] = 1;
      pushed = true;
      break;
    }
    if (pushed) {
      if (chosen_.size() == k_) return true;
      start = chosen_.back() + 1;
      continue;
    }
    if (chosen_.empty()) return false;
    const std::size_t last = chosen_.back();
    chosen_.pop_back();
    used_[edges_[last].u] = used_[edges_[last].v] = 0;
    start = last + 1;
  }
}

Matching KMatchingStream::current() const {
  std::vector<Edge> out;
  out.reserve(chosen_.size());
  for (std::size_t i : chosen_) out.push_back(edges_[i]);
  return Matching(std::move(out));
}

std::optional<Matching> KMatchingStream::next() {
  if (done_) return std::nullopt;
  bool ok;
  if (!started_) {
    started_ = true;
    if (k_ == 0) {
      done_ = true;
      return Matching{};
    }
    ok = advance(0);
  } else {
    const std::size_t last = chosen_.back();
    chosen_.pop_back();
    used_[edges_[last].u] = used_[edges_[last].v] = 0;
    ok = advance(last + 1);
  }
  if (!ok) {
    done_ = true;
    return std::nullopt;
  }
  return current();
}

OneFactorStream::OneFactorStream(const Graph& g) : graph_(&g), mate_(g.vertex_count(), -1) {
  if (g.vertex_count() % 2)
    throw OddOrder("graph with " + std::to_string(g.vertex_count()) + " vertices has no 1-factor to enumerate");
}

bool OneFactorStream::descend() {
  for (;;) {
    auto it = std::find(mate_.begin(), mate_.end(), -1);
    if (it == mate_.end()) return true;
    const auto u = static_cast<Vertex>(it - mate_.begin());
    auto nbrs = graph_->neighbors(u);
    bool placed = false;
    for (std::size_t idx = 0; idx < nbrs.size(); ++idx) {
      if (mate_[nbrs[idx]] != -1) continue;
      mate_[u] = nbrs[idx];
      mate_[nbrs[idx]] = u;
      frames_.emplace_back(u, idx);
      placed = true;
      break;
    }
    if (!placed) return false;
  }
}

bool OneFactorStream::backtrack() {
  while (!frames_.empty()) {
    auto [u, idx] = frames_.back();
    frames_.pop_back();
    auto nbrs = graph_->neighbors(u);
    mate_[nbrs[idx]] = -1;
    mate_[u] = -1;
    for (std::size_t next = idx + 1; next < nbrs.size(); ++next) {
      if (mate_[nbrs[next]] != -1) continue;
      mate_[u] = nbrs[next];
      mate_[nbrs[next]] = u;
      frames_.emplace_back(u, next);
      return true;
    }
  }
  return false;
}

std::optional<Matching> OneFactorStream::next() {
  if (done_) return std::nullopt;
  bool ok = false;
  if (!started_) {
    started_ = true;
    ok = descend();
  }
  while (!ok) {
    if (!backtrack()) {
      done_ = true;
      return std::nullopt;
    }
    ok = descend();
  }
  std::vector<Edge> edges;
  for (auto [u, idx] : frames_) edges.emplace_back(u, graph_->neighbors(u)[idx]);
  return Matching(std::move(edges));
}

KMatchingStream enumerate_k_matchings(const Graph& g, std::size_t k) { return KMatchingStream(g.edges(), k); }

OneFactorStream enumerate_one_factors(const Graph& g) { return OneFactorStream(g); }

std::optional<TutteCertificate> find_tutte_certificate(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n % 2) return std::nullopt;
  const std::size_t nu = matching_number(g);
  if (2 * nu == n) return std::nullopt;

  // D(g): vertices missed by some maximum matching.
  std::vector<char> in_d(n, 0);
  for (Vertex v = 0; v < n; ++v)
    in_d[v] = count_pairs(blossom_mates(g, AllBut{static_cast<int>(v)})) == nu;

  std::vector<Vertex> a;
  for (Vertex v = 0; v < n; ++v) {
    if (in_d[v]) continue;
    const auto nbrs = g.neighbors(v);
    if (std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return in_d[w] != 0; })) a.push_back(v);
  }

  TutteCertificate cert;
  cert.s_prime = VertexSet(std::move(a));
  const InducedSubgraph rest = delete_vertices(g, cert.s_prime);
  const ComponentReport report = components(rest.graph);
  for (const VertexSet& c : report.odd_components()) cert.odd_components.push_back(rest.original(c));
  cert.deficiency_excess =
      static_cast<std::int64_t>(report.odd_count) - static_cast<std::int64_t>(cert.s_prime.size());
  return cert;
}

bool certificate_is_valid(const Graph& g, const TutteCertificate& cert) {
  if (!cert.s_prime.empty() && cert.s_prime.members().back() >= g.vertex_count()) return false;
  const InducedSubgraph rest = delete_vertices(g, cert.s_prime);
  const ComponentReport report = components(rest.graph);
  std::vector<VertexSet> odd;
  for (const VertexSet& c : report.odd_components()) odd.push_back(rest.original(c));
  const auto excess = static_cast<std::int64_t>(report.odd_count) - static_cast<std::int64_t>(cert.s_prime.size());
  return odd == cert.odd_components && excess == cert.deficiency_excess && excess >= 2;
}

bool has_extension(const Graph& g, const VertexSet& s, const Matching& m) {
  require_within(g, s);
  const VertexSet covered = m.vertices();
  require_within(g, covered);
  if (!m.valid_in(g)) throw NotAMatching("matching uses an edge that is not in the graph");
  if (!s.disjoint(covered)) throw OverlapError("S meets V(M)");
  return has_one_factor(delete_vertices(g, s.united(covered)).graph);
}

VertexSet set_of(VertexMask mask) {
  std::vector<Vertex> out;
  while (mask) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return VertexSet(std::move(out));
}

VertexMask mask_of(const Matching& m) {
  VertexMask out = 0;
  for (const Edge& e : m) out |= (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
  return out;
}

MatchingOracle::MatchingOracle(const Graph& host) : host_(&host), edges_(host.edges()) {
  if (host.vertex_count() > 64)
    throw std::length_error("matching oracle supports at most 64 vertices, got " +
                            std::to_string(host.vertex_count()));
}

std::size_t MatchingOracle::matching_number(VertexMask alive) {
  if (auto it = table_.find(alive); it != table_.end()) return it->second;
  const auto size = static_cast<std::uint32_t>(count_pairs(blossom_mates(*host_, MaskAlive{alive})));
  table_.emplace(alive, size);
  return size;
}

bool MatchingOracle::has_one_factor(VertexMask alive) {
  const auto count = static_cast<std::size_t>(std::popcount(alive));
  return count % 2 == 0 && 2 * matching_number(alive) == count;
}

Matching MatchingOracle::maximum_matching(VertexMask alive) const {
  return matching_from_mates(blossom_mates(*host_, MaskAlive{alive}));
}

std::vector<Edge> MatchingOracle::edges_within(VertexMask alive) const {
  std::vector<Edge> out;
  for (const Edge& e : edges_)
    if (((alive >> e.u) & 1U) && ((alive >> e.v) & 1U)) out.push_back(e);
  return out;
}

}  // namespace matchext
