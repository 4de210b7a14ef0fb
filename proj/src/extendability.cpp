#include "matchext/extendability.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <thread>

namespace matchext {

std::string ParameterCheck::describe() const {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " |V|=" + std::to_string(vertex_count) +
         " (n+2k <= |V|-2: " + (size_ok ? "yes" : "no") + ", |V|-n even: " + (parity_ok ? "yes" : "no") + ")";
}

ParameterCheck check_parameters(std::size_t vertex_count, std::size_t n, std::size_t k) {
  ParameterCheck c;
  c.n = n;
  c.k = k;
  c.vertex_count = vertex_count;
  c.size_ok = n + 2 * k + 2 <= vertex_count;
  c.parity_ok = n <= vertex_count && (vertex_count - n) % 2 == 0;
  return c;
}

const char* to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::NoKMatching: return "NO_K_MATCHING";
    case FailureKind::StuckMatching: return "STUCK_MATCHING";
  }
  return "?";
}

WorkBudget::WorkBudget(std::optional<std::uint64_t> pair_cap,
                       std::optional<std::chrono::steady_clock::duration> timeout)
    : pair_cap_(pair_cap) {
  if (timeout) deadline_ = std::chrono::steady_clock::now() + *timeout;
}

void WorkBudget::charge(std::uint64_t pairs) {
  const std::uint64_t before = spent_;
  spent_ += pairs;
  if (pair_cap_ && spent_ > *pair_cap_)
    throw WorkBudgetExceeded("pair cap of " + std::to_string(*pair_cap_) + " exceeded");
  // Reading the clock every pair would dominate small searches.
  if (deadline_ && (before >> 8) != (spent_ >> 8) && std::chrono::steady_clock::now() > *deadline_)
    throw WorkBudgetExceeded("instance timeout exceeded");
}

SubsetStream::SubsetStream(VertexMask within, std::size_t n) {
  for (Vertex v : set_of(within)) pool_.push_back(v);
  index_.resize(n);
  if (n > pool_.size()) done_ = true;
}

std::optional<VertexMask> SubsetStream::next() {
  if (done_) return std::nullopt;
  const std::size_t n = index_.size();
  if (!started_) {
    started_ = true;
    for (std::size_t i = 0; i < n; ++i) index_[i] = i;
  } else {
    std::size_t i = n;
    while (i > 0 && index_[i - 1] == pool_.size() - n + (i - 1)) --i;
    if (i == 0) {
      done_ = true;
      return std::nullopt;
    }
    ++index_[i - 1];
    for (std::size_t j = i; j < n; ++j) index_[j] = index_[j - 1] + 1;
  }
  VertexMask s = 0;
  for (std::size_t i : index_) s |= VertexMask{1} << pool_[i];
  return s;
}

namespace {

TutteCertificate certificate_for(const Graph& host, VertexMask leftover) {
  const InducedSubgraph sub = induced_subgraph(host, set_of(leftover));
  auto cert = find_tutte_certificate(sub.graph);
  // leftover has even order and no 1-factor, so a certificate exists.
  TutteCertificate out;
  out.s_prime = sub.original(cert->s_prime);
  for (const auto& c : cert->odd_components) out.odd_components.push_back(sub.original(c));
  out.deficiency_excess = cert->deficiency_excess;
  return out;
}

// Scans the S-subsets handed out by `subsets` in order, stopping at the first
// failure. `charge` is invoked once per examined (S, M) pair.
template <class Subsets, class Charge, class Cancelled>
ExtendabilityVerdict scan(MatchingOracle& oracle, VertexMask within, std::size_t k, Subsets& subsets,
                          Charge charge, Cancelled cancelled) {
  ExtendabilityVerdict verdict;
  verdict.holds = true;
  while (auto s = subsets.next()) {
    if (cancelled()) break;
    ++verdict.stats.subsets_examined;
    const VertexMask rest = within & ~*s;
    if (oracle.matching_number(rest) < k) {
      verdict.holds = false;
      verdict.failure = ExtendabilityFailure{FailureKind::NoKMatching, set_of(*s), std::nullopt, std::nullopt};
      return verdict;
    }
    KMatchingStream stream(oracle.edges_within(rest), k);
    while (auto m = stream.next()) {
      ++verdict.stats.pairs_examined;
      charge();
      const VertexMask leftover = rest & ~mask_of(*m);
      if (oracle.has_one_factor(leftover)) continue;
      verdict.holds = false;
      verdict.failure = ExtendabilityFailure{FailureKind::StuckMatching, set_of(*s), std::move(*m),
                                             certificate_for(oracle.host(), leftover)};
      return verdict;
    }
  }
  return verdict;
}

// Subsets of `within` whose smallest member is `first`.
class ChunkSubsets {
 public:
  ChunkSubsets(VertexMask within, Vertex first, std::size_t n)
      : first_(VertexMask{1} << first),
        inner_(within & ~((first_ << 1) - 1), n - 1) {}
  std::optional<VertexMask> next() {
    auto s = inner_.next();
    if (!s) return std::nullopt;
    return *s | first_;
  }

 private:
  VertexMask first_;
  SubsetStream inner_;
};

ExtendabilityVerdict parallel_scan(MatchingOracle& oracle, VertexMask within, std::size_t n, std::size_t k,
                                   const ExtendabilityOptions& options) {
  const VertexSet pool = set_of(within);
  const std::size_t chunks = pool.size();
  std::vector<std::optional<ExtendabilityVerdict>> results(chunks);
  std::atomic<std::size_t> next_chunk{0};
  std::atomic<std::size_t> first_failure{std::numeric_limits<std::size_t>::max()};
  std::mutex budget_mutex;
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    MatchingOracle local = oracle;
    for (;;) {
      const std::size_t c = next_chunk.fetch_add(1);
      if (c >= chunks || c > first_failure.load()) return;
      try {
        ChunkSubsets subsets(within, pool.members()[c], n);
        auto charge = [&] {
          if (!options.budget) return;
          std::lock_guard lock(budget_mutex);
          options.budget->charge(1);
        };
        auto cancelled = [&] { return c > first_failure.load(); };
        ExtendabilityVerdict v = scan(local, within, k, subsets, charge, cancelled);
        if (!v.holds) {
          std::size_t cur = first_failure.load();
          while (c < cur && !first_failure.compare_exchange_weak(cur, c)) {
          }
        }
        results[c] = std::move(v);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        first_failure.store(0);
        return;
      }
    }
  };

  std::vector<std::thread> threads;
  const unsigned count = std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(chunks, 1)));
  for (unsigned t = 0; t < count; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);

  // Ordered reduction: every chunk before the first failing one ran to completion.
  ExtendabilityVerdict out;
  out.holds = true;
  for (std::size_t c = 0; c < chunks; ++c) {
    const ExtendabilityVerdict& v = *results[c];
    out.stats.subsets_examined += v.stats.subsets_examined;
    out.stats.pairs_examined += v.stats.pairs_examined;
    if (!v.holds) {
      out.holds = false;
      out.failure = v.failure;
      break;
    }
  }
  return out;
}

}  // namespace

ExtendabilityVerdict is_nk_extendable(MatchingOracle& oracle, VertexMask within, std::size_t n, std::size_t k,
                                      const ExtendabilityOptions& options) {
  const ParameterCheck check = check_parameters(static_cast<std::size_t>(std::popcount(within)), n, k);
  if (!check.admissible()) throw InvalidParameters(check);

  if (options.jobs > 1 && n > 0) return parallel_scan(oracle, within, n, k, options);
  SubsetStream subsets(within, n);
  auto charge = [&] {
    if (options.budget) options.budget->charge(1);
  };
  return scan(oracle, within, k, subsets, charge, [] { return false; });
}

ExtendabilityVerdict is_nk_extendable(const Graph& g, std::size_t n, std::size_t k,
                                      const ExtendabilityOptions& options) {
  const ParameterCheck check = check_parameters(g, n, k);
  if (!check.admissible()) throw InvalidParameters(check);
  MatchingOracle oracle(g);
  return is_nk_extendable(oracle, full_mask(g.vertex_count()), n, k, options);
}

ExtendabilityVerdict is_k_extendable(const Graph& g, std::size_t k, const ExtendabilityOptions& options) {
  return is_nk_extendable(g, 0, k, options);
}

ExtendabilityVerdict is_n_factor_critical(const Graph& g, std::size_t n, const ExtendabilityOptions& options) {
  return is_nk_extendable(g, n, 0, options);
}

bool witness_is_valid(const Graph& g, std::size_t n, std::size_t k, const ExtendabilityVerdict& verdict) {
  if (verdict.holds) return !verdict.failure.has_value();
  if (!verdict.failure) return false;
  const ExtendabilityFailure& f = verdict.failure.value();
  if (f.s.size() != n) return false;
  try {
    require_within(g, f.s);
    if (f.kind == FailureKind::NoKMatching) return matching_number(delete_vertices(g, f.s).graph) < k;

    if (!f.m || !f.tutte || f.m->size() != k || !f.m->valid_in(g)) return false;
    const VertexSet covered = f.m->vertices();
    require_within(g, covered);
    if (!covered.disjoint(f.s)) return false;
    const InducedSubgraph rest = delete_vertices(g, f.s.united(covered));

    auto to_rest = [&](const VertexSet& s) -> std::optional<VertexSet> {
      std::vector<Vertex> out;
      for (Vertex v : s) {
        if (v >= g.vertex_count() || rest.to_new[v] < 0) return std::nullopt;
        out.push_back(static_cast<Vertex>(rest.to_new[v]));
      }
      return VertexSet(std::move(out));
    };
    TutteCertificate local;
    auto s_prime = to_rest(f.tutte->s_prime);
    if (!s_prime) return false;
    local.s_prime = *s_prime;
    for (const VertexSet& c : f.tutte->odd_components) {
      auto mapped = to_rest(c);
      if (!mapped) return false;
      local.odd_components.push_back(*mapped);
    }
    local.deficiency_excess = f.tutte->deficiency_excess;
    return certificate_is_valid(rest.graph, local);
  } catch (const Error&) {
    return false;
  }
}

std::vector<Extension> list_extensions(const Graph& g, std::size_t n, std::size_t k,
                                       std::optional<std::size_t> limit) {
  const ParameterCheck check = check_parameters(g, n, k);
  if (!check.admissible()) throw InvalidParameters(check);
  MatchingOracle oracle(g);
  const VertexMask all = full_mask(g.vertex_count());
  std::vector<Extension> out;
  SubsetStream subsets(all, n);
  while (auto s = subsets.next()) {
    const VertexMask rest = all & ~*s;
    KMatchingStream stream(oracle.edges_within(rest), k);
    while (auto m = stream.next()) {
      if (limit && out.size() >= *limit) return out;
      const VertexMask leftover = rest & ~mask_of(*m);
      Matching factor = oracle.maximum_matching(leftover);
      if (2 * factor.size() != static_cast<std::size_t>(std::popcount(leftover))) continue;
      out.push_back(Extension{set_of(*s), std::move(*m), std::move(factor)});
    }
  }
  return out;
}

}  // namespace matchext
