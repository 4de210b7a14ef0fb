#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "matchext/errors.hpp"
#include "matchext/graph.hpp"
#include "matchext/matching.hpp"

namespace matchext {

/// Admissibility of (n, k) for a graph: n + 2k <= |V| - 2 and |V| - n even.
struct ParameterCheck {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t vertex_count = 0;
  bool size_ok = false;
  bool parity_ok = false;

  bool admissible() const noexcept { return size_ok && parity_ok; }
  std::string describe() const;
};

ParameterCheck check_parameters(std::size_t vertex_count, std::size_t n, std::size_t k);
inline ParameterCheck check_parameters(const Graph& g, std::size_t n, std::size_t k) {
  return check_parameters(g.vertex_count(), n, k);
}

class InvalidParameters : public Error {
 public:
  explicit InvalidParameters(const ParameterCheck& check)
      : Error("inadmissible parameters: " + check.describe()), check_(check) {}
  InvalidParameters(const ParameterCheck& check, const std::string& reason)
      : Error("inadmissible parameters: " + reason), check_(check) {}
  const ParameterCheck& check() const noexcept { return check_; }

 private:
  ParameterCheck check_;
};

enum class FailureKind { NoKMatching, StuckMatching };

const char* to_string(FailureKind kind);

/// Why (n, k)-extendability fails: G - s has no k-matching, or the k-matching
/// m of G - s leaves G - s - V(m) without a 1-factor, certified by `tutte`.
struct ExtendabilityFailure {
  FailureKind kind = FailureKind::NoKMatching;
  VertexSet s;
  std::optional<Matching> m;
  std::optional<TutteCertificate> tutte;
};

struct SearchStats {
  std::uint64_t subsets_examined = 0;
  std::uint64_t pairs_examined = 0;
};

struct ExtendabilityVerdict {
  bool holds = false;
  std::optional<ExtendabilityFailure> failure;
  SearchStats stats;
};

/// Work limits shared by every search run under one budget.
class WorkBudget {
 public:
  WorkBudget() = default;
  WorkBudget(std::optional<std::uint64_t> pair_cap, std::optional<std::chrono::steady_clock::duration> timeout);

  /// Counts `pairs` more (S, M) pairs; throws WorkBudgetExceeded past a limit.
  void charge(std::uint64_t pairs);
  bool unlimited() const noexcept { return !pair_cap_ && !deadline_; }

 private:
  std::optional<std::uint64_t> pair_cap_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t spent_ = 0;
};

struct ExtendabilityOptions {
  /// Worker threads partitioning the S-subset space; the verdict (witness and
  /// stats) is independent of this value.
  unsigned jobs = 1;
  WorkBudget* budget = nullptr;
};

/// Decides whether G[within] (a subgraph of the oracle's host) is
/// (n, k)-extendable. The witness is the lexicographically first failing S
/// (then M), in host numbering. Throws InvalidParameters when (n, k) is not
/// admissible for |within|.
ExtendabilityVerdict is_nk_extendable(MatchingOracle& oracle, VertexMask within, std::size_t n, std::size_t k,
                                      const ExtendabilityOptions& options = {});

ExtendabilityVerdict is_nk_extendable(const Graph& g, std::size_t n, std::size_t k,
                                      const ExtendabilityOptions& options = {});
ExtendabilityVerdict is_k_extendable(const Graph& g, std::size_t k, const ExtendabilityOptions& options = {});
ExtendabilityVerdict is_n_factor_critical(const Graph& g, std::size_t n, const ExtendabilityOptions& options = {});

/// Re-checks a verdict's failure witness from scratch with graph-core and
/// matching-engine primitives only. A verdict that holds is accepted when it
/// carries no failure.
bool witness_is_valid(const Graph& g, std::size_t n, std::size_t k, const ExtendabilityVerdict& verdict);

/// One (S, M) pair together with the 1-factor of G - S - V(M) extending it.
struct Extension {
  VertexSet s;
  Matching m;
  Matching factor;
};

/// Every (S, M) pair with its extension, in canonical order; used as the
/// positive certificate. Only meaningful when the verdict holds. Stops after
/// `limit` pairs when given.
std::vector<Extension> list_extensions(const Graph& g, std::size_t n, std::size_t k,
                                       std::optional<std::size_t> limit = std::nullopt);

/// Every member of `within` in ascending order, choose `n`, lexicographic.
class SubsetStream {
 public:
  SubsetStream(VertexMask within, std::size_t n);
  /// Next subset as a mask, or nullopt when exhausted.
  std::optional<VertexMask> next();

 private:
  std::vector<Vertex> pool_;
  std::vector<std::size_t> index_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace matchext
