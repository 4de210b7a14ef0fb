#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "matchext/extendability.hpp"
#include "matchext/graph.hpp"
#include "matchext/matching.hpp"

namespace matchext {

enum class TheoremId { T1, T2, T3, T4, TA, TB, TC, L1, L2 };
inline constexpr std::array kAllTheorems{TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4, TheoremId::TA,
                                         TheoremId::TB, TheoremId::TC, TheoremId::L1, TheoremId::L2};

const char* to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view text);

enum class Status { Confirmed, Vacuous, Counterexample, Inadmissible, Aborted };
inline constexpr std::size_t kStatusCount = 5;
const char* to_string(Status status);

/// Which specialization Theorem C is checked for.
enum class CriticalMode { KExtendable, FactorCritical };

/// One validator invocation: a theorem and its parameters. Unused fields stay 0.
struct TheoremInstance {
  TheoremId theorem = TheoremId::T2;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t i = 0;
  CriticalMode mode = CriticalMode::KExtendable;

  /// Parameter names and values as they appear in reports.
  std::vector<std::pair<std::string, std::int64_t>> parameters() const;
};

struct Clause {
  std::string name;
  bool value = false;
};

/// A failed extendability verdict on G - deleted, in G's numbering.
struct FailedCheck {
  VertexSet deleted;
  std::size_t n = 0;
  std::size_t k = 0;
  ExtendabilityVerdict verdict;
};

struct Counterexample {
  std::string summary;
  std::optional<Matching> factor;    // the 1-factor F (T4, TC)
  std::optional<Matching> matching;  // the i-matching M (TB)
  std::optional<FailedCheck> failed;
};

struct TheoremReport {
  TheoremInstance instance;
  std::string graph;  // descriptor, graph6 unless the caller named it
  std::size_t vertex_count = 0;
  Status status = Status::Inadmissible;
  std::vector<Clause> hypothesis_detail;
  std::optional<bool> conclusion;
  std::optional<Counterexample> counterexample;
  std::map<std::string, std::int64_t> metrics;
  std::string note;
};

/// Decides extendability of host[within]; lets tests substitute an oracle.
using Decider = std::function<bool(const Graph& host, VertexMask within, std::size_t n, std::size_t k)>;

/// Validators for one graph share this: the matching memo, memoized
/// verdicts of induced subgraphs, and the per-instance work budget.
class InstanceContext {
 public:
  explicit InstanceContext(Graph g, std::string descriptor = {});
  InstanceContext(const InstanceContext&) = delete;
  InstanceContext& operator=(const InstanceContext&) = delete;

  const Graph& graph() const noexcept { return graph_; }
  const std::string& descriptor() const noexcept { return descriptor_; }
  VertexMask all() const noexcept { return full_mask(graph_.vertex_count()); }
  std::size_t order() const noexcept { return graph_.vertex_count(); }

  void set_decider(Decider decider) { decider_ = std::move(decider); }
  void set_limits(std::optional<std::uint64_t> pair_cap, std::optional<std::chrono::steady_clock::duration> timeout);
  /// Starts a fresh budget for the next validator call.
  void begin_instance();

  bool admissible(VertexMask within, std::size_t n, std::size_t k) const;
  bool extendable(VertexMask within, std::size_t n, std::size_t k);
  /// Engine verdict with witness, in host numbering.
  const ExtendabilityVerdict& verdict(VertexMask within, std::size_t n, std::size_t k);
  FailedCheck failed_check(VertexMask within, std::size_t n, std::size_t k);
  bool has_one_factor(VertexMask within) { return oracle_.has_one_factor(within); }
  MatchingOracle& oracle() noexcept { return oracle_; }

 private:
  Graph graph_;
  std::string descriptor_;
  MatchingOracle oracle_;
  Decider decider_;
  std::optional<std::uint64_t> pair_cap_;
  std::optional<std::chrono::steady_clock::duration> timeout_;
  WorkBudget budget_;
  std::map<std::tuple<VertexMask, std::size_t, std::size_t>, ExtendabilityVerdict> verdicts_;
  std::map<std::tuple<VertexMask, std::size_t, std::size_t>, bool> decided_;
};

// Each validator throws InvalidParameters for inadmissible parameters and
// reports ABORTED when the context's budget runs out.

TheoremReport verify_theorem1(InstanceContext& ctx, std::size_t k);
TheoremReport verify_theorem2(InstanceContext& ctx, std::size_t n, std::size_t k);
TheoremReport verify_theorem3(InstanceContext& ctx, std::size_t n, std::size_t k);
/// Throws NoOneFactor when the graph has no 1-factor.
TheoremReport verify_theorem4(InstanceContext& ctx, std::size_t n, std::size_t k);
/// Theorem 2's hypothesis with the conclusion weakened to (0, k);
/// the graph must have a 1-factor.
TheoremReport verify_theoremA(InstanceContext& ctx, std::size_t k);
/// The biconditional: k-extendable iff G - V(M) is (k-i)-extendable for
/// every i-matching M (and one exists). Requires 1 <= i <= k.
TheoremReport verify_theoremB(InstanceContext& ctx, std::size_t k, std::size_t i);
/// Theorem 4 at (0, value) or (value, 0). Throws NoOneFactor like verify_theorem4.
TheoremReport verify_theoremC(InstanceContext& ctx, CriticalMode mode, std::size_t value);
TheoremReport verify_lemma1(InstanceContext& ctx, std::size_t n, std::size_t k);
TheoremReport verify_lemma2(InstanceContext& ctx, std::size_t n, std::size_t k);

/// Dispatches on instance.theorem, turning InvalidParameters into an
/// INADMISSIBLE report and NoOneFactor into a VACUOUS one.
TheoremReport run_validator(InstanceContext& ctx, const TheoremInstance& instance);

struct ExhaustiveCorpus {
  std::size_t max_vertices = 0;
};

/// Reproducible G(n, p) graphs; order uniform in [min_vertices, max_vertices].
struct RandomCorpus {
  std::size_t count = 0;
  std::size_t min_vertices = 0;
  std::size_t max_vertices = 0;
  double edge_probability = 0.5;
  std::uint64_t seed = 0;
};

/// Each entry is a family reference (h1:<n>:<k>) or a path to a file of
/// graph6 lines (or one edge-list graph when `edge_lists` is set).
struct FileCorpus {
  std::vector<std::string> paths;
  bool edge_lists = false;
};

struct CorpusFilter {
  bool even_order_only = false;
  bool connected_only = false;
};

struct CorpusSpec {
  std::variant<ExhaustiveCorpus, RandomCorpus, FileCorpus> source;
  CorpusFilter filter;
};

struct ParameterRanges {
  std::size_t n_max = 0;
  std::size_t k_max = 0;
};

enum class RowRetention { All, Failures };

struct CensusOptions {
  unsigned jobs = 1;
  std::optional<std::uint64_t> pair_cap;
  std::optional<double> timeout_seconds;
  /// Failures keeps only COUNTEREXAMPLE and ABORTED rows.
  RowRetention retain = RowRetention::Failures;
  Decider decider;
};

struct SourceError {
  std::string source;
  std::string message;
};

struct CensusSummary {
  std::uint64_t graphs = 0;
  std::uint64_t instances = 0;
  std::map<TheoremId, std::array<std::uint64_t, kStatusCount>> per_theorem;
  std::vector<SourceError> errors;

  std::uint64_t count(Status status) const;
  std::uint64_t count(TheoremId id, Status status) const;
};

struct CensusResult {
  std::vector<TheoremReport> reports;
  CensusSummary summary;
};

/// Parameter choices a census sweeps for one theorem.
std::vector<TheoremInstance> instances_for(TheoremId id, const ParameterRanges& ranges);

/// Visits the corpus graphs in order with their descriptors. Unreadable
/// sources are reported through `errors` and skipped.
void for_each_corpus_graph(const CorpusSpec& spec,
                           const std::function<void(const Graph&, const std::string& descriptor)>& visit,
                           std::vector<SourceError>* errors = nullptr);

CensusResult run_census(const CorpusSpec& spec, std::span<const TheoremId> theorems, const ParameterRanges& ranges,
                        const CensusOptions& options = {});

}  // namespace matchext
