#include "matchext/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <random>
#include <thread>

#include "matchext/errors.hpp"
#include "matchext/families.hpp"
#include "matchext/generate.hpp"
#include "matchext/graph_io.hpp"

namespace matchext {

const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
    case TheoremId::TA: return "TA";
    case TheoremId::TB: return "TB";
    case TheoremId::TC: return "TC";
    case TheoremId::L1: return "L1";
    case TheoremId::L2: return "L2";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  for (TheoremId id : kAllTheorems)
    if (text == to_string(id)) return id;
  return std::nullopt;
}

const char* to_string(Status status) {
  switch (status) {
    case Status::Confirmed: return "CONFIRMED";
    case Status::Vacuous: return "VACUOUS";
    case Status::Counterexample: return "COUNTEREXAMPLE";
    case Status::Inadmissible: return "INADMISSIBLE";
    case Status::Aborted: return "ABORTED";
  }
  return "?";
}

std::vector<std::pair<std::string, std::int64_t>> TheoremInstance::parameters() const {
  auto v = [](std::size_t x) { return static_cast<std::int64_t>(x); };
  switch (theorem) {
    case TheoremId::T1:
    case TheoremId::TA: return {{"k", v(k)}};
    case TheoremId::TB: return {{"k", v(k)}, {"i", v(i)}};
    case TheoremId::TC:
      return mode == CriticalMode::KExtendable ? std::vector<std::pair<std::string, std::int64_t>>{{"k", v(k)}}
                                               : std::vector<std::pair<std::string, std::int64_t>>{{"n", v(n)}};
    default: return {{"n", v(n)}, {"k", v(k)}};
  }
}

std::uint64_t CensusSummary::count(Status status) const {
  std::uint64_t total = 0;
  for (const auto& [id, counts] : per_theorem) total += counts[static_cast<std::size_t>(status)];
  return total;
}

std::uint64_t CensusSummary::count(TheoremId id, Status status) const {
  auto it = per_theorem.find(id);
  return it == per_theorem.end() ? 0 : it->second[static_cast<std::size_t>(status)];
}

InstanceContext::InstanceContext(Graph g, std::string descriptor)
    : graph_(std::move(g)),
      descriptor_(descriptor.empty() ? serialize_graph6(graph_) : std::move(descriptor)),
      oracle_(graph_) {}

void InstanceContext::set_limits(std::optional<std::uint64_t> pair_cap,
                                 std::optional<std::chrono::steady_clock::duration> timeout) {
  pair_cap_ = pair_cap;
  timeout_ = timeout;
}

void InstanceContext::begin_instance() { budget_ = WorkBudget(pair_cap_, timeout_); }

bool InstanceContext::admissible(VertexMask within, std::size_t n, std::size_t k) const {
  return check_parameters(static_cast<std::size_t>(std::popcount(within)), n, k).admissible();
}

const ExtendabilityVerdict& InstanceContext::verdict(VertexMask within, std::size_t n, std::size_t k) {
  const auto key = std::make_tuple(within, n, k);
  if (auto it = verdicts_.find(key); it != verdicts_.end()) return it->second;
  ExtendabilityOptions options;
  if (!budget_.unlimited()) options.budget = &budget_;
  return verdicts_.emplace(key, is_nk_extendable(oracle_, within, n, k, options)).first->second;
}

bool InstanceContext::extendable(VertexMask within, std::size_t n, std::size_t k) {
  if (!decider_) return verdict(within, n, k).holds;
  const auto key = std::make_tuple(within, n, k);
  if (auto it = decided_.find(key); it != decided_.end()) return it->second;
  const bool holds = decider_(graph_, within, n, k);
  decided_.emplace(key, holds);
  return holds;
}

FailedCheck InstanceContext::failed_check(VertexMask within, std::size_t n, std::size_t k) {
  return FailedCheck{set_of(all() & ~within), n, k, verdict(within, n, k)};
}

namespace {

VertexMask edge_mask(const Edge& e) { return (VertexMask{1} << e.u) | (VertexMask{1} << e.v); }

TheoremReport start(InstanceContext& ctx, const TheoremInstance& instance) {
  ctx.begin_instance();
  TheoremReport r;
  r.instance = instance;
  r.graph = ctx.descriptor();
  r.vertex_count = ctx.order();
  return r;
}

void require(const ParameterCheck& check, const std::string& what) {
  if (!check.admissible()) throw InvalidParameters(check, what + ": " + check.describe());
}

// Records a hypothesis clause; returns its value so callers can stop early.
bool clause(TheoremReport& r, std::string name, bool value) {
  r.hypothesis_detail.push_back(Clause{std::move(name), value});
  return value;
}

void conclude(InstanceContext& ctx, TheoremReport& r, VertexMask within, std::size_t n, std::size_t k,
              const std::string& summary) {
  r.conclusion = ctx.extendable(within, n, k);
  if (*r.conclusion) {
    r.status = Status::Confirmed;
    return;
  }
  r.status = Status::Counterexample;
  r.counterexample = Counterexample{summary, std::nullopt, std::nullopt, ctx.failed_check(within, n, k)};
}

// True when G - V(e) is (n, k)-extendable for every edge e; records the first failing edge.
bool every_edge_deletion(InstanceContext& ctx, std::size_t n, std::size_t k, TheoremReport& r) {
  for (const Edge& e : ctx.graph().edges())
    if (!ctx.extendable(ctx.all() & ~edge_mask(e), n, k)) {
      r.metrics["first_failing_edge_u"] = e.u;
      r.metrics["first_failing_edge_v"] = e.v;
      return false;
    }
  return true;
}

template <class Body>
TheoremReport guarded(TheoremReport r, Body body) {
  try {
    body(r);
  } catch (const WorkBudgetExceeded& e) {
    r.status = Status::Aborted;
    r.conclusion.reset();
    r.counterexample.reset();
    r.note = e.what();
  }
  return r;
}

TheoremReport theorem4_core(InstanceContext& ctx, const TheoremInstance& instance, std::size_t n, std::size_t k) {
  const std::size_t order = ctx.order();
  require(check_parameters(order, n, k), "G must be (n,k)-admissible");
  const bool degenerate = n == 0 && k == 0;
  if (!degenerate) require(check_parameters(order - 2, n, k), "each G-V(e) must be (n,k)-admissible");
  if (!ctx.has_one_factor(ctx.all())) throw NoOneFactor("graph has no 1-factor");

  return guarded(start(ctx, instance), [&](TheoremReport& r) {
    clause(r, "has_one_factor", true);
    if (degenerate) {
      // (0,0)-extendability is 1-factor existence, which is the precondition.
      r.conclusion = true;
      r.status = Status::Confirmed;
      r.note = "degenerate n=k=0";
      return;
    }
    const bool conclusion = ctx.extendable(ctx.all(), n, k);
    OneFactorStream factors(ctx.graph());
    std::int64_t examined = 0;
    std::optional<Matching> satisfying;
    while (auto f = factors.next()) {
      ++examined;
      const bool hyp = std::all_of(f->begin(), f->end(),
                                   [&](const Edge& e) { return ctx.extendable(ctx.all() & ~edge_mask(e), n, k); });
      if (hyp) {
        satisfying = std::move(*f);
        break;
      }
    }
    r.metrics["factors_examined"] = examined;
    if (!clause(r, "some_factor_edges_all_extendable", satisfying.has_value())) {
      r.status = Status::Vacuous;
      return;
    }
    r.conclusion = conclusion;
    if (conclusion) {
      r.status = Status::Confirmed;
      return;
    }
    r.status = Status::Counterexample;
    r.counterexample = Counterexample{"G - V(e) is (n,k)-extendable for every e in F, but G is not", satisfying,
                                      std::nullopt, ctx.failed_check(ctx.all(), n, k)};
  });
}

}  // namespace

TheoremReport verify_theorem1(InstanceContext& ctx, std::size_t k) {
  require(check_parameters(ctx.order(), 0, k + 1), "needs |V| >= 2k+4 and |V| even");
  return guarded(start(ctx, {TheoremId::T1, 0, k}), [&](TheoremReport& r) {
    r.status = Status::Vacuous;
    if (!clause(r, "has_one_factor", ctx.has_one_factor(ctx.all()))) return;
    if (!clause(r, "every_edge_deletion_k_extendable", every_edge_deletion(ctx, 0, k, r))) return;
    conclude(ctx, r, ctx.all(), 0, k + 1, "every G - V(e) is k-extendable, but G is not (k+1)-extendable");
  });
}

TheoremReport verify_theorem2(InstanceContext& ctx, std::size_t n, std::size_t k) {
  require(check_parameters(ctx.order(), n, k + 1), "needs (n,k+1) admissible for G");
  return guarded(start(ctx, {TheoremId::T2, n, k}), [&](TheoremReport& r) {
    r.status = Status::Vacuous;
    if (!clause(r, "has_edges", ctx.graph().edge_count() > 0)) return;
    if (!clause(r, "every_edge_deletion_extendable", every_edge_deletion(ctx, n, k, r))) return;
    conclude(ctx, r, ctx.all(), n, k + 1, "every G - V(e) is (n,k)-extendable, but G is not (n,k+1)-extendable");
  });
}

TheoremReport verify_theoremA(InstanceContext& ctx, std::size_t k) {
  require(check_parameters(ctx.order(), 0, k + 1), "needs |V| >= 2k+4 and |V| even");
  return guarded(start(ctx, {TheoremId::TA, 0, k}), [&](TheoremReport& r) {
    r.status = Status::Vacuous;
    if (!clause(r, "has_one_factor", ctx.has_one_factor(ctx.all()))) return;
    if (!clause(r, "every_edge_deletion_k_extendable", every_edge_deletion(ctx, 0, k, r))) return;
    conclude(ctx, r, ctx.all(), 0, k, "every G - V(e) is k-extendable, but G is not");
  });
}

TheoremReport verify_theorem3(InstanceContext& ctx, std::size_t n, std::size_t k) {
  if (n <= 1) throw InvalidParameters(check_parameters(ctx.order(), n, k), "Theorem 3 needs n > 1");
  require(check_parameters(ctx.order(), n + 2, k), "needs (n+2,k) admissible for G");
  return guarded(start(ctx, {TheoremId::T3, n, k}), [&](TheoremReport& r) {
    r.status = Status::Vacuous;
    if (!clause(r, "has_edges", ctx.graph().edge_count() > 0)) return;
    if (!clause(r, "order_at_most_2k+3n+4", ctx.order() <= 2 * k + 3 * n + 4)) return;
    if (!clause(r, "every_edge_deletion_extendable", every_edge_deletion(ctx, n, k, r))) return;
    conclude(ctx, r, ctx.all(), n + 2, k, "hypotheses hold, but G is not (n+2,k)-extendable");
  });
}

TheoremReport verify_theorem4(InstanceContext& ctx, std::size_t n, std::size_t k) {
  return theorem4_core(ctx, {TheoremId::T4, n, k}, n, k);
}

TheoremReport verify_theoremC(InstanceContext& ctx, CriticalMode mode, std::size_t value) {
  TheoremInstance instance{TheoremId::TC, 0, 0, 0, mode};
  if (mode == CriticalMode::KExtendable) {
    instance.k = value;
    return theorem4_core(ctx, instance, 0, value);
  }
  instance.n = value;
  return theorem4_core(ctx, instance, value, 0);
}

TheoremReport verify_theoremB(InstanceContext& ctx, std::size_t k, std::size_t i) {
  if (i < 1 || i > k) throw InvalidParameters(check_parameters(ctx.order(), 0, k), "Theorem B needs 1 <= i <= k");
  require(check_parameters(ctx.order(), 0, k), "needs (0,k) admissible for G");
  return guarded(start(ctx, {TheoremId::TB, 0, k, i}), [&](TheoremReport& r) {
    const bool lhs = clause(r, "k_extendable", ctx.extendable(ctx.all(), 0, k));
    KMatchingStream stream(ctx.graph().edges(), i);
    bool exists = false;
    std::optional<Matching> failing;
    while (auto m = stream.next()) {
      exists = true;
      if (!ctx.extendable(ctx.all() & ~mask_of(*m), 0, k - i)) {
        failing = std::move(*m);
        break;
      }
    }
    clause(r, "has_i_matching", exists);
    const bool rhs = clause(r, "every_i_matching_deletion_extendable", exists && !failing);
    r.conclusion = lhs == rhs;
    if (lhs == rhs) {
      r.status = Status::Confirmed;
      return;
    }
    r.status = Status::Counterexample;
    if (lhs) {
      r.counterexample = Counterexample{"G is k-extendable, but G - V(M) is not (k-i)-extendable", std::nullopt,
                                        failing, ctx.failed_check(ctx.all() & ~mask_of(*failing), 0, k - i)};
    } else {
      r.counterexample = Counterexample{"every G - V(M) is (k-i)-extendable, but G is not k-extendable",
                                        std::nullopt, std::nullopt, ctx.failed_check(ctx.all(), 0, k)};
    }
  });
}

TheoremReport verify_lemma1(InstanceContext& ctx, std::size_t n, std::size_t k) {
  if (n < 2) throw InvalidParameters(check_parameters(ctx.order(), n, k), "Lemma 1 needs n >= 2");
  require(check_parameters(ctx.order(), n, k), "needs (n,k) admissible for G");
  return guarded(start(ctx, {TheoremId::L1, n, k}), [&](TheoremReport& r) {
    r.status = Status::Vacuous;
    if (!clause(r, "nk_extendable", ctx.extendable(ctx.all(), n, k))) return;
    conclude(ctx, r, ctx.all(), n - 2, k + 1, "G is (n,k)-extendable, but not (n-2,k+1)-extendable");
  });
}

TheoremReport verify_lemma2(InstanceContext& ctx, std::size_t n, std::size_t k) {
  if (n < 2 && k == 0)
    throw InvalidParameters(check_parameters(ctx.order(), n, k), "Lemma 2 needs n >= 2 or k >= 1");
  require(check_parameters(ctx.order(), n, k), "needs (n,k) admissible for G");
  return guarded(start(ctx, {TheoremId::L2, n, k}), [&](TheoremReport& r) {
    r.status = Status::Vacuous;
    if (!clause(r, "nk_extendable", ctx.extendable(ctx.all(), n, k))) return;
    bool all = true;
    auto part = [&](std::size_t cn, std::size_t ck, const char* name, const char* summary) {
      const bool holds = ctx.extendable(ctx.all(), cn, ck);
      r.metrics[name] = holds ? 1 : 0;
      if (!holds && all) {
        all = false;
        r.counterexample = Counterexample{summary, std::nullopt, std::nullopt, ctx.failed_check(ctx.all(), cn, ck)};
      }
    };
    if (n >= 2) part(n - 2, k, "clause1_n-2_k_holds", "G is (n,k)-extendable, but not (n-2,k)-extendable");
    if (k >= 1) part(n, k - 1, "clause2_n_k-1_holds", "G is (n,k)-extendable, but not (n,k-1)-extendable");
    r.conclusion = all;
    r.status = all ? Status::Confirmed : Status::Counterexample;
  });
}

TheoremReport run_validator(InstanceContext& ctx, const TheoremInstance& instance) {
  try {
    switch (instance.theorem) {
      case TheoremId::T1: return verify_theorem1(ctx, instance.k);
      case TheoremId::T2: return verify_theorem2(ctx, instance.n, instance.k);
      case TheoremId::T3: return verify_theorem3(ctx, instance.n, instance.k);
      case TheoremId::T4: return verify_theorem4(ctx, instance.n, instance.k);
      case TheoremId::TA: return verify_theoremA(ctx, instance.k);
      case TheoremId::TB: return verify_theoremB(ctx, instance.k, instance.i);
      case TheoremId::TC:
        return verify_theoremC(ctx, instance.mode,
                               instance.mode == CriticalMode::KExtendable ? instance.k : instance.n);
      case TheoremId::L1: return verify_lemma1(ctx, instance.n, instance.k);
      case TheoremId::L2: return verify_lemma2(ctx, instance.n, instance.k);
    }
  } catch (const InvalidParameters& e) {
    TheoremReport r = start(ctx, instance);
    r.status = Status::Inadmissible;
    r.note = e.what();
    return r;
  } catch (const NoOneFactor& e) {
    TheoremReport r = start(ctx, instance);
    r.status = Status::Vacuous;
    clause(r, "has_one_factor", false);
    r.note = e.what();
    return r;
  }
  throw std::logic_error("unknown theorem id");
}

std::vector<TheoremInstance> instances_for(TheoremId id, const ParameterRanges& ranges) {
  std::vector<TheoremInstance> out;
  switch (id) {
    case TheoremId::T1:
    case TheoremId::TA:
      for (std::size_t k = 0; k <= ranges.k_max; ++k) out.push_back({id, 0, k});
      break;
    case TheoremId::TB:
      for (std::size_t k = 1; k <= ranges.k_max; ++k)
        for (std::size_t i = 1; i <= k; ++i) out.push_back({id, 0, k, i});
      break;
    case TheoremId::TC:
      for (std::size_t k = 0; k <= ranges.k_max; ++k) out.push_back({id, 0, k, 0, CriticalMode::KExtendable});
      for (std::size_t n = 1; n <= ranges.n_max; ++n) out.push_back({id, n, 0, 0, CriticalMode::FactorCritical});
      break;
    default:
      for (std::size_t n = 0; n <= ranges.n_max; ++n)
        for (std::size_t k = 0; k <= ranges.k_max; ++k) out.push_back({id, n, k});
  }
  return out;
}

namespace {

bool connected(const Graph& g) { return components(g).components.size() <= 1; }

bool passes(const CorpusFilter& f, const Graph& g) {
  if (f.even_order_only && g.vertex_count() % 2) return false;
  if (f.connected_only && !connected(g)) return false;
  return true;
}

Graph random_graph(std::mt19937_64& rng, const RandomCorpus& spec) {
  const std::size_t span = spec.max_vertices - spec.min_vertices + 1;
  const std::size_t n = spec.min_vertices + static_cast<std::size_t>(rng() % span);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      // Top 53 bits as a double in [0, 1), independent of the standard library's distributions.
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < spec.edge_probability) edges.emplace_back(u, v);
    }
  return Graph(n, edges);
}

}  // namespace

void for_each_corpus_graph(const CorpusSpec& spec,
                           const std::function<void(const Graph&, const std::string&)>& visit,
                           std::vector<SourceError>* errors) {
  auto emit = [&](const Graph& g, const std::string& descriptor) {
    if (passes(spec.filter, g)) visit(g, descriptor);
  };
  if (const auto* ex = std::get_if<ExhaustiveCorpus>(&spec.source)) {
    generate_graphs(ex->max_vertices, [&](const SmallGraph& s) {
      const Graph g = s.to_graph();
      emit(g, serialize_graph6(g));
    });
  } else if (const auto* rnd = std::get_if<RandomCorpus>(&spec.source)) {
    if (rnd->min_vertices > rnd->max_vertices) throw std::invalid_argument("random corpus: min_vertices > max_vertices");
    std::mt19937_64 rng(rnd->seed);
    for (std::size_t i = 0; i < rnd->count; ++i) {
      const Graph g = random_graph(rng, *rnd);
      emit(g, serialize_graph6(g));
    }
  } else {
    const auto& files = std::get<FileCorpus>(spec.source);
    for (const std::string& path : files.paths) {
      try {
        if (auto ref = parse_family_ref(path)) {
          emit(build_family(ref->kind, ref->n, ref->k).graph, path);
        } else if (files.edge_lists) {
          emit(load_graph_file(path, GraphFormat::EdgeList).resolved, path);
        } else {
          for (const Graph& g : load_graph6_file(path)) emit(g, serialize_graph6(g));
        }
      } catch (const std::exception& e) {
        if (!errors) throw;
        errors->push_back(SourceError{path, e.what()});
      }
    }
  }
}

namespace {

struct GraphOutcome {
  std::vector<TheoremReport> rows;
  std::map<TheoremId, std::array<std::uint64_t, kStatusCount>> counts;
  std::uint64_t instances = 0;
  std::optional<SourceError> error;
};

GraphOutcome process(const Graph& g, const std::string& descriptor, std::span<const TheoremId> theorems,
                     const ParameterRanges& ranges, const CensusOptions& options) {
  GraphOutcome out;
  if (g.vertex_count() > 64) {
    out.error = SourceError{descriptor, "graph has more than 64 vertices"};
    return out;
  }
  InstanceContext ctx(g, descriptor);
  std::optional<std::chrono::steady_clock::duration> timeout;
  if (options.timeout_seconds)
    timeout = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(*options.timeout_seconds));
  ctx.set_limits(options.pair_cap, timeout);
  if (options.decider) ctx.set_decider(options.decider);
  for (TheoremId id : theorems)
    for (const TheoremInstance& inst : instances_for(id, ranges)) {
      TheoremReport r = run_validator(ctx, inst);
      ++out.instances;
      ++out.counts[id][static_cast<std::size_t>(r.status)];
      if (r.status == Status::Inadmissible) continue;
      const bool failure = r.status == Status::Counterexample || r.status == Status::Aborted;
      if (options.retain == RowRetention::All || failure) out.rows.push_back(std::move(r));
    }
  return out;
}

}  // namespace

CensusResult run_census(const CorpusSpec& spec, std::span<const TheoremId> theorems, const ParameterRanges& ranges,
                        const CensusOptions& options) {
  CensusResult result;
  for (TheoremId id : theorems) result.summary.per_theorem[id] = {};

  std::vector<std::pair<Graph, std::string>> batch;
  auto flush = [&] {
    std::vector<GraphOutcome> outcomes(batch.size());
    const unsigned workers = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(batch.size())));
    if (workers == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i)
        outcomes[i] = process(batch[i].first, batch[i].second, theorems, ranges, options);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> threads;
      std::exception_ptr error;
      std::mutex error_mutex;
      for (unsigned t = 0; t < workers; ++t)
        threads.emplace_back([&] {
          for (std::size_t i; (i = next.fetch_add(1)) < batch.size();) {
            try {
              outcomes[i] = process(batch[i].first, batch[i].second, theorems, ranges, options);
            } catch (...) {
              std::lock_guard lock(error_mutex);
              if (!error) error = std::current_exception();
            }
          }
        });
      for (auto& t : threads) t.join();
      if (error) std::rethrow_exception(error);
    }
    // Merge in corpus order.
    for (GraphOutcome& o : outcomes) {
      if (o.error) {
        result.summary.errors.push_back(*o.error);
        continue;
      }
      ++result.summary.graphs;
      result.summary.instances += o.instances;
      for (const auto& [id, counts] : o.counts)
        for (std::size_t s = 0; s < kStatusCount; ++s) result.summary.per_theorem[id][s] += counts[s];
      for (TheoremReport& r : o.rows) result.reports.push_back(std::move(r));
    }
    batch.clear();
  };

  for_each_corpus_graph(
      spec,
      [&](const Graph& g, const std::string& descriptor) {
        batch.emplace_back(g, descriptor);
        if (batch.size() >= 1024) flush();
      },
      &result.summary.errors);
  flush();
  return result;
}

}  // namespace matchext
