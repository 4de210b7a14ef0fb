#include "matchext/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "matchext/errors.hpp"
#include "matchext/extendability.hpp"
#include "matchext/families.hpp"
#include "matchext/graph_io.hpp"
#include "matchext/harness.hpp"
#include "matchext/report_json.hpp"

namespace matchext {

namespace {

struct Options {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t i = 1;
  std::string mode = "kext";
  std::string theorem;
  std::vector<std::string> graphs;
  std::vector<std::string> graph_files;
  std::string format = "graph6";
  std::string theorems;
  std::optional<std::size_t> max_vertices;
  std::optional<std::size_t> min_vertices;
  std::optional<std::size_t> random;
  std::uint64_t seed = 0;
  double edge_prob = 0.5;
  std::size_t n_max = 3;
  std::size_t k_max = 2;
  bool even_only = false;
  bool connected_only = false;
  bool all_rows = false;
  bool json = false;
  std::optional<std::size_t> limit;
  unsigned jobs = 1;
  std::optional<double> timeout;
  std::optional<std::uint64_t> pair_cap;
  std::string out;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto log = std::make_shared<spdlog::logger>("matchext", sink);
  log->set_pattern("matchext [%l] %v");
  log->set_level(spdlog::level::warn);
  if (const char* level = std::getenv("MATCHEXT_LOG")) log->set_level(spdlog::level::from_str(level));
  return log;
}

std::optional<std::chrono::steady_clock::duration> timeout_of(const Options& o) {
  if (!o.timeout) return std::nullopt;
  return std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*o.timeout));
}

GraphFormat format_of(const Options& o) { return o.format == "edges" ? GraphFormat::EdgeList : GraphFormat::Graph6; }

// The single graph named by --graph or --graph-file.
GraphDocument single_graph(const Options& o) {
  if (o.graphs.size() + o.graph_files.size() != 1)
    throw UsageError("exactly one of --graph or --graph-file is required");
  if (!o.graphs.empty()) return resolve_graph_ref(o.graphs.front());
  return load_graph_file(o.graph_files.front(), format_of(o));
}

void write(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Error("cannot write " + o.out);
  file << text;
}

int run_check(const Options& o, bool certify, std::ostream& out, spdlog::logger& log) {
  const GraphDocument doc = single_graph(o);
  const Graph& g = doc.resolved;
  log.info("checking ({}, {})-extendability on {} vertices", o.n, o.k, g.vertex_count());
  WorkBudget budget(o.pair_cap, timeout_of(o));
  ExtendabilityOptions options;
  options.jobs = o.jobs;
  if (!budget.unlimited()) options.budget = &budget;
  const ExtendabilityVerdict verdict = is_nk_extendable(g, o.n, o.k, options);

  nlohmann::json json = verdict_json(verdict);
  json["schema"] = kSchemaVersion;
  json["command"] = certify ? "certify" : "check";
  json["graph"] = graph_json(g);
  json["source"] = doc.payload;
  json["n"] = o.n;
  json["k"] = o.k;
  if (certify) {
    json["witness_valid"] = witness_is_valid(g, o.n, o.k, verdict);
    if (verdict.holds) {
      const auto extensions = list_extensions(g, o.n, o.k, o.limit);
      json["extensions"] = extensions_json(extensions);
      json["extensions_complete"] = !o.limit || extensions.size() < *o.limit;
    }
  }
  write(o, out, dump(json));
  return verdict.holds ? kExitOk : kExitNegative;
}

int run_family(const Options& o, std::ostream& out) {
  if (o.graphs.size() != 1) throw UsageError("family needs one reference h1:<n>:<k> or h2:<n>:<k>");
  const auto ref = parse_family_ref(o.graphs.front());
  if (!ref) throw UsageError("not a family reference: " + o.graphs.front());
  const FamilyInstance f = build_family(ref->kind, ref->n, ref->k);
  if (!o.json) {
    write(o, out, format_of(o) == GraphFormat::EdgeList ? serialize_edge_list(f.graph) : serialize_graph6(f.graph) + "\n");
    return kExitOk;
  }
  nlohmann::json blocks = nlohmann::json::array();
  for (const VertexSet& b : f.clique_blocks) blocks.push_back(b.members());
  nlohmann::json pendants = nlohmann::json::array();
  for (const Edge& e : f.pendant_matching) pendants.push_back({e.u, e.v});
  nlohmann::json json{{"schema", kSchemaVersion},
                      {"family", f.reference()},
                      {"graph", graph_json(f.graph)},
                      {"clique_blocks", blocks},
                      {"core", f.core.members()},
                      {"pendant_matching", pendants}};
  write(o, out, dump(json));
  return kExitOk;
}

int status_exit(Status s) {
  switch (s) {
    case Status::Confirmed:
    case Status::Vacuous: return kExitOk;
    case Status::Counterexample: return kExitNegative;
    case Status::Inadmissible: return kExitUsage;
    case Status::Aborted: return kExitAborted;
  }
  return kExitUsage;
}

int run_verify(const Options& o, std::ostream& out, spdlog::logger& log) {
  const auto id = parse_theorem_id(o.theorem);
  if (!id) throw UsageError("unknown theorem id '" + o.theorem + "'");
  const GraphDocument doc = single_graph(o);
  TheoremInstance instance{*id, o.n, o.k, o.i,
                           o.mode == "critical" ? CriticalMode::FactorCritical : CriticalMode::KExtendable};
  InstanceContext ctx(doc.resolved, doc.format == GraphFormat::FamilyRef ? doc.payload : std::string());
  ctx.set_limits(o.pair_cap, timeout_of(o));
  const TheoremReport report = run_validator(ctx, instance);
  if (report.status == Status::Inadmissible) log.error("{}", report.note);
  write(o, out, emit_report_json(report));
  return status_exit(report.status);
}

std::vector<TheoremId> parse_theorem_list(const std::string& text) {
  if (text.empty()) return {kAllTheorems.begin(), kAllTheorems.end()};
  std::vector<TheoremId> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto id = parse_theorem_id(item);
    if (!id) throw UsageError("unknown theorem id '" + item + "'");
    if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
  }
  return out;
}

int run_census_command(const Options& o, std::ostream& out, spdlog::logger& log) {
  CorpusSpec spec;
  nlohmann::json corpus;
  const bool files = !o.graphs.empty() || !o.graph_files.empty();
  if ((o.random.has_value() + files) > 1) throw UsageError("choose one corpus: --random, --graph/--graph-file, or --max-vertices");
  if (o.random) {
    if (!o.max_vertices) throw UsageError("--random needs --max-vertices");
    if (o.edge_prob < 0.0 || o.edge_prob > 1.0) throw UsageError("--edge-prob must lie in [0, 1]");
    RandomCorpus r{*o.random, o.min_vertices.value_or(*o.max_vertices), *o.max_vertices, o.edge_prob, o.seed};
    if (r.min_vertices > r.max_vertices) throw UsageError("--min-vertices exceeds --max-vertices");
    if (r.max_vertices > 64) throw UsageError("random graphs are limited to 64 vertices");
    spec.source = r;
    corpus = {{"source", "random"},     {"count", r.count}, {"min_vertices", r.min_vertices},
              {"max_vertices", r.max_vertices}, {"edge_probability", r.edge_probability}, {"seed", r.seed}};
  } else if (files) {
    FileCorpus f;
    f.paths = o.graphs;
    f.paths.insert(f.paths.end(), o.graph_files.begin(), o.graph_files.end());
    f.edge_lists = format_of(o) == GraphFormat::EdgeList;
    spec.source = f;
    corpus = {{"source", "files"}, {"paths", f.paths}, {"format", o.format}};
  } else {
    if (!o.max_vertices) throw UsageError("census needs --max-vertices, --random, or graph sources");
    spec.source = ExhaustiveCorpus{*o.max_vertices};
    corpus = {{"source", "exhaustive"}, {"max_vertices", *o.max_vertices}};
  }
  spec.filter = CorpusFilter{o.even_only, o.connected_only};
  corpus["even_order_only"] = o.even_only;
  corpus["connected_only"] = o.connected_only;

  const std::vector<TheoremId> theorems = parse_theorem_list(o.theorems);
  CensusOptions options;
  options.jobs = o.jobs;
  options.pair_cap = o.pair_cap;
  options.timeout_seconds = o.timeout;
  options.retain = o.all_rows ? RowRetention::All : RowRetention::Failures;

  nlohmann::json names = nlohmann::json::array();
  for (TheoremId id : theorems) names.push_back(to_string(id));
  nlohmann::json config{{"corpus", corpus},
                        {"theorems", names},
                        {"n_max", o.n_max},
                        {"k_max", o.k_max},
                        {"rows", o.all_rows ? "all" : "failures"}};
  if (o.pair_cap) config["pair_cap"] = *o.pair_cap;
  if (o.timeout) config["timeout_seconds"] = *o.timeout;

  const CensusResult result = run_census(spec, theorems, ParameterRanges{o.n_max, o.k_max}, options);
  for (const SourceError& e : result.summary.errors) log.error("{}: {}", e.source, e.message);
  log.info("census: {} graphs, {} instances", result.summary.graphs, result.summary.instances);
  write(o, out, emit_census_json(result, config));

  if (result.summary.count(Status::Counterexample) > 0) return kExitNegative;
  if (result.summary.count(Status::Aborted) > 0) return kExitAborted;
  if (!result.summary.errors.empty()) return kExitUsage;
  return kExitOk;
}

void add_graph_options(CLI::App& cmd, Options& o, bool repeatable) {
  auto* g = cmd.add_option("--graph", o.graphs, "graph6 string or family reference h1:<n>:<k> / h2:<n>:<k>");
  auto* f = cmd.add_option("--graph-file", o.graph_files, "file holding the graph");
  if (!repeatable) {
    g->expected(1);
    f->expected(1);
  }
  cmd.add_option("--format", o.format, "graph file format")->check(CLI::IsMember({"graph6", "edges"}));
}

void add_limit_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1U, 1024U));
  cmd.add_option("--timeout", o.timeout, "per-instance timeout in seconds")->check(CLI::PositiveNumber);
  cmd.add_option("--pair-cap", o.pair_cap, "per-instance cap on examined (S, M) pairs");
  cmd.add_option("--out", o.out, "write JSON here instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto log = make_logger(err);
  Options o;
  CLI::App app{"Matching extendability toolkit", args.empty() ? "matchext" : args.front()};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "decide (n, k)-extendability");
  auto* certify = app.add_subcommand("certify", "decide (n, k)-extendability with a full certificate");
  for (auto* cmd : {check, certify}) {
    cmd->add_option("--n", o.n, "size of the deleted vertex set");
    cmd->add_option("--k", o.k, "size of the matching to extend");
    add_graph_options(*cmd, o, false);
    add_limit_options(*cmd, o);
  }
  certify->add_option("--limit", o.limit, "stop listing extensions after this many");

  auto* family = app.add_subcommand("family", "emit an H1/H2 family member");
  family->add_option("ref", o.graphs, "h1:<n>:<k> or h2:<n>:<k>")->required()->expected(1);
  family->add_option("--format", o.format, "output format")->check(CLI::IsMember({"graph6", "edges"}));
  family->add_flag("--json", o.json, "emit JSON with the named parts");
  family->add_option("--out", o.out, "write here instead of stdout");

  auto* verify = app.add_subcommand("verify", "check one theorem instance on one graph");
  verify->add_option("--theorem", o.theorem, "T1 T2 T3 T4 TA TB TC L1 L2")->required();
  verify->add_option("--n", o.n, "n parameter");
  verify->add_option("--k", o.k, "k parameter");
  verify->add_option("--i", o.i, "matching size for TB");
  verify->add_option("--mode", o.mode, "TC specialization: kext uses --k, critical uses --n")
      ->check(CLI::IsMember({"kext", "critical"}));
  add_graph_options(*verify, o, false);
  add_limit_options(*verify, o);

  auto* census = app.add_subcommand("census", "run validators over a corpus");
  census->add_option("--theorems", o.theorems, "comma-separated theorem ids (default: all)");
  census->add_option("--max-vertices", o.max_vertices, "exhaustive order bound, or random order upper bound");
  census->add_option("--min-vertices", o.min_vertices, "random order lower bound (default: --max-vertices)");
  census->add_option("--random", o.random, "number of random graphs");
  census->add_option("--seed", o.seed, "random corpus seed");
  census->add_option("--edge-prob", o.edge_prob, "random edge probability");
  census->add_option("--n-max", o.n_max, "largest n swept");
  census->add_option("--k-max", o.k_max, "largest k swept");
  census->add_flag("--even-only", o.even_only, "keep even-order graphs only");
  census->add_flag("--connected-only", o.connected_only, "keep connected graphs only");
  census->add_flag("--all-rows", o.all_rows, "emit every non-inadmissible row, not only failures");
  add_graph_options(*census, o, true);
  add_limit_options(*census, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(o, false, out, *log);
    if (certify->parsed()) return run_check(o, true, out, *log);
    if (family->parsed()) return run_family(o, out);
    if (verify->parsed()) return run_verify(o, out, *log);
    return run_census_command(o, out, *log);
  } catch (const WorkBudgetExceeded& e) {
    log->error("aborted: {}", e.what());
    nlohmann::json json{{"schema", kSchemaVersion}, {"status", "ABORTED"}, {"note", e.what()}};
    write(o, out, dump(json));
    return kExitAborted;
  } catch (const std::exception& e) {
    log->error("{}", e.what());
    return kExitUsage;
  }
}

}  // namespace matchext
