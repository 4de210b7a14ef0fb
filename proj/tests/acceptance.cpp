// Acceptance gate: one PASS/FAIL line per criterion.
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only (repeatable)

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "matchext/cli.hpp"
#include "matchext/extendability.hpp"
#include "matchext/families.hpp"
#include "matchext/generate.hpp"
#include "matchext/graph_io.hpp"
#include "matchext/harness.hpp"
#include "matchext/matching.hpp"
#include "support/oracles.hpp"

using namespace matchext;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "matchext");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

json set_json(const VertexSet& s) { return json(s.members()); }

json matching_json(const Matching& m) {
  json out = json::array();
  for (const Edge& e : m) out.push_back({e.u, e.v});
  return out;
}

Outcome criterion1() {
  const FamilyInstance h1 = build_h1(2, 0);
  const CliRun r = cli({"check", "--n", "2", "--k", "2", "--graph", "h1:2:0"});
  if (r.code != kExitNegative) return {false, "exit code " + std::to_string(r.code)};
  const json f = json::parse(r.out)["failure"];
  json blocks = json::array();
  for (const VertexSet& b : h1.clique_blocks) blocks.push_back(set_json(b));
  const bool ok = f["kind"] == "STUCK_MATCHING" && f["s"] == set_json(h1.core) &&
                  f["m"] == matching_json(h1.pendant_matching) && f["tutte"]["s_prime"] == json::array() &&
                  f["tutte"]["odd_components"] == blocks && f["tutte"]["excess"] == 2;
  return {ok, "S=" + f["s"].dump() + " M=" + f["m"].dump() + " S'=" + f["tutte"]["s_prime"].dump() +
                  " odd components " + f["tutte"]["odd_components"].dump()};
}

Outcome criterion2() {
  const FamilyInstance h1 = build_h1(2, 0);
  std::size_t passed = 0;
  const auto edges = h1.graph.edges();
  for (const Edge& e : edges) {
    const Graph rest = delete_vertices(h1.graph, {e.u, e.v}).graph;
    const CliRun r = cli({"check", "--n", "2", "--k", "0", "--graph", serialize_graph6(rest)});
    if (r.code != kExitOk || json::parse(r.out)["holds"] != true)
      return {false, "H1 - V(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not (2,0)-extendable"};
    ++passed;
  }
  return {passed == edges.size(), std::to_string(passed) + "/" + std::to_string(edges.size()) +
                                      " edge deletions of H1(2,0) are (2,0)-extendable"};
}

Outcome criterion3() {
  const FamilyInstance h2 = build_h2(1, 1);
  if (h2.graph.vertex_count() != 11) return {false, "H2(1,1) has " + std::to_string(h2.graph.vertex_count()) + " vertices"};
  std::size_t compatible = 0;
  std::string bad;
  for (const Edge& e : h2.graph.edges()) {
    const Graph rest = delete_vertices(h2.graph, {e.u, e.v}).graph;
    const bool holds = is_nk_extendable(rest, 1, 1).holds;
    if (holds != oracle::extendable(rest, 1, 1)) return {false, "engine and oracle disagree on H2 - V(e)"};
    if (holds)
      ++compatible;
    else
      bad += " (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
  }
  const CliRun r = cli({"check", "--n", "3", "--k", "1", "--graph", "h2:1:1"});
  const json f = json::parse(r.out)["failure"];
  const bool witness = r.code == kExitNegative && f["s"] == set_json(h2.core) &&
                       f["m"] == matching_json(h2.pendant_matching);
  std::string detail = "(3,1) witness S=" + f["s"].dump() + " M=" + f["m"].dump() + (witness ? " matches" : " differs") +
                       "; " + std::to_string(compatible) + "/" + std::to_string(h2.graph.edge_count()) +
                       " edge deletions (1,1)-extendable";
  if (!bad.empty()) detail += ", failing edges" + bad + " (confirmed by brute force)";
  return {witness && bad.empty(), detail};
}

// Brute-force maximum of o(G - S) - |S| on bit rows.
int brute_deficiency(const SmallGraph& g) {
  std::vector<oracle::Mask> adj(g.n);
  for (unsigned v = 0; v < g.n; ++v) adj[v] = g.rows[v];
  const oracle::Mask full = oracle::all(g.n);
  int best = 0;
  for (oracle::Mask s = 0; s <= full; ++s)
    best = std::max(best, oracle::odd_components(adj, full & ~s) - std::popcount(s));
  return best;
}

Outcome criterion4() {
  std::uint64_t checked = 0, mismatches = 0;
  generate_graphs(10, [&](const SmallGraph& s) {
    if (s.n % 2) return;
    const Graph g = s.to_graph();
    const auto cert = find_tutte_certificate(g);
    if (!cert) return;
    ++checked;
    if (cert->deficiency_excess != brute_deficiency(s) || !certificate_is_valid(g, *cert)) ++mismatches;
  });
  return {mismatches == 0 && checked > 0, std::to_string(checked) + " 1-factor-free even-order graphs, " +
                                              std::to_string(mismatches) + " mismatches"};
}

Outcome criterion5() {
  std::mt19937_64 rng(500);
  std::uniform_int_distribution<std::size_t> order(8, 12);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  int agree = 0;
  for (int i = 0; i < 500; ++i) {
    const Graph g = oracle::random_graph(rng, order(rng), density(rng));
    const Matching m = maximum_matching(g);
    agree += m.valid_in(g) && m.size() == oracle::matching_number(g);
  }
  return {agree == 500, std::to_string(agree) + "/500 random graphs agree with brute force"};
}

Outcome criterion6() {
  const std::array theorems{TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4,
                            TheoremId::TB, TheoremId::TC, TheoremId::L1, TheoremId::L2};
  CensusOptions options;
  options.jobs = std::max(1U, std::thread::hardware_concurrency());
  const CensusResult r = run_census(CorpusSpec{ExhaustiveCorpus{8}, {}}, theorems, {3, 2}, options);
  const auto bad = r.summary.count(Status::Counterexample);
  std::string detail = std::to_string(r.summary.graphs) + " graphs, " + std::to_string(r.summary.instances) +
                       " instances, " + std::to_string(r.summary.count(Status::Confirmed)) + " confirmed, " +
                       std::to_string(r.summary.count(Status::Vacuous)) + " vacuous, " + std::to_string(bad) +
                       " counterexamples";
  return {bad == 0 && r.summary.count(Status::Aborted) == 0 && r.summary.errors.empty() && r.summary.graphs == 13599,
          detail};
}

Outcome criterion7() {
  std::uint64_t kext = 0, crit = 0, mismatches = 0;
  generate_graphs(8, [&](const SmallGraph& s) {
    const Graph g = s.to_graph();
    const std::size_t order = g.vertex_count();
    MatchingOracle memo(g);
    const VertexMask all = full_mask(order);
    for (std::size_t k = 0; 2 * k + 2 <= order; ++k) {
      if (!check_parameters(order, 0, k).admissible()) continue;
      ++kext;
      mismatches += is_nk_extendable(memo, all, 0, k).holds != oracle::k_extendable(g, k);
    }
    for (std::size_t n = 0; n + 2 <= order; ++n) {
      if (!check_parameters(order, n, 0).admissible()) continue;
      ++crit;
      mismatches += is_nk_extendable(memo, all, n, 0).holds != oracle::factor_critical(g, n);
    }
  });
  return {mismatches == 0, std::to_string(kext) + " (0,k) and " + std::to_string(crit) + " (n,0) verdicts, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome criterion8() {
  const std::vector<std::vector<std::string>> runs{
      {"census", "--random", "200", "--min-vertices", "6", "--max-vertices", "11", "--seed", "8", "--all-rows"},
      {"census", "--max-vertices", "7", "--all-rows"},
  };
  std::size_t bytes = 0;
  for (const auto& args : runs) {
    const CliRun a = cli(args);
    const CliRun b = cli(args);
    auto parallel = args;
    parallel.insert(parallel.end(), {"--jobs", "4"});
    const CliRun c = cli(parallel);
    if (a.code != kExitOk || a.out != b.out || a.out != c.out) return {false, "outputs differ for " + args[1]};
    bytes += a.out.size();
  }
  return {true, "repeated and 4-job runs byte-identical (" + std::to_string(bytes) + " bytes compared)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "H1(2,0) is not (2,2)-extendable, exact witness", 60, criterion1},
      {2, "every H1(2,0) - V(e) is (2,0)-extendable", 600, criterion2},
      {3, "H2(1,1) hypothesis side and (3,1) witness", 600, criterion3},
      {4, "Tutte certificate excess equals maximum deficiency, <= 10 vertices", 1800, criterion4},
      {5, "maximum matching equals brute force on 500 random graphs", 300, criterion5},
      {6, "zero counterexamples on the <= 8 vertex census", 7200, criterion6},
      {7, "(0,k) and (n,0) verdicts equal direct checkers, <= 8 vertices", 3600, criterion7},
      {8, "census JSON is byte-identical across runs", 1800, criterion8},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      selected.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 2;
    }
  }
  bool all = true;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << ": " << o.detail
              << " (" << timing << ")" << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
