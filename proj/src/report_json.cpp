#include "matchext/report_json.hpp"

#include "matchext/graph_io.hpp"

namespace matchext {

using nlohmann::json;

namespace {

json set_json(const VertexSet& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

json matching_json(const Matching& m) {
  json out = json::array();
  for (const Edge& e : m) out.push_back({e.u, e.v});
  return out;
}

json tutte_json(const TutteCertificate& t) {
  json comps = json::array();
  for (const VertexSet& c : t.odd_components) comps.push_back(set_json(c));
  return {{"s_prime", set_json(t.s_prime)}, {"odd_components", comps}, {"excess", t.deficiency_excess}};
}

json failure_json(const ExtendabilityFailure& f) {
  json out{{"kind", to_string(f.kind)}, {"s", set_json(f.s)}};
  if (f.m) out["m"] = matching_json(*f.m);
  if (f.tutte) out["tutte"] = tutte_json(*f.tutte);
  return out;
}

json failed_check_json(const FailedCheck& c) {
  return {{"deleted", set_json(c.deleted)}, {"n", c.n}, {"k", c.k}, {"verdict", verdict_json(c.verdict)}};
}

json counterexample_json(const Counterexample& c) {
  json out{{"summary", c.summary}};
  if (c.factor) out["factor"] = matching_json(*c.factor);
  if (c.matching) out["matching"] = matching_json(*c.matching);
  if (c.failed) out["failed_check"] = failed_check_json(*c.failed);
  return out;
}

json counts_json(const std::array<std::uint64_t, kStatusCount>& counts) {
  json out = json::object();
  for (std::size_t s = 0; s < kStatusCount; ++s) out[to_string(static_cast<Status>(s))] = counts[s];
  return out;
}

}  // namespace

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"graph6", serialize_graph6(g)}, {"vertex_count", g.vertex_count()}, {"edges", edges}};
}

json verdict_json(const ExtendabilityVerdict& v) {
  json out{{"holds", v.holds},
           {"stats", {{"subsets_examined", v.stats.subsets_examined}, {"pairs_examined", v.stats.pairs_examined}}}};
  out["failure"] = v.failure ? failure_json(*v.failure) : json(nullptr);
  return out;
}

json extensions_json(const std::vector<Extension>& extensions) {
  json out = json::array();
  for (const Extension& x : extensions)
    out.push_back({{"s", set_json(x.s)}, {"m", matching_json(x.m)}, {"factor", matching_json(x.factor)}});
  return out;
}

json report_json(const TheoremReport& r) {
  json params = json::object();
  for (const auto& [name, value] : r.instance.parameters()) params[name] = value;
  if (r.instance.theorem == TheoremId::TC)
    params["mode"] = r.instance.mode == CriticalMode::KExtendable ? "k_extendable" : "factor_critical";
  json clauses = json::array();
  for (const Clause& c : r.hypothesis_detail) clauses.push_back({{"clause", c.name}, {"holds", c.value}});
  json out{{"theorem", to_string(r.instance.theorem)},
           {"parameters", params},
           {"graph", r.graph},
           {"vertex_count", r.vertex_count},
           {"status", to_string(r.status)},
           {"hypothesis_detail", clauses},
           {"metrics", r.metrics}};
  out["conclusion"] = r.conclusion ? json(*r.conclusion) : json(nullptr);
  if (r.counterexample) out["counterexample"] = counterexample_json(*r.counterexample);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

json summary_json(const CensusSummary& s) {
  json per = json::object();
  std::array<std::uint64_t, kStatusCount> totals{};
  for (const auto& [id, counts] : s.per_theorem) {
    per[to_string(id)] = counts_json(counts);
    for (std::size_t i = 0; i < kStatusCount; ++i) totals[i] += counts[i];
  }
  json errors = json::array();
  for (const SourceError& e : s.errors) errors.push_back({{"source", e.source}, {"message", e.message}});
  return {{"graphs", s.graphs},
          {"instances", s.instances},
          {"per_theorem", per},
          {"totals", counts_json(totals)},
          {"errors", errors}};
}

std::string emit_verdict_json(const ExtendabilityVerdict& verdict, const Graph& g, std::size_t n, std::size_t k) {
  json doc = verdict_json(verdict);
  doc["schema"] = kSchemaVersion;
  doc["graph"] = graph_json(g);
  doc["n"] = n;
  doc["k"] = k;
  return dump(doc);
}

std::string emit_report_json(const TheoremReport& report) {
  json doc = report_json(report);
  doc["schema"] = kSchemaVersion;
  return dump(doc);
}

std::string emit_census_json(const CensusResult& result, const json& config) {
  json rows = json::array();
  for (const TheoremReport& r : result.reports) rows.push_back(report_json(r));
  json doc{{"schema", kSchemaVersion}, {"config", config}, {"summary", summary_json(result.summary)}, {"rows", rows}};
  return dump(doc);
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace matchext
