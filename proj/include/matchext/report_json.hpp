#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "matchext/extendability.hpp"
#include "matchext/harness.hpp"

namespace matchext {

inline constexpr const char* kSchemaVersion = "matchext/1";

// Objects use sorted keys, so dumps are deterministic for equal inputs.
// Vertex indices are in the numbering of the graph the verdict refers to.

nlohmann::json graph_json(const Graph& g);
nlohmann::json verdict_json(const ExtendabilityVerdict& verdict);
nlohmann::json extensions_json(const std::vector<Extension>& extensions);
nlohmann::json report_json(const TheoremReport& report);
nlohmann::json summary_json(const CensusSummary& summary);

/// Verdict of `check` on `g`, including the edge list so the witness can be
/// re-checked offline.
std::string emit_verdict_json(const ExtendabilityVerdict& verdict, const Graph& g, std::size_t n, std::size_t k);
std::string emit_report_json(const TheoremReport& report);
std::string emit_census_json(const CensusResult& result, const nlohmann::json& config);

/// Pretty-printed with a trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace matchext
