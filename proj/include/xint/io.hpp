#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "xint/extremal.hpp"
#include "xint/families.hpp"
#include "xint/graph.hpp"

namespace xint {

struct TheoremReport;

// All external formats use 1-based vertex labels.

nlohmann::json vertex_set_to_json(VertexSet s);
VertexSet vertex_set_from_json(const nlohmann::json& j, int n);

/// {"n": <int>, "edges": [[u, v], ...]}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Sorted list of sorted vertex lists, e.g. [[1,3],[1,4]].
nlohmann::json family_to_json(const SetFamily& family);
/// `r` is required when the list is empty; otherwise it is read off the
/// first member (and checked against `r` if given).
SetFamily family_from_json(const nlohmann::json& j, const Graph& host, std::optional<int> r = std::nullopt);

/// [{"member": [..], "families": [..]}, ...] in member order.
nlohmann::json labeling_to_json(const Labeling& labeling, const SetFamily& family);

/// {"value", "labels", "engine", "optimal"} plus "nodes" unless `stable`.
nlohmann::json search_result_to_json(const SearchResult& result, const SetFamily& family, bool stable);
nlohmann::json intersecting_result_to_json(const SearchResult& result, const SetFamily& family, bool stable);
nlohmann::json optima_to_json(const OptimaList& optima, const SetFamily& family);

/// Report object; `stable` zeroes runtime_ms so identical runs produce
/// identical bytes.
nlohmann::json report_to_json(const TheoremReport& report, bool stable);
std::string report_csv_header();
std::string report_csv_row(const TheoremReport& report, bool stable);

}  // namespace xint
