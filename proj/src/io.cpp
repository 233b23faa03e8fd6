#include "xint/io.hpp"

#include <sstream>
#include <stdexcept>

#include "xint/theorems.hpp"

namespace xint {

using nlohmann::json;

json vertex_set_to_json(VertexSet s) {
  json out = json::array();
  s.for_each([&](Vertex v) { out.push_back(v + 1); });
  return out;
}

VertexSet vertex_set_from_json(const json& j, int n) {
  if (!j.is_array()) throw std::invalid_argument("vertex set must be a JSON list");
  VertexSet s;
  for (const json& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("vertex labels must be integers");
    const int v = x.get<int>();
    if (v < 1 || v > n) throw std::invalid_argument("vertex label " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    if (s.contains(v - 1)) throw std::invalid_argument("vertex label " + std::to_string(v) + " repeated");
    s = s.with(v - 1);
  }
  return s;
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
    throw std::invalid_argument("graph JSON needs an integer \"n\"");
  const int n = j.at("n").get<int>();
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph order out of range");
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) throw std::invalid_argument("\"edges\" must be a list");
    for (const json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw std::invalid_argument("each edge must be a pair of integers");
      const int u = e[0].get<int>();
      const int v = e[1].get<int>();
      if (u < 1 || u > n || v < 1 || v > n) throw std::invalid_argument("edge endpoint out of range");
      edges.emplace_back(u - 1, v - 1);
    }
  }
  return Graph::from_edges(n, edges);
}

json family_to_json(const SetFamily& family) {
  json out = json::array();
  for (VertexSet s : family) out.push_back(vertex_set_to_json(s));
  return out;
}

SetFamily family_from_json(const json& j, const Graph& host, std::optional<int> r) {
  if (!j.is_array()) throw std::invalid_argument("family must be a JSON list of vertex lists");
  std::vector<VertexSet> members;
  for (const json& m : j) members.push_back(vertex_set_from_json(m, host.order()));
  if (!r) {
    if (members.empty()) throw std::invalid_argument("r is required for an empty family");
    r = members.front().size();
  }
  return SetFamily::from_members(host, *r, std::move(members));
}

json labeling_to_json(const Labeling& labeling, const SetFamily& family) {
  if (labeling.labels().size() != family.size()) throw std::invalid_argument("labeling does not match family");
  json out = json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    json families = json::array();
    for (int f = 1; f <= labeling.k(); ++f)
      if (labeling[i].contains(f)) families.push_back(f);
    out.push_back({{"member", vertex_set_to_json(family[i])}, {"families", std::move(families)}});
  }
  return out;
}

json search_result_to_json(const SearchResult& result, const SetFamily& family, bool stable) {
  json out = {{"value", result.value},
              {"labels", labeling_to_json(result.witness, family)},
              {"engine", engine_name(result.engine)},
              {"optimal", result.optimal}};
  if (!stable) out["nodes"] = result.nodes;
  return out;
}

json intersecting_result_to_json(const SearchResult& result, const SetFamily& family, bool stable) {
  json members = json::array();
  for (std::size_t i : result.selected) members.push_back(vertex_set_to_json(family[i]));
  json out = {{"value", result.value}, {"family", std::move(members)}, {"engine", engine_name(result.engine)},
              {"optimal", result.optimal}};
  if (!stable) out["nodes"] = result.nodes;
  return out;
}

json optima_to_json(const OptimaList& optima, const SetFamily& family) {
  json list = json::array();
  for (const Labeling& l : optima.labelings) list.push_back(labeling_to_json(l, family));
  return {{"value", optima.value},
          {"count", optima.labelings.size()},
          {"truncated", optima.truncated},
          {"engine", engine_name(optima.engine)},
          {"optima", std::move(list)}};
}

json report_to_json(const TheoremReport& report, bool stable) {
  return {{"theorem", report.theorem},   {"params", report.params},   {"bound", report.bound},
          {"achieved", report.achieved}, {"branch", report.branch},   {"pass", report.pass},
          {"notable", report.notable},   {"findings", report.findings}, {"witnesses", report.witnesses},
          {"runtime_ms", stable ? 0 : report.runtime_ms}};
}

std::string report_csv_header() { return "theorem,params,bound,achieved,branch,pass,notable,runtime_ms"; }

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_csv_row(const TheoremReport& report, bool stable) {
  std::ostringstream os;
  os << report.theorem << ',' << csv_quote(report.params.dump()) << ',' << report.bound << ',' << report.achieved
     << ',' << csv_quote(report.branch) << ',' << (report.pass ? "true" : "false") << ','
     << (report.notable ? "true" : "false") << ',' << (stable ? 0 : report.runtime_ms);
  return os.str();
}

}  // namespace xint
