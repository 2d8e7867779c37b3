#pragma once

// Machine-readable exports: graph JSON, variable-table JSON, homology CSV
// rows, relations report. Every report carries the tool name, version and n,
// and all containers are emitted in deterministic order.

#include <sstream>
#include <string>

#include <json.hpp>

#include "clusterex/cluster_vars.hpp"
#include "clusterex/exchange_module.hpp"
#include "clusterex/flip_graph.hpp"
#include "clusterex/homology.hpp"
#include "clusterex/version.hpp"

namespace clusterex {

using Json = nlohmann::json;

/// [[coefficient (string), [exponents...]], ...] in the canonical term order.
inline Json poly_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({c.str(), e}));
  return terms;
}

inline Json report_header(int n) {
  return Json{{"tool", kToolName}, {"version", kVersion}, {"n", n}};
}

/// Exchange graph with five-cycles. Edges are emitted as u -> v in
/// orientation order (u is the tail).
inline Json graph_to_json(const ExchangeGraph& g,
                          const GeodesicCycles* cycles = nullptr) {
  Json j = report_header(g.n());
  Json nodes = Json::array();
  for (const auto& t : g.nodes()) {
    Json diags = Json::array();
    for (const auto& d : t.diagonals()) diags.push_back({d.a, d.b});
    nodes.push_back(diags);
  }
  j["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back(Json{{"u", e.tail}, {"v", e.head}, {"label", e.label}});
  j["edges"] = std::move(edges);
  Json fives = Json::array();
  if (cycles) {
    for (const auto& c : cycles->fives)
      fives.push_back(Json{{"nodes", c.nodes}, {"label", c.label}});
  }
  j["five_cycles"] = std::move(fives);
  return j;
}

inline Json table_to_json(const VariableTable& table) {
  Json j = report_header(table.n());
  Json vars = Json::array();
  for (const auto& [d, p] : table.entries())
    vars.push_back(Json{{"diagonal", {d.a, d.b}},
                        {"poly", poly_to_json(p)},
                        {"text", p.to_string()}});
  j["variables"] = std::move(vars);
  return j;
}

inline std::string homology_csv_header() {
  return "tool_version,n,h1_rank,torsion,four_cycles,five_cycles,"
         "label_classes";
}

inline std::string homology_csv_row(int n, const H1Result& h, int four_cycles,
                                    int five_cycles, int label_classes) {
  std::ostringstream os;
  os << kVersion << "," << n << "," << h.rank << ",";
  for (std::size_t i = 0; i < h.torsion.size(); ++i) {
    if (i) os << ";";
    os << h.torsion[i].str();
  }
  os << "," << four_cycles << "," << five_cycles << "," << label_classes;
  return os.str();
}

struct RelationsSummary {
  int n = 0;
  int f_rank = 0;        // C(n+3, 4)
  int kernel_rank = 0;   // C(n+2, 4)
  int e_rank = 0;        // C(n+2, 3)
  int pentagon_count = 0;
  std::vector<CrossingPair> basis;
  bool theorem_1 = false;  // rank ker theta = h1 rank
  bool theorem_2 = false;  // pentagonal generation, free of rank C(n+2,4)
  bool theorem_3 = false;  // exchange module free on endpoint-1 pairs
};

inline Json relations_to_json(const RelationsSummary& s) {
  Json j = report_header(s.n);
  j["F_rank"] = s.f_rank;
  j["kernel_rank"] = s.kernel_rank;
  j["E_rank"] = s.e_rank;
  j["pentagon_count"] = s.pentagon_count;
  Json basis = Json::array();
  for (const auto& pr : s.basis) basis.push_back(pr.verts);
  j["basis_labels"] = std::move(basis);
  j["verified"] = Json{{"theorem_1", s.theorem_1},
                       {"theorem_2", s.theorem_2},
                       {"theorem_3", s.theorem_3}};
  return j;
}

}  // namespace clusterex
