#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "wedgi/compare.hpp"
#include "wedgi/digraph.hpp"

namespace wedgi {

using ordered_json = nlohmann::ordered_json;

/**
 * Graph JSON:
 *   {"vertices": [{"id": "x11", "weight": 2}, ...],
 *    "edges":    [["x11", "x21"], ...],
 *    "parts":    [["x11", "x12"], ["x21"], ...],   // optional
 *    "family":   1}                                 // optional hint
 * Weights default to 1 when omitted.  Edges and parts refer to vertex ids.
 */
struct LoadedGraph {
  VertexWeightedDigraph graph;
  std::optional<FamilyKind> family;
};

inline ordered_json graph_to_json(const VertexWeightedDigraph& g,
                                  std::optional<FamilyKind> family = std::nullopt) {
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (const auto& v : g.vertices()) doc["vertices"].push_back({{"id", v.id}, {"weight", v.weight}});
  doc["edges"] = ordered_json::array();
  for (auto [a, b] : g.edges()) doc["edges"].push_back({g.id(a), g.id(b)});
  if (g.has_parts()) {
    doc["parts"] = ordered_json::array();
    for (const auto& part : g.parts()) {
      ordered_json p = ordered_json::array();
      for (int v : part) p.push_back(g.id(v));
      doc["parts"].push_back(std::move(p));
    }
  }
  if (family) doc["family"] = family_number(*family);
  return doc;
}

inline LoadedGraph graph_from_json(const ordered_json& doc) {
  if (!doc.is_object()) throw parse_error("graph json: top level must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw parse_error("graph json: missing 'vertices' array");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw parse_error("graph json: missing 'edges' array");

  std::vector<Vertex> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v["id"].is_string())
      throw parse_error("graph json: each vertex needs a string 'id'");
    int weight = 1;
    if (v.contains("weight")) {
      if (!v["weight"].is_number_integer()) throw parse_error("graph json: 'weight' must be an integer");
      weight = v["weight"].get<int>();
    }
    vertices.push_back({v["id"].get<std::string>(), weight});
  }

  auto find = [&](const std::string& id) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i].id == id) return static_cast<int>(i);
    throw parse_error("graph json: unknown vertex id '" + id + "'");
  };

  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw parse_error("graph json: each edge must be a [tail, head] pair of ids");
    edges.emplace_back(find(e[0].get<std::string>()), find(e[1].get<std::string>()));
  }

  std::vector<std::vector<int>> parts;
  if (doc.contains("parts")) {
    if (!doc["parts"].is_array()) throw parse_error("graph json: 'parts' must be an array");
    for (const auto& p : doc["parts"]) {
      if (!p.is_array()) throw parse_error("graph json: each part must be an array of ids");
      std::vector<int> part;
      for (const auto& id : p) {
        if (!id.is_string()) throw parse_error("graph json: part entries must be vertex ids");
        part.push_back(find(id.get<std::string>()));
      }
      parts.push_back(std::move(part));
    }
  }

  LoadedGraph out{VertexWeightedDigraph(std::move(vertices), std::move(edges), std::move(parts)),
                  std::nullopt};
  if (doc.contains("family")) {
    int f = doc["family"].is_number_integer() ? doc["family"].get<int>() : -1;
    if (f < 1 || f > 3) throw parse_error("graph json: 'family' must be 1, 2 or 3");
    out.family = static_cast<FamilyKind>(f);
  }
  return out;
}

/**
 * Betti table JSON: {"entries": [{"i": 0, "j": 2, "beta": 2}, ...],
 * "reg": R, "pd": P, "depth": D, "n": N}, entries sorted by (i, j).
 */
inline ordered_json betti_to_json(const BettiTable& t) {
  ordered_json doc;
  doc["entries"] = ordered_json::array();
  for (const auto& [ij, beta] : t.entries)
    doc["entries"].push_back({{"i", ij.first}, {"j", ij.second}, {"beta", beta}});
  ResolutionSummary s = summarize(t);
  doc["reg"] = s.reg;
  doc["pd"] = s.pd;
  doc["depth"] = s.depth;
  doc["n"] = s.n;
  return doc;
}

inline ordered_json record_to_json(const ComparisonRecord& rec, bool with_timing = false) {
  ordered_json doc;
  doc["instance"] = rec.instance;
  doc["family"] = family_number(rec.kind);
  doc["valid"] = rec.validation.valid;
  doc["violations"] = rec.validation.violations;
  doc["predicted"] = {{"reg", rec.predicted.reg}, {"pd", rec.predicted.pd},
                      {"depth", rec.predicted.depth}};
  doc["oracle"] = {{"reg", rec.oracle.reg}, {"pd", rec.oracle.pd}, {"depth", rec.oracle.depth}};
  doc["verdict"] = verdict_name(rec.verdict);
  doc["polarized_vars"] = rec.polarized_vars;
  doc["warnings"] = rec.predicted.notes;
  if (with_timing)
    doc["timing_ms"] = {{"validate", rec.ms_validate}, {"formula", rec.ms_formula},
                        {"oracle", rec.ms_oracle}};
  return doc;
}

}  // namespace wedgi
