#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wedgi/digraph.hpp"

namespace wedgi {

// The three layered families on an ordered partition V_1, ..., V_m.
//   path_layered:    each layer V_i -> V_{i+1} complete bipartite.
//   whisker_layered: first layer a perfect matching V_2 -> V_1, layers
//                    V_i -> V_{i+1} complete bipartite for i >= 2.
//   cyclic_layered:  complete bipartite layers cyclically, V_{m+1} = V_1.
enum class FamilyKind { path_layered = 1, whisker_layered = 2, cyclic_layered = 3 };

inline const char* family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::path_layered: return "path_layered";
    case FamilyKind::whisker_layered: return "whisker_layered";
    default: return "cyclic_layered";
  }
}

inline int family_number(FamilyKind k) { return static_cast<int>(k); }

struct FamilyInstance {
  FamilyKind kind;
  std::vector<int> sizes;  // |V_1|, ..., |V_m|
  VertexWeightedDigraph graph;
};

struct ValidationReport {
  bool valid = false;
  std::vector<std::string> violations;
};

namespace detail {

inline std::string vertex_label(int part, int pos, bool compact) {
  if (compact) return "x" + std::to_string(part + 1) + std::to_string(pos + 1);
  return "x" + std::to_string(part + 1) + "_" + std::to_string(pos + 1);
}

}  // namespace detail

/**
 * Build a family instance on parts of the given sizes with the given
 * weights (flat, vertex order: part 1 first, positions ascending).
 * Vertices are named x<part><position>.  Structural impossibilities
 * (sizes, matching shape) throw; weight hypotheses are NOT enforced
 * here, so the result may well fail validate().  Sources come out with
 * weight 1 regardless of the requested value.
 */
inline FamilyInstance build_family(FamilyKind kind, const std::vector<int>& sizes,
                                   const std::vector<int>& weights, int weight_cap = 9) {
  const int m = static_cast<int>(sizes.size());
  const int min_m = kind == FamilyKind::cyclic_layered ? 3 : 2;
  if (m < min_m)
    throw family_error(std::string("build_family: ") + family_name(kind) + " needs at least " +
                       std::to_string(min_m) + " parts, got " + std::to_string(m));
  int total = 0;
  for (int t : sizes) {
    if (t < 1) throw family_error("build_family: part size below 1");
    total += t;
  }
  if (static_cast<int>(weights.size()) != total)
    throw family_error("build_family: expected " + std::to_string(total) + " weights, got " +
                       std::to_string(weights.size()));
  for (int w : weights) {
    if (w < 1) throw family_error("build_family: weight below 1");
    if (w > weight_cap)
      throw family_error("build_family: weight " + std::to_string(w) + " exceeds cap " +
                         std::to_string(weight_cap));
  }
  if (kind == FamilyKind::whisker_layered) {
    if (sizes[0] > sizes[1])
      throw family_error("build_family: whisker_layered needs |V_1| <= |V_2|, got " +
                         std::to_string(sizes[0]) + " > " + std::to_string(sizes[1]));
    if (m == 2 && sizes[0] != sizes[1])
      throw family_error(
          "build_family: whisker_layered with two parts needs |V_1| = |V_2|, otherwise part 2 "
          "has isolated vertices");
  }

  const bool compact = m <= 9 && *std::max_element(sizes.begin(), sizes.end()) <= 9;
  std::vector<Vertex> vertices;
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(m));
  int idx = 0;
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < sizes[static_cast<std::size_t>(p)]; ++q) {
      vertices.push_back({detail::vertex_label(p, q, compact), weights[static_cast<std::size_t>(idx)]});
      parts[static_cast<std::size_t>(p)].push_back(idx);
      ++idx;
    }

  std::vector<std::pair<int, int>> edges;
  auto complete_layer = [&](int p, int pnext) {
    for (int a : parts[static_cast<std::size_t>(p)])
      for (int b : parts[static_cast<std::size_t>(pnext)]) edges.emplace_back(a, b);
  };
  switch (kind) {
    case FamilyKind::path_layered:
      for (int p = 0; p + 1 < m; ++p) complete_layer(p, p + 1);
      break;
    case FamilyKind::whisker_layered:
      for (int j = 0; j < sizes[0]; ++j)
        edges.emplace_back(parts[1][static_cast<std::size_t>(j)], parts[0][static_cast<std::size_t>(j)]);
      for (int p = 1; p + 1 < m; ++p) complete_layer(p, p + 1);
      break;
    case FamilyKind::cyclic_layered:
      for (int p = 0; p < m; ++p) complete_layer(p, (p + 1) % m);
      break;
  }

  VertexWeightedDigraph g(std::move(vertices), std::move(edges), std::move(parts));
  return FamilyInstance{kind, sizes, normalize_sources(g)};
}

/**
 * Check a partitioned oriented graph against the structural and weight
 * hypotheses of one family.  Sources are exempt from every weight bound:
 * their weights never reach the edge ideal, and the closed forms are read
 * with source weights normalized to 1.  Returns every violation found.
 */
inline ValidationReport validate(const VertexWeightedDigraph& g, FamilyKind kind) {
  ValidationReport report;
  if (!g.has_parts()) {
    report.violations.push_back("partition: the graph carries no partition");
    return report;
  }
  const int m = static_cast<int>(g.parts().size());
  const int min_m = kind == FamilyKind::cyclic_layered ? 3 : 2;
  if (m < min_m) {
    report.violations.push_back("partition: " + std::string(family_name(kind)) + " needs at least " +
                                std::to_string(min_m) + " parts, the graph has " + std::to_string(m));
    return report;
  }
  const auto& parts = g.parts();
  auto t = [&](int p) { return static_cast<int>(parts[static_cast<std::size_t>(p)].size()); };

  if (kind == FamilyKind::whisker_layered && t(0) > t(1))
    report.violations.push_back("sizes: |V_1| = " + std::to_string(t(0)) + " exceeds |V_2| = " +
                                std::to_string(t(1)));

  // Directions: every edge must realize the layer pattern of the family.
  auto edge_str = [&](int a, int b) { return g.id(a) + " -> " + g.id(b); };
  for (auto [a, b] : g.edges()) {
    int pa = g.part_of(a), pb = g.part_of(b);
    bool ok = false;
    switch (kind) {
      case FamilyKind::path_layered:
        ok = pb == pa + 1;
        break;
      case FamilyKind::whisker_layered:
        if (pa == 1 && pb == 0) ok = true;           // matching edge into V_1
        else ok = pa >= 1 && pb == pa + 1;           // later layers run forward
        break;
      case FamilyKind::cyclic_layered:
        ok = pb == (pa + 1) % m;
        break;
    }
    if (!ok)
      report.violations.push_back("direction: edge " + edge_str(a, b) + " joins V_" +
                                  std::to_string(pa + 1) + " to V_" + std::to_string(pb + 1) +
                                  ", not allowed in " + family_name(kind));
  }

  // Completeness of the bipartite layers (and the matching for whiskers).
  auto has_edge = [&](int a, int b) {
    for (auto [c, d] : g.edges())
      if (c == a && d == b) return true;
    return false;
  };
  auto check_complete = [&](int p) {
    int pn = (p + 1) % m;
    for (int a : parts[static_cast<std::size_t>(p)])
      for (int b : parts[static_cast<std::size_t>(pn)])
        if (!has_edge(a, b))
          report.violations.push_back("completeness: layer V_" + std::to_string(p + 1) + " -> V_" +
                                      std::to_string(pn + 1) + " misses edge " + edge_str(a, b));
  };
  switch (kind) {
    case FamilyKind::path_layered:
      for (int p = 0; p + 1 < m; ++p) check_complete(p);
      break;
    case FamilyKind::whisker_layered: {
      for (int p = 1; p + 1 < m; ++p) check_complete(p);
      // V_2 -> V_1 must be a perfect matching onto V_1.
      for (int b : parts[0]) {
        int partners = 0;
        for (int a : parts[1]) partners += has_edge(a, b);
        if (partners != 1)
          report.violations.push_back("matching: vertex " + g.id(b) + " of V_1 has " +
                                      std::to_string(partners) + " incoming matching edges, needs 1");
      }
      for (int a : parts[1]) {
        int hits = 0;
        for (int b : parts[0]) hits += has_edge(a, b);
        if (hits > 1)
          report.violations.push_back("matching: vertex " + g.id(a) + " of V_2 matches " +
                                      std::to_string(hits) + " vertices of V_1");
      }
      break;
    }
    case FamilyKind::cyclic_layered:
      for (int p = 0; p < m; ++p) check_complete(p);
      break;
  }

  for (int v = 0; v < g.n(); ++v)
    if (g.is_isolated(v))
      report.violations.push_back("isolated: vertex " + g.id(v) + " has no edges");

  // Weight hypotheses, sources exempt.  For the path and whisker families
  // the bound applies off V_1 and V_m; the cyclic family bounds everyone.
  for (int v = 0; v < g.n(); ++v) {
    if (g.is_source(v)) continue;
    int p = g.part_of(v);
    bool interior = kind == FamilyKind::cyclic_layered ? true : (p >= 1 && p + 1 < m);
    if (interior && g.weight(v) < 2) {
      std::string where = kind == FamilyKind::cyclic_layered
                              ? "is not a source"
                              : "is not a source and lies outside V_1 and V_" + std::to_string(m);
      report.violations.push_back("weight: w(" + g.id(v) + ") = " + std::to_string(g.weight(v)) +
                                  " < 2 but " + g.id(v) + " " + where);
    }
  }

  report.valid = report.violations.empty();
  return report;
}

// Families whose hypotheses the graph satisfies (usually none or one).
inline std::vector<FamilyKind> classify(const VertexWeightedDigraph& g) {
  std::vector<FamilyKind> kinds;
  for (FamilyKind k :
       {FamilyKind::path_layered, FamilyKind::whisker_layered, FamilyKind::cyclic_layered})
    if (validate(g, k).valid) kinds.push_back(k);
  return kinds;
}

// Recognized specializations with closed forms of their own.
enum class SpecialShape { complete_bipartite, oriented_cycle, complete_tripartite };

inline const char* special_name(SpecialShape s) {
  switch (s) {
    case SpecialShape::complete_bipartite: return "complete_bipartite";
    case SpecialShape::oriented_cycle: return "oriented_cycle";
    default: return "complete_tripartite";
  }
}

// Specials detected from an already-validated family kind and part sizes.
inline std::vector<SpecialShape> detect_specials(FamilyKind kind, const std::vector<int>& sizes) {
  std::vector<SpecialShape> out;
  if (kind == FamilyKind::path_layered && sizes.size() == 2)
    out.push_back(SpecialShape::complete_bipartite);
  if (kind == FamilyKind::cyclic_layered) {
    if (std::all_of(sizes.begin(), sizes.end(), [](int t) { return t == 1; }))
      out.push_back(SpecialShape::oriented_cycle);
    if (sizes.size() == 3) out.push_back(SpecialShape::complete_tripartite);
  }
  return out;
}

}  // namespace wedgi
