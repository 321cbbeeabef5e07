#pragma once

#include <string>
#include <vector>

#include "wedgi/family.hpp"

namespace wedgi {

/**
 * The six bundled reference graphs.  Each is a published counterexample
 * instance: the structure or weights break one family hypothesis, the
 * closed forms evaluate formally to the recorded (reg, pd), and the true
 * values differ.  Oracle values were computed independently (originally
 * with a computer algebra system) and are pinned here.
 */
struct ReferenceFixture {
  std::string id;
  FamilyKind kind;
  VertexWeightedDigraph graph;
  int oracle_reg, oracle_pd;    // exact values the computation must hit
  int formula_reg, formula_pd;  // formal closed-form values
};

namespace detail {

inline VertexWeightedDigraph make_graph(const std::vector<int>& weights,
                                        const std::vector<std::pair<int, int>>& edges_1based,
                                        const std::vector<std::vector<int>>& parts_1based) {
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < weights.size(); ++i)
    vs.push_back({"x" + std::to_string(i + 1), weights[i]});
  std::vector<std::pair<int, int>> es;
  for (auto [a, b] : edges_1based) es.emplace_back(a - 1, b - 1);
  std::vector<std::vector<int>> ps;
  for (const auto& part : parts_1based) {
    std::vector<int> q;
    for (int v : part) q.push_back(v - 1);
    ps.push_back(std::move(q));
  }
  return VertexWeightedDigraph(std::move(vs), std::move(es), std::move(ps));
}

}  // namespace detail

inline std::vector<ReferenceFixture> reference_fixtures() {
  std::vector<ReferenceFixture> out;

  // Path-layered, 7 vertices: two edges run against the layering.
  out.push_back({"path-a", FamilyKind::path_layered,
                 detail::make_graph({1, 2, 2, 1, 2, 1, 2},
                                    {{1, 2}, {2, 3}, {4, 2}, {3, 5}, {4, 5}, {6, 5}, {6, 7}},
                                    {{1}, {2}, {3, 4}, {5}, {6}, {7}}),
                 7, 4, 6, 5});

  // Path-layered, 7 vertices: structure intact, interior weights below 2.
  out.push_back({"path-b", FamilyKind::path_layered,
                 detail::make_graph({1, 1, 2, 2, 1, 1, 2},
                                    {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {3, 6}, {4, 5},
                                     {4, 6}, {5, 7}, {6, 7}},
                                    {{1, 2}, {3, 4}, {5, 6}, {7}}),
                 4, 4, 5, 5});

  // Whisker-layered, 7 vertices: one layer edge reversed.
  out.push_back({"whisker-a", FamilyKind::whisker_layered,
                 detail::make_graph({1, 1, 3, 3, 3, 1, 3},
                                    {{2, 1}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {6, 5}, {6, 7}},
                                    {{1}, {2}, {3, 4}, {5}, {6}, {7}}),
                 11, 4, 10, 5});

  // Whisker-layered, 8 vertices: an interior vertex of weight 1.
  out.push_back({"whisker-b", FamilyKind::whisker_layered,
                 detail::make_graph({3, 3, 1, 1, 3, 3, 1, 3},
                                    {{3, 1}, {4, 2}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 7},
                                     {6, 7}, {7, 8}},
                                    {{1, 2}, {3, 4}, {5, 6}, {7}, {8}}),
                 11, 4, 13, 5});

  // Cyclic-layered, 4 vertices: the closing layer runs backwards.
  out.push_back({"cyclic-a", FamilyKind::cyclic_layered,
                 detail::make_graph({1, 1, 3, 3},
                                    {{1, 3}, {2, 3}, {3, 4}, {1, 4}, {2, 4}},
                                    {{1, 2}, {3}, {4}}),
                 6, 2, 5, 3});

  // Cyclic-layered, 5 vertices: structure intact, one non-source of weight 1.
  out.push_back({"cyclic-b", FamilyKind::cyclic_layered,
                 detail::make_graph({1, 2, 2, 2, 3},
                                    {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5}, {4, 5}, {5, 1}},
                                    {{1}, {2, 3, 4}, {5}}),
                 5, 3, 6, 4});

  return out;
}

}  // namespace wedgi
