#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wedgi/ideal.hpp"

namespace wedgi {

struct Vertex {
  std::string id;
  int weight = 1;
};

/**
 * Vertex-weighted oriented graph: a simple graph with at most one edge per
 * vertex pair, each edge directed, each vertex carrying an integer weight
 * >= 1.  Vertex order is significant; it fixes the variable order of the
 * edge ideal.  The optional partition (an ordered list of parts, indices
 * into the vertex list) records multipartite structure for the layered
 * families.
 */
class VertexWeightedDigraph {
 public:
  VertexWeightedDigraph() = default;

  VertexWeightedDigraph(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges,
                        std::vector<std::vector<int>> parts = {})
      : vertices_(std::move(vertices)), edges_(std::move(edges)), parts_(std::move(parts)) {
    const int n = static_cast<int>(vertices_.size());
    for (int a = 0; a < n; ++a) {
      if (vertices_[static_cast<std::size_t>(a)].id.empty()) throw error("digraph: empty vertex id");
      if (vertices_[static_cast<std::size_t>(a)].weight < 1)
        throw error("digraph: weight of " + vertices_[static_cast<std::size_t>(a)].id + " is below 1");
      for (int b = a + 1; b < n; ++b)
        if (vertices_[static_cast<std::size_t>(a)].id == vertices_[static_cast<std::size_t>(b)].id)
          throw error("digraph: duplicate vertex id '" + vertices_[static_cast<std::size_t>(a)].id + "'");
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      auto [a, b] = edges_[e];
      if (a < 0 || a >= n || b < 0 || b >= n) throw error("digraph: edge endpoint out of range");
      if (a == b) throw error("digraph: self-loop at " + vertices_[static_cast<std::size_t>(a)].id);
      for (std::size_t f = e + 1; f < edges_.size(); ++f) {
        auto [c, d] = edges_[f];
        if ((a == c && b == d) || (a == d && b == c))
          throw error("digraph: more than one edge between " +
                      vertices_[static_cast<std::size_t>(a)].id + " and " +
                      vertices_[static_cast<std::size_t>(b)].id);
      }
    }
    if (!parts_.empty()) {
      std::vector<int> seen(static_cast<std::size_t>(n), 0);
      for (const auto& part : parts_) {
        if (part.empty()) throw error("digraph: empty part in partition");
        for (int v : part) {
          if (v < 0 || v >= n) throw error("digraph: partition names a missing vertex");
          if (seen[static_cast<std::size_t>(v)]++)
            throw error("digraph: vertex " + vertices_[static_cast<std::size_t>(v)].id +
                        " appears in two parts");
        }
      }
      for (int v = 0; v < n; ++v)
        if (!seen[static_cast<std::size_t>(v)])
          throw error("digraph: vertex " + vertices_[static_cast<std::size_t>(v)].id +
                      " missing from the partition");
      for (auto [a, b] : edges_)
        if (part_of(a) == part_of(b))
          throw error("digraph: edge inside part between " +
                      vertices_[static_cast<std::size_t>(a)].id + " and " +
                      vertices_[static_cast<std::size_t>(b)].id);
    }
  }

  int n() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_parts() const { return !parts_.empty(); }
  const std::vector<std::vector<int>>& parts() const { return parts_; }

  const std::string& id(int v) const { return vertices_[static_cast<std::size_t>(v)].id; }
  int weight(int v) const { return vertices_[static_cast<std::size_t>(v)].weight; }

  int index_of(const std::string& vid) const {
    for (int v = 0; v < n(); ++v)
      if (id(v) == vid) return v;
    return -1;
  }

  // Part index of a vertex, or -1 without a partition.
  int part_of(int v) const {
    for (std::size_t p = 0; p < parts_.size(); ++p)
      for (int u : parts_[p])
        if (u == v) return static_cast<int>(p);
    return -1;
  }

  int out_degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges_) d += (a == v);
    return d;
  }

  int in_degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges_) d += (b == v);
    return d;
  }

  // Source: at least one outgoing edge and none incoming.
  bool is_source(int v) const { return out_degree(v) >= 1 && in_degree(v) == 0; }

  bool is_isolated(int v) const { return out_degree(v) == 0 && in_degree(v) == 0; }

  AmbientRing ring() const {
    std::vector<std::string> labels;
    labels.reserve(vertices_.size());
    for (const auto& v : vertices_) labels.push_back(v.id);
    return AmbientRing(std::move(labels));
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> parts_;
};

// Copy of the graph with every source's weight reset to 1.  The edge ideal
// of an oriented graph never sees source weights, so this normal form is
// harmless and makes the stated weight hypotheses meaningful.
inline VertexWeightedDigraph normalize_sources(const VertexWeightedDigraph& g) {
  std::vector<Vertex> vs = g.vertices();
  for (int v = 0; v < g.n(); ++v)
    if (g.is_source(v)) vs[static_cast<std::size_t>(v)].weight = 1;
  return VertexWeightedDigraph(std::move(vs), g.edges(), g.parts());
}

/**
 * Edge ideal of a vertex-weighted oriented graph: one generator
 * x_a * x_b^{w(b)} per directed edge a -> b, over the ring whose variables
 * are the vertices in list order.  Weights are taken after source
 * normalization.
 */
inline MonomialIdeal edge_ideal(const VertexWeightedDigraph& graph) {
  VertexWeightedDigraph g = normalize_sources(graph);
  AmbientRing ring = g.ring();
  std::vector<Monomial> gens;
  gens.reserve(g.edges().size());
  for (auto [a, b] : g.edges()) {
    std::vector<int> exps(static_cast<std::size_t>(g.n()), 0);
    exps[static_cast<std::size_t>(a)] += 1;
    exps[static_cast<std::size_t>(b)] += g.weight(b);
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

}  // namespace wedgi
