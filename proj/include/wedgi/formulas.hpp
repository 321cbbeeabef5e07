#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "wedgi/family.hpp"

namespace wedgi {

/**
 * Closed-form values for a family instance.  These are formal formula
 * evaluations: they take part sizes and (source-normalized) weights at
 * face value and do not check the hypotheses under which the formulas
 * were proved; validate() does that.
 */
struct FormulaPrediction {
  int reg = 0;
  int pd = 0;
  int depth = 0;
  int n = 0;
  std::string shape;
  std::vector<std::string> notes;
};

namespace detail {

inline int weight_sum(const std::vector<int>& weights) {
  return std::accumulate(weights.begin(), weights.end(), 0);
}

inline int size_sum(const std::vector<int>& sizes) {
  return std::accumulate(sizes.begin(), sizes.end(), 0);
}

}  // namespace detail

// Path-layered: reg = sum(w) - |V| + 2, pd = |V| - 2, so depth = 2.
inline FormulaPrediction predict_family1(const std::vector<int>& sizes,
                                         const std::vector<int>& weights) {
  FormulaPrediction p;
  p.n = detail::size_sum(sizes);
  p.reg = detail::weight_sum(weights) - p.n + 2;
  p.pd = p.n - 2;
  p.depth = p.n - p.pd;
  p.shape = family_name(FamilyKind::path_layered);
  return p;
}

/**
 * Whisker-layered: reg = sum(w) - (|V| - |V_1|) + 1 and
 * pd = |V| - |V_1| - 2 when |V_1| < |V_2|, pd = |V| - |V_2| - 1 when
 * |V_1| = |V_2|.  Depth is reported as n - pd.  The published closed form
 * for depth (|V_1| - 2, resp. |V_2| - 1) contradicts n - pd for every
 * instance; both values are quoted in a note and the published one is
 * never silently substituted.
 */
inline FormulaPrediction predict_family2(const std::vector<int>& sizes,
                                         const std::vector<int>& weights) {
  FormulaPrediction p;
  const int t1 = sizes.at(0), t2 = sizes.at(1);
  p.n = detail::size_sum(sizes);
  p.reg = detail::weight_sum(weights) - (p.n - t1) + 1;
  p.pd = t1 < t2 ? p.n - t1 - 2 : p.n - t2 - 1;
  p.depth = p.n - p.pd;
  p.shape = family_name(FamilyKind::whisker_layered);
  const int published = t1 < t2 ? t1 - 2 : t2 - 1;
  p.notes.push_back(
      "depth: reporting n - pd = " + std::to_string(p.depth) +
      "; the published closed form for this family states depth = " + std::to_string(published) +
      (t1 < t2 ? " (|V_1| - 2)" : " (|V_2| - 1)") +
      ", which is inconsistent with its own projective dimension; values differ, n - pd is used");
  return p;
}

// Cyclic-layered: reg = sum(w) - |V| + 1, pd = |V| - 1, so depth = 1.
inline FormulaPrediction predict_family3(const std::vector<int>& sizes,
                                         const std::vector<int>& weights) {
  FormulaPrediction p;
  p.n = detail::size_sum(sizes);
  p.reg = detail::weight_sum(weights) - p.n + 1;
  p.pd = p.n - 1;
  p.depth = p.n - p.pd;
  p.shape = family_name(FamilyKind::cyclic_layered);
  return p;
}

inline FormulaPrediction predict_family(FamilyKind kind, const std::vector<int>& sizes,
                                        const std::vector<int>& weights) {
  switch (kind) {
    case FamilyKind::path_layered: return predict_family1(sizes, weights);
    case FamilyKind::whisker_layered: return predict_family2(sizes, weights);
    default: return predict_family3(sizes, weights);
  }
}

/**
 * Closed forms for the recognized special shapes.  Each is the
 * corresponding family formula in disguise: a complete bipartite graph is
 * a two-part path instance; an oriented cycle is the all-singleton cyclic
 * instance (there reg = sum(w) - #edges + 1 with #edges = |V|); a
 * complete tripartite graph cyclically oriented is a three-part cyclic
 * instance.
 */
inline FormulaPrediction predict_special(SpecialShape shape, const std::vector<int>& sizes,
                                         const std::vector<int>& weights) {
  FormulaPrediction p;
  switch (shape) {
    case SpecialShape::complete_bipartite:
      if (sizes.size() != 2) throw error("predict_special: complete bipartite needs two parts");
      p = predict_family1(sizes, weights);
      break;
    case SpecialShape::oriented_cycle:
      for (int t : sizes)
        if (t != 1) throw error("predict_special: oriented cycle needs singleton parts");
      p = predict_family3(sizes, weights);
      break;
    case SpecialShape::complete_tripartite:
      if (sizes.size() != 3) throw error("predict_special: complete tripartite needs three parts");
      p = predict_family3(sizes, weights);
      break;
  }
  p.shape = special_name(shape);
  return p;
}

}  // namespace wedgi
