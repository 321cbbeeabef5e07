#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "wedgi/betti.hpp"
#include "wedgi/digraph.hpp"
#include "wedgi/formulas.hpp"

namespace wedgi {

enum class Verdict { match, mismatch, hypotheses_violated };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::match: return "MATCH";
    case Verdict::mismatch: return "MISMATCH";
    default: return "HYPOTHESES_VIOLATED";
  }
}

/**
 * One closed-form-versus-oracle comparison.  The verdict is MATCH or
 * MISMATCH only when the instance satisfies the family hypotheses;
 * otherwise it is HYPOTHESES_VIOLATED and the formula values are formal.
 */
struct ComparisonRecord {
  std::string instance;
  FamilyKind kind = FamilyKind::path_layered;
  ValidationReport validation;
  FormulaPrediction predicted;
  ResolutionSummary oracle;
  BettiTable table;
  Verdict verdict = Verdict::match;
  int polarized_vars = 0;
  double ms_validate = 0, ms_formula = 0, ms_oracle = 0;
};

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Part sizes and part-major normalized weights, the shape the closed
// forms expect.
inline void part_data(const VertexWeightedDigraph& graph, std::vector<int>& sizes,
                      std::vector<int>& weights) {
  VertexWeightedDigraph g = normalize_sources(graph);
  sizes.clear();
  weights.clear();
  for (const auto& part : g.parts()) {
    sizes.push_back(static_cast<int>(part.size()));
    for (int v : part) weights.push_back(g.weight(v));
  }
}

}  // namespace detail

/**
 * Compare the family closed forms against the exact Betti computation on
 * one partitioned graph.  Always computes both sides, so counterexample
 * instances report their formal formula values next to the truth.
 */
inline ComparisonRecord compare_instance(const VertexWeightedDigraph& graph, FamilyKind kind,
                                         std::string instance_id,
                                         const HochsterOptions& opts = {}) {
  if (!graph.has_parts())
    throw error("compare: the graph carries no partition, family formulas need one");

  ComparisonRecord rec;
  rec.instance = std::move(instance_id);
  rec.kind = kind;

  auto t0 = std::chrono::steady_clock::now();
  rec.validation = validate(graph, kind);
  rec.ms_validate = detail::elapsed_ms(t0);

  std::vector<int> sizes, weights;
  detail::part_data(graph, sizes, weights);
  t0 = std::chrono::steady_clock::now();
  rec.predicted = predict_family(kind, sizes, weights);
  rec.ms_formula = detail::elapsed_ms(t0);

  MonomialIdeal ideal = edge_ideal(graph);
  rec.polarized_vars = polarized_size(ideal);
  t0 = std::chrono::steady_clock::now();
  rec.table = betti_table(ideal, opts);
  rec.ms_oracle = detail::elapsed_ms(t0);
  rec.oracle = summarize(rec.table);

  if (!rec.validation.valid) {
    rec.verdict = Verdict::hypotheses_violated;
  } else {
    bool same = rec.predicted.reg == rec.oracle.reg && rec.predicted.pd == rec.oracle.pd &&
                rec.predicted.depth == rec.oracle.depth;
    rec.verdict = same ? Verdict::match : Verdict::mismatch;
  }
  return rec;
}

struct SweepResult {
  std::vector<ComparisonRecord> records;
  int skipped_over_budget = 0;
};

namespace detail {

// Nondecreasing tuples of the given length over [lo, hi]: the canonical
// representative of each weight multiset, so the sweep is duplicate-free.
inline void sorted_tuples(int length, int lo, int hi, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if (length == 0) {
    out.push_back(cur);
    return;
  }
  int start = cur.empty() ? lo : std::max(lo, cur.back());
  for (int v = start; v <= hi; ++v) {
    cur.push_back(v);
    sorted_tuples(length - 1, lo, hi, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> weight_choices(int length, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  sorted_tuples(length, lo, hi, cur, out);
  return out;
}

inline std::string instance_key(FamilyKind kind, const std::vector<int>& sizes,
                                const std::vector<std::vector<int>>& per_part) {
  std::string key = "f" + std::to_string(family_number(kind)) + " t=(";
  for (std::size_t i = 0; i < sizes.size(); ++i)
    key += (i ? "," : "") + std::to_string(sizes[i]);
  key += ") w=(";
  for (std::size_t p = 0; p < per_part.size(); ++p) {
    if (p) key += "|";
    for (std::size_t i = 0; i < per_part[p].size(); ++i)
      key += (i ? "," : "") + std::to_string(per_part[p][i]);
  }
  return key + ")";
}

// Weight ranges per part: sources are pinned to 1, interior parts obey the
// >= 2 hypothesis, end parts are free.
inline std::vector<std::pair<int, int>> weight_ranges(FamilyKind kind, int m, int max_w) {
  std::vector<std::pair<int, int>> r(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) {
    switch (kind) {
      case FamilyKind::path_layered:
        r[static_cast<std::size_t>(p)] = p == 0 ? std::make_pair(1, 1)
                                  : p == m - 1 ? std::make_pair(1, max_w)
                                               : std::make_pair(2, max_w);
        break;
      case FamilyKind::whisker_layered:
        r[static_cast<std::size_t>(p)] = p == 1 ? std::make_pair(1, 1)
                                  : p == 0 || p == m - 1 ? std::make_pair(1, max_w)
                                                         : std::make_pair(2, max_w);
        break;
      case FamilyKind::cyclic_layered:
        r[static_cast<std::size_t>(p)] = std::make_pair(2, max_w);
        break;
    }
  }
  return r;
}

inline void size_tuples(int m, int max_t, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (m == 0) {
    out.push_back(cur);
    return;
  }
  for (int t = 1; t <= max_t; ++t) {
    cur.push_back(t);
    size_tuples(m - 1, max_t, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/**
 * Enumerate every family instance within the bound box (part count up to
 * max_m, part sizes up to max_t, weights up to max_w, polarization within
 * budget) and compare closed forms with the oracle on each.  Weights
 * within a part are enumerated as multisets (nondecreasing tuples), which
 * canonicalizes instances that differ only by relabeling inside a part.
 * Instances over the polarization budget are counted, not computed.
 */
inline SweepResult sweep(FamilyKind kind, int max_m, int max_t, int max_w,
                         const HochsterOptions& opts = {}) {
  const int min_m = kind == FamilyKind::cyclic_layered ? 3 : 2;
  SweepResult result;
  for (int m = min_m; m <= max_m; ++m) {
    std::vector<std::vector<int>> all_sizes;
    std::vector<int> cur;
    detail::size_tuples(m, max_t, cur, all_sizes);
    for (const auto& sizes : all_sizes) {
      if (kind == FamilyKind::whisker_layered) {
        if (sizes[0] > sizes[1]) continue;
        if (m == 2 && sizes[0] != sizes[1]) continue;
      }
      auto ranges = detail::weight_ranges(kind, m, max_w);
      // Per-part weight choices, combined odometer-style.
      std::vector<std::vector<std::vector<int>>> choices(static_cast<std::size_t>(m));
      for (int p = 0; p < m; ++p)
        choices[static_cast<std::size_t>(p)] = detail::weight_choices(
            sizes[static_cast<std::size_t>(p)], ranges[static_cast<std::size_t>(p)].first,
            ranges[static_cast<std::size_t>(p)].second);

      std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
      while (true) {
        std::vector<std::vector<int>> per_part(static_cast<std::size_t>(m));
        std::vector<int> flat;
        for (int p = 0; p < m; ++p) {
          per_part[static_cast<std::size_t>(p)] = choices[static_cast<std::size_t>(p)][pick[static_cast<std::size_t>(p)]];
          flat.insert(flat.end(), per_part[static_cast<std::size_t>(p)].begin(),
                      per_part[static_cast<std::size_t>(p)].end());
        }

        FamilyInstance inst = build_family(kind, sizes, flat);
        MonomialIdeal ideal = edge_ideal(inst.graph);
        if (polarized_size(ideal) > opts.budget) {
          ++result.skipped_over_budget;
        } else {
          result.records.push_back(compare_instance(
              inst.graph, kind, detail::instance_key(kind, sizes, per_part), opts));
        }

        int p = m - 1;
        while (p >= 0 && ++pick[static_cast<std::size_t>(p)] == choices[static_cast<std::size_t>(p)].size()) {
          pick[static_cast<std::size_t>(p)] = 0;
          --p;
        }
        if (p < 0) break;
      }
    }
  }
  return result;
}

}  // namespace wedgi
