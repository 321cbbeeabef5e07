#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "wedgi/homology.hpp"
#include "wedgi/polarization.hpp"

namespace wedgi {

/**
 * Graded Betti table of an ideal (not of the quotient): entry (i, j) is
 * beta_{i,j}(I), so row 0 counts minimal generators by degree.  Only
 * nonzero entries are stored.
 */
struct BettiTable {
  int n = 0;  // ambient variable count, used for depth = n - pd
  std::map<std::pair<int, int>, long long> entries;

  long long beta(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  void add(int i, int j, long long v) {
    if (v != 0) entries[{i, j}] += v;
  }

  bool empty() const { return entries.empty(); }

  int reg() const {
    int r = 0;
    for (const auto& [ij, v] : entries) r = std::max(r, ij.second - ij.first);
    return r;
  }

  int pd() const {
    int p = 0;
    for (const auto& [ij, v] : entries) p = std::max(p, ij.first);
    return p;
  }

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.n == b.n && a.entries == b.entries;
  }
  friend bool operator!=(const BettiTable& a, const BettiTable& b) { return !(a == b); }
};

struct ResolutionSummary {
  int reg = 0;
  int pd = 0;
  int depth = 0;
  int n = 0;
};

inline ResolutionSummary summarize(const BettiTable& t) {
  return ResolutionSummary{t.reg(), t.pd(), t.n - t.pd(), t.n};
}

struct HochsterOptions {
  FieldSpec field{};
  bool prune = true;   // skip subsets whose restriction is a cone
  bool reduce = true;  // pair reductions inside the homology kernel
  int jobs = 1;
  int budget = 22;     // hard cap on (polarized) variable count
};

namespace detail {

inline void hochster_range(const SimplicialComplex& complex, const std::vector<Mask>& gens,
                           Mask lo, Mask hi, const HochsterOptions& opts, BettiTable& out) {
  HomologyOptions hopts{opts.field, opts.reduce};
  for (Mask w = lo; w < hi; ++w) {
    if (opts.prune) {
      // Cone pruning: W survives only when it is the union of the
      // generator supports it contains; otherwise some vertex of W lies
      // in no restricted non-face and the restriction is a cone.
      Mask covered = 0;
      for (Mask g : gens)
        if ((g & ~w) == 0) covered |= g;
      if (covered != w) continue;
    }
    const int j = popcount(w);
    std::vector<long long> dims = reduced_homology_dims(complex, w, hopts);
    for (int k = -1; k < j; ++k) {
      long long d = dims[static_cast<std::size_t>(k + 1)];
      int i = j - k - 2;
      if (d != 0 && i >= 0) out.add(i, j, d);
    }
  }
}

}  // namespace detail

/**
 * Graded Betti table of a squarefree monomial ideal from simplicial
 * homology: beta_{i,j}(I) collects dim H~_{j-i-2} of the restrictions of
 * the Stanley-Reisner complex to the j-subsets of the vertex set.  The
 * subset scan parallelizes; results do not depend on the worker count.
 */
inline BettiTable hochster_betti(const MonomialIdeal& ideal, const HochsterOptions& opts = {}) {
  if (ideal.is_zero()) throw error("hochster_betti: zero ideal");
  if (!ideal.is_squarefree()) throw error("hochster_betti: ideal is not squarefree");
  validate_field(opts.field);
  const int n = ideal.ring().n();
  if (n > opts.budget)
    throw budget_error("hochster_betti: " + std::to_string(n) + " variables exceed budget " +
                       std::to_string(opts.budget));

  SimplicialComplex complex = stanley_reisner(ideal);
  std::vector<Mask> gens;
  gens.reserve(complex.minimal_non_faces.size());
  for (Mask m : complex.minimal_non_faces) gens.push_back(m);

  const Mask total = Mask(1) << n;
  const int jobs = std::max(1, opts.jobs);

  BettiTable table;
  table.n = n;
  if (jobs == 1 || total < 1024) {
    detail::hochster_range(complex, gens, 0, total, opts, table);
  } else {
    std::vector<BettiTable> parts(static_cast<std::size_t>(jobs));
    std::vector<std::thread> threads;
    const Mask chunk = total / static_cast<Mask>(jobs) + 1;
    for (int t = 0; t < jobs; ++t) {
      Mask lo = chunk * static_cast<Mask>(t);
      Mask hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      threads.emplace_back([&, lo, hi, t] {
        detail::hochster_range(complex, gens, lo, hi, opts, parts[static_cast<std::size_t>(t)]);
      });
    }
    for (auto& th : threads) th.join();
    for (const auto& part : parts)
      for (const auto& [ij, v] : part.entries) table.add(ij.first, ij.second, v);
  }
  return table;
}

/**
 * Graded Betti table of an arbitrary proper nonzero monomial ideal:
 * polarize (the table is invariant under polarization), then run the
 * squarefree computation.  The budget bounds the polarized variable count.
 */
inline BettiTable betti_table(const MonomialIdeal& ideal, const HochsterOptions& opts = {}) {
  if (ideal.is_zero()) throw error("betti_table: zero ideal");
  const int psize = polarized_size(ideal);
  if (psize > opts.budget)
    throw budget_error("betti_table: polarization needs " + std::to_string(psize) +
                       " variables, budget is " + std::to_string(opts.budget));
  Polarization p = polarize(ideal);
  BettiTable t = hochster_betti(p.ideal, opts);
  t.n = ideal.ring().n();
  return t;
}

// Linear resolution: generated in one degree d with every entry on the
// line j = i + d, equivalently reg = d.
inline bool is_linear_resolution(const BettiTable& t) {
  int gen_degree = -1;
  for (const auto& [ij, v] : t.entries) {
    if (ij.first != 0) continue;
    if (gen_degree >= 0 && ij.second != gen_degree) return false;
    gen_degree = std::max(gen_degree, ij.second);
  }
  if (gen_degree < 0) return false;
  return t.reg() == gen_degree;
}

// Aligned text grid, rows i = homological degree, columns j - i.
inline std::string format_betti_grid(const BettiTable& t) {
  if (t.empty()) return "(empty table)\n";
  int lo = t.reg(), hi = 0, pd = t.pd();
  for (const auto& [ij, v] : t.entries) lo = std::min(lo, ij.second - ij.first);
  hi = t.reg();

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head;
  head.push_back("");
  for (int d = lo; d <= hi; ++d) head.push_back(std::to_string(d));
  cells.push_back(head);
  for (int i = 0; i <= pd; ++i) {
    std::vector<std::string> row;
    row.push_back(std::to_string(i));
    for (int d = lo; d <= hi; ++d) {
      long long b = t.beta(i, i + d);
      row.push_back(b == 0 ? "." : std::to_string(b));
    }
    cells.push_back(row);
  }

  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << std::string(width[c] - row[c].size() + (c ? 2 : 0), ' ') << row[c];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace wedgi
