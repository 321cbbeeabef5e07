#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wedgi/ideal.hpp"

namespace wedgi {

/**
 * Bookkeeping for one polarization: source variable i maps to the
 * contiguous block of target variables block_start[i] .. block_start[i] +
 * block_len[i] - 1, where block_len[i] is the largest exponent of x_i over
 * the minimal generators.  Blocks are disjoint and cover the target ring.
 */
struct PolarizationMap {
  AmbientRing source_ring;
  AmbientRing target_ring;
  std::vector<int> block_start;
  std::vector<int> block_len;

  // Image of an exponent vector: x_i^e contributes the first e variables
  // of block i.  Requires e <= block_len[i].
  Monomial map(const Monomial& m) const {
    if (m.n() != source_ring.n()) throw ring_mismatch("polarization: monomial from the wrong ring");
    std::vector<int> exps(static_cast<std::size_t>(target_ring.n()), 0);
    for (int i = 0; i < m.n(); ++i) {
      int e = m.exp(i);
      if (e > block_len[static_cast<std::size_t>(i)])
        throw error("polarization: exponent exceeds block for variable " +
                    source_ring.label(i));
      for (int k = 0; k < e; ++k)
        exps[static_cast<std::size_t>(block_start[static_cast<std::size_t>(i)] + k)] = 1;
    }
    return Monomial(std::move(exps));
  }
};

struct Polarization {
  MonomialIdeal ideal;  // squarefree image, same number of generators
  PolarizationMap map;
};

/**
 * Polarize a nonzero monomial ideal.  Target variables are labeled
 * <source label>_<copy index>; a squarefree input polarizes to a renamed
 * copy of itself.  The graded Betti table is unchanged by this operation.
 */
inline Polarization polarize(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw error("polarize: zero ideal has no polarization");
  const AmbientRing& src = ideal.ring();

  std::vector<int> len(static_cast<std::size_t>(src.n()), 0);
  for (const auto& g : ideal.gens())
    for (int i = 0; i < src.n(); ++i)
      len[static_cast<std::size_t>(i)] = std::max(len[static_cast<std::size_t>(i)], g.exp(i));

  std::vector<int> start(static_cast<std::size_t>(src.n()), 0);
  std::vector<std::string> labels;
  int next = 0;
  for (int i = 0; i < src.n(); ++i) {
    start[static_cast<std::size_t>(i)] = next;
    for (int k = 1; k <= len[static_cast<std::size_t>(i)]; ++k)
      labels.push_back(src.label(i) + "_" + std::to_string(k));
    next += len[static_cast<std::size_t>(i)];
  }

  PolarizationMap map{src, AmbientRing(std::move(labels)), std::move(start), std::move(len)};

  std::vector<Monomial> gens;
  gens.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) gens.push_back(map.map(g));
  MonomialIdeal image(map.target_ring, std::move(gens));
  return Polarization{std::move(image), std::move(map)};
}

// Number of variables the polarized ideal lives in, without building it.
inline int polarized_size(const MonomialIdeal& ideal) {
  std::vector<int> len(static_cast<std::size_t>(ideal.ring().n()), 0);
  for (const auto& g : ideal.gens())
    for (int i = 0; i < ideal.ring().n(); ++i)
      len[static_cast<std::size_t>(i)] = std::max(len[static_cast<std::size_t>(i)], g.exp(i));
  int total = 0;
  for (int l : len) total += l;
  return total;
}

}  // namespace wedgi
