#pragma once

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "wedgi/ideal.hpp"

namespace wedgi {

// Vertex subsets as bitmasks; complexes here never exceed 30 vertices.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

/**
 * Simplicial complex on vertices 0..n-1, stored by its minimal non-faces
 * (pairwise incomparable, each nonempty).  W is a face exactly when no
 * minimal non-face is contained in W.
 */
struct SimplicialComplex {
  int n = 0;
  std::vector<Mask> minimal_non_faces;

  bool is_face(Mask w) const {
    for (Mask nf : minimal_non_faces)
      if ((nf & ~w) == 0) return false;
    return true;
  }
};

/**
 * Stanley-Reisner complex of a squarefree monomial ideal: the minimal
 * non-faces are exactly the generator supports.  The zero ideal gives the
 * full simplex.
 */
inline SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw error("stanley_reisner: ideal is not squarefree");
  if (ideal.ring().n() > 30) throw error("stanley_reisner: more than 30 vertices");
  SimplicialComplex c;
  c.n = ideal.ring().n();
  c.minimal_non_faces.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) {
    Mask m = 0;
    for (int i : g.support()) m |= Mask(1) << i;
    c.minimal_non_faces.push_back(m);
  }
  return c;
}

/**
 * All faces of the restriction of the complex to the vertex set W,
 * including the empty face.  Enumeration walks vertices in ascending
 * order, so each face is produced exactly once.
 */
inline std::vector<Mask> restricted_faces(const SimplicialComplex& c, Mask w) {
  // Only non-faces inside W can obstruct a subset of W.
  std::vector<Mask> nf;
  for (Mask m : c.minimal_non_faces)
    if ((m & ~w) == 0) nf.push_back(m);

  std::vector<int> verts;
  for (int v = 0; v < c.n; ++v)
    if (w & (Mask(1) << v)) verts.push_back(v);

  std::vector<Mask> faces;
  faces.push_back(0);
  // Work stack of (face, next vertex position to try).
  std::vector<std::pair<Mask, std::size_t>> stack;
  stack.emplace_back(Mask(0), std::size_t(0));
  while (!stack.empty()) {
    auto [face, pos] = stack.back();
    stack.pop_back();
    for (std::size_t p = pos; p < verts.size(); ++p) {
      Mask cand = face | (Mask(1) << verts[p]);
      bool ok = true;
      for (Mask m : nf)
        if ((m & ~cand) == 0) { ok = false; break; }
      if (!ok) continue;
      faces.push_back(cand);
      stack.emplace_back(cand, p + 1);
    }
  }
  return faces;
}

/**
 * Homology-preserving reduction of the cell set before any linear algebra.
 * Two kinds of pairs are removed: a free pair (sigma, tau) where tau is
 * the unique live cell covering sigma, and a coreduction pair (sigma, tau)
 * where sigma is the unique live facet of tau.  Either removal leaves the
 * reduced homology of the chain complex spanned by the live cells, with
 * the boundary map restricted to them, unchanged in every degree.  The
 * empty face takes part as the (-1)-cell, so the augmented complex is
 * what gets reduced.  The survivors need not be downward closed.
 */
inline std::vector<Mask> reduce_cells(const std::vector<Mask>& faces, Mask w) {
  std::unordered_set<Mask> alive(faces.begin(), faces.end());
  // Per cell: live cofaces (up) and live facets (down).
  std::unordered_map<Mask, std::pair<int, int>> deg;
  deg.reserve(faces.size() * 2);

  std::vector<int> verts;
  for (int v = 0; v < 31; ++v)
    if (w & (Mask(1) << v)) verts.push_back(v);

  for (Mask f : faces) {
    int up = 0;
    for (int v : verts)
      if (!(f & (Mask(1) << v)) && alive.count(f | (Mask(1) << v))) ++up;
    deg[f] = {up, f == 0 ? 0 : popcount(f)};
  }

  std::vector<Mask> work;
  for (Mask f : faces)
    if (deg[f].first == 1 || deg[f].second == 1) work.push_back(f);

  auto on_removed = [&](Mask gone) {
    for (int v : verts) {
      Mask bit = Mask(1) << v;
      if (gone & bit) {
        Mask facet = gone & ~bit;
        auto it = deg.find(facet);
        if (it != deg.end() && alive.count(facet) && --(it->second.first) == 1)
          work.push_back(facet);
      } else {
        Mask coface = gone | bit;
        auto it = deg.find(coface);
        if (it != deg.end() && alive.count(coface) && --(it->second.second) == 1)
          work.push_back(coface);
      }
    }
  };

  while (!work.empty()) {
    Mask f = work.back();
    work.pop_back();
    if (!alive.count(f)) continue;
    auto [up, down] = deg[f];

    Mask partner = 0;
    bool found = false;
    if (up == 1) {  // f is a free face; partner is its unique live coface
      for (int v : verts) {
        Mask cand = f | (Mask(1) << v);
        if (cand != f && alive.count(cand)) { partner = cand; found = true; break; }
      }
    } else if (down == 1) {  // coreduction; partner is the unique live facet
      for (int v : verts) {
        Mask bit = Mask(1) << v;
        if ((f & bit) && alive.count(f & ~bit)) { partner = f & ~bit; found = true; break; }
      }
    }
    if (!found) continue;

    alive.erase(f);
    alive.erase(partner);
    on_removed(f);
    on_removed(partner);
  }

  std::vector<Mask> out(alive.begin(), alive.end());
  return out;
}

}  // namespace wedgi
