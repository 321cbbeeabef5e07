#pragma once

#include <algorithm>
#include <vector>

#include "wedgi/exact_rank.hpp"
#include "wedgi/simplicial.hpp"

namespace wedgi {

struct HomologyOptions {
  FieldSpec field{};
  bool reduce = true;  // pair reductions before building boundary matrices
};

/**
 * Reduced homology dimensions of the restriction of the complex to W,
 * over the requested field.  Returns a vector indexed by k+1 holding
 * dim H~_k for k = -1 .. |W|-1.  Conventions: the empty complex {o}
 * has H~_{-1} of dimension 1; the void complex has no homology at all.
 */
inline std::vector<long long> reduced_homology_dims(const SimplicialComplex& c, Mask w,
                                                    const HomologyOptions& opts = {}) {
  validate_field(opts.field);
  const int wsize = popcount(w);
  std::vector<long long> dims(static_cast<std::size_t>(wsize) + 1, 0);

  std::vector<Mask> faces = restricted_faces(c, w);
  if (opts.reduce) faces = reduce_cells(faces, w);
  if (faces.empty()) return dims;  // reduced to the void complex

  // Bucket faces by cardinality; bucket[s] holds the (s-1)-dimensional faces.
  std::vector<std::vector<Mask>> bucket(static_cast<std::size_t>(wsize) + 1);
  for (Mask f : faces) bucket[static_cast<std::size_t>(popcount(f))].push_back(f);
  for (auto& b : bucket) std::sort(b.begin(), b.end());

  // rank[s] = rank of the boundary map from s-sets to (s-1)-sets.
  std::vector<int> rank(static_cast<std::size_t>(wsize) + 2, 0);
  for (int s = 1; s <= wsize; ++s) {
    const auto& cols = bucket[static_cast<std::size_t>(s)];
    const auto& rows = bucket[static_cast<std::size_t>(s - 1)];
    if (cols.empty() || rows.empty()) continue;

    std::vector<std::vector<long long>> m(rows.size(), std::vector<long long>(cols.size(), 0));
    for (std::size_t cidx = 0; cidx < cols.size(); ++cidx) {
      Mask tau = cols[cidx];
      int pos = 0;
      for (int v = 0; v < c.n; ++v) {
        Mask bit = Mask(1) << v;
        if (!(tau & bit)) continue;
        Mask facet = tau & ~bit;
        // After reductions the cell set need not be downward closed; the
        // boundary map restricts to the surviving cells.
        auto it = std::lower_bound(rows.begin(), rows.end(), facet);
        if (it != rows.end() && *it == facet)
          m[static_cast<std::size_t>(it - rows.begin())][cidx] = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      }
    }
    rank[static_cast<std::size_t>(s)] = matrix_rank(m, opts.field);
  }

  for (int k = -1; k < wsize; ++k) {
    long long fk = static_cast<long long>(bucket[static_cast<std::size_t>(k + 1)].size());
    dims[static_cast<std::size_t>(k + 1)] =
        fk - rank[static_cast<std::size_t>(k + 1)] - rank[static_cast<std::size_t>(k + 2)];
  }
  return dims;
}

}  // namespace wedgi
