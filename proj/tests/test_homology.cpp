#include <catch2/catch_amalgamated.hpp>

#include <initializer_list>
#include <random>
#include <vector>

#include "oracle_helpers.hpp"
#include "wedgi/homology.hpp"

using namespace wedgi;
namespace oracle = testing_oracles;

namespace {

Mask mask_of(std::initializer_list<int> verts) {
  Mask m = 0;
  for (int v : verts) m |= Mask(1) << v;
  return m;
}

Mask full_mask(int n) { return (Mask(1) << n) - 1; }

std::vector<Mask> masks_of(const std::vector<std::vector<int>>& sets) {
  std::vector<Mask> out;
  for (const auto& s : sets) {
    Mask m = 0;
    for (int v : s) m |= Mask(1) << v;
    out.push_back(m);
  }
  return out;
}

// Six-vertex closed surface with every pair an edge and ten triangles;
// chi = 1, H~_1 and H~_2 vanish rationally but are 1-dimensional mod 2.
SimplicialComplex projective_plane() {
  SimplicialComplex c;
  c.n = 6;
  c.minimal_non_faces = masks_of({{0, 1, 4},
                                  {0, 1, 5},
                                  {0, 2, 3},
                                  {0, 2, 5},
                                  {0, 3, 4},
                                  {1, 2, 3},
                                  {1, 2, 4},
                                  {1, 3, 5},
                                  {2, 4, 5},
                                  {3, 4, 5}});
  return c;
}

}  // namespace

TEST_CASE("a full simplex has no reduced homology", "[homology]") {
  SimplicialComplex c{5, {}};
  for (Mask w : {full_mask(5), mask_of({0, 2, 4}), mask_of({1})}) {
    std::vector<long long> dims = reduced_homology_dims(c, w);
    REQUIRE(dims.size() == static_cast<std::size_t>(popcount(w)) + 1);
    for (long long d : dims) REQUIRE(d == 0);
  }
}

TEST_CASE("boundary of a simplex is a sphere", "[homology]") {
  for (int d = 1; d <= 5; ++d) {
    int n = d + 1;
    SimplicialComplex c{n, {full_mask(n)}};
    std::vector<long long> dims = reduced_homology_dims(c, full_mask(n));
    for (int k = -1; k < n; ++k) {
      long long expected = (k == d - 1) ? 1 : 0;
      INFO("d=" << d << " k=" << k);
      REQUIRE(dims[static_cast<std::size_t>(k + 1)] == expected);
    }
  }
}

TEST_CASE("two points and an irrelevant vertex", "[homology]") {
  SimplicialComplex two{2, {mask_of({0, 1})}};
  REQUIRE(reduced_homology_dims(two, full_mask(2)) == std::vector<long long>{0, 1, 0});

  // A single vertex is contractible.
  REQUIRE(reduced_homology_dims(two, mask_of({0})) == std::vector<long long>{0, 0});

  // Restricting to no vertices leaves only the empty face.
  REQUIRE(reduced_homology_dims(two, 0) == std::vector<long long>{1});

  // A vertex excluded by a singleton non-face leaves the empty face too.
  SimplicialComplex gone{2, {mask_of({1})}};
  REQUIRE(reduced_homology_dims(gone, mask_of({1})) == std::vector<long long>{1, 0});
}

TEST_CASE("two disjoint circles", "[homology]") {
  SimplicialComplex c;
  c.n = 6;
  c.minimal_non_faces = masks_of({{0, 1, 2}, {3, 4, 5}});
  for (int a : {0, 1, 2})
    for (int b : {3, 4, 5}) c.minimal_non_faces.push_back(mask_of({a, b}));

  std::vector<long long> dims = reduced_homology_dims(c, full_mask(6));
  REQUIRE(dims[1] == 1);  // one extra connected component
  REQUIRE(dims[2] == 2);  // two independent cycles
  for (std::size_t k = 3; k < dims.size(); ++k) REQUIRE(dims[k] == 0);
}

TEST_CASE("homology that depends on the field", "[homology][field]") {
  SimplicialComplex c = projective_plane();
  Mask w = full_mask(6);

  std::vector<long long> rational = reduced_homology_dims(c, w);
  for (long long d : rational) REQUIRE(d == 0);

  HomologyOptions mod2;
  mod2.field.characteristic = 2;
  std::vector<long long> f2 = reduced_homology_dims(c, w, mod2);
  REQUIRE(f2 == std::vector<long long>{0, 0, 1, 1, 0, 0, 0});

  HomologyOptions mod5;
  mod5.field.characteristic = 5;
  REQUIRE(reduced_homology_dims(c, w, mod5) == rational);

  // The reduction pass must not disturb torsion-sensitive answers.
  HomologyOptions mod2_plain = mod2;
  mod2_plain.reduce = false;
  REQUIRE(reduced_homology_dims(c, w, mod2_plain) == f2);
}

TEST_CASE("field validation", "[homology][field]") {
  SimplicialComplex c{2, {mask_of({0, 1})}};
  HomologyOptions bad;
  bad.field.characteristic = 6;
  REQUIRE_THROWS_AS(reduced_homology_dims(c, full_mask(2), bad), error);
  bad.field.characteristic = -3;
  REQUIRE_THROWS_AS(reduced_homology_dims(c, full_mask(2), bad), error);
}

TEST_CASE("stanley_reisner wants a squarefree ideal", "[homology]") {
  AmbientRing ring = AmbientRing::with_vars(3);
  REQUIRE_THROWS_AS(stanley_reisner(MonomialIdeal::from_strings(ring, {"x1^2"})), error);

  SimplicialComplex c = stanley_reisner(MonomialIdeal::from_strings(ring, {"x1*x2", "x2*x3"}));
  REQUIRE(c.minimal_non_faces == masks_of({{0, 1}, {1, 2}}));
  REQUIRE(c.is_face(mask_of({0, 2})));
  REQUIRE(!c.is_face(mask_of({0, 1})));

  // The zero ideal cuts nothing out.
  REQUIRE(stanley_reisner(MonomialIdeal::zero(ring)).minimal_non_faces.empty());
}

TEST_CASE("reduction keeps homology and the Euler sum balances", "[homology][property]") {
  std::mt19937 rng(90125);
  std::uniform_int_distribution<int> nvars(3, 9);

  for (int trial = 0; trial < 200; ++trial) {
    int n = nvars(rng);
    AmbientRing ring = AmbientRing::with_vars(n);
    MonomialIdeal ideal = oracle::random_ideal(rng, ring, 5, 1);
    SimplicialComplex c = stanley_reisner(ideal);

    std::uniform_int_distribution<Mask> wdist(0, full_mask(n));
    Mask w = (trial % 3 == 0) ? full_mask(n) : wdist(rng);

    HomologyOptions plain;
    plain.reduce = false;
    std::vector<long long> reduced = reduced_homology_dims(c, w);
    std::vector<long long> direct = reduced_homology_dims(c, w, plain);
    REQUIRE(reduced == direct);

    // Alternating face count equals the alternating homology count.
    long long chi_faces = 0;
    for (Mask f : restricted_faces(c, w)) chi_faces += (popcount(f) % 2 == 0) ? -1 : 1;
    long long chi_hom = 0;
    for (std::size_t idx = 0; idx < reduced.size(); ++idx)
      chi_hom += (idx % 2 == 0 ? -1 : 1) * reduced[idx];
    REQUIRE(chi_faces == chi_hom);

    if (trial % 5 == 0) {
      HomologyOptions mod2;
      mod2.field.characteristic = 2;
      std::vector<long long> f2 = reduced_homology_dims(c, w, mod2);
      HomologyOptions mod2_plain = mod2;
      mod2_plain.reduce = false;
      REQUIRE(f2 == reduced_homology_dims(c, w, mod2_plain));

      // Same Euler sum over any field, and no smaller Betti numbers mod p.
      long long chi2 = 0;
      for (std::size_t idx = 0; idx < f2.size(); ++idx)
        chi2 += (idx % 2 == 0 ? -1 : 1) * f2[idx];
      REQUIRE(chi2 == chi_hom);
      for (std::size_t idx = 0; idx < f2.size(); ++idx) REQUIRE(f2[idx] >= reduced[idx]);
    }
  }
}
