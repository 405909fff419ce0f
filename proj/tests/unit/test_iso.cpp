#include <algorithm>
#include <random>

#include "doctest.h"

#include "cogkit/catalog.hpp"
#include "cogkit/iso.hpp"

using namespace cogkit;

namespace {

// Same scwol with objects and morphisms renumbered by random permutations.
Scwol shuffled(const Scwol& s, std::mt19937& rng) {
  std::vector<ObjId> po(s.num_objects());
  std::vector<MorId> pm(s.num_morphisms());
  for (ObjId x = 0; x < po.size(); ++x) po[x] = x;
  for (MorId a = 0; a < pm.size(); ++a) pm[a] = a;
  std::shuffle(po.begin(), po.end(), rng);
  std::shuffle(pm.begin(), pm.end(), rng);
  std::vector<ObjId> inv_o(po.size());
  std::vector<MorId> inv_m(pm.size());
  for (ObjId x = 0; x < po.size(); ++x) inv_o[po[x]] = x;
  for (MorId a = 0; a < pm.size(); ++a) inv_m[pm[a]] = a;
  ScwolBuilder b;
  for (ObjId k = 0; k < po.size(); ++k) b.add_object("o" + std::to_string(k));
  for (MorId k = 0; k < pm.size(); ++k) {
    const MorId a = inv_m[k];
    b.add_morphism("m" + std::to_string(k), po[s.source(a)], po[s.target(a)]);
  }
  for (const auto& c : s.pairs()) b.set_composite(pm[c.a], pm[c.b], pm[c.ab]);
  return b.build();
}

}  // namespace

TEST_CASE("shuffled copies are isomorphic") {
  std::mt19937 rng(7);
  for (const auto& s : {fixtures::two_simplex(), fixtures::circle(), fixtures::segment()}) {
    for (int k = 0; k < 5; ++k) {
      const Scwol t = shuffled(*s, rng);
      const auto iso = scwol_isomorphic(*s, t);
      REQUIRE(iso.has_value());
      CHECK(check_scwol_iso(*s, t, *iso).ok());
    }
  }
}

TEST_CASE("distinct shapes are not isomorphic") {
  CHECK_FALSE(scwol_isomorphic(*fixtures::two_simplex(), *fixtures::circle()).has_value());
  CHECK_FALSE(scwol_isomorphic(*fixtures::segment(), *fixtures::point()).has_value());

  // Same counts, opposite orientation.
  ScwolBuilder a;
  {
    const auto x = a.add_object("x"), y = a.add_object("y"), z = a.add_object("z");
    a.add_morphism("f", x, y);
    a.add_morphism("g", x, z);
  }
  ScwolBuilder b;
  {
    const auto x = b.add_object("x"), y = b.add_object("y"), z = b.add_object("z");
    b.add_morphism("f", x, y);
    b.add_morphism("g", z, y);
  }
  CHECK_FALSE(scwol_isomorphic(a.build(), b.build()).has_value());
}

TEST_CASE("a bad witness is rejected") {
  const auto s = fixtures::segment();
  ScwolIso bogus;
  bogus.on_objects = {0, 0, 0};
  bogus.on_morphisms = {0, 1};
  CHECK_FALSE(check_scwol_iso(*s, *s, bogus).ok());
}

TEST_CASE("search budget") {
  // The circle has symmetries, so refinement alone does not finish.
  CHECK_THROWS_AS(scwol_isomorphic(*fixtures::circle(), *fixtures::circle(), 0), Error);
}
