#include "doctest.h"

#include "cogkit/catalog.hpp"
#include "cogkit/immersion.hpp"

using namespace cogkit;

TEST_CASE("identities are immersions") {
  for (const auto& [id, c] : fixtures::complexes()) {
    INFO(id);
    const auto r = check_immersion(identity_cog_morphism(c));
    CHECK(r.immersion);
    CHECK(r.lemma_agrees);
    for (const auto& v : r.objects) CHECK((v.algebraic && v.geometric && v.upper_link && v.coset));
  }
}

TEST_CASE("collapsing seg23 is not an immersion") {
  const auto r = check_immersion(fixtures::seg23_collapse(fixtures::seg23()));
  CHECK_FALSE(r.immersion);
  CHECK(r.lemma_agrees);
  CHECK_FALSE(r.objects[0].algebraic);
  CHECK_FALSE(r.objects[0].witness.empty());
}

TEST_CASE("folding two edges fails the coset condition at the center") {
  const auto phi = fixtures::fold2();
  const auto r = check_immersion(phi);
  CHECK_FALSE(r.immersion);
  CHECK(r.lemma_agrees);
  // Two copies of Z2 map into a single Z2.
  CHECK(r.objects[0].algebraic);
  CHECK_FALSE(r.objects[0].coset);
  CHECK_FALSE(r.objects[0].upper_link);
  bool found = false;
  for (const auto& v : check_coset_condition(phi)) found |= (v.sigma == 0 && !v.injective);
  CHECK(found);
}

TEST_CASE("coboundary isomorphisms are immersions") {
  const auto c = fixtures::triangle_twisted();
  std::vector<Elem> g;
  for (MorId a = 0; a < c->base->num_morphisms(); ++a) g.push_back(Elem(a % c->group(c->base->target(a))->order()));
  const auto cb = coboundary(c, g);
  REQUIRE(validate_cog_morphism(cb.iso).ok());
  const auto r = check_immersion(cb.iso);
  CHECK(r.immersion);
  CHECK(r.lemma_agrees);
}

TEST_CASE("developability candidates") {
  const auto seg = fixtures::seg23();
  const auto v = check_developability_candidate(fixtures::seg23_to_z6(seg));
  CHECK(v.developable);
  REQUIRE(v.development.has_value());
  CHECK(v.development->scwol->num_objects() == 11);

  auto phi = fixtures::seg23_to_z6(seg);
  phi.local[0] = GroupHom::trivial(seg->groups[0], phi.target);
  const auto w = check_developability_candidate(phi);
  CHECK_FALSE(w.developable);
  CHECK(w.witness == ObjId{0});
}
