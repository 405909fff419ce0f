#include "doctest.h"

#include "cogkit/catalog.hpp"
#include "cogkit/local_cog.hpp"

using namespace cogkit;

TEST_CASE("local complexes over every fixture vertex") {
  for (const auto& [id, c] : fixtures::complexes()) {
    for (ObjId g = 0; g < c->base->num_objects(); ++g) {
      INFO(id << " @ " << g);
      const auto l = build_local_cog(c, g);
      CHECK(validate_scwol(*l.star.scwol).ok());
      CHECK(validate_cog(*l.cog).ok());
      const auto theta = build_theta(l);
      CHECK(validate_morphism_to_group(theta).ok());
      CHECK_FALSE(first_non_injective(theta.local).has_value());
      const auto sigma = build_sigma(l);
      CHECK(validate_cog_morphism(sigma).ok());
      const auto tree = star_tree(l);
      CHECK_FALSE(spanning_tree_violation(*l.star.scwol, tree).has_value());
    }
  }
}

TEST_CASE("local groups of star-s3 at gamma") {
  const auto c = fixtures::star_s3();
  const auto l = build_local_cog(c, 0);
  const auto& s = *l.star.scwol;
  CHECK(s.num_objects() == 2);
  CHECK(s.num_morphisms() == 1);
  CHECK(l.cog->groups[l.star.center]->order() == 6);
  const ObjId up = l.star.upper_object.at(0);
  CHECK(l.cog->groups[up]->order() == 2);
}

TEST_CASE("lower objects carry G_gamma") {
  // At the leaf m of seg23 the star looks down at v0 and v1.
  const auto c = fixtures::seg23();
  const ObjId m = c->base->object_id("m");
  const auto l = build_local_cog(c, m);
  CHECK(l.star.lower_object.size() == 2);
  for (const auto& [b, obj] : l.star.lower_object) CHECK(l.cog->groups[obj]->order() == 1);
}
