#include "doctest.h"

#include "cogkit/catalog.hpp"
#include "cogkit/cog.hpp"

using namespace cogkit;

namespace {

// x -> y -> z (plus the composite), S3 everywhere, identity homs.
ComplexOfGroups chain_s3() {
  ScwolBuilder b;
  const auto x = b.add_object("x"), y = b.add_object("y"), z = b.add_object("z");
  const auto f = b.add_morphism("f", x, y), g = b.add_morphism("g", y, z), gf = b.add_morphism("gf", x, z);
  b.set_composite(g, f, gf);
  ComplexOfGroups c;
  c.base = b.build_shared();
  const auto s3 = symmetric_group(3);
  c.groups = {s3, s3, s3};
  c.psi = {GroupHom::identity(s3), GroupHom::identity(s3), GroupHom::identity(s3)};
  c.twists = {s3->identity()};
  return c;
}

}  // namespace

TEST_CASE("fixtures validate") {
  for (const auto& [id, c] : fixtures::complexes()) {
    INFO(id);
    CHECK(validate_cog(*c).ok());
  }
}

TEST_CASE("cocycle failures are detected") {
  auto c = chain_s3();
  CHECK(validate_cog(c).ok());
  // Ad(g) is the identity on S3 only for g = e, so any other twist breaks 3(a).
  c.twists[0] = 1;
  const auto r = validate_cog(c);
  REQUIRE(r.has(ErrorCode::Cocycle2aFail));
  CHECK(r.find(ErrorCode::Cocycle2aFail)->witness.find("(g,f)") != std::string::npos);
}

TEST_CASE("non-injective psi and shape errors") {
  auto c = chain_s3();
  c.psi[0] = GroupHom::trivial(c.groups[0], c.groups[1]);
  CHECK(validate_cog(c).has(ErrorCode::NonInjectivePsi));

  auto d = chain_s3();
  d.twists.clear();
  CHECK_FALSE(validate_cog(d).ok());
}

TEST_CASE("coboundaries give isomorphic complexes") {
  const CogPtr c = share(chain_s3());
  // g_a in G_{t(a)}: arbitrary elements.
  const std::vector<Elem> g = {1, 4, 3};
  const auto cb = coboundary(c, g);
  CHECK(validate_cog(*cb.complex).ok());
  CHECK(validate_cog_morphism(cb.iso).ok());
  for (MorId a = 0; a < 3; ++a) {
    // psi'_a = Ad(g_a^-1) psi_a
    const auto& grp = *c->groups[c->base->target(a)];
    for (Elem h = 0; h < 6; ++h) CHECK(cb.complex->psi[a](h) == grp.conj(grp.inv(g[a]), c->psi[a](h)));
  }
  // Undo it.
  const auto back = coboundary(cb.complex, inverse_family(*c, g));
  CHECK(back.complex->twists == c->twists);
  for (MorId a = 0; a < 3; ++a) CHECK(same_map(back.complex->psi[a], c->psi[a]));
}

TEST_CASE("composition of morphisms") {
  const CogPtr c = fixtures::triangle_twisted();
  const auto id = identity_cog_morphism(c);
  CHECK(validate_cog_morphism(id).ok());
  const auto twice = compose(id, id);
  CHECK(validate_cog_morphism(twice).ok());
  CHECK(twice.edge == id.edge);

  const auto seg = fixtures::seg23();
  const auto to_z6 = fixtures::seg23_to_z6(seg);
  CHECK(validate_morphism_to_group(to_z6).ok());
  CHECK_FALSE(first_non_injective(to_z6.local).has_value());
  const auto again = compose(identity_cog_morphism(seg), to_z6);
  CHECK(validate_morphism_to_group(again).ok());
  for (ObjId x = 0; x < 3; ++x) CHECK(same_map(again.local[x], to_z6.local[x]));
}

TEST_CASE("morphism conditions fail with witnesses") {
  const auto seg = fixtures::seg23();
  auto phi = fixtures::seg23_to_z6(seg);
  phi.edge[0] = 1;  // fine for (1): Z6 is abelian
  CHECK(validate_morphism_to_group(phi).ok());

  const auto collapse = fixtures::seg23_collapse(seg);
  CHECK(validate_cog_morphism(collapse).ok());
  CHECK(first_non_injective(collapse.local) == ObjId{0});

  auto bad = collapse;
  bad.local[0] = GroupHom::identity(seg->groups[0]);  // wrong target group
  CHECK_FALSE(validate_cog_morphism(bad).ok());
}
