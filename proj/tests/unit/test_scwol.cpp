#include <set>

#include "doctest.h"

#include "cogkit/catalog.hpp"
#include "cogkit/iso.hpp"
#include "cogkit/scwol.hpp"

using namespace cogkit;

namespace {

// x -> y -> z with the composite.
ScwolPtr chain3() {
  ScwolBuilder b;
  const auto x = b.add_object("x"), y = b.add_object("y"), z = b.add_object("z");
  const auto f = b.add_morphism("f", x, y), g = b.add_morphism("g", y, z), gf = b.add_morphism("gf", x, z);
  b.set_composite(g, f, gf);
  return b.build_shared();
}

}  // namespace

TEST_CASE("builder and lookups") {
  const auto s = chain3();
  CHECK(s->num_objects() == 3);
  CHECK(s->num_morphisms() == 3);
  CHECK(validate_scwol(*s).ok());
  const auto f = s->morphism_id("f"), g = s->morphism_id("g");
  CHECK(s->composable(g, f));
  CHECK_FALSE(s->composable(f, g));
  CHECK(s->composite(g, f) == s->morphism_id("gf"));
  CHECK_FALSE(s->composite(f, g).has_value());
  CHECK(s->pairs().size() == 1);
  CHECK(s->out_morphisms(s->object_id("x")).size() == 2);
  CHECK(s->in_morphisms(s->object_id("z")).size() == 2);
  CHECK_THROWS_AS(s->object_id("w"), Error);
}

TEST_CASE("scwol axioms") {
  {
    ScwolBuilder b;
    const auto x = b.add_object("x");
    b.add_morphism("l", x, x);
    CHECK(validate_scwol(b.build()).has(ErrorCode::LoopMorphism));
  }
  {
    ScwolBuilder b;
    const auto x = b.add_object("x"), y = b.add_object("y"), z = b.add_object("z");
    b.add_morphism("f", x, y);
    b.add_morphism("g", y, z);
    CHECK(validate_scwol(b.build()).has(ErrorCode::MissingComposite));
  }
  {
    // Two-cycle, composites would be loops.
    ScwolBuilder b;
    const auto x = b.add_object("x"), y = b.add_object("y");
    b.add_morphism("f", x, y);
    b.add_morphism("g", y, x);
    CHECK_FALSE(validate_scwol(b.build()).ok());
  }
  {
    ScwolBuilder b;
    const auto x = b.add_object("x"), y = b.add_object("y"), z = b.add_object("z");
    const auto f = b.add_morphism("f", x, y), g = b.add_morphism("g", y, z);
    const auto h = b.add_morphism("h", y, z);
    b.set_composite(g, f, h);  // h does not start at x
    CHECK(validate_scwol(b.build()).has(ErrorCode::CompositeSourceTargetWrong));
  }
}

TEST_CASE("face posets of simplices") {
  const auto s = fixtures::two_simplex();
  CHECK(validate_scwol(*s).ok());
  CHECK(s->num_objects() == 7);
  CHECK(s->num_morphisms() == 12);
  CHECK(s->pairs().size() == 6);
  CHECK(chains(*s, 1).size() == 12);
  CHECK(chains(*s, 2).size() == 6);
  CHECK(chains(*s, 3).empty());
  // Barycentric subdivision of a triangle.
  CHECK(geometric_realization(*s).f_vector() == std::vector<std::size_t>{7, 12, 6});
  CHECK(geometric_realization(*fixtures::circle()).f_vector() == std::vector<std::size_t>{6, 6});

  const auto closure = face_closure({{0, 1, 2}});
  CHECK(closure.size() == 7);
  CHECK(closure.front().size() == 1);
  CHECK(closure.back() == std::vector<int>{0, 1, 2});
}

TEST_CASE("realization faces") {
  const auto r = geometric_realization(*fixtures::two_simplex());
  for (std::size_t d = 1; d < r.vertices.size(); ++d)
    for (std::size_t k = 0; k < r.vertices[d].size(); ++k) {
      CHECK(r.vertices[d][k].size() == d + 1);
      CHECK(r.faces[d][k].size() == d + 1);
      // Every face's vertex set is contained in the cell's.
      const std::set<ObjId> cell(r.vertices[d][k].begin(), r.vertices[d][k].end());
      for (auto f : r.faces[d][k])
        for (auto v : r.vertices[d - 1][f]) CHECK(cell.count(v));
    }
}

TEST_CASE("links") {
  const auto s = fixtures::two_simplex();
  const auto top = s->num_objects() - 1;  // the 2-face comes last
  CHECK(lower_link(*s, top).num_objects() == 6);
  CHECK(upper_link(*s, top).num_objects() == 0);
  CHECK(upper_link(*s, 0).num_objects() == 3);  // a vertex lies in two edges and the triangle
}

TEST_CASE("components and trees") {
  const auto s = fixtures::circle();
  CHECK(connected_components(*s).size() == 1);
  const auto t = maximal_tree(*s);
  CHECK(t.size() == s->num_objects() - 1);
  CHECK_FALSE(spanning_tree_violation(*s, t).has_value());
  CHECK(spanning_tree_violation(*s, {}).has_value());
  std::vector<MorId> all(s->num_morphisms());
  for (MorId a = 0; a < all.size(); ++a) all[a] = a;
  CHECK(spanning_tree_violation(*s, all).has_value());  // contains the cycle

  ScwolBuilder b;
  b.add_object("x");
  b.add_object("y");
  const auto two = b.build();
  CHECK(connected_components(two).size() == 2);
  CHECK_THROWS_AS(maximal_tree(two), Error);
}

TEST_CASE("morphism levels") {
  const auto seg = fixtures::segment();
  CHECK(validate_scwol_morphism(identity_morphism(seg)).ok());

  // Fold the segment onto a point: a functor, but degenerate.
  ScwolBuilder b;
  const auto p = b.add_object("p"), q = b.add_object("q");
  b.add_morphism("e", q, p);
  const auto edge = b.build_shared();
  ScwolMorphism fold{seg, edge, {}, {}};
  fold.on_objects.assign(seg->num_objects(), p);
  fold.on_objects[seg->object_id("m")] = q;
  fold.on_morphisms.assign(seg->num_morphisms(), 0);
  CHECK(validate_scwol_morphism(fold, MorphismLevel::Functor).ok());
  CHECK(validate_scwol_morphism(fold, MorphismLevel::LocallyInjective).has(ErrorCode::NotLocallyInjective));
}

TEST_CASE("star of the top face is the whole simplex") {
  const auto s = fixtures::two_simplex();
  const ObjId top = s->num_objects() - 1;
  const auto star = star_scwol(s, top);
  CHECK(validate_scwol(*star.scwol).ok());
  CHECK(star.scwol->num_objects() == 7);
  CHECK(star.scwol->num_morphisms() == 12);
  CHECK(scwol_isomorphic(*star.scwol, *s).has_value());
  CHECK(validate_scwol_morphism(star_projection(star), MorphismLevel::Functor).ok());

  // At a vertex the star has the center and its three cofaces, plus their links.
  const auto sv = star_scwol(s, 0);
  CHECK(validate_scwol(*sv.scwol).ok());
  CHECK(sv.upper_object.size() == 3);
  CHECK(sv.lower_object.empty());
}
