#include "doctest.h"

#include "cogkit/catalog.hpp"

using namespace cogkit;

TEST_CASE("simple complexes over a poset") {
  // a > b > c as a chain; G_c should collect every generator.
  const auto s = poset_scwol({"a", "b", "c"}, {{false, true, true}, {false, false, true}, {false, false, false}});
  CHECK(validate_scwol(*s).ok());
  CHECK(s->num_morphisms() == 3);
  const auto s3 = symmetric_group(3);
  const Elem t = *s3->find_permutation({1, 0, 2});
  const Elem r = *s3->find_permutation({1, 2, 0});
  std::vector<GroupHom> inc;
  const auto c = simple_complex(s, s3, {{t}, {}, {r}}, &inc);
  CHECK(validate_cog(c).ok());
  CHECK(c.groups[0]->order() == 2);
  CHECK(c.groups[1]->order() == 2);
  CHECK(c.groups[2]->order() == 6);
  REQUIRE(inc.size() == 3);
  for (const auto& h : inc) CHECK(is_injective(h));
}

TEST_CASE("relabelled complexes stay valid") {
  const auto c = fixtures::seg23();
  std::vector<std::vector<Elem>> perms = {{1, 0}, {2, 0, 1}, {0}};
  const auto r = relabel_complex(*c, perms);
  CHECK(validate_cog(r).ok());
  CHECK(r.groups[0]->identity() == 1);
}

TEST_CASE("the corpus is valid and reproducible") {
  CorpusGenerator a(99), b(99);
  for (int k = 0; k < 40; ++k) {
    const auto x = a.next_complex(), y = b.next_complex();
    CHECK(validate_scwol(*x->base).ok());
    CHECK(validate_cog(*x).ok());
    CHECK(x->base->num_objects() == y->base->num_objects());
    CHECK(x->twists == y->twists);
    CHECK(x->base->num_objects() <= 12);
  }
}

TEST_CASE("generated morphisms are valid") {
  CorpusGenerator g(5);
  for (int k = 0; k < 20; ++k) {
    const auto s = g.next_simple();
    const auto q = g.quotient_morphism(s);
    CHECK(validate_cog_morphism(q).ok());
    const auto f = g.fold_morphism();
    CHECK(validate_cog_morphism(f).ok());
    const auto cb = g.random_coboundary(s.complex);
    CHECK(validate_cog(*cb.complex).ok());
  }
}
