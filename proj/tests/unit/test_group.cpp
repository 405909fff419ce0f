#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"

#include "cogkit/group.hpp"

using namespace cogkit;

namespace {

// Z/n table built by hand, independent of cyclic_group.
std::vector<std::vector<Elem>> zn_table(Elem n) {
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) t[x][y] = (x + y) % n;
  return t;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("cayley tables are validated") {
  auto g = FiniteGroup::from_cayley_table(zn_table(5), 0);
  CHECK(g.order() == 5);
  CHECK(g.is_abelian());
  CHECK(g.inv(2) == 3);
  CHECK(g.pow(2, 3) == 1);
  CHECK(g.pow(2, -1) == 3);
  CHECK(g.element_order(2) == 5);

  auto bad = zn_table(4);
  bad[1][1] = 3;  // breaks associativity and the Latin square
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table(bad, 0), Error);

  std::vector<std::vector<Elem>> no_id = {{1, 0}, {0, 0}};
  CHECK(code_of([&] { FiniteGroup::from_cayley_table(no_id, 0); }) == ErrorCode::NoIdentity);

  std::vector<std::vector<Elem>> out = {{0, 2}, {1, 0}};
  CHECK(code_of([&] { FiniteGroup::from_cayley_table(out, 0); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("permutation closure") {
  // S3 from a transposition and a 3-cycle.
  auto s3 = FiniteGroup::from_permutation_generators(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.identity() == 0);
  CHECK(s3.permutation(0) == Permutation{0, 1, 2});
  CHECK(s3.find_permutation({2, 1, 0}).has_value());

  CHECK(code_of([] { FiniteGroup::from_permutation_generators(3, {{0, 0, 1}}); }) == ErrorCode::NotPermutation);
  CHECK(code_of([] {
          FiniteGroup::from_permutation_generators(6, {{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}}, 100);
        }) == ErrorCode::ClosureTooLarge);
}

TEST_CASE("catalog orders and abelianness") {
  CHECK(trivial_group()->order() == 1);
  CHECK(cyclic_group(7)->order() == 7);
  CHECK(dihedral_group(4)->order() == 8);
  CHECK(symmetric_group(4)->order() == 24);
  CHECK(quaternion_group()->order() == 8);
  CHECK_FALSE(quaternion_group()->is_abelian());
  // Q8 has a single element of order 2.
  const auto q = quaternion_group();
  int order2 = 0;
  for (Elem x = 0; x < q->order(); ++x) order2 += q->element_order(x) == 2;
  CHECK(order2 == 1);
}

TEST_CASE("homomorphisms") {
  const auto z6 = cyclic_group(6), z3 = cyclic_group(3), z2 = cyclic_group(2);
  std::vector<Elem> mod3(6);
  for (Elem x = 0; x < 6; ++x) mod3[x] = x % 3;
  const auto f = GroupHom::make(z6, z3, mod3);
  CHECK(f.check().ok());
  CHECK_FALSE(is_injective(f));
  CHECK(hom_image(f) == std::vector<Elem>{0, 1, 2});

  // 1 -> 1 in Z2 is not additive from Z3.
  CHECK_THROWS_AS(GroupHom::make(z3, z2, {0, 1, 1}), Error);

  const auto id = GroupHom::identity(z6);
  CHECK(same_map(compose_homs(f, id), f));
  CHECK(hom_image(GroupHom::trivial(z6, z3)) == std::vector<Elem>{0});

  // Inner automorphisms of an abelian group are trivial.
  CHECK(same_map(ad(2, z6), id));
  const auto s3 = symmetric_group(3);
  bool moved = false;
  for (Elem g = 0; g < 6; ++g) moved |= !same_map(ad(g, s3), GroupHom::identity(s3));
  CHECK(moved);
}

TEST_CASE("subgroups and cosets") {
  const auto z6 = cyclic_group(6);
  const std::vector<Elem> evens = {0, 2, 4};
  const auto cs = cosets(z6, evens);
  CHECK(cs.size() == 2);
  CHECK(cs.reps == std::vector<Elem>{0, 1});
  CHECK(cs.coset_of(3) == cs.coset_of(5));
  CHECK(cs.coset_of(3) != cs.coset_of(4));

  const std::vector<Elem> not_sub = {0, 1};
  CHECK(subgroup_violation(*z6, not_sub).has_value());
  CHECK_THROWS_AS(cosets(z6, not_sub), Error);

  const std::vector<Elem> gen = {4};
  CHECK(subgroup_closure(*z6, gen) == evens);

  const auto sub = make_subgroup(z6, evens);
  CHECK(sub.group->order() == 3);
  CHECK(is_injective(sub.inclusion));
  CHECK(hom_image(sub.inclusion) == evens);

  // Lagrange over every cyclic subgroup of S4.
  const auto s4 = symmetric_group(4);
  for (Elem x = 0; x < s4->order(); ++x) {
    const std::vector<Elem> g1 = {x};
    const auto h = subgroup_closure(*s4, g1);
    CHECK(h.size() == s4->element_order(x));
    CHECK(cosets(s4, h).size() * h.size() == 24);
  }
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants(*trivial_group()).empty());
  CHECK(abelian_invariants(*cyclic_group(12)) == std::vector<long long>{12});
  CHECK(abelian_invariants(*symmetric_group(3)) == std::vector<long long>{2});
  CHECK(abelian_invariants(*symmetric_group(4)) == std::vector<long long>{2});
  CHECK(abelian_invariants(*quaternion_group()) == std::vector<long long>{2, 2});
  CHECK(abelian_invariants(*dihedral_group(4)) == std::vector<long long>{2, 2});
  CHECK(abelian_invariants(*dihedral_group(3)) == std::vector<long long>{2});
}

TEST_CASE("relabelling preserves structure") {
  const auto s3 = symmetric_group(3);
  std::vector<Elem> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  const auto r = relabel_group(*s3, perm);
  CHECK(r->order() == 6);
  CHECK(r->identity() == perm[s3->identity()]);
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y) CHECK(r->mul(perm[x], perm[y]) == perm[s3->mul(x, y)]);
}
