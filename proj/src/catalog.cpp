#include "cogkit/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cogkit {

namespace {

std::string face_name(const std::vector<int>& f) {
  static const char* kPrefix[] = {"v", "e", "t", "s"};
  std::string name = f.size() <= 4 ? kPrefix[f.size() - 1] : "f" + std::to_string(f.size() - 1) + "_";
  const bool wide = std::any_of(f.begin(), f.end(), [](int v) { return v > 9; });
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (wide && k) name += "_";
    name += std::to_string(f[k]);
  }
  return name;
}

bool proper_subset(const std::vector<int>& small, const std::vector<int>& big) {
  return small.size() < big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Index lookup of ambient elements inside a subgroup table.
std::map<Elem, Elem> reverse_of(const GroupHom& inclusion) {
  std::map<Elem, Elem> r;
  for (Elem x = 0; x < inclusion.image.size(); ++x) r[inclusion.image[x]] = x;
  return r;
}

std::vector<Elem> identity_perm(std::size_t n) {
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), Elem{0});
  return p;
}

}  // namespace

ScwolPtr poset_scwol(const std::vector<std::string>& names, const std::vector<std::vector<bool>>& greater) {
  ScwolBuilder b;
  for (const auto& n : names) b.add_object(n);
  std::map<std::pair<ObjId, ObjId>, MorId> mor;
  for (ObjId t = 0; t < names.size(); ++t)
    for (ObjId s = 0; s < names.size(); ++s)
      if (greater[t][s]) mor[{t, s}] = b.add_morphism(names[t] + "-" + names[s], t, s);
  for (const auto& [ts, a] : mor)
    for (const auto& [rt, bb] : mor)
      if (rt.second == ts.first) b.set_composite(a, bb, mor.at({rt.first, ts.second}));
  return b.build_shared();
}

ScwolPtr simplicial_scwol(const std::vector<std::vector<int>>& faces) {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> greater(faces.size(), std::vector<bool>(faces.size(), false));
  for (std::size_t t = 0; t < faces.size(); ++t) {
    names.push_back(face_name(faces[t]));
    for (std::size_t s = 0; s < faces.size(); ++s) greater[t][s] = proper_subset(faces[s], faces[t]);
  }
  return poset_scwol(names, greater);
}

std::vector<std::vector<int>> face_closure(const std::vector<std::vector<int>>& simplices) {
  std::set<std::vector<int>> faces;
  for (auto s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> f;
      for (std::size_t k = 0; k < n; ++k)
        if (mask & (1u << k)) f.push_back(s[k]);
      faces.insert(f);
    }
  }
  std::vector<std::vector<int>> out(faces.begin(), faces.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return out;
}

ComplexOfGroups simple_complex(const ScwolPtr& poset, const GroupPtr& ambient,
                               const std::vector<std::vector<Elem>>& generators, std::vector<GroupHom>* inclusions) {
  const Scwol& s = *poset;
  ComplexOfGroups c;
  c.base = poset;
  std::vector<GroupHom> incl;
  for (ObjId x = 0; x < s.num_objects(); ++x) {
    std::vector<Elem> gens = generators[x];
    for (MorId a : s.in_morphisms(x)) {
      const auto& g = generators[s.source(a)];
      gens.insert(gens.end(), g.begin(), g.end());
    }
    const auto elems = subgroup_closure(*ambient, gens);
    Subgroup sub = make_subgroup(ambient, elems, ambient->label() + "<" + std::to_string(elems.size()) + ">");
    c.groups.push_back(sub.group);
    incl.push_back(sub.inclusion);
  }
  for (MorId a = 0; a < s.num_morphisms(); ++a) {
    const auto rev = reverse_of(incl[s.target(a)]);
    std::vector<Elem> img;
    for (Elem x : incl[s.source(a)].image) img.push_back(rev.at(x));
    c.psi.push_back(GroupHom::make(c.groups[s.source(a)], c.groups[s.target(a)], std::move(img)));
  }
  for (const auto& p : s.pairs()) c.twists.push_back(c.groups[s.target(p.a)]->identity());
  if (inclusions) *inclusions = std::move(incl);
  return c;
}

ComplexOfGroups relabel_complex(const ComplexOfGroups& c, const std::vector<std::vector<Elem>>& perms) {
  const Scwol& s = *c.base;
  ComplexOfGroups n;
  n.base = c.base;
  std::vector<std::vector<Elem>> inverse;
  for (ObjId x = 0; x < s.num_objects(); ++x) {
    n.groups.push_back(relabel_group(*c.groups[x], perms[x]));
    std::vector<Elem> inv(perms[x].size());
    for (Elem k = 0; k < perms[x].size(); ++k) inv[perms[x][k]] = k;
    inverse.push_back(std::move(inv));
  }
  for (MorId a = 0; a < s.num_morphisms(); ++a) {
    const auto& pi = inverse[s.source(a)];
    const auto& pt = perms[s.target(a)];
    std::vector<Elem> img;
    for (Elem x = 0; x < pi.size(); ++x) img.push_back(pt[c.psi[a](pi[x])]);
    n.psi.push_back(GroupHom{n.groups[s.source(a)], n.groups[s.target(a)], std::move(img)});
  }
  for (std::size_t p = 0; p < s.pairs().size(); ++p) {
    n.twists.push_back(perms[s.target(s.pairs()[p].a)][c.twists[p]]);
  }
  return n;
}

// ---------------------------------------------------------------- fixtures

namespace fixtures {

ScwolPtr point() {
  ScwolBuilder b;
  b.add_object("p");
  return b.build_shared();
}

ScwolPtr segment() {
  ScwolBuilder b;
  const ObjId v0 = b.add_object("v0");
  const ObjId v1 = b.add_object("v1");
  const ObjId m = b.add_object("m");
  b.add_morphism("a0", m, v0);
  b.add_morphism("a1", m, v1);
  return b.build_shared();
}

ScwolPtr two_simplex() { return simplicial_scwol(face_closure({{0, 1, 2}})); }

ScwolPtr circle() { return simplicial_scwol(face_closure({{0, 1}, {1, 2}, {0, 2}})); }

CogPtr seg23() {
  ComplexOfGroups c;
  c.base = segment();
  c.groups = {cyclic_group(2), cyclic_group(3), trivial_group()};
  c.psi = {GroupHom::trivial(c.groups[2], c.groups[0]), GroupHom::trivial(c.groups[2], c.groups[1])};
  return share(std::move(c));
}

CogPtr star_s3() {
  ScwolBuilder b;
  const ObjId g = b.add_object("gamma");
  const ObjId m = b.add_object("m");
  b.add_morphism("c", m, g);
  ComplexOfGroups c;
  c.base = b.build_shared();
  const GroupPtr s3 = symmetric_group(3);
  const Elem t = *s3->find_permutation({1, 0, 2});
  const std::vector<Elem> elems{s3->identity(), t};
  Subgroup z2 = make_subgroup(s3, elems, "Z2");
  c.groups = {s3, z2.group};
  c.psi = {z2.inclusion};
  return share(std::move(c));
}

CogPtr triangle_twisted() {
  const auto faces = face_closure({{0, 1, 2}});
  const ScwolPtr base = simplicial_scwol(faces);
  const GroupPtr s3 = symmetric_group(3);
  std::vector<std::vector<Elem>> gens(faces.size());
  for (ObjId x = 0; x < faces.size(); ++x) {
    if (faces[x].size() != 2) continue;
    Permutation p{0, 1, 2};
    std::swap(p[faces[x][0]], p[faces[x][1]]);
    gens[x] = {*s3->find_permutation(p)};
  }
  const CogPtr simple = share(simple_complex(base, s3, gens));
  // A 3-cycle on each triangle -> vertex morphism; the twist of every pair
  // becomes that 3-cycle.
  std::vector<Elem> g;
  for (MorId a = 0; a < base->num_morphisms(); ++a) {
    const auto& grp = *simple->groups[base->target(a)];
    const bool top = faces[base->source(a)].size() == 3 && faces[base->target(a)].size() == 1;
    if (!top) {
      g.push_back(grp.identity());
      continue;
    }
    // Vertex groups are all of S3 here, embedded by the identity inclusion.
    Elem cyc = grp.identity();
    for (Elem x = 0; x < grp.order(); ++x) {
      if (grp.element_order(x) == 3) {
        cyc = x;
        break;
      }
    }
    g.push_back(cyc);
  }
  return coboundary(simple, g).complex;
}

MorphismToGroup seg23_to_z6(const CogPtr& c) {
  const GroupPtr z6 = cyclic_group(6);
  MorphismToGroup phi{c, z6, {}, {}};
  phi.local.push_back(GroupHom::make(c->groups[0], z6, {0, 3}));
  phi.local.push_back(GroupHom::make(c->groups[1], z6, {0, 2, 4}));
  phi.local.push_back(GroupHom::trivial(c->groups[2], z6));
  phi.edge = {0, 0};
  return phi;
}

CogMorphism seg23_collapse(const CogPtr& c) {
  const CogPtr t = share(trivial_complex(c->base));
  CogMorphism phi{c, t, identity_morphism(c->base), {}, {}};
  for (ObjId x = 0; x < 3; ++x) phi.local.push_back(GroupHom::trivial(c->groups[x], t->groups[x]));
  phi.edge = {0, 0};
  return phi;
}

CogMorphism fold2() {
  auto pod = [](std::size_t leaves) {
    ScwolBuilder b;
    const ObjId s = b.add_object("s");
    for (std::size_t k = 0; k < leaves; ++k) {
      const ObjId m = b.add_object("m" + std::to_string(k));
      b.add_morphism("a" + std::to_string(k), m, s);
    }
    return b.build_shared();
  };
  const GroupPtr z2 = cyclic_group(2);
  const GroupPtr one = trivial_group();
  auto complex = [&](std::size_t leaves) {
    ComplexOfGroups c;
    c.base = pod(leaves);
    c.groups.push_back(z2);
    for (std::size_t k = 0; k < leaves; ++k) {
      c.groups.push_back(one);
      c.psi.push_back(GroupHom::trivial(one, z2));
    }
    return share(std::move(c));
  };
  const CogPtr src = complex(2), tgt = complex(1);
  CogMorphism phi{src, tgt, ScwolMorphism{src->base, tgt->base, {0, 1, 1}, {0, 0}}, {}, {0, 0}};
  phi.local = {GroupHom::identity(z2), GroupHom::identity(one), GroupHom::identity(one)};
  return phi;
}

std::vector<Named> complexes() {
  return {{"point", share(trivial_complex(point()))},
          {"seg23", seg23()},
          {"star-s3", star_s3()},
          {"simplex2", share(trivial_complex(two_simplex()))},
          {"circle", share(trivial_complex(circle()))},
          {"triangle-twisted", triangle_twisted()}};
}

}  // namespace fixtures

// ---------------------------------------------------------------- corpus

CorpusGenerator::CorpusGenerator(std::uint64_t seed, CorpusOptions opts) : rng_(seed), opts_(opts) {}

GroupPtr CorpusGenerator::random_catalog_group() {
  for (;;) {
    GroupPtr g;
    switch (below(5)) {
      case 0: g = cyclic_group(1 + below(24)); break;
      case 1: g = dihedral_group(2 + below(11)); break;
      case 2: g = symmetric_group(3); break;
      case 3: g = symmetric_group(4); break;
      default: g = quaternion_group(); break;
    }
    if (g->order() <= opts_.max_order) return g;
  }
}

ScwolPtr CorpusGenerator::random_face_poset() {
  for (;;) {
    const int nv = 1 + static_cast<int>(below(4));
    std::vector<std::vector<int>> simplices;
    const std::size_t count = 1 + below(4);
    for (std::size_t k = 0; k < count; ++k) {
      // Random subset of 1..3 distinct vertices.
      std::vector<int> verts(nv);
      std::iota(verts.begin(), verts.end(), 0);
      for (std::size_t i = verts.size(); i > 1; --i) std::swap(verts[i - 1], verts[below(i)]);
      verts.resize(std::min<std::size_t>(nv, 1 + below(3)));
      simplices.push_back(verts);
    }
    const auto faces = face_closure(simplices);
    if (faces.size() > opts_.max_objects) continue;
    ScwolPtr base = simplicial_scwol(faces);
    if (connected_components(*base).size() == 1) return base;
  }
}

ScwolPtr CorpusGenerator::random_ranked_poset() {
  for (;;) {
    const std::size_t ranks = 2 + below(3);
    std::vector<std::size_t> rank;
    for (std::size_t r = 0; r < ranks; ++r) {
      const std::size_t width = 1 + below(3);
      for (std::size_t k = 0; k < width; ++k) rank.push_back(r);
    }
    const std::size_t n = rank.size();
    if (n > opts_.max_objects) continue;
    // Covering relations between consecutive ranks, each element covering at
    // least one element below it; then transitive closure.
    std::vector<std::vector<bool>> greater(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) {
      if (rank[x] == 0) continue;
      std::vector<std::size_t> below_rank;
      for (std::size_t y = 0; y < n; ++y)
        if (rank[y] + 1 == rank[x]) below_rank.push_back(y);
      greater[x][below_rank[below(below_rank.size())]] = true;
      for (std::size_t y : below_rank)
        if (below(3) == 0) greater[x][y] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (greater[i][k] && greater[k][j]) greater[i][j] = true;
    std::vector<std::string> names;
    for (std::size_t x = 0; x < n; ++x) names.push_back("p" + std::to_string(rank[x]) + "_" + std::to_string(x));
    ScwolPtr base = poset_scwol(names, greater);
    if (connected_components(*base).size() == 1) return base;
  }
}

CorpusGenerator::Simple CorpusGenerator::next_simple() {
  const ScwolPtr base = below(2) ? random_ranked_poset() : random_face_poset();
  Simple out;
  out.ambient = random_catalog_group();
  std::vector<std::vector<Elem>> gens(base->num_objects());
  for (auto& g : gens) {
    const auto roll = below(4);
    if (roll >= 1) g.push_back(static_cast<Elem>(below(out.ambient->order())));
    if (roll == 3) g.push_back(static_cast<Elem>(below(out.ambient->order())));
  }
  out.complex = share(simple_complex(base, out.ambient, gens, &out.inclusions));
  return out;
}

Coboundary CorpusGenerator::random_coboundary(const CogPtr& c) {
  std::vector<Elem> g;
  for (MorId a = 0; a < c->base->num_morphisms(); ++a) {
    g.push_back(static_cast<Elem>(below(c->groups[c->base->target(a)]->order())));
  }
  return coboundary(c, g);
}

CogPtr CorpusGenerator::next_complex() {
  const Simple s = next_simple();
  std::vector<std::vector<Elem>> perms;
  for (const auto& g : s.complex->groups) {
    auto p = identity_perm(g->order());
    for (std::size_t k = p.size(); k > 1; --k) std::swap(p[k - 1], p[below(k)]);
    perms.push_back(std::move(p));
  }
  const CogPtr relabelled = share(relabel_complex(*s.complex, perms));
  return random_coboundary(relabelled).complex;
}

GroupHom CorpusGenerator::random_quotient(const GroupPtr& a) {
  const std::string& label = a->label();
  const std::size_t n = a->order();
  switch (below(3)) {
    case 0: return GroupHom::identity(a);
    case 1: return GroupHom::trivial(a, trivial_group());
    default: break;
  }
  if (label[0] == 'C') {
    std::vector<std::size_t> divisors;
    for (std::size_t m = 1; m <= n; ++m)
      if (n % m == 0) divisors.push_back(m);
    const std::size_t m = divisors[below(divisors.size())];
    std::vector<Elem> img;
    for (Elem x = 0; x < n; ++x) img.push_back(static_cast<Elem>(x % m));
    return GroupHom::make(a, cyclic_group(m), std::move(img));
  }
  if (label[0] == 'D') {
    std::vector<Elem> img;
    for (Elem x = 0; x < n; ++x) img.push_back(static_cast<Elem>(x / (n / 2)));
    return GroupHom::make(a, cyclic_group(2), std::move(img));
  }
  if (label == "S4" && below(2)) {
    const GroupPtr s3 = symmetric_group(3);
    // Action on the pairings {01|23}, {02|13}, {03|12}.
    auto pairing = [](std::uint32_t x, std::uint32_t y) {
      const std::uint32_t other = x == 0 ? y : (y == 0 ? x : 6 - x - y);
      return other - 1;
    };
    std::vector<Elem> img;
    for (Elem x = 0; x < n; ++x) {
      const auto& p = a->permutation(x);
      Permutation q(3);
      q[0] = pairing(p[0], p[1]);
      q[1] = pairing(p[0], p[2]);
      q[2] = pairing(p[0], p[3]);
      img.push_back(*s3->find_permutation(q));
    }
    return GroupHom::make(a, s3, std::move(img));
  }
  if (label[0] == 'S') {
    std::vector<Elem> img;
    for (Elem x = 0; x < n; ++x) {
      const auto& p = a->permutation(x);
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
      img.push_back(static_cast<Elem>(inversions % 2));
    }
    return GroupHom::make(a, cyclic_group(2), std::move(img));
  }
  if (label == "Q8") {
    std::vector<Elem> img;
    for (Elem x = 0; x < n; ++x) img.push_back(static_cast<Elem>((x % 4) % 2));
    return GroupHom::make(a, cyclic_group(2), std::move(img));
  }
  return GroupHom::identity(a);
}

CogMorphism CorpusGenerator::quotient_morphism(const Simple& s) {
  const ComplexOfGroups& c = *s.complex;
  const Scwol& y = *c.base;
  const GroupHom chi = random_quotient(s.ambient);
  ComplexOfGroups t;
  t.base = c.base;
  std::vector<GroupHom> incl;
  for (ObjId x = 0; x < y.num_objects(); ++x) {
    std::vector<Elem> img;
    for (Elem e : s.inclusions[x].image) img.push_back(chi(e));
    const auto elems = subgroup_closure(*chi.target, img);
    Subgroup sub = make_subgroup(chi.target, elems);
    t.groups.push_back(sub.group);
    incl.push_back(sub.inclusion);
  }
  for (MorId a = 0; a < y.num_morphisms(); ++a) {
    const auto rev = reverse_of(incl[y.target(a)]);
    std::vector<Elem> img;
    for (Elem e : incl[y.source(a)].image) img.push_back(rev.at(e));
    t.psi.push_back(GroupHom{t.groups[y.source(a)], t.groups[y.target(a)], std::move(img)});
  }
  for (const auto& p : y.pairs()) t.twists.push_back(t.groups[y.target(p.a)]->identity());
  const CogPtr tp = share(std::move(t));
  CogMorphism phi{s.complex, tp, identity_morphism(c.base), {}, {}};
  for (ObjId x = 0; x < y.num_objects(); ++x) {
    const auto rev = reverse_of(incl[x]);
    std::vector<Elem> img;
    for (Elem e : s.inclusions[x].image) img.push_back(rev.at(chi(e)));
    phi.local.push_back(GroupHom{c.groups[x], tp->groups[x], std::move(img)});
  }
  for (MorId a = 0; a < y.num_morphisms(); ++a) phi.edge.push_back(tp->groups[y.target(a)]->identity());
  return phi;
}

CogMorphism CorpusGenerator::fold_morphism() {
  const std::size_t k = 2 + below(3);
  const std::size_t l = 1 + below(k);
  std::vector<std::size_t> f(k);
  for (std::size_t i = 0; i < k; ++i) f[i] = i < l ? i : below(l);
  for (std::size_t i = k; i > 1; --i) std::swap(f[i - 1], f[below(i)]);
  // Re-establish surjectivity after shuffling.
  std::set<std::size_t> hit(f.begin(), f.end());
  if (hit.size() != l) {
    for (std::size_t i = 0; i < l; ++i) f[i] = i;
  }

  auto pod = [](std::size_t leaves) {
    ScwolBuilder b;
    const ObjId s = b.add_object("s");
    for (std::size_t i = 0; i < leaves; ++i) {
      const ObjId m = b.add_object("m" + std::to_string(i));
      b.add_morphism("a" + std::to_string(i), m, s);
    }
    return b.build_shared();
  };
  const GroupPtr A = random_catalog_group();

  ComplexOfGroups X;
  X.base = pod(l);
  X.groups.push_back(A);
  std::vector<GroupHom> xin;
  for (std::size_t j = 0; j < l; ++j) {
    std::vector<Elem> gens;
    if (below(3)) gens.push_back(static_cast<Elem>(below(A->order())));
    Subgroup sub = make_subgroup(A, subgroup_closure(*A, gens));
    X.groups.push_back(sub.group);
    X.psi.push_back(sub.inclusion);
    xin.push_back(sub.inclusion);
  }
  ComplexOfGroups Y;
  Y.base = pod(k);
  Y.groups.push_back(A);
  std::vector<Elem> g(k);
  std::vector<GroupHom> local{GroupHom::identity(A)};
  for (std::size_t i = 0; i < k; ++i) {
    g[i] = static_cast<Elem>(below(A->order()));
    // Conjugate g B' g^-1 of the target leaf group, or a cyclic subgroup of it.
    std::vector<Elem> conj;
    for (Elem b : xin[f[i]].image) conj.push_back(A->conj(g[i], b));
    std::vector<Elem> elems = subgroup_closure(*A, conj);
    if (below(2)) {
      const Elem pick = elems[below(elems.size())];
      elems = subgroup_closure(*A, std::vector<Elem>{pick});
    }
    Subgroup sub = make_subgroup(A, elems);
    Y.groups.push_back(sub.group);
    Y.psi.push_back(sub.inclusion);
    const auto rev = reverse_of(xin[f[i]]);
    std::vector<Elem> img;
    for (Elem x : sub.inclusion.image) img.push_back(rev.at(A->conj(A->inv(g[i]), x)));
    local.push_back(GroupHom{sub.group, X.groups[1 + f[i]], std::move(img)});
  }
  const CogPtr yp = share(std::move(Y)), xp = share(std::move(X));
  ScwolMorphism over{yp->base, xp->base, {0}, {}};
  for (std::size_t i = 0; i < k; ++i) {
    over.on_objects.push_back(static_cast<ObjId>(1 + f[i]));
    over.on_morphisms.push_back(static_cast<MorId>(f[i]));
  }
  return CogMorphism{yp, xp, std::move(over), std::move(local), std::move(g)};
}

}  // namespace cogkit
