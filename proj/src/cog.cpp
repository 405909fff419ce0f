#include "cogkit/cog.hpp"

#include <sstream>

namespace cogkit {

namespace {

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || (a && b && *a == *b); }

std::string mor(const Scwol& s, MorId a) { return s.morphism_label(a); }

std::string pair_str(const Scwol& s, MorId a, MorId b) { return "(" + mor(s, a) + "," + mor(s, b) + ")"; }

// Checks one local hom against expected endpoints; false stops further checks.
bool check_local(Report& r, const GroupHom& f, const GroupPtr& src, const GroupPtr& tgt, const std::string& where) {
  if (!same_group(f.source, src) || !same_group(f.target, tgt)) {
    r.add(ErrorCode::ShapeMismatch, where + ": hom has the wrong source or target group");
    return false;
  }
  Report h = f.check();
  if (!h.ok()) {
    r.merge(h, where + ": ");
    return false;
  }
  return true;
}

}  // namespace

ComplexOfGroups trivial_complex(const ScwolPtr& base) {
  ComplexOfGroups c;
  c.base = base;
  const auto one = trivial_group();
  c.groups.assign(base->num_objects(), one);
  c.psi.assign(base->num_morphisms(), GroupHom::identity(one));
  c.twists.assign(base->pairs().size(), one->identity());
  return c;
}

Report validate_cog(const ComplexOfGroups& c) {
  Report r;
  if (!c.base) {
    r.add(ErrorCode::InvalidInput, "complex has no base scwol");
    return r;
  }
  const Scwol& s = *c.base;
  if (c.groups.size() != s.num_objects() || c.psi.size() != s.num_morphisms() ||
      c.twists.size() != s.pairs().size()) {
    r.add(ErrorCode::ShapeMismatch, "table sizes do not match the base scwol");
    return r;
  }
  for (ObjId x = 0; x < s.num_objects(); ++x) {
    if (!c.groups[x]) {
      r.add(ErrorCode::InvalidInput, "object " + s.object_label(x) + " has no group");
      return r;
    }
  }
  bool homs_ok = true;
  for (MorId a = 0; a < s.num_morphisms(); ++a) {
    if (!check_local(r, c.psi[a], c.groups[s.source(a)], c.groups[s.target(a)], "psi_" + mor(s, a))) {
      homs_ok = false;
      continue;
    }
    const auto& f = c.psi[a];
    std::vector<int> pre(f.target->order(), -1);
    for (Elem x = 0; x < f.source->order(); ++x) {
      if (pre[f(x)] >= 0) {
        r.add(ErrorCode::NonInjectivePsi, "psi_" + mor(s, a) + " sends " + std::to_string(pre[f(x)]) + " and " +
                                              std::to_string(x) + " to " + std::to_string(f(x)));
        break;
      }
      pre[f(x)] = static_cast<int>(x);
    }
  }
  bool twists_ok = true;
  for (std::size_t p = 0; p < s.pairs().size(); ++p) {
    const auto& [a, b, ab] = s.pairs()[p];
    if (c.twists[p] >= c.groups[s.target(a)]->order()) {
      r.add(ErrorCode::TwistWrongGroup, "twist of " + pair_str(s, a, b) + " is " + std::to_string(c.twists[p]) +
                                            ", not in G_" + s.object_label(s.target(a)));
      twists_ok = false;
    }
  }
  if (!homs_ok || !twists_ok) return r;

  // 3(a): Ad(g_{a,b}) psi_ab = psi_a psi_b.
  for (std::size_t p = 0; p < s.pairs().size(); ++p) {
    const auto& [a, b, ab] = s.pairs()[p];
    const FiniteGroup& G = *c.groups[s.target(a)];
    const Elem g = c.twists[p];
    for (Elem x = 0; x < c.groups[s.source(b)]->order(); ++x) {
      if (G.conj(g, c.psi[ab](x)) != c.psi[a](c.psi[b](x))) {
        r.add(ErrorCode::Cocycle2aFail, "pair " + pair_str(s, a, b) + " at element " + std::to_string(x));
        break;
      }
    }
  }
  // 3(b): psi_a(g_{b,c}) g_{a,bc} = g_{a,b} g_{ab,c}.
  for (const auto& [a, b, ab] : s.pairs()) {
    const FiniteGroup& G = *c.groups[s.target(a)];
    for (MorId cc : s.in_morphisms(s.source(b))) {
      const MorId bc = *s.composite(b, cc);
      const Elem lhs = G.mul(c.psi[a](c.twist(b, cc)), c.twist(a, bc));
      const Elem rhs = G.mul(c.twist(a, b), c.twist(ab, cc));
      if (lhs != rhs) {
        r.add(ErrorCode::Cocycle2bFail,
              "triple (" + mor(s, a) + "," + mor(s, b) + "," + mor(s, cc) + ")");
      }
    }
  }
  return r;
}

Report validate_cog_morphism(const CogMorphism& phi) {
  Report r;
  if (!phi.source || !phi.target) {
    r.add(ErrorCode::InvalidInput, "morphism lacks a source or target complex");
    return r;
  }
  const ComplexOfGroups& H = *phi.source;
  const ComplexOfGroups& G = *phi.target;
  const Scwol& y = *H.base;
  const Scwol& x = *G.base;
  auto same_shape = [](const ScwolPtr& u, const ScwolPtr& v) {
    return u == v || (u && v && u->num_objects() == v->num_objects() && u->num_morphisms() == v->num_morphisms());
  };
  if (!same_shape(phi.over.source, H.base) || !same_shape(phi.over.target, G.base)) {
    r.add(ErrorCode::ShapeMismatch, "underlying scwol map is not between the base scwols");
    return r;
  }
  r.merge(validate_scwol_morphism(phi.over, MorphismLevel::Functor), "f: ");
  if (!r.ok()) return r;
  if (phi.local.size() != y.num_objects() || phi.edge.size() != y.num_morphisms()) {
    r.add(ErrorCode::ShapeMismatch, "local or edge table has the wrong size");
    return r;
  }
  const auto& fo = phi.over.on_objects;
  const auto& fm = phi.over.on_morphisms;
  bool shapes = true;
  for (ObjId s = 0; s < y.num_objects(); ++s) {
    shapes &= check_local(r, phi.local[s], H.groups[s], G.groups[fo[s]], "phi_" + y.object_label(s));
  }
  for (MorId a = 0; a < y.num_morphisms(); ++a) {
    if (phi.edge[a] >= G.groups[x.target(fm[a])]->order()) {
      r.add(ErrorCode::ShapeMismatch, "phi(" + mor(y, a) + ") out of range");
      shapes = false;
    }
  }
  if (!shapes) return r;

  // (1) Ad(phi(a)) psi_{f(a)} phi_{i(a)} = phi_{t(a)} psi_a
  for (MorId a = 0; a < y.num_morphisms(); ++a) {
    const FiniteGroup& T = *G.groups[x.target(fm[a])];
    const auto& phi_i = phi.local[y.source(a)];
    const auto& phi_t = phi.local[y.target(a)];
    for (Elem h = 0; h < H.groups[y.source(a)]->order(); ++h) {
      if (T.conj(phi.edge[a], G.psi[fm[a]](phi_i(h))) != phi_t(H.psi[a](h))) {
        r.add(ErrorCode::Morphism1Fail, "morphism " + mor(y, a) + " at element " + std::to_string(h));
        break;
      }
    }
  }
  // (2) phi_{t(a)}(h_{a,b}) phi(ab) = phi(a) psi_{f(a)}(phi(b)) g_{f(a),f(b)}
  for (std::size_t p = 0; p < y.pairs().size(); ++p) {
    const auto& [a, b, ab] = y.pairs()[p];
    const FiniteGroup& T = *G.groups[x.target(fm[a])];
    const Elem lhs = T.mul(phi.local[y.target(a)](H.twists[p]), phi.edge[ab]);
    const Elem rhs = T.mul(T.mul(phi.edge[a], G.psi[fm[a]](phi.edge[b])), G.twist(fm[a], fm[b]));
    if (lhs != rhs) r.add(ErrorCode::Morphism2Fail, "pair " + pair_str(y, a, b));
  }
  return r;
}

CogMorphism identity_cog_morphism(const CogPtr& c) {
  CogMorphism phi{c, c, identity_morphism(c->base), {}, {}};
  for (const auto& g : c->groups) phi.local.push_back(GroupHom::identity(g));
  for (MorId a = 0; a < c->base->num_morphisms(); ++a) {
    phi.edge.push_back(c->groups[c->base->target(a)]->identity());
  }
  return phi;
}

CogMorphism compose(const CogMorphism& phi, const CogMorphism& psi) {
  if (psi.target.get() != phi.source.get()) {
    throw Error(ErrorCode::SourceTargetMismatch, "inner morphism target is not the outer morphism source");
  }
  const Scwol& a = *psi.source->base;
  const Scwol& b = *phi.source->base;
  CogMorphism out{psi.source, phi.target, ScwolMorphism{psi.over.source, phi.over.target, {}, {}}, {}, {}};
  for (ObjId s = 0; s < a.num_objects(); ++s) {
    const ObjId gs = psi.over.on_objects[s];
    out.over.on_objects.push_back(phi.over.on_objects[gs]);
    out.local.push_back(compose_homs(phi.local[gs], psi.local[s]));
  }
  const auto& X = *phi.target;
  for (MorId m = 0; m < a.num_morphisms(); ++m) {
    const MorId gm = psi.over.on_morphisms[m];
    out.over.on_morphisms.push_back(phi.over.on_morphisms[gm]);
    const FiniteGroup& T = *X.groups[phi.over.on_objects[b.target(gm)]];
    out.edge.push_back(T.mul(phi.local[b.target(gm)](psi.edge[m]), phi.edge[gm]));
  }
  return out;
}

Report validate_morphism_to_group(const MorphismToGroup& phi) {
  Report r;
  if (!phi.source || !phi.target) {
    r.add(ErrorCode::InvalidInput, "morphism lacks a source complex or target group");
    return r;
  }
  const ComplexOfGroups& H = *phi.source;
  const Scwol& y = *H.base;
  const FiniteGroup& G = *phi.target;
  if (phi.local.size() != y.num_objects() || phi.edge.size() != y.num_morphisms()) {
    r.add(ErrorCode::ShapeMismatch, "local or edge table has the wrong size");
    return r;
  }
  bool shapes = true;
  for (ObjId s = 0; s < y.num_objects(); ++s) {
    shapes &= check_local(r, phi.local[s], H.groups[s], phi.target, "phi_" + y.object_label(s));
  }
  for (MorId a = 0; a < y.num_morphisms(); ++a) {
    if (phi.edge[a] >= G.order()) {
      r.add(ErrorCode::ShapeMismatch, "phi(" + mor(y, a) + ") out of range");
      shapes = false;
    }
  }
  if (!shapes) return r;

  // (1) Ad(phi(a)) phi_{i(a)} = phi_{t(a)} psi_a
  for (MorId a = 0; a < y.num_morphisms(); ++a) {
    for (Elem h = 0; h < H.groups[y.source(a)]->order(); ++h) {
      if (G.conj(phi.edge[a], phi.local[y.source(a)](h)) != phi.local[y.target(a)](H.psi[a](h))) {
        r.add(ErrorCode::Morphism1Fail, "morphism " + mor(y, a) + " at element " + std::to_string(h));
        break;
      }
    }
  }
  // (2) phi_{t(a)}(h_{a,b}) phi(ab) = phi(a) phi(b)
  for (std::size_t p = 0; p < y.pairs().size(); ++p) {
    const auto& [a, b, ab] = y.pairs()[p];
    if (G.mul(phi.local[y.target(a)](H.twists[p]), phi.edge[ab]) != G.mul(phi.edge[a], phi.edge[b])) {
      r.add(ErrorCode::Morphism2Fail, "pair " + pair_str(y, a, b));
    }
  }
  return r;
}

std::optional<ObjId> first_non_injective(const std::vector<GroupHom>& local) {
  for (ObjId s = 0; s < local.size(); ++s) {
    if (!is_injective(local[s])) return s;
  }
  return std::nullopt;
}

MorphismToGroup compose(const CogMorphism& phi, const MorphismToGroup& chi) {
  if (phi.target.get() != chi.source.get()) {
    throw Error(ErrorCode::SourceTargetMismatch, "morphism target is not the source of the group morphism");
  }
  const Scwol& y = *phi.source->base;
  const Scwol& x = *phi.target->base;
  const FiniteGroup& G = *chi.target;
  MorphismToGroup out{phi.source, chi.target, {}, {}};
  for (ObjId s = 0; s < y.num_objects(); ++s) {
    out.local.push_back(compose_homs(chi.local[phi.over.on_objects[s]], phi.local[s]));
  }
  for (MorId a = 0; a < y.num_morphisms(); ++a) {
    const MorId fa = phi.over.on_morphisms[a];
    out.edge.push_back(G.mul(chi.local[x.target(fa)](phi.edge[a]), chi.edge[fa]));
  }
  return out;
}

Coboundary coboundary(const CogPtr& cp, const std::vector<Elem>& g) {
  const ComplexOfGroups& c = *cp;
  const Scwol& s = *c.base;
  if (g.size() != s.num_morphisms()) throw Error(ErrorCode::ShapeMismatch, "one element per morphism expected");
  for (MorId a = 0; a < s.num_morphisms(); ++a) {
    if (g[a] >= c.groups[s.target(a)]->order()) {
      throw Error(ErrorCode::IndexOutOfRange, "g_" + mor(s, a) + " not in G_" + s.object_label(s.target(a)));
    }
  }
  ComplexOfGroups n;
  n.base = c.base;
  n.groups = c.groups;
  for (MorId a = 0; a < s.num_morphisms(); ++a) {
    const GroupPtr& T = c.groups[s.target(a)];
    n.psi.push_back(compose_homs(ad(T->inv(g[a]), T), c.psi[a]));
  }
  for (std::size_t p = 0; p < s.pairs().size(); ++p) {
    const auto& [a, b, ab] = s.pairs()[p];
    const FiniteGroup& T = *c.groups[s.target(a)];
    Elem t = T.mul(T.inv(g[a]), c.psi[a](c.groups[s.target(b)]->inv(g[b])));
    t = T.mul(T.mul(t, c.twists[p]), g[ab]);
    n.twists.push_back(t);
  }
  Coboundary out;
  out.complex = share(std::move(n));
  out.iso = CogMorphism{out.complex, cp, identity_morphism(c.base), {}, {}};
  for (const auto& grp : c.groups) out.iso.local.push_back(GroupHom::identity(grp));
  for (MorId a = 0; a < s.num_morphisms(); ++a) out.iso.edge.push_back(c.groups[s.target(a)]->inv(g[a]));
  return out;
}

std::vector<Elem> inverse_family(const ComplexOfGroups& c, const std::vector<Elem>& g) {
  std::vector<Elem> out;
  for (MorId a = 0; a < g.size(); ++a) out.push_back(c.groups[c.base->target(a)]->inv(g[a]));
  return out;
}

}  // namespace cogkit
