#include "cogkit/local_cog.hpp"

#include <algorithm>

namespace cogkit {

LocalCog build_local_cog(const CogPtr& cp, ObjId gamma) {
  const ComplexOfGroups& c = *cp;
  const Scwol& y = *c.base;
  if (gamma >= y.num_objects()) throw Error(ErrorCode::UnknownObject, "object index " + std::to_string(gamma));
  LocalCog l;
  l.parent = cp;
  l.gamma = gamma;
  l.star = star_scwol(c.base, gamma);
  const Star& st = l.star;
  const Scwol& s = *st.scwol;
  const GroupPtr& Gg = c.groups[gamma];

  ComplexOfGroups L;
  L.base = st.scwol;
  for (const auto& o : st.objects) {
    L.groups.push_back(o.kind == Star::ObjKind::Upper ? c.groups[y.source(o.base)] : Gg);
  }
  for (MorId u = 0; u < s.num_morphisms(); ++u) {
    const auto& m = st.morphisms[u];
    switch (m.kind) {
      case Star::MorKind::UpperEdge: L.psi.push_back(c.psi[m.second]); break;
      case Star::MorKind::CenterUpper: L.psi.push_back(c.psi[m.first]); break;
      case Star::MorKind::LowerUpper: L.psi.push_back(c.psi[m.second]); break;
      case Star::MorKind::LowerCenter:
      case Star::MorKind::LowerEdge: L.psi.push_back(GroupHom::identity(Gg)); break;
    }
  }
  using K = Star::MorKind;
  for (const auto& [u, v, uv] : s.pairs()) {
    const auto& mu = st.morphisms[u];
    const auto& mv = st.morphisms[v];
    Elem t = L.groups[s.target(u)]->identity();
    if (mu.kind == K::UpperEdge && mv.kind == K::UpperEdge) {
      t = c.twist(mu.second, mv.second);
    } else if ((mu.kind == K::CenterUpper || mu.kind == K::LowerUpper) && mv.kind == K::UpperEdge) {
      t = c.twist(mv.first, mv.second);
    }
    L.twists.push_back(t);
  }
  l.cog = share(std::move(L));
  return l;
}

MorphismToGroup build_theta(const LocalCog& l) {
  const ComplexOfGroups& c = *l.parent;
  const ComplexOfGroups& L = *l.cog;
  const Star& st = l.star;
  const Scwol& s = *st.scwol;
  const GroupPtr& Gg = c.groups[l.gamma];
  MorphismToGroup th{l.cog, Gg, {}, {}};
  for (const auto& o : st.objects) {
    th.local.push_back(o.kind == Star::ObjKind::Upper ? c.psi[o.base] : GroupHom::identity(Gg));
  }
  auto twist = [&](MorId u, MorId v) { return L.twist(u, v); };
  for (MorId u = 0; u < s.num_morphisms(); ++u) {
    const auto& m = st.morphisms[u];
    Elem e = Gg->identity();
    switch (m.kind) {
      case Star::MorKind::UpperEdge:
        e = twist(st.center_upper.at(m.first), u);
        break;
      case Star::MorKind::LowerUpper:
        e = Gg->inv(twist(st.lower_center.at(m.first), st.center_upper.at(m.second)));
        break;
      case Star::MorKind::LowerEdge:
        e = twist(u, st.lower_center.at(m.second));
        break;
      case Star::MorKind::CenterUpper:
      case Star::MorKind::LowerCenter: break;
    }
    th.edge.push_back(e);
  }
  return th;
}

CogMorphism build_sigma(const LocalCog& l) {
  const ComplexOfGroups& c = *l.parent;
  const ComplexOfGroups& L = *l.cog;
  const Star& st = l.star;
  const Scwol& y = *c.base;
  CogMorphism sg{l.cog, l.parent, star_projection(st), {}, {}};
  for (ObjId x = 0; x < st.objects.size(); ++x) {
    const auto& o = st.objects[x];
    sg.local.push_back(o.kind == Star::ObjKind::Lower ? c.psi[o.base] : GroupHom::identity(L.groups[x]));
  }
  for (MorId u = 0; u < st.morphisms.size(); ++u) {
    const auto& m = st.morphisms[u];
    const MorId hu = sg.over.on_morphisms[u];
    const FiniteGroup& T = *c.groups[y.target(hu)];
    Elem e = T.identity();
    if (m.kind == Star::MorKind::LowerUpper) e = c.twist(m.first, m.second);
    if (m.kind == Star::MorKind::LowerEdge) e = T.inv(c.twist(m.first, m.second));
    sg.edge.push_back(e);
  }
  return sg;
}

std::vector<MorId> star_tree(const LocalCog& l) {
  std::vector<MorId> tree;
  for (const auto& [c, u] : l.star.center_upper) tree.push_back(u);
  for (const auto& [b, u] : l.star.lower_center) tree.push_back(u);
  std::sort(tree.begin(), tree.end());
  if (auto bad = spanning_tree_violation(*l.star.scwol, tree)) {
    throw Error(ErrorCode::TreeNotSpanning, "star tree: " + *bad);
  }
  return tree;
}

}  // namespace cogkit
