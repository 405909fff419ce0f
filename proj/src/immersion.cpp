#include "cogkit/immersion.hpp"

#include <map>

namespace cogkit {

std::vector<CosetVerdict> check_coset_condition(const CogMorphism& phi) {
  const ComplexOfGroups& H = *phi.source;
  const ComplexOfGroups& G = *phi.target;
  const Scwol& y = *H.base;
  const Scwol& x = *G.base;
  std::vector<CosetVerdict> out;
  for (ObjId s = 0; s < y.num_objects(); ++s) {
    const ObjId fs = phi.over.on_objects[s];
    const FiniteGroup& T = *G.groups[fs];
    std::map<MorId, std::vector<MorId>> fibers;
    for (MorId a : y.in_morphisms(s)) fibers[phi.over.on_morphisms[a]].push_back(a);
    for (const auto& [j, as] : fibers) {
      const CosetSpace target = cosets(G.groups[fs], hom_image(G.psi[j]));
      std::map<std::uint32_t, std::string> seen;
      CosetVerdict v{s, j, true, {}};
      for (MorId a : as) {
        const CosetSpace source = cosets(H.groups[s], hom_image(H.psi[a]));
        for (Elem h : source.reps) {
          const std::uint32_t k = target.coset_of(T.mul(phi.local[s](h), phi.edge[a]));
          const std::string here = std::to_string(h) + "." + y.morphism_label(a);
          auto [it, fresh] = seen.emplace(k, here);
          if (!fresh && v.injective) {
            v.injective = false;
            v.witness = "cosets " + it->second + " and " + here + " both map to " + std::to_string(target.reps[k]) +
                        "." + x.morphism_label(j);
          }
        }
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

ImmersionReport check_immersion(const CogMorphism& phi) {
  const Scwol& y = *phi.source->base;
  ImmersionReport rep;
  rep.cosets = check_coset_condition(phi);
  for (ObjId s = 0; s < y.num_objects(); ++s) {
    ObjectVerdict v{s, is_injective(phi.local[s]), true, true, true, {}};
    if (!v.algebraic) v.witness = "phi_" + y.object_label(s) + " is not injective";
    const LocalDevMorphism m = build_local_dev_morphism(phi, s);
    const Scwol& src = *m.source.scwol;
    std::map<ObjId, ObjId> obj_seen;
    for (ObjId o = 0; o < src.num_objects(); ++o) {
      auto [it, fresh] = obj_seen.emplace(m.map.on_objects[o], o);
      if (!fresh) {
        v.geometric = false;
        if (m.source.objects[o].kind == Star::ObjKind::Upper) v.upper_link = false;
        if (v.witness.empty()) {
          v.witness = "Phi_" + y.object_label(s) + " identifies " + src.object_label(it->second) + " and " +
                      src.object_label(o);
        }
      }
    }
    std::map<MorId, MorId> mor_seen;
    for (MorId u = 0; u < src.num_morphisms(); ++u) {
      auto [it, fresh] = mor_seen.emplace(m.map.on_morphisms[u], u);
      if (!fresh) {
        v.geometric = false;
        if (v.witness.empty()) {
          v.witness = "Phi_" + y.object_label(s) + " identifies " + src.morphism_label(it->second) + " and " +
                      src.morphism_label(u);
        }
      }
    }
    for (const auto& c : rep.cosets) {
      if (c.sigma == s && !c.injective) v.coset = false;
    }
    rep.immersion = rep.immersion && v.algebraic && v.geometric;
    rep.lemma_agrees = rep.lemma_agrees && v.upper_link == v.coset;
    rep.objects.push_back(std::move(v));
  }
  return rep;
}

DevelopabilityVerdict check_developability_candidate(const MorphismToGroup& phi) {
  DevelopabilityVerdict v;
  v.witness = first_non_injective(phi.local);
  v.developable = !v.witness.has_value();
  if (v.developable) v.development = build_development(phi);
  return v;
}

}  // namespace cogkit
