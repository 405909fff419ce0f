#include "cogkit/development.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cogkit {

namespace {

std::string rep_suffix(Elem rep) { return "#" + std::to_string(rep); }

}  // namespace

// ---------------------------------------------------------------- D(Y, phi)

Development build_development(const MorphismToGroup& phi) {
  const ComplexOfGroups& c = *phi.source;
  const Scwol& y = *c.base;
  const FiniteGroup& G = *phi.target;
  Development d;
  d.base = c.base;
  d.group = phi.target;
  for (ObjId s = 0; s < y.num_objects(); ++s) {
    const auto img = hom_image(phi.local[s]);
    d.cosets.push_back(cosets(phi.target, img));
  }
  ScwolBuilder b;
  for (ObjId s = 0; s < y.num_objects(); ++s) {
    d.object_offset.push_back(static_cast<ObjId>(b.num_objects()));
    for (std::uint32_t k = 0; k < d.cosets[s].size(); ++k) {
      b.add_object(y.object_label(s) + rep_suffix(d.cosets[s].reps[k]));
      d.object_info.push_back({s, k});
    }
  }
  for (MorId a = 0; a < y.num_morphisms(); ++a) {
    d.morphism_offset.push_back(static_cast<MorId>(b.num_morphisms()));
    const CosetSpace& ci = d.cosets[y.source(a)];
    const CosetSpace& ct = d.cosets[y.target(a)];
    const Elem inv = G.inv(phi.edge[a]);
    for (std::uint32_t k = 0; k < ci.size(); ++k) {
      const Elem x = ci.reps[k];
      b.add_morphism(y.morphism_label(a) + rep_suffix(x), d.object_offset[y.source(a)] + k,
                     d.object_offset[y.target(a)] + ct.coset_of(G.mul(x, inv)));
      d.morphism_info.push_back({a, k});
    }
  }
  for (const auto& [a, bb, ab] : y.pairs()) {
    const CosetSpace& cb = d.cosets[y.source(bb)];
    const CosetSpace& ca = d.cosets[y.source(a)];
    const Elem inv_b = G.inv(phi.edge[bb]);
    for (std::uint32_t k = 0; k < cb.size(); ++k) {
      const MorId v = d.morphism_offset[bb] + k;
      const MorId u = d.morphism_offset[a] + ca.coset_of(G.mul(cb.reps[k], inv_b));
      const MorId uv = d.morphism_offset[ab] + k;
      if (b.morphism(uv).target != b.morphism(u).target || b.morphism(uv).source != b.morphism(v).source) {
        throw Error(ErrorCode::CompositionUnderdetermined,
                    "composite of " + y.morphism_label(a) + rep_suffix(ca.reps[ca.coset_of(G.mul(cb.reps[k], inv_b))]) +
                        " and " + y.morphism_label(bb) + rep_suffix(cb.reps[k]) + " has the wrong target");
      }
      b.set_composite(u, v, uv);
    }
  }
  d.scwol = b.build_shared();

  d.projection = ScwolMorphism{d.scwol, d.base, {}, {}};
  for (const auto& [s, k] : d.object_info) d.projection.on_objects.push_back(s);
  for (const auto& [a, k] : d.morphism_info) d.projection.on_morphisms.push_back(a);

  d.act_objects.assign(G.order(), {});
  d.act_morphisms.assign(G.order(), {});
  for (Elem g = 0; g < G.order(); ++g) {
    for (const auto& [s, k] : d.object_info) {
      const CosetSpace& cs = d.cosets[s];
      d.act_objects[g].push_back(d.object_offset[s] + cs.coset_of(G.mul(g, cs.reps[k])));
    }
    for (const auto& [a, k] : d.morphism_info) {
      const CosetSpace& cs = d.cosets[y.source(a)];
      d.act_morphisms[g].push_back(d.morphism_offset[a] + cs.coset_of(G.mul(g, cs.reps[k])));
    }
  }
  return d;
}

std::pair<std::size_t, std::size_t> development_size(const MorphismToGroup& phi) {
  const Scwol& y = *phi.source->base;
  const std::size_t n = phi.target->order();
  std::vector<std::size_t> index(y.num_objects());
  for (ObjId s = 0; s < y.num_objects(); ++s) index[s] = n / hom_image(phi.local[s]).size();
  std::size_t objects = std::accumulate(index.begin(), index.end(), std::size_t{0});
  std::size_t morphisms = 0;
  for (MorId a = 0; a < y.num_morphisms(); ++a) morphisms += index[y.source(a)];
  return {objects, morphisms};
}

ActionReport check_action(const Development& d) {
  ActionReport out;
  Report& r = out.report;
  const Scwol& s = *d.scwol;
  const Scwol& y = *d.base;
  const std::size_t n = d.group->order();
  for (Elem g = 0; g < n; ++g) {
    const auto& ao = d.act_objects[g];
    const auto& am = d.act_morphisms[g];
    std::vector<bool> hit_o(s.num_objects(), false), hit_m(s.num_morphisms(), false);
    for (ObjId x = 0; x < s.num_objects(); ++x) {
      if (hit_o[ao[x]]) r.add(ErrorCode::ActionNotAutomorphism, "element " + std::to_string(g) + " not injective on objects");
      hit_o[ao[x]] = true;
    }
    for (MorId m = 0; m < s.num_morphisms(); ++m) {
      if (hit_m[am[m]]) {
        r.add(ErrorCode::ActionNotAutomorphism, "element " + std::to_string(g) + " not injective on morphisms");
      }
      hit_m[am[m]] = true;
      if (s.source(am[m]) != ao[s.source(m)] || s.target(am[m]) != ao[s.target(m)]) {
        r.add(ErrorCode::ActionNotAutomorphism,
              "element " + std::to_string(g) + " does not commute with i/t at " + s.morphism_label(m));
      }
      if (ao[s.source(m)] == s.target(m)) {
        r.add(ErrorCode::ActionInversion, "element " + std::to_string(g) + " sends i(" + s.morphism_label(m) + ") to t");
      }
      if (ao[s.source(m)] == s.source(m) && am[m] != m) {
        r.add(ErrorCode::StabilizerCondition,
              "element " + std::to_string(g) + " fixes i(" + s.morphism_label(m) + ") but moves it");
      }
    }
    for (const auto& [u, v, uv] : s.pairs()) {
      auto c = s.composite(am[u], am[v]);
      if (!c || *c != am[uv]) {
        r.add(ErrorCode::ActionNotAutomorphism, "element " + std::to_string(g) + " breaks composition at (" +
                                                    s.morphism_label(u) + "," + s.morphism_label(v) + ")");
      }
    }
  }
  // Orbits versus the projection.
  auto orbits = [&](std::size_t count, auto act, auto proj, std::size_t base_count, const char* what) {
    std::vector<int> orbit(count, -1);
    std::set<std::uint32_t> images;
    std::size_t num = 0;
    for (std::size_t x = 0; x < count; ++x) {
      if (orbit[x] >= 0) continue;
      const std::uint32_t p = proj(x);
      if (!images.insert(p).second) {
        r.add(ErrorCode::OrbitMismatch, std::string("two ") + what + " orbits project to the same base cell");
      }
      for (Elem g = 0; g < n; ++g) {
        const std::size_t gx = act(g, x);
        orbit[gx] = static_cast<int>(num);
        if (proj(gx) != p) r.add(ErrorCode::OrbitMismatch, std::string(what) + " orbit not inside one fiber");
      }
      ++num;
    }
    if (images.size() != base_count) {
      r.add(ErrorCode::OrbitMismatch, std::string(what) + " orbits miss some base cell");
    }
    return num;
  };
  out.object_orbits = orbits(
      s.num_objects(), [&](Elem g, std::size_t x) { return d.act_objects[g][x]; },
      [&](std::size_t x) { return d.projection.on_objects[x]; }, y.num_objects(), "object");
  out.morphism_orbits = orbits(
      s.num_morphisms(), [&](Elem g, std::size_t m) { return d.act_morphisms[g][m]; },
      [&](std::size_t m) { return d.projection.on_morphisms[m]; }, y.num_morphisms(), "morphism");
  for (ObjId x = 0; x < s.num_objects(); ++x) {
    std::size_t stab = 0;
    for (Elem g = 0; g < n; ++g) stab += d.act_objects[g][x] == x;
    out.stabilizer_orders.push_back(stab);
  }
  return out;
}

// ---------------------------------------------------------------- Y(gamma~)

LocalDevelopment build_local_development(const CogPtr& cp, ObjId gamma) {
  const ComplexOfGroups& c = *cp;
  const Scwol& y = *c.base;
  if (gamma >= y.num_objects()) throw Error(ErrorCode::UnknownObject, "object index " + std::to_string(gamma));
  const GroupPtr& Gp = c.groups[gamma];
  const FiniteGroup& G = *Gp;
  LocalDevelopment ld;
  ld.complex = cp;
  ld.gamma = gamma;
  const auto& ups = y.in_morphisms(gamma);
  const auto& downs = y.out_morphisms(gamma);
  for (MorId c0 : ups) ld.upper_cosets.emplace(c0, cosets(Gp, hom_image(c.psi[c0])));

  ScwolBuilder b;
  using OK = Star::ObjKind;
  using MK = Star::MorKind;
  for (MorId c0 : ups) {
    const CosetSpace& cs = ld.upper_cosets.at(c0);
    for (std::uint32_t k = 0; k < cs.size(); ++k) {
      ld.upper_object[{c0, k}] = b.add_object("up:" + y.morphism_label(c0) + rep_suffix(cs.reps[k]));
      ld.objects.push_back({OK::Upper, c0, k});
    }
  }
  ld.center = b.add_object("@" + y.object_label(gamma));
  ld.objects.push_back({OK::Center, 0, 0});
  for (MorId x : downs) {
    ld.lower_object[x] = b.add_object("dn:" + y.morphism_label(x));
    ld.objects.push_back({OK::Lower, x, 0});
  }

  auto add = [&](std::string label, ObjId i, ObjId t, LocalDevelopment::MorInfo info) {
    ld.morphisms.push_back(info);
    return b.add_morphism(std::move(label), i, t);
  };
  for (MorId c0 : ups) {
    for (MorId d0 : y.in_morphisms(y.source(c0))) {
      const MorId cd = *y.composite(c0, d0);
      const CosetSpace& cs = ld.upper_cosets.at(cd);
      const Elem ginv = G.inv(c.twist(c0, d0));
      for (std::uint32_t k = 0; k < cs.size(); ++k) {
        const ObjId t = ld.upper_object.at({c0, ld.upper_cosets.at(c0).coset_of(G.mul(cs.reps[k], ginv))});
        ld.upper_edge[{c0, d0, k}] =
            add("uu:" + y.morphism_label(c0) + "," + y.morphism_label(d0) + rep_suffix(cs.reps[k]),
                ld.upper_object.at({cd, k}), t, {MK::UpperEdge, c0, d0, k});
      }
    }
  }
  for (MorId c0 : ups) {
    const CosetSpace& cs = ld.upper_cosets.at(c0);
    for (std::uint32_t k = 0; k < cs.size(); ++k) {
      ld.center_upper[{c0, k}] = add("cu:" + y.morphism_label(c0) + rep_suffix(cs.reps[k]),
                                     ld.upper_object.at({c0, k}), ld.center, {MK::CenterUpper, c0, 0, k});
    }
  }
  for (MorId x : downs) {
    for (MorId c0 : ups) {
      const CosetSpace& cs = ld.upper_cosets.at(c0);
      for (std::uint32_t k = 0; k < cs.size(); ++k) {
        ld.lower_upper[{x, c0, k}] =
            add("du:" + y.morphism_label(x) + "," + y.morphism_label(c0) + rep_suffix(cs.reps[k]),
                ld.upper_object.at({c0, k}), ld.lower_object.at(x), {MK::LowerUpper, x, c0, k});
      }
    }
  }
  for (MorId x : downs) {
    ld.lower_center[x] =
        add("dc:" + y.morphism_label(x), ld.center, ld.lower_object.at(x), {MK::LowerCenter, x, 0, 0});
  }
  for (MorId x : downs) {
    for (MorId a : y.out_morphisms(y.target(x))) {
      // t((a,b)) = ab, matching the lower link and the star.
      ld.lower_edge[{a, x}] = add("dd:" + y.morphism_label(a) + "," + y.morphism_label(x), ld.lower_object.at(x),
                                  ld.lower_object.at(*y.composite(a, x)), {MK::LowerEdge, a, x, 0});
    }
  }

  std::vector<std::vector<MorId>> into(b.num_objects());
  for (MorId v = 0; v < b.num_morphisms(); ++v) into[b.morphism(v).target].push_back(v);
  auto comp = [&](MorId p, MorId q) { return *y.composite(p, q); };
  for (MorId u = 0; u < b.num_morphisms(); ++u) {
    const auto& mu = ld.morphisms[u];
    for (MorId v : into[b.morphism(u).source]) {
      const auto& mv = ld.morphisms[v];
      std::optional<MorId> uv;
      if (mu.kind == MK::UpperEdge && mv.kind == MK::UpperEdge) {
        uv = ld.upper_edge.at({mu.first, comp(mu.second, mv.second), mv.coset});
      } else if (mu.kind == MK::CenterUpper && mv.kind == MK::UpperEdge) {
        uv = ld.center_upper.at({comp(mv.first, mv.second), mv.coset});
      } else if (mu.kind == MK::LowerUpper && mv.kind == MK::UpperEdge) {
        uv = ld.lower_upper.at({mu.first, comp(mv.first, mv.second), mv.coset});
      } else if (mu.kind == MK::LowerEdge && mv.kind == MK::LowerUpper) {
        uv = ld.lower_upper.at({comp(mu.first, mu.second), mv.second, mv.coset});
      } else if (mu.kind == MK::LowerCenter && mv.kind == MK::CenterUpper) {
        uv = ld.lower_upper.at({mu.first, mv.first, mv.coset});
      } else if (mu.kind == MK::LowerEdge && mv.kind == MK::LowerCenter) {
        uv = ld.lower_center.at(comp(mu.first, mu.second));
      } else if (mu.kind == MK::LowerEdge && mv.kind == MK::LowerEdge) {
        uv = ld.lower_edge.at({comp(mu.first, mv.first), mv.second});
      }
      if (!uv) throw Error(ErrorCode::MissingComposite, "no composition rule in the local development");
      if (b.morphism(*uv).source != b.morphism(v).source || b.morphism(*uv).target != b.morphism(u).target) {
        throw Error(ErrorCode::CompositionUnderdetermined,
                    "composite of " + b.morphism(u).label + " and " + b.morphism(v).label + " has wrong endpoints");
      }
      b.set_composite(u, v, *uv);
    }
  }
  ld.scwol = b.build_shared();
  return ld;
}

ScwolMorphism local_development_projection(const LocalDevelopment& d, const Star& st) {
  ScwolMorphism p{d.scwol, st.scwol, {}, {}};
  using MK = Star::MorKind;
  for (const auto& o : d.objects) {
    switch (o.kind) {
      case Star::ObjKind::Upper: p.on_objects.push_back(st.upper_object.at(o.base)); break;
      case Star::ObjKind::Center: p.on_objects.push_back(st.center); break;
      case Star::ObjKind::Lower: p.on_objects.push_back(st.lower_object.at(o.base)); break;
    }
  }
  for (const auto& m : d.morphisms) {
    switch (m.kind) {
      case MK::UpperEdge: p.on_morphisms.push_back(st.upper_edge.at({m.first, m.second})); break;
      case MK::CenterUpper: p.on_morphisms.push_back(st.center_upper.at(m.first)); break;
      case MK::LowerUpper: p.on_morphisms.push_back(st.lower_upper.at({m.first, m.second})); break;
      case MK::LowerCenter: p.on_morphisms.push_back(st.lower_center.at(m.first)); break;
      case MK::LowerEdge: p.on_morphisms.push_back(st.lower_edge.at({m.first, m.second})); break;
    }
  }
  return p;
}

// ---------------------------------------------------------------- Phi_sigma

LocalDevMorphism build_local_dev_morphism(const CogMorphism& phi, ObjId sigma) {
  const ComplexOfGroups& H = *phi.source;
  const ComplexOfGroups& Gc = *phi.target;
  const Scwol& y = *H.base;
  const auto& fo = phi.over.on_objects;
  const auto& fm = phi.over.on_morphisms;
  LocalDevMorphism out{build_local_development(phi.source, sigma), build_local_development(phi.target, fo.at(sigma)),
                       {}};
  const LocalDevelopment& src = out.source;
  const LocalDevelopment& tgt = out.target;
  const FiniteGroup& T = *Gc.groups[fo[sigma]];
  const GroupHom& ps = phi.local[sigma];

  // Coset of phi_sigma(h) phi(c) psi_{f(c)}(G) for the upper object (c, k).
  auto image_coset = [&](MorId c0, std::uint32_t k) {
    const Elem h = src.upper_cosets.at(c0).reps[k];
    return tgt.upper_cosets.at(fm[c0]).coset_of(T.mul(ps(h), phi.edge[c0]));
  };

  ScwolMorphism& m = out.map;
  m.source = src.scwol;
  m.target = tgt.scwol;
  using MK = Star::MorKind;
  for (const auto& o : src.objects) {
    switch (o.kind) {
      case Star::ObjKind::Upper:
        m.on_objects.push_back(tgt.upper_object.at({fm[o.base], image_coset(o.base, o.coset)}));
        break;
      case Star::ObjKind::Center: m.on_objects.push_back(tgt.center); break;
      case Star::ObjKind::Lower: m.on_objects.push_back(tgt.lower_object.at(fm[o.base])); break;
    }
  }
  for (const auto& u : src.morphisms) {
    switch (u.kind) {
      case MK::UpperEdge: {
        const MorId cd = *H.base->composite(u.first, u.second);
        m.on_morphisms.push_back(tgt.upper_edge.at({fm[u.first], fm[u.second], image_coset(cd, u.coset)}));
        break;
      }
      case MK::CenterUpper:
        m.on_morphisms.push_back(tgt.center_upper.at({fm[u.first], image_coset(u.first, u.coset)}));
        break;
      case MK::LowerUpper:
        m.on_morphisms.push_back(tgt.lower_upper.at({fm[u.first], fm[u.second], image_coset(u.second, u.coset)}));
        break;
      case MK::LowerCenter: m.on_morphisms.push_back(tgt.lower_center.at(fm[u.first])); break;
      case MK::LowerEdge: m.on_morphisms.push_back(tgt.lower_edge.at({fm[u.first], fm[u.second]})); break;
    }
  }
  Report r = validate_scwol_morphism(m, MorphismLevel::Functor);
  if (!r.ok()) throw Error(ErrorCode::NotAFunctor, "Phi_" + y.object_label(sigma) + ": " + r.summary());
  return out;
}

}  // namespace cogkit
