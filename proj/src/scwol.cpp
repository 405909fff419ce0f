#include "cogkit/scwol.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace cogkit {

namespace {

std::uint64_t key(MorId a, MorId b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

std::string pair_label(const Scwol& s, MorId a, MorId b) {
  return "(" + s.morphism_label(a) + "," + s.morphism_label(b) + ")";
}

}  // namespace

// ---------------------------------------------------------------- Scwol

std::optional<ObjId> Scwol::find_object(const std::string& label) const {
  auto it = object_index_.find(label);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> Scwol::find_morphism(const std::string& label) const {
  auto it = morphism_index_.find(label);
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

ObjId Scwol::object_id(const std::string& label) const {
  if (auto x = find_object(label)) return *x;
  throw Error(ErrorCode::UnknownObject, "object '" + label + "'");
}

MorId Scwol::morphism_id(const std::string& label) const {
  if (auto a = find_morphism(label)) return *a;
  throw Error(ErrorCode::UnknownObject, "morphism '" + label + "'");
}

std::optional<MorId> Scwol::composite(MorId a, MorId b) const {
  auto it = pair_lookup_.find(key(a, b));
  if (it == pair_lookup_.end()) return std::nullopt;
  return pairs_[it->second].ab;
}

std::optional<std::size_t> Scwol::find_pair(MorId a, MorId b) const {
  auto it = pair_lookup_.find(key(a, b));
  if (it == pair_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Scwol::pair_index(MorId a, MorId b) const {
  if (auto k = find_pair(a, b)) return *k;
  throw Error(ErrorCode::MissingComposite, pair_label(*this, a, b));
}

// ---------------------------------------------------------------- builder

ObjId ScwolBuilder::add_object(std::string label) {
  objects_.push_back(std::move(label));
  return static_cast<ObjId>(objects_.size() - 1);
}

MorId ScwolBuilder::add_morphism(std::string label, ObjId source, ObjId target) {
  morphisms_.push_back({std::move(label), source, target});
  return static_cast<MorId>(morphisms_.size() - 1);
}

void ScwolBuilder::set_composite(MorId a, MorId b, MorId ab) {
  auto [it, inserted] = comp_.emplace(std::make_pair(a, b), ab);
  if (!inserted && it->second != ab) {
    throw Error(ErrorCode::InvalidInput, "conflicting composites for pair (" + morphisms_.at(a).label + "," +
                                             morphisms_.at(b).label + ")");
  }
}

Scwol ScwolBuilder::build() const {
  Scwol s;
  s.objects_ = objects_;
  s.morphisms_ = morphisms_;
  for (ObjId x = 0; x < objects_.size(); ++x) {
    if (!s.object_index_.emplace(objects_[x], x).second) {
      throw Error(ErrorCode::InvalidInput, "duplicate object label '" + objects_[x] + "'");
    }
  }
  s.out_.resize(objects_.size());
  s.in_.resize(objects_.size());
  for (MorId a = 0; a < morphisms_.size(); ++a) {
    const auto& m = morphisms_[a];
    if (m.source >= objects_.size() || m.target >= objects_.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "morphism '" + m.label + "' has an endpoint out of range");
    }
    if (!s.morphism_index_.emplace(m.label, a).second) {
      throw Error(ErrorCode::InvalidInput, "duplicate morphism label '" + m.label + "'");
    }
    s.out_[m.source].push_back(a);
    s.in_[m.target].push_back(a);
  }
  for (const auto& [ab_pair, ab] : comp_) {
    const auto [a, b] = ab_pair;
    if (a >= morphisms_.size() || b >= morphisms_.size() || ab >= morphisms_.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "composition entry refers to an unknown morphism");
    }
    s.pair_lookup_.emplace(key(a, b), s.pairs_.size());
    s.pairs_.push_back({a, b, ab});
  }
  return s;
}

// ---------------------------------------------------------------- validation

Report validate_scwol(const Scwol& s) {
  Report r;
  for (MorId a = 0; a < s.num_morphisms(); ++a) {
    if (s.source(a) == s.target(a)) r.add(ErrorCode::LoopMorphism, "morphism " + s.morphism_label(a));
  }
  for (MorId a = 0; a < s.num_morphisms(); ++a) {
    for (MorId b : s.in_morphisms(s.source(a))) {
      if (!s.composite(a, b)) r.add(ErrorCode::MissingComposite, "pair " + pair_label(s, a, b));
    }
  }
  for (const auto& [a, b, ab] : s.pairs()) {
    if (!s.composable(a, b)) {
      r.add(ErrorCode::CompositeSourceTargetWrong, "entry for non-composable pair " + pair_label(s, a, b));
    } else if (s.source(ab) != s.source(b) || s.target(ab) != s.target(a)) {
      r.add(ErrorCode::CompositeSourceTargetWrong,
            "composite " + s.morphism_label(ab) + " of " + pair_label(s, a, b) + " has wrong endpoints");
    }
  }
  for (const auto& [a, b, ab] : s.pairs()) {
    if (!s.composable(a, b)) continue;
    for (MorId c : s.in_morphisms(s.source(b))) {
      auto bc = s.composite(b, c);
      auto ab_c = s.composite(ab, c);
      if (!bc || !ab_c) continue;
      auto a_bc = s.composite(a, *bc);
      if (!a_bc) continue;
      if (*ab_c != *a_bc) {
        r.add(ErrorCode::NonAssociative, "triple (" + s.morphism_label(a) + "," + s.morphism_label(b) + "," +
                                             s.morphism_label(c) + ")");
      }
    }
  }
  // Kahn's algorithm on i(a) -> t(a), ignoring loops (reported above).
  std::vector<std::size_t> indegree(s.num_objects(), 0);
  for (MorId a = 0; a < s.num_morphisms(); ++a)
    if (s.source(a) != s.target(a)) ++indegree[s.target(a)];
  std::deque<ObjId> ready;
  for (ObjId x = 0; x < s.num_objects(); ++x)
    if (indegree[x] == 0) ready.push_back(x);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const ObjId x = ready.front();
    ready.pop_front();
    ++seen;
    for (MorId a : s.out_morphisms(x)) {
      if (s.target(a) == x) continue;
      if (--indegree[s.target(a)] == 0) ready.push_back(s.target(a));
    }
  }
  if (seen != s.num_objects()) {
    for (ObjId x = 0; x < s.num_objects(); ++x) {
      if (indegree[x] > 0) {
        r.add(ErrorCode::DirectedCycle, "object " + s.object_label(x) + " lies on a directed cycle");
        break;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------- chains, links

std::vector<std::vector<MorId>> chains(const Scwol& s, std::size_t k) {
  std::vector<std::vector<MorId>> out;
  if (k == 0) return out;
  std::vector<MorId> cur;
  std::function<void()> extend = [&]() {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (MorId next : s.in_morphisms(s.source(cur.back()))) {
      cur.push_back(next);
      extend();
      cur.pop_back();
    }
  };
  for (MorId a = 0; a < s.num_morphisms(); ++a) {
    cur.assign(1, a);
    extend();
  }
  return out;
}

Scwol upper_link(const Scwol& s, ObjId gamma) {
  if (gamma >= s.num_objects()) throw Error(ErrorCode::UnknownObject, "object index " + std::to_string(gamma));
  ScwolBuilder b;
  std::map<MorId, ObjId> obj;
  for (MorId c : s.in_morphisms(gamma)) obj[c] = b.add_object(s.morphism_label(c));
  std::map<std::pair<MorId, MorId>, MorId> mor;
  for (MorId c : s.in_morphisms(gamma)) {
    for (MorId d : s.in_morphisms(s.source(c))) {
      const MorId cd = *s.composite(c, d);
      mor[{c, d}] = b.add_morphism(s.morphism_label(c) + "," + s.morphism_label(d), obj.at(cd), obj.at(c));
    }
  }
  // (c,d)(cd,d') = (c,dd')
  for (const auto& [cdp, u] : mor) {
    const auto [c, d] = cdp;
    const MorId cd = *s.composite(c, d);
    for (MorId dd : s.in_morphisms(s.source(d))) {
      b.set_composite(u, mor.at({cd, dd}), mor.at({c, *s.composite(d, dd)}));
    }
  }
  return b.build();
}

Scwol lower_link(const Scwol& s, ObjId gamma) {
  if (gamma >= s.num_objects()) throw Error(ErrorCode::UnknownObject, "object index " + std::to_string(gamma));
  ScwolBuilder bld;
  std::map<MorId, ObjId> obj;
  for (MorId b : s.out_morphisms(gamma)) obj[b] = bld.add_object(s.morphism_label(b));
  std::map<std::pair<MorId, MorId>, MorId> mor;
  for (MorId b : s.out_morphisms(gamma)) {
    for (MorId a : s.out_morphisms(s.target(b))) {
      mor[{a, b}] = bld.add_morphism(s.morphism_label(a) + "," + s.morphism_label(b), obj.at(b),
                                     obj.at(*s.composite(a, b)));
    }
  }
  // (a',ab)(a,b) = (a'a,b)
  for (const auto& [abp, v] : mor) {
    const auto [a, b] = abp;
    const MorId ab = *s.composite(a, b);
    for (MorId a2 : s.out_morphisms(s.target(a))) {
      bld.set_composite(mor.at({a2, ab}), v, mor.at({*s.composite(a2, a), b}));
    }
  }
  return bld.build();
}

// ---------------------------------------------------------------- morphisms

Report validate_scwol_morphism(const ScwolMorphism& f, MorphismLevel level) {
  Report r;
  const Scwol& src = *f.source;
  const Scwol& tgt = *f.target;
  if (f.on_objects.size() != src.num_objects() || f.on_morphisms.size() != src.num_morphisms()) {
    r.add(ErrorCode::NotAFunctor, "map sizes do not match the source scwol");
    return r;
  }
  for (ObjId x = 0; x < src.num_objects(); ++x) {
    if (f.on_objects[x] >= tgt.num_objects()) {
      r.add(ErrorCode::NotAFunctor, "object " + src.object_label(x) + " maps out of range");
      return r;
    }
  }
  for (MorId a = 0; a < src.num_morphisms(); ++a) {
    if (f.on_morphisms[a] >= tgt.num_morphisms()) {
      r.add(ErrorCode::NotAFunctor, "morphism " + src.morphism_label(a) + " maps out of range");
      return r;
    }
  }
  for (MorId a = 0; a < src.num_morphisms(); ++a) {
    const MorId fa = f.on_morphisms[a];
    if (tgt.source(fa) != f.on_objects[src.source(a)] || tgt.target(fa) != f.on_objects[src.target(a)]) {
      r.add(ErrorCode::NotAFunctor, "morphism " + src.morphism_label(a) + " -> " + tgt.morphism_label(fa) +
                                        " does not commute with i/t");
    }
  }
  for (const auto& [a, b, ab] : src.pairs()) {
    auto fab = tgt.composite(f.on_morphisms[a], f.on_morphisms[b]);
    if (!fab || *fab != f.on_morphisms[ab]) {
      r.add(ErrorCode::NotAFunctor, "composition not preserved at " + pair_label(src, a, b));
    }
  }
  if (level == MorphismLevel::Functor || !r.ok()) return r;
  for (ObjId x = 0; x < src.num_objects(); ++x) {
    std::set<MorId> images;
    for (MorId a : src.out_morphisms(x)) {
      if (!images.insert(f.on_morphisms[a]).second) {
        r.add(ErrorCode::NotLocallyInjective,
              "two morphisms out of " + src.object_label(x) + " map to " + tgt.morphism_label(f.on_morphisms[a]));
      }
    }
    if (level == MorphismLevel::NonDegenerate &&
        src.out_morphisms(x).size() != tgt.out_morphisms(f.on_objects[x]).size()) {
      r.add(ErrorCode::Degenerate, "out-degree " + std::to_string(src.out_morphisms(x).size()) + " at " +
                                       src.object_label(x) + " vs " +
                                       std::to_string(tgt.out_morphisms(f.on_objects[x]).size()) + " at " +
                                       tgt.object_label(f.on_objects[x]));
    }
  }
  return r;
}

ScwolMorphism identity_morphism(const ScwolPtr& s) {
  ScwolMorphism f{s, s, std::vector<ObjId>(s->num_objects()), std::vector<MorId>(s->num_morphisms())};
  for (ObjId x = 0; x < s->num_objects(); ++x) f.on_objects[x] = x;
  for (MorId a = 0; a < s->num_morphisms(); ++a) f.on_morphisms[a] = a;
  return f;
}

// ---------------------------------------------------------------- star

Star star_scwol(const ScwolPtr& sp, ObjId gamma) {
  const Scwol& s = *sp;
  if (gamma >= s.num_objects()) throw Error(ErrorCode::UnknownObject, "object index " + std::to_string(gamma));
  Star st;
  st.ambient = sp;
  st.gamma = gamma;
  ScwolBuilder b;
  auto need = [&](MorId x, MorId y) {
    auto c = s.composite(x, y);
    if (!c) throw Error(ErrorCode::MissingComposite, pair_label(s, x, y));
    return *c;
  };
  const auto& ups = s.in_morphisms(gamma);
  const auto& downs = s.out_morphisms(gamma);

  for (MorId c : ups) {
    st.upper_object[c] = b.add_object("up:" + s.morphism_label(c));
    st.objects.push_back({Star::ObjKind::Upper, c});
  }
  st.center = b.add_object("@" + s.object_label(gamma));
  st.objects.push_back({Star::ObjKind::Center, 0});
  for (MorId x : downs) {
    st.lower_object[x] = b.add_object("dn:" + s.morphism_label(x));
    st.objects.push_back({Star::ObjKind::Lower, x});
  }

  auto add = [&](std::string label, ObjId i, ObjId t, Star::MorInfo info) {
    st.morphisms.push_back(info);
    return b.add_morphism(std::move(label), i, t);
  };
  for (MorId c : ups) {
    for (MorId d : s.in_morphisms(s.source(c))) {
      st.upper_edge[{c, d}] = add("uu:" + s.morphism_label(c) + "," + s.morphism_label(d),
                                  st.upper_object.at(need(c, d)), st.upper_object.at(c),
                                  {Star::MorKind::UpperEdge, c, d});
    }
  }
  for (MorId c : ups) {
    st.center_upper[c] = add("cu:" + s.morphism_label(c), st.upper_object.at(c), st.center,
                             {Star::MorKind::CenterUpper, c, 0});
  }
  for (MorId x : downs) {
    for (MorId c : ups) {
      st.lower_upper[{x, c}] = add("du:" + s.morphism_label(x) + "," + s.morphism_label(c), st.upper_object.at(c),
                                   st.lower_object.at(x), {Star::MorKind::LowerUpper, x, c});
    }
  }
  for (MorId x : downs) {
    st.lower_center[x] =
        add("dc:" + s.morphism_label(x), st.center, st.lower_object.at(x), {Star::MorKind::LowerCenter, x, 0});
  }
  for (MorId x : downs) {
    for (MorId a : s.out_morphisms(s.target(x))) {
      st.lower_edge[{a, x}] = add("dd:" + s.morphism_label(a) + "," + s.morphism_label(x), st.lower_object.at(x),
                                  st.lower_object.at(need(a, x)), {Star::MorKind::LowerEdge, a, x});
    }
  }

  // Composition: every pair (u, v) with i(u) == t(v).
  std::vector<std::vector<MorId>> into(b.num_objects());
  for (MorId v = 0; v < b.num_morphisms(); ++v) into[b.morphism(v).target].push_back(v);
  using K = Star::MorKind;
  for (MorId u = 0; u < b.num_morphisms(); ++u) {
    const auto& mu = st.morphisms[u];
    for (MorId v : into[b.morphism(u).source]) {
      const auto& mv = st.morphisms[v];
      std::optional<MorId> uv;
      if (mu.kind == K::UpperEdge && mv.kind == K::UpperEdge) {
        uv = st.upper_edge.at({mu.first, need(mu.second, mv.second)});
      } else if (mu.kind == K::CenterUpper && mv.kind == K::UpperEdge) {
        uv = st.center_upper.at(need(mv.first, mv.second));
      } else if (mu.kind == K::LowerUpper && mv.kind == K::UpperEdge) {
        uv = st.lower_upper.at({mu.first, need(mv.first, mv.second)});
      } else if (mu.kind == K::LowerEdge && mv.kind == K::LowerUpper) {
        uv = st.lower_upper.at({need(mu.first, mu.second), mv.second});
      } else if (mu.kind == K::LowerCenter && mv.kind == K::CenterUpper) {
        uv = st.lower_upper.at({mu.first, mv.first});
      } else if (mu.kind == K::LowerEdge && mv.kind == K::LowerCenter) {
        uv = st.lower_center.at(need(mu.first, mu.second));
      } else if (mu.kind == K::LowerEdge && mv.kind == K::LowerEdge) {
        uv = st.lower_edge.at({need(mu.first, mv.first), mv.second});
      }
      if (!uv) throw Error(ErrorCode::MissingComposite, "no composition rule in Y(gamma)");
      b.set_composite(u, v, *uv);
    }
  }
  st.scwol = b.build_shared();
  return st;
}

ScwolMorphism star_projection(const Star& st) {
  const Scwol& s = *st.ambient;
  ScwolMorphism h{st.scwol, st.ambient, {}, {}};
  for (const auto& o : st.objects) {
    switch (o.kind) {
      case Star::ObjKind::Upper: h.on_objects.push_back(s.source(o.base)); break;
      case Star::ObjKind::Center: h.on_objects.push_back(st.gamma); break;
      case Star::ObjKind::Lower: h.on_objects.push_back(s.target(o.base)); break;
    }
  }
  for (const auto& m : st.morphisms) {
    switch (m.kind) {
      case Star::MorKind::UpperEdge: h.on_morphisms.push_back(m.second); break;
      case Star::MorKind::CenterUpper: h.on_morphisms.push_back(m.first); break;
      case Star::MorKind::LowerUpper: h.on_morphisms.push_back(*s.composite(m.first, m.second)); break;
      case Star::MorKind::LowerCenter: h.on_morphisms.push_back(m.first); break;
      case Star::MorKind::LowerEdge: h.on_morphisms.push_back(m.first); break;
    }
  }
  return h;
}

// ---------------------------------------------------------------- realization

std::vector<std::size_t> Realization::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& cells : vertices) f.push_back(cells.size());
  return f;
}

Realization geometric_realization(const Scwol& s) {
  Realization r;
  r.vertices.emplace_back();
  r.faces.emplace_back();
  r.chains.emplace_back();
  for (ObjId x = 0; x < s.num_objects(); ++x) {
    r.vertices[0].push_back({x});
    r.faces[0].emplace_back();
    r.chains[0].emplace_back();
  }
  std::map<std::vector<MorId>, std::size_t> prev_index;
  for (std::size_t k = 1;; ++k) {
    auto ch = chains(s, k);
    if (ch.empty()) break;
    std::map<std::vector<MorId>, std::size_t> index;
    std::vector<std::vector<ObjId>> verts;
    std::vector<std::vector<std::size_t>> faces;
    for (std::size_t n = 0; n < ch.size(); ++n) {
      const auto& c = ch[n];
      index[c] = n;
      std::vector<ObjId> v{s.target(c[0])};
      for (MorId a : c) v.push_back(s.source(a));
      verts.push_back(v);
      std::vector<std::size_t> fs;
      if (k == 1) {
        fs = {s.target(c[0]), s.source(c[0])};
      } else {
        // drop vertex j = 0..k
        fs.push_back(prev_index.at(std::vector<MorId>(c.begin() + 1, c.end())));
        for (std::size_t j = 1; j < k; ++j) {
          std::vector<MorId> f(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(j - 1));
          f.push_back(*s.composite(c[j - 1], c[j]));
          f.insert(f.end(), c.begin() + static_cast<std::ptrdiff_t>(j + 1), c.end());
          fs.push_back(prev_index.at(f));
        }
        fs.push_back(prev_index.at(std::vector<MorId>(c.begin(), c.end() - 1)));
      }
      faces.push_back(fs);
    }
    r.vertices.push_back(std::move(verts));
    r.faces.push_back(std::move(faces));
    r.chains.push_back(ch);
    prev_index = std::move(index);
  }
  return r;
}

// ---------------------------------------------------------------- trees

std::vector<std::vector<ObjId>> connected_components(const Scwol& s) {
  std::vector<int> comp(s.num_objects(), -1);
  std::vector<std::vector<ObjId>> out;
  for (ObjId start = 0; start < s.num_objects(); ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<ObjId> q{start};
    comp[start] = id;
    while (!q.empty()) {
      const ObjId x = q.front();
      q.pop_front();
      out.back().push_back(x);
      auto visit = [&](ObjId y) {
        if (comp[y] < 0) {
          comp[y] = id;
          q.push_back(y);
        }
      };
      for (MorId a : s.out_morphisms(x)) visit(s.target(a));
      for (MorId a : s.in_morphisms(x)) visit(s.source(a));
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::vector<MorId> maximal_tree(const Scwol& s) {
  const auto comps = connected_components(s);
  if (comps.size() > 1) {
    std::ostringstream os;
    os << comps.size() << " components:";
    for (const auto& c : comps) {
      os << " {";
      for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << s.object_label(c[k]);
      os << "}";
    }
    throw Error(ErrorCode::Disconnected, os.str());
  }
  std::vector<MorId> tree;
  if (s.num_objects() == 0) return tree;
  std::vector<bool> seen(s.num_objects(), false);
  std::deque<ObjId> q{0};
  seen[0] = true;
  while (!q.empty()) {
    const ObjId x = q.front();
    q.pop_front();
    std::vector<MorId> incident = s.out_morphisms(x);
    incident.insert(incident.end(), s.in_morphisms(x).begin(), s.in_morphisms(x).end());
    std::sort(incident.begin(), incident.end());
    for (MorId a : incident) {
      const ObjId y = s.source(a) == x ? s.target(a) : s.source(a);
      if (!seen[y]) {
        seen[y] = true;
        tree.push_back(a);
        q.push_back(y);
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

std::optional<std::string> spanning_tree_violation(const Scwol& s, const std::vector<MorId>& tree) {
  if (s.num_objects() == 0) return std::nullopt;
  if (tree.size() + 1 != s.num_objects()) {
    return "tree has " + std::to_string(tree.size()) + " edges, expected " + std::to_string(s.num_objects() - 1);
  }
  std::vector<ObjId> parent(s.num_objects());
  for (ObjId x = 0; x < parent.size(); ++x) parent[x] = x;
  std::function<ObjId(ObjId)> root = [&](ObjId x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (MorId a : tree) {
    if (a >= s.num_morphisms()) return "unknown morphism index " + std::to_string(a);
    const ObjId ra = root(s.source(a)), rb = root(s.target(a));
    if (ra == rb) return "edge " + s.morphism_label(a) + " closes a cycle";
    parent[ra] = rb;
  }
  return std::nullopt;
}

}  // namespace cogkit
