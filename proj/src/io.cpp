#include "cogkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cogkit/json_text.hpp"

namespace cogkit {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, where + ": " + what);
}

std::string item_where(const std::string& where, const Json& j) {
  if (j.is_object() && j.contains("id") && j["id"].is_string()) return where + ": item '" + j["id"].get<std::string>() + "'";
  return where;
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) malformed(where, std::string("missing field '") + key + "'");
  return j[key];
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <class T>
T get_as(const Json& j, const std::string& where, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    malformed(where, std::string(what) + " has the wrong type: " + j.dump());
  }
}

ObjId object_named(const Scwol& s, const std::string& label, const std::string& where) {
  if (auto x = s.find_object(label)) return *x;
  throw Error(ErrorCode::UnresolvedReference, where + ": no object '" + label + "'");
}

MorId morphism_named(const Scwol& s, const std::string& label, const std::string& where) {
  if (auto a = s.find_morphism(label)) return *a;
  throw Error(ErrorCode::UnresolvedReference, where + ": no morphism '" + label + "'");
}

// Images of a local hom; only the length and range are checked here, the
// hom property is left to the validators.
GroupHom loose_hom(const GroupPtr& src, const GroupPtr& tgt, const Json& j, const std::string& where) {
  auto image = get_as<std::vector<Elem>>(j, where, "image list");
  if (image.size() != src->order()) {
    malformed(where, "image list has " + std::to_string(image.size()) + " entries, expected " +
                         std::to_string(src->order()));
  }
  for (Elem x : image)
    if (x >= tgt->order()) throw Error(ErrorCode::IndexOutOfRange, where + ": image " + std::to_string(x) + " out of range");
  return GroupHom{src, tgt, std::move(image)};
}

Elem element_in(const GroupPtr& g, const Json& j, const std::string& where) {
  const auto x = get_as<Elem>(j, where, "element");
  if (x >= g->order()) throw Error(ErrorCode::IndexOutOfRange, where + ": element " + std::to_string(x) + " out of range");
  return x;
}

}  // namespace

std::string describe_offset(const std::string& where, const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < offset; ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return where + ":" + std::to_string(line) + ":" + std::to_string(col);
}

Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is the 1-based position of the offending character.
    const std::size_t at = e.byte ? e.byte - 1 : 0;
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw Error(ErrorCode::ParseError, describe_offset(where, text, at) + ": " + msg);
  }
}

// ---------------------------------------------------------------- Workspace

void Workspace::load_path(const fs::path& p) {
  if (fs::is_directory(p)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(p))
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) load_text(read_file(f), f.string());
    return;
  }
  if (!fs::exists(p)) throw Error(ErrorCode::InvalidInput, "no such file or directory: " + p.string());
  load_text(read_file(p), p.string());
}

void Workspace::load_text(const std::string& text, const std::string& where) {
  const Json j = parse_json(text, where);
  if (j.is_object() && j.contains("schema") && j["schema"] != kSchema) {
    malformed(where, "unsupported schema " + j["schema"].dump());
  }
  if (j.is_object() && j.contains("items")) {
    const Json& items = j["items"];
    if (!items.is_array()) malformed(where, "'items' is not a list");
    for (const auto& item : items) register_item(item, where);
  } else if (j.is_array()) {
    for (const auto& item : j) register_item(item, where);
  } else {
    register_item(j, where);
  }
}

std::string Workspace::register_item(const Json& item, const std::string& where) {
  if (!item.is_object()) malformed(where, "item is not an object");
  const auto id = get_as<std::string>(field(item, "id", where), where, "id");
  const auto kind = get_as<std::string>(field(item, "kind", where), where, "kind");
  static const std::vector<std::string> kinds = {"group",       "scwol",     "complex",           "morphism_to_group",
                                                 "cog_morphism", "development", "local_development", "presentation",
                                                 "realization"};
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) malformed(where, "unknown kind '" + kind + "'");
  if (auto it = raw_.find(id); it != raw_.end()) {
    // The same item may be repeated across files; different content is not.
    if (it->second.value == item) return id;
    malformed(where, "duplicate id '" + id + "' (first defined in " + it->second.where + ")");
  }
  raw_.emplace(id, Raw{item, where});
  order_.emplace_back(id, kind);
  return id;
}

std::string Workspace::kind_of(const std::string& id) const {
  auto it = raw_.find(id);
  if (it == raw_.end()) throw Error(ErrorCode::UnresolvedReference, "no item with id '" + id + "'");
  return it->second.value["kind"].get<std::string>();
}

std::vector<std::string> Workspace::ids_of_kind(const std::string& kind) const {
  std::vector<std::string> out;
  for (const auto& [id, k] : order_)
    if (k == kind) out.push_back(id);
  return out;
}

const Workspace::Raw& Workspace::raw(const std::string& id, const std::string& kind) {
  auto it = raw_.find(id);
  if (it == raw_.end()) throw Error(ErrorCode::UnresolvedReference, "no item with id '" + id + "'");
  const std::string k = it->second.value["kind"].get<std::string>();
  if (k != kind) throw Error(ErrorCode::UnresolvedReference, "'" + id + "' is a " + k + ", not a " + kind);
  if (std::find(resolving_.begin(), resolving_.end(), id) != resolving_.end()) {
    throw Error(ErrorCode::UnresolvedReference, "circular reference through '" + id + "'");
  }
  return it->second;
}

namespace {

// Pushes `id` for the duration of a resolution.
struct Resolving {
  std::vector<std::string>& stack;
  Resolving(std::vector<std::string>& s, const std::string& id) : stack(s) { stack.push_back(id); }
  ~Resolving() { stack.pop_back(); }
};

}  // namespace

GroupPtr Workspace::group(const std::string& id) {
  if (auto it = groups_.find(id); it != groups_.end()) return it->second;
  const Raw& r = raw(id, "group");
  Resolving guard(resolving_, id);
  return groups_[id] = build_group(r.value, item_where(r.where, r.value));
}

ScwolPtr Workspace::scwol(const std::string& id) {
  if (auto it = scwols_.find(id); it != scwols_.end()) return it->second;
  const Raw& r = raw(id, "scwol");
  Resolving guard(resolving_, id);
  return scwols_[id] = build_scwol(r.value, item_where(r.where, r.value));
}

CogPtr Workspace::complex(const std::string& id) {
  if (auto it = complexes_.find(id); it != complexes_.end()) return it->second;
  const Raw& r = raw(id, "complex");
  Resolving guard(resolving_, id);
  return complexes_[id] = build_complex(r.value, item_where(r.where, r.value));
}

MorphismToGroup Workspace::to_group(const std::string& id) {
  if (auto it = to_group_.find(id); it != to_group_.end()) return it->second;
  const Raw& r = raw(id, "morphism_to_group");
  Resolving guard(resolving_, id);
  return to_group_[id] = build_to_group(r.value, item_where(r.where, r.value));
}

CogMorphism Workspace::cog_morphism(const std::string& id) {
  if (auto it = cog_morphisms_.find(id); it != cog_morphisms_.end()) return it->second;
  const Raw& r = raw(id, "cog_morphism");
  Resolving guard(resolving_, id);
  return cog_morphisms_[id] = build_cog_morphism(r.value, item_where(r.where, r.value));
}

ScwolPtr Workspace::scwol_like(const std::string& id) {
  const std::string k = kind_of(id);
  if (k == "scwol") return scwol(id);
  const Raw& r = raw(id, k);
  if (!r.value.contains("scwol")) {
    throw Error(ErrorCode::InvalidInput, "'" + id + "' is a " + k + " and carries no scwol");
  }
  Resolving guard(resolving_, id);
  return scwol_ref(r.value["scwol"], item_where(r.where, r.value));
}

GroupPtr Workspace::group_ref(const Json& ref, const std::string& where) {
  if (ref.is_string()) {
    const auto id = ref.get<std::string>();
    if (!contains(id)) throw Error(ErrorCode::UnresolvedReference, where + ": no item with id '" + id + "'");
    return group(id);
  }
  if (ref.is_object()) return build_group(ref, where);
  malformed(where, "group reference is neither an id nor an object");
}

ScwolPtr Workspace::scwol_ref(const Json& ref, const std::string& where) {
  if (ref.is_string()) {
    const auto id = ref.get<std::string>();
    if (!contains(id)) throw Error(ErrorCode::UnresolvedReference, where + ": no item with id '" + id + "'");
    return scwol(id);
  }
  if (ref.is_object()) return build_scwol(ref, where);
  malformed(where, "scwol reference is neither an id nor an object");
}

CogPtr Workspace::complex_ref(const Json& ref, const std::string& where) {
  if (ref.is_string()) {
    const auto id = ref.get<std::string>();
    if (!contains(id)) throw Error(ErrorCode::UnresolvedReference, where + ": no item with id '" + id + "'");
    return complex(id);
  }
  if (ref.is_object()) return build_complex(ref, where);
  malformed(where, "complex reference is neither an id nor an object");
}

GroupPtr Workspace::build_group(const Json& j, const std::string& where) {
  const std::string label =
      j.contains("label") ? get_as<std::string>(j["label"], where, "label")
                          : (j.contains("id") ? get_as<std::string>(j["id"], where, "id") : std::string());
  try {
    if (j.contains("cayley")) {
      const auto table = get_as<std::vector<std::vector<Elem>>>(j["cayley"], where, "cayley");
      const Elem identity = j.contains("identity") ? get_as<Elem>(j["identity"], where, "identity") : 0;
      return make_group(FiniteGroup::from_cayley_table(table, identity, label));
    }
    if (j.contains("perm_gens")) {
      const auto gens = get_as<std::vector<Permutation>>(j["perm_gens"], where, "perm_gens");
      const auto degree = get_as<std::size_t>(field(j, "degree", where), where, "degree");
      return make_group(FiniteGroup::from_permutation_generators(degree, gens, kDefaultClosureCap, label));
    }
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.message());
  }
  malformed(where, "group needs 'cayley' or 'perm_gens'");
}

ScwolPtr Workspace::build_scwol(const Json& j, const std::string& where) {
  ScwolBuilder b;
  for (const auto& o : field(j, "objects", where)) b.add_object(get_as<std::string>(o, where, "object"));
  try {
    std::map<std::string, ObjId> objects;
    for (ObjId x = 0; x < b.num_objects(); ++x) objects.emplace(field(j, "objects", where)[x].get<std::string>(), x);
    auto obj = [&](const Json& v) {
      const auto name = get_as<std::string>(v, where, "object reference");
      auto it = objects.find(name);
      if (it == objects.end()) throw Error(ErrorCode::UnresolvedReference, where + ": no object '" + name + "'");
      return it->second;
    };
    std::map<std::string, MorId> morphisms;
    for (const auto& m : field(j, "morphisms", where)) {
      const auto id = get_as<std::string>(field(m, "id", where), where, "morphism id");
      morphisms.emplace(id, b.add_morphism(id, obj(field(m, "i", where)), obj(field(m, "t", where))));
    }
    auto mor = [&](const Json& v) {
      const auto name = get_as<std::string>(v, where, "morphism reference");
      auto it = morphisms.find(name);
      if (it == morphisms.end()) throw Error(ErrorCode::UnresolvedReference, where + ": no morphism '" + name + "'");
      return it->second;
    };
    if (j.contains("comp")) {
      for (const auto& c : j["comp"]) {
        if (!c.is_array() || c.size() != 3) malformed(where, "composition entry is not [a, b, ab]: " + c.dump());
        b.set_composite(mor(c[0]), mor(c[1]), mor(c[2]));
      }
    }
    return b.build_shared();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnresolvedReference) throw;
    throw Error(e.code(), where + ": " + e.message());
  }
}

CogPtr Workspace::build_complex(const Json& j, const std::string& where) {
  ComplexOfGroups c;
  c.base = scwol_ref(field(j, "scwol", where), where);
  const Scwol& s = *c.base;
  const Json& groups = field(j, "groups", where);
  for (ObjId x = 0; x < s.num_objects(); ++x) {
    const std::string& label = s.object_label(x);
    if (!groups.contains(label)) malformed(where, "no group for object '" + label + "'");
    c.groups.push_back(group_ref(groups[label], where));
  }
  const Json& psi = field(j, "psi", where);
  for (MorId a = 0; a < s.num_morphisms(); ++a) {
    const std::string& label = s.morphism_label(a);
    if (!psi.contains(label)) malformed(where, "no psi for morphism '" + label + "'");
    c.psi.push_back(loose_hom(c.groups[s.source(a)], c.groups[s.target(a)], psi[label], where + ": psi_" + label));
  }
  for (const auto& p : s.pairs()) c.twists.push_back(c.groups[s.target(p.a)]->identity());
  if (j.contains("twists")) {
    for (const auto& t : j["twists"]) {
      if (!t.is_array() || t.size() != 3) malformed(where, "twist entry is not [a, b, g]: " + t.dump());
      const MorId a = morphism_named(s, get_as<std::string>(t[0], where, "morphism"), where);
      const MorId b = morphism_named(s, get_as<std::string>(t[1], where, "morphism"), where);
      const auto p = s.find_pair(a, b);
      if (!p) malformed(where, "(" + s.morphism_label(a) + "," + s.morphism_label(b) + ") is not a composable pair");
      c.twists[*p] = element_in(c.groups[s.target(a)], t[2], where);
    }
  }
  return share(std::move(c));
}

MorphismToGroup Workspace::build_to_group(const Json& j, const std::string& where) {
  MorphismToGroup phi;
  phi.source = complex_ref(field(j, "source", where), where);
  phi.target = group_ref(field(j, "target", where), where);
  const Scwol& s = *phi.source->base;
  const Json& local = field(j, "local", where);
  for (ObjId x = 0; x < s.num_objects(); ++x) {
    const std::string& label = s.object_label(x);
    if (!local.contains(label)) malformed(where, "no local hom for object '" + label + "'");
    phi.local.push_back(loose_hom(phi.source->groups[x], phi.target, local[label], where + ": phi_" + label));
  }
  const Json empty = Json::object();
  const Json& edge = j.contains("edge") ? j["edge"] : empty;
  for (MorId a = 0; a < s.num_morphisms(); ++a) {
    const std::string& label = s.morphism_label(a);
    phi.edge.push_back(edge.contains(label) ? element_in(phi.target, edge[label], where) : phi.target->identity());
  }
  return phi;
}

CogMorphism Workspace::build_cog_morphism(const Json& j, const std::string& where) {
  CogMorphism phi;
  phi.source = complex_ref(field(j, "source", where), where);
  phi.target = complex_ref(field(j, "target", where), where);
  const Scwol& y = *phi.source->base;
  const Scwol& x = *phi.target->base;
  phi.over.source = phi.source->base;
  phi.over.target = phi.target->base;
  const Json& objects = field(j, "objects", where);
  const Json& morphisms = field(j, "morphisms", where);
  for (ObjId s = 0; s < y.num_objects(); ++s) {
    const std::string& label = y.object_label(s);
    if (!objects.contains(label)) malformed(where, "no image for object '" + label + "'");
    phi.over.on_objects.push_back(object_named(x, get_as<std::string>(objects[label], where, "object"), where));
  }
  for (MorId a = 0; a < y.num_morphisms(); ++a) {
    const std::string& label = y.morphism_label(a);
    if (!morphisms.contains(label)) malformed(where, "no image for morphism '" + label + "'");
    phi.over.on_morphisms.push_back(morphism_named(x, get_as<std::string>(morphisms[label], where, "morphism"), where));
  }
  const Json& local = field(j, "local", where);
  for (ObjId s = 0; s < y.num_objects(); ++s) {
    const std::string& label = y.object_label(s);
    if (!local.contains(label)) malformed(where, "no local hom for object '" + label + "'");
    const GroupPtr& tgt = phi.target->groups[phi.over.on_objects[s]];
    phi.local.push_back(loose_hom(phi.source->groups[s], tgt, local[label], where + ": phi_" + label));
  }
  const Json empty = Json::object();
  const Json& edge = j.contains("edge") ? j["edge"] : empty;
  for (MorId a = 0; a < y.num_morphisms(); ++a) {
    const std::string& label = y.morphism_label(a);
    const GroupPtr& tgt = phi.target->groups[x.target(phi.over.on_morphisms[a])];
    phi.edge.push_back(edge.contains(label) ? element_in(tgt, edge[label], where) : tgt->identity());
  }
  return phi;
}

// ---------------------------------------------------------------- writers

namespace {

Json image_json(const GroupHom& f) { return Json(f.image); }

}  // namespace

bool Emitter::taken(const std::string& id) const { return std::find(ids_.begin(), ids_.end(), id) != ids_.end(); }

std::string Emitter::fresh(const std::string& stem) {
  if (!taken(stem)) return stem;
  for (std::size_t k = 2;; ++k) {
    const std::string id = stem + "-" + std::to_string(k);
    if (!taken(id)) return id;
  }
}

void Emitter::add_raw(Json item) {
  if (item.contains("id") && item["id"].is_string()) ids_.push_back(item["id"].get<std::string>());
  items_.push_back(std::move(item));
}

std::string Emitter::add(const GroupPtr& g, const std::string& id) {
  for (const auto& [h, hid] : groups_)
    if (h == g || *h == *g) return hid;
  const std::string gid = fresh(id.empty() ? (g->label().empty() ? "group" : g->label()) : id);
  Json j;
  j["kind"] = "group";
  j["id"] = gid;
  if (!g->label().empty() && g->label() != gid) j["label"] = g->label();
  j["order"] = g->order();
  j["identity"] = g->identity();
  j["cayley"] = g->table();
  groups_.emplace_back(g, gid);
  add_raw(std::move(j));
  return gid;
}

std::string Emitter::add(const ScwolPtr& s, const std::string& id) {
  for (const auto& [t, tid] : scwols_)
    if (t == s) return tid;
  const std::string sid = fresh(id.empty() ? "scwol" : id);
  Json j;
  j["kind"] = "scwol";
  j["id"] = sid;
  Json objects = Json::array();
  for (ObjId x = 0; x < s->num_objects(); ++x) objects.push_back(s->object_label(x));
  j["objects"] = std::move(objects);
  Json morphisms = Json::array();
  for (MorId a = 0; a < s->num_morphisms(); ++a) {
    Json m;
    m["id"] = s->morphism_label(a);
    m["i"] = s->object_label(s->source(a));
    m["t"] = s->object_label(s->target(a));
    morphisms.push_back(std::move(m));
  }
  j["morphisms"] = std::move(morphisms);
  Json comp = Json::array();
  for (const auto& p : s->pairs()) {
    comp.push_back(Json::array({s->morphism_label(p.a), s->morphism_label(p.b), s->morphism_label(p.ab)}));
  }
  j["comp"] = std::move(comp);
  scwols_.emplace_back(s, sid);
  add_raw(std::move(j));
  return sid;
}

std::string Emitter::add(const CogPtr& c, const std::string& id) {
  for (const auto& [d, did] : complexes_)
    if (d == c.get()) return did;
  const Scwol& s = *c->base;
  const std::string cid = fresh(id);
  Json j;
  j["kind"] = "complex";
  j["id"] = cid;
  j["scwol"] = add(c->base, cid + ".scwol");
  Json groups = Json::object();
  for (ObjId x = 0; x < s.num_objects(); ++x) groups[s.object_label(x)] = add(c->groups[x]);
  j["groups"] = std::move(groups);
  Json psi = Json::object();
  for (MorId a = 0; a < s.num_morphisms(); ++a) psi[s.morphism_label(a)] = image_json(c->psi[a]);
  j["psi"] = std::move(psi);
  Json twists = Json::array();
  for (std::size_t p = 0; p < s.pairs().size(); ++p) {
    const auto& [a, b, ab] = s.pairs()[p];
    if (c->twists[p] == c->groups[s.target(a)]->identity()) continue;
    twists.push_back(Json::array({s.morphism_label(a), s.morphism_label(b), c->twists[p]}));
  }
  j["twists"] = std::move(twists);
  complexes_.emplace_back(c.get(), cid);
  add_raw(std::move(j));
  return cid;
}

std::string Emitter::add(const MorphismToGroup& phi, const std::string& id) {
  const Scwol& s = *phi.source->base;
  const std::string source = add(phi.source, id + ".source");
  const std::string target = add(phi.target);
  Json j;
  j["kind"] = "morphism_to_group";
  j["id"] = fresh(id);
  j["source"] = source;
  j["target"] = target;
  Json local = Json::object();
  for (ObjId x = 0; x < s.num_objects(); ++x) local[s.object_label(x)] = image_json(phi.local[x]);
  j["local"] = std::move(local);
  Json edge = Json::object();
  for (MorId a = 0; a < s.num_morphisms(); ++a) edge[s.morphism_label(a)] = phi.edge[a];
  j["edge"] = std::move(edge);
  const std::string out = j["id"];
  add_raw(std::move(j));
  return out;
}

std::string Emitter::add(const CogMorphism& phi, const std::string& id) {
  const Scwol& y = *phi.source->base;
  const Scwol& x = *phi.target->base;
  const std::string source = add(phi.source, id + ".source");
  const std::string target = add(phi.target, id + ".target");
  Json j;
  j["kind"] = "cog_morphism";
  j["id"] = fresh(id);
  j["source"] = source;
  j["target"] = target;
  Json objects = Json::object(), morphisms = Json::object(), local = Json::object(), edge = Json::object();
  for (ObjId s = 0; s < y.num_objects(); ++s) {
    objects[y.object_label(s)] = x.object_label(phi.over.on_objects[s]);
    local[y.object_label(s)] = image_json(phi.local[s]);
  }
  for (MorId a = 0; a < y.num_morphisms(); ++a) {
    morphisms[y.morphism_label(a)] = x.morphism_label(phi.over.on_morphisms[a]);
    edge[y.morphism_label(a)] = phi.edge[a];
  }
  j["objects"] = std::move(objects);
  j["morphisms"] = std::move(morphisms);
  j["local"] = std::move(local);
  j["edge"] = std::move(edge);
  const std::string out = j["id"];
  add_raw(std::move(j));
  return out;
}

std::string Emitter::add(const Development& d, const std::string& id) {
  const std::string did = fresh(id);
  Json j;
  j["kind"] = "development";
  j["id"] = did;
  j["scwol"] = add(d.scwol, did + ".scwol");
  j["base"] = add(d.base, did + ".base");
  j["group"] = add(d.group);
  j["size"] = Json::array({d.scwol->num_objects(), d.scwol->num_morphisms()});
  j["projection"] = to_json(d.projection);
  Json cosets = Json::object();
  for (ObjId x = 0; x < d.base->num_objects(); ++x) cosets[d.base->object_label(x)] = d.cosets[x].reps;
  j["cosets"] = std::move(cosets);
  Json action;
  action["objects"] = d.act_objects;
  action["morphisms"] = d.act_morphisms;
  j["action"] = std::move(action);
  add_raw(std::move(j));
  return did;
}

Json Emitter::bundle() const {
  Json j;
  j["schema"] = kSchema;
  j["items"] = items_;
  return j;
}

Json to_json(const ScwolMorphism& f) {
  Json j;
  Json objects = Json::array(), morphisms = Json::array();
  for (ObjId x : f.on_objects) objects.push_back(f.target->object_label(x));
  for (MorId a : f.on_morphisms) morphisms.push_back(f.target->morphism_label(a));
  j["objects"] = std::move(objects);
  j["morphisms"] = std::move(morphisms);
  return j;
}

Json to_json(const Report& r) {
  Json out = Json::array();
  for (const auto& v : r.violations()) {
    Json x;
    x["code"] = std::string(to_string(v.code));
    x["witness"] = v.witness;
    out.push_back(std::move(x));
  }
  return out;
}

Json to_json(const GroupPresentation& p) {
  return Json::parse(export_presentation(p, PresentationFormat::Structured));
}

std::string dump(const Json& j) { return dump_json(j); }

// ---------------------------------------------------------------- realizations

std::string realization_off(const Scwol& s) {
  const Realization r = geometric_realization(s);
  std::size_t cells = 0;
  for (std::size_t d = 1; d < r.vertices.size(); ++d) cells += r.vertices[d].size();
  std::ostringstream os;
  os << "OFF\n" << s.num_objects() << " " << cells << " 0\n";
  // Objects sit on the moment curve, so distinct cells never overlap.
  for (std::size_t k = 0; k < s.num_objects(); ++k) os << k << " " << k * k << " " << k * k * k << "\n";
  for (std::size_t d = 1; d < r.vertices.size(); ++d) {
    for (const auto& cell : r.vertices[d]) {
      os << cell.size();
      for (ObjId v : cell) os << " " << v;
      os << "\n";
    }
  }
  return os.str();
}

Json realization_json(const Scwol& s) {
  const Realization r = geometric_realization(s);
  Json j;
  j["kind"] = "realization";
  j["f_vector"] = r.f_vector();
  Json dims = Json::array();
  for (std::size_t d = 0; d < r.vertices.size(); ++d) {
    Json cells = Json::array();
    for (std::size_t k = 0; k < r.vertices[d].size(); ++k) {
      Json cell;
      Json verts = Json::array();
      for (ObjId v : r.vertices[d][k]) verts.push_back(s.object_label(v));
      cell["vertices"] = std::move(verts);
      if (d > 0) {
        Json chain = Json::array();
        for (MorId a : r.chains[d][k]) chain.push_back(s.morphism_label(a));
        cell["chain"] = std::move(chain);
        cell["faces"] = r.faces[d][k];
      }
      cells.push_back(std::move(cell));
    }
    dims.push_back(std::move(cells));
  }
  j["cells"] = std::move(dims);
  return j;
}

}  // namespace cogkit
