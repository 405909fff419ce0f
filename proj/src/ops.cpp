#include "cogkit/ops.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "cogkit/catalog.hpp"
#include "cogkit/development.hpp"
#include "cogkit/immersion.hpp"
#include "cogkit/local_cog.hpp"
#include "cogkit/presentation.hpp"

namespace cogkit {

namespace {

struct Context {
  const Options& opt;
  Workspace ws;
  int exit_code = kPositive;

  void negative() { exit_code = std::max(exit_code, int(kNegative)); }
};

Json envelope(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

void load(Context& ctx) {
  if (ctx.opt.paths.empty()) {
    ctx.ws.load_path("fixtures");
    return;
  }
  for (const auto& p : ctx.opt.paths) ctx.ws.load_path(p);
}

std::string format_or(const Options& o, const std::string& fallback, const std::vector<std::string>& allowed) {
  const std::string f = o.format.value_or(fallback);
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
    throw Error(ErrorCode::UnknownFormat, "format '" + f + "' is not available here");
  }
  return f;
}

// Complexes used as input must pass validation first.
CogPtr valid_complex(Context& ctx, const std::string& id) {
  const CogPtr c = ctx.ws.complex(id);
  Report r = validate_scwol(*c->base);
  if (r.ok()) r = validate_cog(*c);
  if (!r.ok()) throw Error(ErrorCode::ValidationFailed, "complex '" + id + "': " + r.summary());
  return c;
}

std::vector<std::string> selected_complexes(Context& ctx) {
  if (ctx.opt.cog) return {*ctx.opt.cog};
  return ctx.ws.ids_of_kind("complex");
}

std::optional<ObjId> find_vertex(const Scwol& s, const std::string& v) {
  if (auto x = s.find_object(v)) return x;
  if (!v.empty() && std::all_of(v.begin(), v.end(), ::isdigit)) {
    const auto k = std::stoull(v);
    if (k < s.num_objects()) return static_cast<ObjId>(k);
  }
  return std::nullopt;
}

// (complex id, complex, vertex) triples selected by --cog and --vertex.
struct Local {
  std::string id;
  CogPtr complex;
  ObjId gamma;
  std::string name() const { return id + "@" + complex->base->object_label(gamma); }
};

std::vector<Local> selected_locals(Context& ctx) {
  std::vector<Local> out;
  for (const auto& id : selected_complexes(ctx)) {
    const CogPtr c = valid_complex(ctx, id);
    if (ctx.opt.vertex) {
      auto g = find_vertex(*c->base, *ctx.opt.vertex);
      if (!g) {
        if (ctx.opt.cog) throw Error(ErrorCode::UnresolvedReference, "no object '" + *ctx.opt.vertex + "' in " + id);
        continue;
      }
      out.push_back({id, c, *g});
    } else {
      for (ObjId g = 0; g < c->base->num_objects(); ++g) out.push_back({id, c, g});
    }
  }
  return out;
}

std::vector<MorId> tree_for(Context& ctx, const Scwol& s) {
  if (ctx.opt.tree == "bfs") return maximal_tree(s);
  std::ifstream in(ctx.opt.tree, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read tree file " + ctx.opt.tree);
  std::ostringstream text;
  text << in.rdbuf();
  Json j = parse_json(text.str(), ctx.opt.tree);
  if (j.is_object() && j.contains("tree")) j = j["tree"];
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, ctx.opt.tree + ": expected a list of morphism ids");
  std::vector<MorId> tree;
  for (const auto& m : j) {
    if (!m.is_string()) throw Error(ErrorCode::InvalidInput, ctx.opt.tree + ": tree entries must be morphism ids");
    auto a = s.find_morphism(m.get<std::string>());
    if (!a) throw Error(ErrorCode::UnresolvedReference, ctx.opt.tree + ": no morphism '" + m.get<std::string>() + "'");
    tree.push_back(*a);
  }
  std::sort(tree.begin(), tree.end());
  if (auto bad = spanning_tree_violation(s, tree)) throw Error(ErrorCode::TreeNotSpanning, *bad);
  return tree;
}

Json labels(const Scwol& s, const std::vector<MorId>& ms) {
  Json j = Json::array();
  for (MorId a : ms) j.push_back(s.morphism_label(a));
  return j;
}

// ---------------------------------------------------------------- commands

std::string cmd_validate(Context& ctx) {
  Json results = Json::array();
  auto record = [&](const std::string& id, const std::string& kind, const Report& r) {
    Json x;
    x["id"] = id;
    x["kind"] = kind;
    x["ok"] = r.ok();
    if (!r.ok()) {
      x["violations"] = to_json(r);
      ctx.negative();
    }
    results.push_back(std::move(x));
  };
  // Violations raised while building an item (a table that is not a group,
  // say) count as a negative verdict on that item.
  auto guarded = [&](const std::function<Report()>& f) {
    try {
      return f();
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::ParseError:
        case ErrorCode::UnresolvedReference:
        case ErrorCode::InvalidInput:
        case ErrorCode::IndexOutOfRange:
          throw;
        default: {
          Report r;
          r.add(e.code(), e.message());
          return r;
        }
      }
    }
  };
  for (const auto& [id, kind] : ctx.ws.items()) {
    Report r;
    if (kind == "group") {
      r = guarded([&] {
        ctx.ws.group(id);
        return Report{};
      });
    } else if (kind == "scwol") {
      r = guarded([&] { return validate_scwol(*ctx.ws.scwol(id)); });
    } else if (kind == "complex") {
      r = guarded([&] {
        const CogPtr c = ctx.ws.complex(id);
        Report out;
        out.merge(validate_scwol(*c->base), "base: ");
        if (out.ok()) out = validate_cog(*c);
        return out;
      });
    } else if (kind == "morphism_to_group") {
      r = guarded([&] { return validate_morphism_to_group(ctx.ws.to_group(id)); });
    } else if (kind == "cog_morphism") {
      r = guarded([&] { return validate_cog_morphism(ctx.ws.cog_morphism(id)); });
    } else if (kind == "development" || kind == "local_development") {
      r = guarded([&] { return validate_scwol(*ctx.ws.scwol_like(id)); });
    } else {
      continue;
    }
    record(id, kind, r);
  }
  Json out = envelope("validate");
  out["ok"] = ctx.exit_code == kPositive;
  out["results"] = std::move(results);
  return dump(out);
}

std::string cmd_local(Context& ctx, const std::string& which) {
  Emitter em;
  Json results = Json::array();
  for (const auto& l : selected_locals(ctx)) {
    const LocalCog lc = build_local_cog(l.complex, l.gamma);
    const std::string name = l.name();
    Json x;
    x["complex"] = l.id;
    x["vertex"] = l.complex->base->object_label(l.gamma);
    if (which == "local-cog") {
      const Report r = validate_cog(*lc.cog);
      x["id"] = em.add(lc.cog, name);
      x["objects"] = lc.cog->base->num_objects();
      x["morphisms"] = lc.cog->base->num_morphisms();
      x["ok"] = r.ok();
      if (!r.ok()) {
        x["violations"] = to_json(r);
        ctx.negative();
      }
    } else if (which == "theta") {
      const MorphismToGroup th = build_theta(lc);
      em.add(lc.cog, name);
      const Report r = validate_morphism_to_group(th);
      const auto bad = first_non_injective(th.local);
      x["id"] = em.add(th, name + ".theta");
      x["ok"] = r.ok();
      x["injective"] = !bad.has_value();
      if (!r.ok()) {
        x["violations"] = to_json(r);
        ctx.negative();
      }
      if (bad) {
        x["not_injective_at"] = lc.cog->base->object_label(*bad);
        ctx.negative();
      }
    } else {
      const CogMorphism sg = build_sigma(lc);
      em.add(l.complex, l.id);
      em.add(lc.cog, name);
      const Report r = validate_cog_morphism(sg);
      x["id"] = em.add(sg, name + ".sigma");
      x["ok"] = r.ok();
      if (!r.ok()) {
        x["violations"] = to_json(r);
        ctx.negative();
      }
    }
    results.push_back(std::move(x));
  }
  Json out = envelope(which);
  out["results"] = std::move(results);
  out["items"] = em.items();
  return dump(out);
}

std::string cmd_local_dev(Context& ctx) {
  Emitter em;
  Json results = Json::array();
  for (const auto& l : selected_locals(ctx)) {
    const LocalDevelopment d = build_local_development(l.complex, l.gamma);
    const Star star = star_scwol(l.complex->base, l.gamma);
    const std::string name = l.name();
    const ScwolMorphism proj = local_development_projection(d, star);
    Report r = validate_scwol(*d.scwol);
    r.merge(validate_scwol_morphism(proj, MorphismLevel::Functor), "projection: ");
    Json item;
    item["kind"] = "local_development";
    item["id"] = name + ".local-dev";
    item["complex"] = l.id;
    item["vertex"] = l.complex->base->object_label(l.gamma);
    item["scwol"] = em.add(d.scwol, name + "~");
    item["star"] = em.add(star.scwol, name + ".star");
    item["projection"] = to_json(proj);
    em.add_raw(item);
    Json x;
    x["id"] = item["id"];
    x["objects"] = d.scwol->num_objects();
    x["morphisms"] = d.scwol->num_morphisms();
    x["ok"] = r.ok();
    if (!r.ok()) {
        x["violations"] = to_json(r);
        ctx.negative();
      }
    results.push_back(std::move(x));
  }
  Json out = envelope("local-dev");
  out["results"] = std::move(results);
  out["items"] = em.items();
  return dump(out);
}

std::string cmd_develop(Context& ctx) {
  std::vector<std::pair<std::string, MorphismToGroup>> targets;
  if (ctx.opt.mor) {
    targets.emplace_back(*ctx.opt.mor, ctx.ws.to_group(*ctx.opt.mor));
  } else if (ctx.opt.vertex || ctx.opt.cog) {
    for (const auto& l : selected_locals(ctx)) targets.emplace_back(l.name() + ".theta", build_theta(build_local_cog(l.complex, l.gamma)));
  } else {
    for (const auto& id : ctx.ws.ids_of_kind("morphism_to_group")) targets.emplace_back(id, ctx.ws.to_group(id));
  }
  Emitter em;
  Json results = Json::array();
  for (const auto& [id, phi] : targets) {
    const Report v = validate_morphism_to_group(phi);
    if (!v.ok()) throw Error(ErrorCode::ValidationFailed, "morphism '" + id + "': " + v.summary());
    const Development d = build_development(phi);
    const ActionReport a = check_action(d);
    const auto expected = development_size(phi);
    Json x;
    x["morphism"] = id;
    x["id"] = em.add(d, id + ".dev");
    x["size"] = Json::array({d.scwol->num_objects(), d.scwol->num_morphisms()});
    x["coset_formula"] = Json::array({expected.first, expected.second});
    x["object_orbits"] = a.object_orbits;
    x["morphism_orbits"] = a.morphism_orbits;
    x["developable_certificate"] = !first_non_injective(phi.local).has_value();
    x["action_ok"] = a.report.ok();
    if (!a.report.ok()) {
        x["violations"] = to_json(a.report);
        ctx.negative();
      }
    results.push_back(std::move(x));
  }
  Json out = envelope("develop");
  out["results"] = std::move(results);
  out["items"] = em.items();
  return dump(out);
}

GroupPresentation presentation_of(Context& ctx, const CogPtr& c) { return pi1_presentation(*c, tree_for(ctx, *c->base)); }

std::string cmd_pi1(Context& ctx) {
  const std::string f = format_or(ctx.opt, "json", {"json", "plain", "cas"});
  if (f != "json") {
    std::string text;
    for (const auto& id : selected_complexes(ctx)) {
      const GroupPresentation p = presentation_of(ctx, valid_complex(ctx, id));
      text += (f == "cas" ? "# " : "-- ") + id + "\n" + export_presentation(p, parse_presentation_format(f));
    }
    return text;
  }
  Json results = Json::array();
  for (const auto& id : selected_complexes(ctx)) {
    const CogPtr c = valid_complex(ctx, id);
    const GroupPresentation p = presentation_of(ctx, c);
    const GroupPresentation s = simplify(p);
    Json x;
    x["complex"] = id;
    x["tree"] = labels(*c->base, p.tree);
    x["generators"] = p.generators.size();
    x["relators"] = p.relators.size();
    x["simplified"] = Json::array({s.generators.size(), s.relators.size()});
    x["presentation"] = to_json(p);
    results.push_back(std::move(x));
  }
  Json out = envelope("pi1");
  out["results"] = std::move(results);
  return dump(out);
}

std::string cmd_abel(Context& ctx) {
  const std::string f = format_or(ctx.opt, "json", {"json", "plain"});
  Json results = Json::array();
  std::string text;
  for (const auto& id : selected_complexes(ctx)) {
    const auto inv = abelianization(presentation_of(ctx, valid_complex(ctx, id)));
    Json x;
    x["complex"] = id;
    x["invariants"] = inv;
    text += id + ": " + Json(inv).dump() + "\n";
    results.push_back(std::move(x));
  }
  if (f == "plain") return text;
  Json out = envelope("abel");
  out["results"] = std::move(results);
  return dump(out);
}

std::string cmd_export_pres(Context& ctx) {
  const std::string f = format_or(ctx.opt, "plain", {"json", "plain", "cas"});
  const auto ids = selected_complexes(ctx);
  std::string text;
  for (const auto& id : ids) {
    const GroupPresentation p = presentation_of(ctx, valid_complex(ctx, id));
    if (f != "json" && ids.size() > 1) text += (f == "cas" ? "# " : "-- ") + id + "\n";
    text += export_presentation(p, parse_presentation_format(f));
  }
  return text;
}

Json immersion_json(const CogMorphism& phi, const ImmersionReport& rep) {
  const Scwol& y = *phi.source->base;
  const Scwol& x = *phi.target->base;
  Json j;
  j["immersion"] = rep.immersion;
  j["lemma_agrees"] = rep.lemma_agrees;
  j["metric"] = rep.metric;
  Json objects = Json::array();
  for (const auto& v : rep.objects) {
    Json o;
    o["object"] = y.object_label(v.sigma);
    o["algebraic"] = v.algebraic;
    o["geometric"] = v.geometric;
    o["upper_link"] = v.upper_link;
    o["coset"] = v.coset;
    if (!v.witness.empty()) o["witness"] = v.witness;
    objects.push_back(std::move(o));
  }
  j["objects"] = std::move(objects);
  Json cosets = Json::array();
  for (const auto& c : rep.cosets) {
    Json o;
    o["object"] = y.object_label(c.sigma);
    o["edge"] = x.morphism_label(c.j);
    o["injective"] = c.injective;
    if (!c.witness.empty()) o["witness"] = c.witness;
    cosets.push_back(std::move(o));
  }
  j["cosets"] = std::move(cosets);
  return j;
}

std::string cmd_immerse(Context& ctx) {
  std::vector<std::pair<std::string, CogMorphism>> targets;
  if (ctx.opt.mor) {
    targets.emplace_back(*ctx.opt.mor, ctx.ws.cog_morphism(*ctx.opt.mor));
  } else if (ctx.opt.cog || ctx.opt.vertex) {
    for (const auto& l : selected_locals(ctx)) targets.emplace_back(l.name() + ".sigma", build_sigma(build_local_cog(l.complex, l.gamma)));
  } else {
    for (const auto& id : ctx.ws.ids_of_kind("cog_morphism")) targets.emplace_back(id, ctx.ws.cog_morphism(id));
  }
  Json results = Json::array();
  for (const auto& [id, phi] : targets) {
    const Report v = validate_cog_morphism(phi);
    if (!v.ok()) throw Error(ErrorCode::ValidationFailed, "morphism '" + id + "': " + v.summary());
    const ImmersionReport rep = check_immersion(phi);
    Json x;
    x["morphism"] = id;
    x.update(immersion_json(phi, rep));
    if (!rep.immersion) ctx.negative();
    results.push_back(std::move(x));
  }
  Json out = envelope("immerse");
  out["results"] = std::move(results);
  return dump(out);
}

// First scwol-carrying item of a file.
ScwolPtr first_scwol(const std::string& path, std::string& id) {
  Workspace ws;
  ws.load_path(path);
  for (const auto& [item, kind] : ws.items()) {
    if (kind == "scwol" || kind == "development" || kind == "local_development") {
      id = item;
      return ws.scwol_like(item);
    }
  }
  throw Error(ErrorCode::InvalidInput, path + ": no scwol or development");
}

std::string cmd_iso(Context& ctx) {
  if (ctx.opt.paths.size() != 2) throw Error(ErrorCode::InvalidInput, "iso takes exactly two files");
  std::string ida, idb;
  const ScwolPtr a = first_scwol(ctx.opt.paths[0], ida);
  const ScwolPtr b = first_scwol(ctx.opt.paths[1], idb);
  for (const auto& [s, id] : {std::pair{a, ida}, std::pair{b, idb}}) {
    const Report r = validate_scwol(*s);
    if (!r.ok()) throw Error(ErrorCode::ValidationFailed, "scwol '" + id + "': " + r.summary());
  }
  Json out = envelope("iso");
  out["first"] = ida;
  out["second"] = idb;
  try {
    const auto iso = scwol_isomorphic(*a, *b, ctx.opt.budget);
    out["isomorphic"] = iso.has_value();
    if (iso) {
      out["search_nodes"] = iso->search_nodes;
      Json objects = Json::object(), morphisms = Json::object();
      for (ObjId x = 0; x < a->num_objects(); ++x) objects[a->object_label(x)] = b->object_label(iso->on_objects[x]);
      for (MorId m = 0; m < a->num_morphisms(); ++m) morphisms[a->morphism_label(m)] = b->morphism_label(iso->on_morphisms[m]);
      out["objects"] = std::move(objects);
      out["morphisms"] = std::move(morphisms);
    } else {
      ctx.negative();
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SearchBudgetExceeded) throw;
    out["isomorphic"] = nullptr;
    out["undetermined"] = e.what();
    ctx.negative();
  }
  return dump(out);
}

std::string cmd_realize(Context& ctx) {
  const std::string f = format_or(ctx.opt, "json", {"json", "off"});
  std::vector<std::pair<std::string, ScwolPtr>> targets;
  if (ctx.opt.scwol) {
    targets.emplace_back(*ctx.opt.scwol, ctx.ws.scwol_like(*ctx.opt.scwol));
  } else if (ctx.opt.cog) {
    targets.emplace_back(*ctx.opt.cog, ctx.ws.complex(*ctx.opt.cog)->base);
  } else {
    for (const auto& id : ctx.ws.ids_of_kind("scwol")) targets.emplace_back(id, ctx.ws.scwol(id));
  }
  std::string text;
  Json results = Json::array();
  for (const auto& [id, s] : targets) {
    const Report r = validate_scwol(*s);
    if (!r.ok()) throw Error(ErrorCode::ValidationFailed, "scwol '" + id + "': " + r.summary());
    if (f == "off") {
      if (targets.size() > 1) text += "# " + id + "\n";
      text += realization_off(*s);
    } else {
      Json x = realization_json(*s);
      x["id"] = id + ".realization";
      x["scwol"] = id;
      results.push_back(std::move(x));
    }
  }
  if (f == "off") return text;
  Json out = envelope("realize");
  out["items"] = std::move(results);
  return dump(out);
}

std::string cmd_corpus(Context& ctx) {
  CorpusGenerator gen(ctx.opt.seed);
  Emitter em;
  for (std::size_t k = 0; k < ctx.opt.count; ++k) em.add(gen.next_complex(), "corpus-" + std::to_string(k));
  Json out = envelope("corpus");
  out["seed"] = ctx.opt.seed;
  out["items"] = em.items();
  return dump(out);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"validate", "local-cog", "theta", "sigma", "local-dev",
                                                 "develop",  "pi1",       "abel",  "export-pres", "immerse",
                                                 "iso",      "realize",   "corpus"};
  return names;
}

Outcome run_command(const std::string& command, const Options& options) {
  Outcome out;
  Context ctx{options, {}, kPositive};
  try {
    if (command == "iso") {
      out.output = cmd_iso(ctx);
    } else if (command == "corpus") {
      out.output = cmd_corpus(ctx);
    } else {
      load(ctx);
      if (command == "validate") out.output = cmd_validate(ctx);
      else if (command == "local-cog" || command == "theta" || command == "sigma") out.output = cmd_local(ctx, command);
      else if (command == "local-dev") out.output = cmd_local_dev(ctx);
      else if (command == "develop") out.output = cmd_develop(ctx);
      else if (command == "pi1") out.output = cmd_pi1(ctx);
      else if (command == "abel") out.output = cmd_abel(ctx);
      else if (command == "export-pres") out.output = cmd_export_pres(ctx);
      else if (command == "immerse") out.output = cmd_immerse(ctx);
      else if (command == "realize") out.output = cmd_realize(ctx);
      else throw Error(ErrorCode::InvalidInput, "unknown command '" + command + "'");
    }
    out.exit_code = ctx.exit_code;
  } catch (const Error& e) {
    out.exit_code = kMalformed;
    out.output.clear();
    out.error = e.what();
  } catch (const std::exception& e) {
    out.exit_code = kMalformed;
    out.output.clear();
    out.error = std::string("InvalidInput: ") + e.what();
  }
  return out;
}

}  // namespace cogkit
