#include "doctest.h"

#include "cogkit/catalog.hpp"
#include "cogkit/io.hpp"
#include "cogkit/json_text.hpp"

using namespace cogkit;

namespace {

ErrorCode load_error(const std::string& text) {
  Workspace ws;
  try {
    ws.load_text(text, "t.json");
    for (const auto& [id, kind] : ws.items())
      if (kind == "complex") ws.complex(id);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("loaded without error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("complexes survive a round trip") {
  Emitter em;
  for (const auto& [id, c] : fixtures::complexes()) em.add(c, id);
  Workspace ws;
  ws.load_text(dump(em.bundle()), "bundle.json");
  for (const auto& [id, c] : fixtures::complexes()) {
    INFO(id);
    const auto back = ws.complex(id);
    REQUIRE(back->base->num_objects() == c->base->num_objects());
    CHECK(back->base->num_morphisms() == c->base->num_morphisms());
    CHECK(back->twists == c->twists);
    for (ObjId x = 0; x < c->base->num_objects(); ++x) CHECK(*back->groups[x] == *c->groups[x]);
    for (MorId a = 0; a < c->base->num_morphisms(); ++a) CHECK(back->psi[a].image == c->psi[a].image);
  }
}

TEST_CASE("morphisms survive a round trip") {
  const auto seg = fixtures::seg23();
  Emitter em;
  em.add(seg, "seg");
  em.add(fixtures::seg23_to_z6(seg), "phi");
  em.add(fixtures::seg23_collapse(seg), "col");
  Workspace ws;
  ws.load_text(dump(em.bundle()), "m.json");
  CHECK(validate_morphism_to_group(ws.to_group("phi")).ok());
  const auto col = ws.cog_morphism("col");
  CHECK(validate_cog_morphism(col).ok());
  CHECK(col.over.on_objects == std::vector<ObjId>{0, 1, 2});
}

TEST_CASE("emitter reuses equal groups") {
  Emitter em;
  const auto a = em.add(cyclic_group(4), "z4");
  const auto b = em.add(cyclic_group(4));
  CHECK(a == b);
  CHECK(em.items().size() == 1);
}

TEST_CASE("inline references and permutation groups") {
  const std::string text = R"({"schema": "cogkit/1", "items": [
    {"kind": "group", "id": "s3", "degree": 3, "perm_gens": [[1, 0, 2], [1, 2, 0]]},
    {"kind": "complex", "id": "c",
     "scwol": {"kind": "scwol", "id": "one", "objects": ["p"], "morphisms": [], "comp": []},
     "groups": {"p": "s3"}, "psi": {}}
  ]})";
  Workspace ws;
  ws.load_text(text, "inline.json");
  const auto c = ws.complex("c");
  CHECK(c->groups[0]->order() == 6);
  CHECK(c->base->num_objects() == 1);
  // Inline items stay local to their parent.
  CHECK_FALSE(ws.contains("one"));
}

TEST_CASE("errors") {
  CHECK(load_error("{\"kind\": \"group\",\n \"id\": }") == ErrorCode::ParseError);
  CHECK(load_error(R"({"kind": "complex", "id": "c", "scwol": "nope", "groups": {}, "psi": {}})") ==
        ErrorCode::UnresolvedReference);
  CHECK(load_error(R"({"kind": "blob", "id": "x"})") == ErrorCode::InvalidInput);
  CHECK(load_error(R"([{"kind": "group", "id": "g", "cayley": [[0]], "identity": 0},
                       {"kind": "group", "id": "g", "cayley": [[0, 1], [1, 0]], "identity": 0}])") ==
        ErrorCode::InvalidInput);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_json("{\n  \"a\": 1,\n  \"b\": ]\n}", "x.json");
    FAIL("parsed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.message().rfind("x.json:3:8:", 0) == 0);
  }
  CHECK(describe_offset("f", "ab\ncd", 4) == "f:2:2");
}

TEST_CASE("identical duplicates are accepted") {
  Workspace ws;
  const std::string g = R"({"kind": "group", "id": "g", "cayley": [[0]], "identity": 0})";
  ws.load_text(g, "a.json");
  ws.load_text(g, "b.json");
  CHECK(ws.items().size() == 1);
}

TEST_CASE("json text layout") {
  nlohmann::ordered_json j;
  j["b"] = {1, 2, 3};
  j["a"] = {{"x", 1}};
  CHECK(dump_json(j) == "{\n  \"b\": [1, 2, 3],\n  \"a\": {\"x\": 1}\n}\n");
}

TEST_CASE("realization text") {
  const auto off = realization_off(*fixtures::circle());
  CHECK(off.rfind("OFF", 0) == 0);
  const auto j = realization_json(*fixtures::two_simplex());
  CHECK(j.dump().find("f_vector") != std::string::npos);
}
