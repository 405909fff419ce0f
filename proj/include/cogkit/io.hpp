#pragma once

// Reading and writing the on-disk format.
//
// A file holds one item or a bundle {"schema": "cogkit/1", "items": [...]}.
// Every item has a "kind" and an "id". Wherever an item refers to another
// one, the reference may be an id string or the item itself inline.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cogkit/cog.hpp"
#include "cogkit/development.hpp"
#include "cogkit/presentation.hpp"
#include "cogkit/scwol.hpp"

namespace cogkit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "cogkit/1";

/// "where:line:col" for a byte offset into `text`.
std::string describe_offset(const std::string& where, const std::string& text, std::size_t offset);

/// Parses JSON text; syntax errors raise ParseError with line and column.
Json parse_json(const std::string& text, const std::string& where);

class Workspace {
 public:
  /// Files are read as they come; directories contribute their *.json files
  /// in sorted order.
  void load_path(const std::filesystem::path& p);
  void load_text(const std::string& text, const std::string& where);

  /// Item ids in load order, with their kinds.
  const std::vector<std::pair<std::string, std::string>>& items() const { return order_; }
  bool contains(const std::string& id) const { return raw_.count(id) > 0; }
  std::string kind_of(const std::string& id) const;

  GroupPtr group(const std::string& id);
  ScwolPtr scwol(const std::string& id);
  CogPtr complex(const std::string& id);
  MorphismToGroup to_group(const std::string& id);
  CogMorphism cog_morphism(const std::string& id);
  /// The scwol of a scwol item, or the scwol carried by a development item.
  ScwolPtr scwol_like(const std::string& id);

  std::vector<std::string> ids_of_kind(const std::string& kind) const;

 private:
  struct Raw {
    Json value;
    std::string where;
  };
  const Raw& raw(const std::string& id, const std::string& kind);
  std::string register_item(const Json& item, const std::string& where);

  GroupPtr group_ref(const Json& ref, const std::string& where);
  ScwolPtr scwol_ref(const Json& ref, const std::string& where);
  CogPtr complex_ref(const Json& ref, const std::string& where);

  GroupPtr build_group(const Json& j, const std::string& where);
  ScwolPtr build_scwol(const Json& j, const std::string& where);
  CogPtr build_complex(const Json& j, const std::string& where);
  MorphismToGroup build_to_group(const Json& j, const std::string& where);
  CogMorphism build_cog_morphism(const Json& j, const std::string& where);

  std::map<std::string, Raw> raw_;
  std::vector<std::pair<std::string, std::string>> order_;
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, ScwolPtr> scwols_;
  std::map<std::string, CogPtr> complexes_;
  std::map<std::string, MorphismToGroup> to_group_;
  std::map<std::string, CogMorphism> cog_morphisms_;
  std::vector<std::string> resolving_;
};

/// Collects items for a bundle. Groups and scwols are written once, as
/// their own items, and referenced by id from everything that uses them.
class Emitter {
 public:
  /// Returns the id used for `g`; an equal group already written is reused.
  std::string add(const GroupPtr& g, const std::string& id = {});
  std::string add(const ScwolPtr& s, const std::string& id = {});
  std::string add(const CogPtr& c, const std::string& id);
  std::string add(const MorphismToGroup& phi, const std::string& id);
  std::string add(const CogMorphism& phi, const std::string& id);
  std::string add(const Development& d, const std::string& id);
  /// Any other item, written as given.
  void add_raw(Json item);

  const Json& items() const { return items_; }
  Json bundle() const;

 private:
  std::string fresh(const std::string& stem);
  bool taken(const std::string& id) const;

  Json items_ = Json::array();
  std::vector<std::pair<GroupPtr, std::string>> groups_;
  std::vector<std::pair<ScwolPtr, std::string>> scwols_;
  std::vector<std::pair<const ComplexOfGroups*, std::string>> complexes_;
  std::vector<std::string> ids_;
};

Json to_json(const ScwolMorphism& f);
Json to_json(const Report& r);
Json to_json(const GroupPresentation& p);

/// JSON text as written by every command.
std::string dump(const Json& j);

/// OFF listing of |S|: objects as points on the moment curve (k, k^2, k^3),
/// then one face line "n v0 .. v(n-1)" per cell of dimension >= 1.
std::string realization_off(const Scwol& s);
Json realization_json(const Scwol& s);

}  // namespace cogkit
