#pragma once

// Small categories without loops as explicit finite data.
//
// Composition convention: (a, b) is composable iff i(a) == t(b); the composite
// ab satisfies i(ab) == i(b) and t(ab) == t(a). Chains (a1, ..., ak) satisfy
// i(a_j) == t(a_{j+1}).

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cogkit/error.hpp"

namespace cogkit {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;

struct MorphismData {
  std::string label;
  ObjId source;  // i(a)
  ObjId target;  // t(a)
};

struct Composite {
  MorId a;
  MorId b;
  MorId ab;
};

class ScwolBuilder;

class Scwol {
 public:
  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }

  const std::string& object_label(ObjId x) const { return objects_.at(x); }
  const std::string& morphism_label(MorId a) const { return morphisms_.at(a).label; }
  ObjId source(MorId a) const { return morphisms_[a].source; }
  ObjId target(MorId a) const { return morphisms_[a].target; }
  const MorphismData& morphism(MorId a) const { return morphisms_[a]; }

  std::optional<ObjId> find_object(const std::string& label) const;
  std::optional<MorId> find_morphism(const std::string& label) const;
  ObjId object_id(const std::string& label) const;   // throws UnknownObject
  MorId morphism_id(const std::string& label) const;  // throws UnknownObject

  /// Table entries sorted by (a, b).
  const std::vector<Composite>& pairs() const { return pairs_; }
  std::optional<MorId> composite(MorId a, MorId b) const;
  /// Position of (a, b) in pairs(); throws MissingComposite.
  std::size_t pair_index(MorId a, MorId b) const;
  std::optional<std::size_t> find_pair(MorId a, MorId b) const;
  bool composable(MorId a, MorId b) const { return source(a) == target(b); }

  /// Morphisms with i(a) == x, ascending.
  const std::vector<MorId>& out_morphisms(ObjId x) const { return out_[x]; }
  /// Morphisms with t(a) == x, ascending.
  const std::vector<MorId>& in_morphisms(ObjId x) const { return in_[x]; }

 private:
  friend class ScwolBuilder;

  std::vector<std::string> objects_;
  std::vector<MorphismData> morphisms_;
  std::vector<Composite> pairs_;
  std::unordered_map<std::uint64_t, std::size_t> pair_lookup_;
  std::vector<std::vector<MorId>> out_;
  std::vector<std::vector<MorId>> in_;
  std::unordered_map<std::string, ObjId> object_index_;
  std::unordered_map<std::string, MorId> morphism_index_;
};

using ScwolPtr = std::shared_ptr<const Scwol>;

/// Accumulates objects, morphisms and the composition table. build() checks
/// only structural sanity (ranges, unique labels); scwol axioms are checked by
/// validate_scwol.
class ScwolBuilder {
 public:
  ObjId add_object(std::string label);
  MorId add_morphism(std::string label, ObjId source, ObjId target);
  void set_composite(MorId a, MorId b, MorId ab);

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }
  const MorphismData& morphism(MorId a) const { return morphisms_.at(a); }

  Scwol build() const;
  ScwolPtr build_shared() const { return std::make_shared<const Scwol>(build()); }

 private:
  std::vector<std::string> objects_;
  std::vector<MorphismData> morphisms_;
  std::map<std::pair<MorId, MorId>, MorId> comp_;
};

/// Checks: no loops, table total exactly on composable pairs, composite
/// bookkeeping, associativity, acyclicity.
Report validate_scwol(const Scwol& s);

/// Composable chains of length k in lexicographic order of morphism ids.
std::vector<std::vector<MorId>> chains(const Scwol& s, std::size_t k);

Scwol upper_link(const Scwol& s, ObjId gamma);
Scwol lower_link(const Scwol& s, ObjId gamma);

struct ScwolMorphism {
  ScwolPtr source;
  ScwolPtr target;
  std::vector<ObjId> on_objects;
  std::vector<MorId> on_morphisms;
};

enum class MorphismLevel {
  Functor,           // commutes with i, t and composition
  LocallyInjective,  // plus: injective on each set {a : i(a) = x}
  NonDegenerate,     // plus: bijective onto {b : i(b) = f(x)}
};

Report validate_scwol_morphism(const ScwolMorphism& f, MorphismLevel level = MorphismLevel::NonDegenerate);

ScwolMorphism identity_morphism(const ScwolPtr& s);

/// Y(gamma) with the family of every object and morphism recorded.
struct Star {
  enum class ObjKind { Upper, Center, Lower };
  enum class MorKind {
    UpperEdge,    // (c, d) in E(Lk_gamma)
    CenterUpper,  // gamma*c
    LowerUpper,   // b*c
    LowerCenter,  // b*gamma
    LowerEdge,    // (a, b) in E(Lk^gamma)
  };
  struct ObjInfo {
    ObjKind kind;
    MorId base;  // c or b in the ambient scwol; unused for the center
  };
  struct MorInfo {
    MorKind kind;
    MorId first;   // c, c, b, b, a
    MorId second;  // d, -, c, -, b
  };

  ScwolPtr ambient;
  ObjId gamma = 0;
  ScwolPtr scwol;
  ObjId center = 0;
  std::vector<ObjInfo> objects;
  std::vector<MorInfo> morphisms;

  std::map<MorId, ObjId> upper_object;  // c -> object
  std::map<MorId, ObjId> lower_object;  // b -> object
  std::map<std::pair<MorId, MorId>, MorId> upper_edge;
  std::map<MorId, MorId> center_upper;
  std::map<std::pair<MorId, MorId>, MorId> lower_upper;
  std::map<MorId, MorId> lower_center;
  std::map<std::pair<MorId, MorId>, MorId> lower_edge;
};

Star star_scwol(const ScwolPtr& s, ObjId gamma);

/// h: Y(gamma) -> Y.
ScwolMorphism star_projection(const Star& star);

/// Graded cells of |S|: 0-cells are objects, k-cells are k-chains. Vertices of
/// the chain (a1..ak) are t(a1), i(a1), ..., i(ak).
struct Realization {
  std::vector<std::vector<std::vector<ObjId>>> vertices;     // [dim][cell] -> vertex list
  std::vector<std::vector<std::vector<std::size_t>>> faces;  // [dim][cell] -> face indices in dim-1
  std::vector<std::vector<std::vector<MorId>>> chains;       // [dim][cell] (empty for dim 0)

  std::vector<std::size_t> f_vector() const;
};

Realization geometric_realization(const Scwol& s);

/// Connected components of the underlying undirected graph, each sorted;
/// ordered by least object id.
std::vector<std::vector<ObjId>> connected_components(const Scwol& s);

/// Breadth-first spanning tree from the least object id, visiting incident
/// morphisms in ascending id. Throws Disconnected.
std::vector<MorId> maximal_tree(const Scwol& s);

/// Empty optional when `tree` is a spanning tree, else the reason.
std::optional<std::string> spanning_tree_violation(const Scwol& s, const std::vector<MorId>& tree);

}  // namespace cogkit
