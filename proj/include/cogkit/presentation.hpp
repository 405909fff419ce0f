#pragma once

// Presentations of pi_1 of a complex of groups relative to a maximal tree,
// induced homomorphisms, light simplification, abelianization and export.

#include <cstdint>
#include <string>
#include <vector>

#include "cogkit/cog.hpp"

namespace cogkit {

/// Generator g appears in words as g + 1, its inverse as -(g + 1).
using Letter = std::int32_t;
using Word = std::vector<Letter>;

inline Letter letter(std::size_t gen, bool inverse = false) {
  const auto l = static_cast<Letter>(gen + 1);
  return inverse ? -l : l;
}
inline std::size_t gen_of(Letter l) { return static_cast<std::size_t>(l < 0 ? -l : l) - 1; }

struct Generator {
  enum class Kind { Vertex, Edge };
  Kind kind;
  std::uint32_t base;  // object for Vertex, morphism for Edge
  Elem element = 0;    // Vertex only
  std::string name;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Edge generators stand for a+; a- is the inverse letter.
struct GroupPresentation {
  std::vector<Generator> generators;
  std::vector<Word> relators;
  std::vector<MorId> tree;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Relators, in order: x y (xy)^-1 for every local group table entry;
/// a+ g a- psi_a(g)^-1 per morphism and element; a+ b+ (ab)+^-1 g_{a,b}^-1
/// per pair; a+ for a in the tree. Throws TreeNotSpanning.
GroupPresentation pi1_presentation(const ComplexOfGroups& c, const std::vector<MorId>& tree);

/// Index of VertexGen(sigma, g) / EdgeGen(a) in a presentation built by
/// pi1_presentation.
std::size_t vertex_generator(const ComplexOfGroups& c, ObjId sigma, Elem g);
std::size_t edge_generator(const ComplexOfGroups& c, MorId a);

/// Hom to a finite group: generator images plus relator evaluation.
struct PresentationHomToGroup {
  GroupPtr target;
  std::vector<Elem> images;  // per generator
  Report report;             // RelatorNotKilled with the first bad relator
  bool surjective = false;
};

Elem evaluate(const FiniteGroup& g, const std::vector<Elem>& images, const Word& w);

/// h -> phi_sigma(h), a+ -> phi(a). Throws TreeConditionViolated unless
/// phi(a) = e on the tree.
PresentationHomToGroup induced_hom_to_group(const MorphismToGroup& phi, const GroupPresentation& p);

/// Images as words in the target presentation: h -> phi_sigma(h),
/// a+ -> phi(a) f(a)+. Relator preservation is recorded as an obligation.
struct PresentationHom {
  std::vector<Word> images;
};
PresentationHom induced_hom(const CogMorphism& phi, const GroupPresentation& src, const GroupPresentation& tgt);

Word free_reduce(const Word& w);

/// Free reduction, deletion of generators killed by a one-letter relator,
/// removal of empty and duplicate relators; repeated to a fixed point.
GroupPresentation simplify(const GroupPresentation& p);

/// Smith normal form of the exponent-sum matrix: torsion coefficients > 1
/// in divisibility order, then one 0 per free factor.
std::vector<long long> abelianization(const GroupPresentation& p);

enum class PresentationFormat { Plain, Cas, Structured };
PresentationFormat parse_presentation_format(const std::string& name);  // throws UnknownFormat

std::string export_presentation(const GroupPresentation& p, PresentationFormat format);
/// Inverse of the structured export. Throws ParseError.
GroupPresentation parse_structured_presentation(const std::string& text);

}  // namespace cogkit
