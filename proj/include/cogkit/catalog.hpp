#pragma once

// Named fixtures and a seeded generator of random valid complexes of groups
// and morphisms between them.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cogkit/cog.hpp"

namespace cogkit {

/// Scwol of the face poset: one object per face, one morphism tau -> sigma
/// for every proper face sigma of tau. Faces are sorted vertex lists.
ScwolPtr simplicial_scwol(const std::vector<std::vector<int>>& faces);

/// Downward closure of a list of simplices, ordered by (dimension, vertices).
std::vector<std::vector<int>> face_closure(const std::vector<std::vector<int>>& simplices);

/// Scwol of a finite poset given by its strict order: one morphism x -> y
/// whenever greater[x][y]. The relation must be transitive.
ScwolPtr poset_scwol(const std::vector<std::string>& names, const std::vector<std::vector<bool>>& greater);

/// Simple complex of groups over the scwol of a poset: G_sigma is generated by
/// the K_tau with tau >= sigma, psi are inclusions, twists trivial.
/// `inclusions`, when given, receives G_sigma -> ambient per object.
ComplexOfGroups simple_complex(const ScwolPtr& poset, const GroupPtr& ambient,
                               const std::vector<std::vector<Elem>>& generators,
                               std::vector<GroupHom>* inclusions = nullptr);

/// Same complex with every local group relabelled by a bijection.
ComplexOfGroups relabel_complex(const ComplexOfGroups& c, const std::vector<std::vector<Elem>>& perms);

namespace fixtures {

ScwolPtr point();
/// v0, v1, m with a0: m -> v0 and a1: m -> v1.
ScwolPtr segment();
/// Face poset of a 2-simplex: 7 objects, 12 morphisms, 6 pairs.
ScwolPtr two_simplex();
/// Boundary of a triangle: 6 objects, 6 morphisms.
ScwolPtr circle();

/// Z/2 at v0, Z/3 at v1, trivial at m.
CogPtr seg23();
/// gamma with S3, m with Z/2, c: m -> gamma the inclusion.
CogPtr star_s3();
/// Triangle of groups in S3 with a coboundary that leaves a nontrivial twist
/// on every pair.
CogPtr triangle_twisted();

/// SEG-23 into Z/6 via the two inclusions.
MorphismToGroup seg23_to_z6(const CogPtr& seg23);
/// SEG-23 onto the trivial complex over the segment.
CogMorphism seg23_collapse(const CogPtr& seg23);
/// Two edges with equal local data folded onto one edge.
CogMorphism fold2();

struct Named {
  std::string id;
  CogPtr complex;
};
/// point, seg23, star-s3, simplex2, circle, triangle-twisted.
std::vector<Named> complexes();

}  // namespace fixtures

struct CorpusOptions {
  std::size_t max_order = 24;
  std::size_t max_objects = 12;
};

/// Deterministic stream of random valid complexes: random face posets,
/// subgroup families in a catalog group, random relabellings and random
/// coboundaries.
class CorpusGenerator {
 public:
  explicit CorpusGenerator(std::uint64_t seed, CorpusOptions opts = {});

  CogPtr next_complex();
  /// A simple complex before any relabelling or coboundary, plus its ambient
  /// group (for building quotient morphisms). The base is a face poset or,
  /// every other draw, a random ranked poset of height up to 4.
  struct Simple {
    CogPtr complex;
    GroupPtr ambient;
    std::vector<GroupHom> inclusions;  // G_sigma -> ambient
  };
  Simple next_simple();

  /// Random coboundary of c.
  Coboundary random_coboundary(const CogPtr& c);

  /// Morphism from a simple complex to its image under a random hom of the
  /// ambient group (often not injective).
  CogMorphism quotient_morphism(const Simple& s);
  /// A random hom out of a catalog group: identity, trivial, reduction mod m,
  /// reflection parity, sign, S4 -> S3 or Q8 -> C2.
  GroupHom random_quotient(const GroupPtr& a);
  /// A pod folded onto a smaller pod; phi(a) random, leaf groups chosen so the
  /// morphism is valid. Frequently fails the coset condition.
  CogMorphism fold_morphism();

  std::uint64_t below(std::uint64_t n) { return n ? rng_() % n : 0; }
  GroupPtr random_catalog_group();

 private:
  ScwolPtr random_face_poset();
  ScwolPtr random_ranked_poset();

  std::mt19937_64 rng_;
  CorpusOptions opts_;
};

}  // namespace cogkit
