#pragma once

// Developments D(Y, phi) for morphisms into finite groups, local
// developments Y(gamma~), and the induced maps of local developments.

#include <map>
#include <tuple>
#include <vector>

#include "cogkit/cog.hpp"
#include "cogkit/scwol.hpp"

namespace cogkit {

struct Development {
  ScwolPtr scwol;
  ScwolPtr base;
  GroupPtr group;
  ScwolMorphism projection;
  std::vector<CosetSpace> cosets;  // G / im phi_sigma per base object
  std::vector<ObjId> object_offset;  // first development object over each base object
  std::vector<MorId> morphism_offset;
  // Objects are ordered by (base object, coset id) and morphisms by (base
  // morphism, coset id of im phi_{i(a)}).
  std::vector<std::pair<ObjId, std::uint32_t>> object_info;
  std::vector<std::pair<MorId, std::uint32_t>> morphism_info;
  // Left multiplication: act_objects[g][x], act_morphisms[g][m].
  std::vector<std::vector<ObjId>> act_objects;
  std::vector<std::vector<MorId>> act_morphisms;
};

/// Objects (g im phi_sigma, sigma), morphisms (g im phi_{i(a)}, a) with
/// i = (g K, i(a)) and t = (g phi(a)^-1 K', t(a)). The composite of (x, a)
/// and (y, b) is (y, ab); a mismatch raises CompositionUnderdetermined.
Development build_development(const MorphismToGroup& phi);

/// Closed form: sum over sigma of [G : im phi_sigma], sum over a of
/// [G : im phi_{i(a)}].
std::pair<std::size_t, std::size_t> development_size(const MorphismToGroup& phi);

struct ActionReport {
  Report report;
  std::size_t object_orbits = 0;
  std::size_t morphism_orbits = 0;
  std::vector<std::size_t> stabilizer_orders;  // per development object
};

/// Automorphisms, no inversions, Stab(i(a)) in Stab(a), and orbits in
/// bijection with base objects and morphisms via the projection.
ActionReport check_action(const Development& d);

struct LocalDevelopment {
  struct ObjInfo {
    Star::ObjKind kind;
    MorId base;           // c or b
    std::uint32_t coset;  // coset of psi_c(G_{i(c)}) for upper objects
  };
  struct MorInfo {
    Star::MorKind kind;
    MorId first;
    MorId second;
    std::uint32_t coset;  // coset of psi_{cd} or psi_c where present
  };

  CogPtr complex;
  ObjId gamma = 0;
  ScwolPtr scwol;
  ObjId center = 0;
  std::vector<ObjInfo> objects;
  std::vector<MorInfo> morphisms;

  // Coset spaces of G_gamma by psi_c(G_{i(c)}), one per c with t(c) = gamma.
  std::map<MorId, CosetSpace> upper_cosets;
  std::map<std::pair<MorId, std::uint32_t>, ObjId> upper_object;
  std::map<MorId, ObjId> lower_object;
  std::map<std::tuple<MorId, MorId, std::uint32_t>, MorId> upper_edge;
  std::map<std::pair<MorId, std::uint32_t>, MorId> center_upper;
  std::map<std::tuple<MorId, MorId, std::uint32_t>, MorId> lower_upper;
  std::map<MorId, MorId> lower_center;
  std::map<std::pair<MorId, MorId>, MorId> lower_edge;
};

LocalDevelopment build_local_development(const CogPtr& c, ObjId gamma);

/// Forgets cosets: Y(gamma~) -> Y(gamma). Used to check the tables against
/// the star.
ScwolMorphism local_development_projection(const LocalDevelopment& d, const Star& star);

struct LocalDevMorphism {
  LocalDevelopment source;  // Y(sigma~)
  LocalDevelopment target;  // X(f(sigma)~)
  ScwolMorphism map;        // Phi_sigma
};

/// Phi_sigma for a morphism of complexes of groups. The map is validated as a
/// functor; a failure raises NotAFunctor naming the offending morphism.
LocalDevMorphism build_local_dev_morphism(const CogMorphism& phi, ObjId sigma);

}  // namespace cogkit
