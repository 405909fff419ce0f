#pragma once

// Complexes of groups over scwols, morphisms between them, morphisms to a
// group, and the coboundary construction.

#include <memory>
#include <vector>

#include "cogkit/group.hpp"
#include "cogkit/scwol.hpp"

namespace cogkit {

struct ComplexOfGroups {
  ScwolPtr base;
  std::vector<GroupPtr> groups;  // G_sigma per object
  std::vector<GroupHom> psi;     // psi_a : G_{i(a)} -> G_{t(a)} per morphism
  std::vector<Elem> twists;      // g_{a,b} in G_{t(a)}, aligned with base->pairs()

  const GroupPtr& group(ObjId x) const { return groups.at(x); }
  Elem twist(MorId a, MorId b) const { return twists[base->pair_index(a, b)]; }
};

using CogPtr = std::shared_ptr<const ComplexOfGroups>;

inline CogPtr share(ComplexOfGroups c) { return std::make_shared<const ComplexOfGroups>(std::move(c)); }

/// Trivial groups everywhere.
ComplexOfGroups trivial_complex(const ScwolPtr& base);

/// Shapes, hom validity, injectivity of psi, twist ranges, cocycle 3(a) and
/// 3(b). Every failure names its morphism, pair or triple.
Report validate_cog(const ComplexOfGroups& c);

struct CogMorphism {
  CogPtr source;  // H(Y)
  CogPtr target;  // G(X)
  ScwolMorphism over;
  std::vector<GroupHom> local;  // phi_sigma : H_sigma -> G_{f(sigma)}
  std::vector<Elem> edge;       // phi(a) in G_{t(f(a))}
};

/// Conditions (1) and (2). The underlying scwol map must be a functor; the
/// caller decides how much non-degeneracy to require.
Report validate_cog_morphism(const CogMorphism& phi);

CogMorphism identity_cog_morphism(const CogPtr& c);

/// phi o psi: sigma -> phi_{g(sigma)} o psi_sigma, a -> phi_{t(g(a))}(psi(a)) phi(g(a)).
CogMorphism compose(const CogMorphism& phi, const CogMorphism& psi);

struct MorphismToGroup {
  CogPtr source;
  GroupPtr target;
  std::vector<GroupHom> local;  // phi_sigma : G_sigma -> G
  std::vector<Elem> edge;       // phi(a) in G
};

Report validate_morphism_to_group(const MorphismToGroup& phi);

/// Least object whose local hom is not injective, if any.
std::optional<ObjId> first_non_injective(const std::vector<GroupHom>& local);

/// chi o phi: sigma -> chi_{f(sigma)} o phi_sigma, a -> chi(phi(a)) chi(f(a)).
MorphismToGroup compose(const CogMorphism& phi, const MorphismToGroup& chi);

struct Coboundary {
  CogPtr complex;    // the new complex
  CogMorphism iso;   // new -> old, phi_sigma = id, phi(a) = g_a^-1
};

/// psi'_a = Ad(g_a^-1) psi_a and g'_{a,b} = g_a^-1 psi_a(g_b^-1) g_{a,b} g_{ab},
/// the unique twist making `iso` satisfy condition (2). g_a lies in G_{t(a)}.
Coboundary coboundary(const CogPtr& c, const std::vector<Elem>& g);

/// Pointwise inverses of a coboundary family, for round trips.
std::vector<Elem> inverse_family(const ComplexOfGroups& c, const std::vector<Elem>& g);

}  // namespace cogkit
