#pragma once

// Immersions of complexes of groups: the algebraic condition (local homs
// injective), the geometric condition (Phi_sigma injective on Y(sigma~)) and
// the edge-wise coset criterion.

#include <optional>
#include <string>
#include <vector>

#include "cogkit/cog.hpp"
#include "cogkit/development.hpp"

namespace cogkit {

struct CosetVerdict {
  ObjId sigma;
  MorId j;  // morphism of the target base with t(j) = f(sigma)
  bool injective;
  std::string witness;  // the colliding cosets when not injective
};

/// For every sigma and every j with some a in f^-1(j), t(a) = sigma: is
/// the map from the disjoint union of H_sigma / psi_a(H_{i(a)}) to
/// G_{f(sigma)} / psi_j(G_{i(j)}), h -> phi_sigma(h) phi(a), injective?
std::vector<CosetVerdict> check_coset_condition(const CogMorphism& phi);

struct ObjectVerdict {
  ObjId sigma;
  bool algebraic;       // phi_sigma injective
  bool geometric;       // Phi_sigma injective on objects and morphisms
  bool upper_link;      // Phi_sigma injective on V(Lk_sigma~)
  bool coset;           // all coset verdicts at sigma
  std::string witness;  // first failure, if any
};

struct ImmersionReport {
  std::vector<ObjectVerdict> objects;
  std::vector<CosetVerdict> cosets;
  bool immersion = true;
  bool lemma_agrees = true;  // upper_link == coset at every sigma
  std::string metric = "not evaluated";
};

ImmersionReport check_immersion(const CogMorphism& phi);

struct DevelopabilityVerdict {
  bool developable = false;       // all phi_sigma injective
  std::optional<ObjId> witness;   // first non-injective object
  std::optional<Development> development;
};

/// All phi_sigma injective certifies developability; the development is built
/// as the witness action. A false verdict leaves developability undetermined.
DevelopabilityVerdict check_developability_candidate(const MorphismToGroup& phi);

}  // namespace cogkit
