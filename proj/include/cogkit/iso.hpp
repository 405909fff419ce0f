#pragma once

// Isomorphism testing for scwols.
//
// A scwol is encoded as a colored incidence graph with one node per object,
// morphism and composable pair; morphism nodes point at i(a) and t(a), pair
// nodes at a, b and ab. Isomorphisms of scwols are exactly the color- and
// label-preserving isomorphisms of this graph. The search is
// individualization/refinement over the disjoint union of both graphs.

#include <cstddef>
#include <optional>
#include <vector>

#include "cogkit/scwol.hpp"

namespace cogkit {

inline constexpr std::size_t kDefaultSearchBudget = 1'000'000;

struct ScwolIso {
  std::vector<ObjId> on_objects;
  std::vector<MorId> on_morphisms;
  std::size_t search_nodes = 0;
};

/// A witness or nullopt (definitively non-isomorphic). Throws
/// SearchBudgetExceeded when more than `budget` search nodes are visited.
std::optional<ScwolIso> scwol_isomorphic(const Scwol& a, const Scwol& b, std::size_t budget = kDefaultSearchBudget);

/// Checks that `iso` is a bijection commuting with i, t and composition.
Report check_scwol_iso(const Scwol& a, const Scwol& b, const ScwolIso& iso);

}  // namespace cogkit
