#pragma once

// The local complex of groups L(Y(gamma)) over the star of gamma, with its
// canonical morphisms Theta (to G_gamma) and Sigma (to the ambient complex).

#include <vector>

#include "cogkit/cog.hpp"
#include "cogkit/scwol.hpp"

namespace cogkit {

struct LocalCog {
  Star star;
  CogPtr cog;     // over star.scwol
  CogPtr parent;  // the ambient complex
  ObjId gamma = 0;
};

/// Groups: G_{i(c)} on upper objects, G_gamma on gamma and on lower objects.
/// Homs: psi_d on (c,d), psi_c on gamma*c and b*c, identities otherwise.
/// Twists: g_{d1,d2} on ((c1,d1),(c2,d2)), g_{c,d} on (gamma*c,(c,d)) and
/// (b*c,(c,d)), trivial otherwise.
LocalCog build_local_cog(const CogPtr& c, ObjId gamma);

/// Theta: L(Y(gamma)) -> G_gamma.
MorphismToGroup build_theta(const LocalCog& l);

/// Sigma: L(Y(gamma)) -> G(Y) over the star projection.
CogMorphism build_sigma(const LocalCog& l);

/// The tree {b*gamma} u {gamma*c}. Throws TreeNotSpanning if it fails to span.
std::vector<MorId> star_tree(const LocalCog& l);

}  // namespace cogkit
