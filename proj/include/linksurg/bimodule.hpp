#pragma once

#include "linksurg/dd.hpp"
#include "linksurg/staircase.hpp"

namespace linksurg {

// A 2-component L-space link presented by its H-function, with a finite
// column window [lo2/2, hi2/2] (doubled, in Z + lk/2). Both window edges
// must lie in the stable range (single-generator columns one step beyond).
struct LinkData {
    HFunction h;
    int lo2 = 0;
    int hi2 = 0;
};

struct BuildError : std::runtime_error {
    enum class Kind { kBadInput, kSolverFailure };
    Kind kind;
    BuildError(Kind k, const std::string& w) : std::runtime_error(w), kind(k) {}
};

// The staircase complex of a knot from its H-function (minimal monomials of
// { (H(s), H(s)+s) }).
Staircase knot_staircase(const KnotH& h);

// The full candidate link-surgery bimodule on the window: all four
// idempotent blocks, all length-1 blocks, empty length-2 block, theta|U
// self-arrows everywhere, plus the window-closure certificate recording the
// relation terms contributed by the dropped neighbour columns.
DDModule build_candidate_bimodule(const LinkData& link);

// Single blocks of the same construction (generators of one idempotent pair
// with the arrows staying inside it); used by tests and diagnostics.
DDModule build_idem_block(const LinkData& link, Idem li, Idem ri);
inline DDModule build_idem00(const LinkData& l) { return build_idem_block(l, Idem::I0, Idem::I0); }
inline DDModule build_idem10(const LinkData& l) { return build_idem_block(l, Idem::I1, Idem::I0); }
inline DDModule build_idem01(const LinkData& l) { return build_idem_block(l, Idem::I0, Idem::I1); }
inline DDModule build_idem11(const LinkData& l) { return build_idem_block(l, Idem::I1, Idem::I1); }

// The assembled bimodule (all length-1 blocks installed, length-2 empty).
inline DDModule build_length1_maps(const LinkData& l) { return build_candidate_bimodule(l); }

}  // namespace linksurg
