#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linksurg/koszul.hpp"

namespace linksurg {

// The comparison data between the weight-completed and uncompleted duals:
// an A-infinity algebra morphism phi = (phi_1, phi_2) depending on a cutoff
// N >= 4, plus rank-one bimodule morphisms f, g with f g = g f = id.

// (ab)' : drop the last two non-theta letters, keeping the theta flag.
KWord prime(const KWord& a);

// phi_1: identity below the cutoff, zero above (identity off idempotent (0,0)).
std::optional<KWord> bridge_phi1(const KWord& a, int n_cap);
// phi_2(a, b) = (ab)' theta when wt_+(ab) > N >= wt_+(a), wt_+(b); else zero.
std::optional<KWord> bridge_phi2(const KWord& a, const KWord& b, int n_cap);
// phi_j = 0 for j >= 3; this is the public entry point.
KDualElt bridge_phi(int n_cap, const std::vector<KDualElt>& inputs);

// Components of the bimodule morphisms f and g (both given by the same
// formula): f_2(1, a) = a' theta when phi_1(a) = 0 and wt_theta(a) = 0.
std::optional<KWord> bridge_f2(const KWord& a, int n_cap);

struct BridgeReport {
    bool ok = true;
    long long checked = 0;
    std::string counterexample;  // first failing tuple, empty when ok
};

// Exhaustively checks, over all monomial tuples of <= max_inputs inputs and
// weight <= max_weight: the A-infinity morphism relations for phi (including
// curvature compatibility phi_1(mu_0) = mu_0), and f g = g f = id.
BridgeReport verify_ainfty_morphism(int n_cap, int max_inputs, int max_weight);

// All normal-form words of weight <= max_weight (every idempotent pair).
std::vector<KWord> enumerate_words(int max_weight);

}  // namespace linksurg
