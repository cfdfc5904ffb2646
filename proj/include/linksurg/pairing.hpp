#pragma once

#include "linksurg/dd.hpp"
#include "linksurg/typed.hpp"

namespace linksurg {

struct PairError : std::runtime_error {
    enum class Kind { kDepthExceeded, kUnsupportedCoefficient };
    Kind kind;
    PairError(Kind k, const std::string& w) : std::runtime_error(w), kind(k) {}
};

// One induced module action: m_{n+1}(inputs..., src) = dst (x) coeff.
struct DualAction {
    int src, dst;
    KElt coeff;
};

// The dual-basis actions of a DD-bimodule Y: the action on an input sequence
// of K generators (consumption order; each of W, Z, U, T, T^-1, sigma, tau)
// is carried by the single arrows of Y whose K^!-word is the product of the
// dual letters (theta slots commute into any position). The empty sequence
// returns the unit-word (internal differential) arrows.
std::vector<DualAction> dual_action(const DDModule& y, const std::vector<KElt>& inputs);

// Pairs a finite, strictly unital type-D module X over K against a
// U-equivariant DD-bimodule Y: generators are x|y with idem(x) = l(y);
// the differential matches X's emission paths against Y's dual actions,
// truncated at the U-adic precision and path depth.
TypeDModule pair_modules(const TypeDModule& x, const DDModule& y, UPrecision prec,
                         int depth_cap);

}  // namespace linksurg
