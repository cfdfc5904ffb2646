#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linksurg/surgery_algebra.hpp"

namespace linksurg {

// A right type-D module over K: finite generators split by idempotent,
// delta^1(src) = sum dst (x) coeff with coeff in I_{idem(dst)} K I_{idem(src)}.
struct DGen {
    std::string id;
    Idem idem = Idem::I0;
    GradingVector gr;
};

struct DArrow {
    int src = 0;
    int dst = 0;
    KElt coef;
};

class TypeDModule {
public:
    const std::vector<DGen>& gens() const { return gens_; }
    const std::vector<DArrow>& arrows() const { return arrows_; }

    int add_gen(DGen g);
    int gen_index(const std::string& id) const;
    void add_arrow(int src, int dst, const KElt& coef);  // xor-merge
    void sort_arrows();
    void truncate(int uprec);
    TypeDModule without_gens(const std::vector<int>& drop) const;

private:
    std::vector<DGen> gens_;
    std::vector<DArrow> arrows_;
};

// delta^2 = 0 at the given U-adic precision; returns offending terms.
struct DStructureReport {
    bool ok = true;
    std::vector<DArrow> residual;
};
DStructureReport check_d_structure(const TypeDModule& m, int uprec);

// Gaussian elimination of the arrow src -> dst whose coefficient is a unit
// at the given precision: every a -> dst (p), src -> b (q) contributes
// a -> b with q u^-1 p. Throws NotAUnit.
TypeDModule cancel_arrow(const TypeDModule& m, int src, int dst, UPrecision prec);

// Repeatedly cancels unit arrows: coefficient exactly 1 first, then general
// units, scanning in generator-id order. Deterministic.
TypeDModule reduce(const TypeDModule& m, UPrecision prec);

TypeDModule direct_sum(const TypeDModule& a, const TypeDModule& b);

// Searches for a grading-respecting generator bijection together with an
// invertible change of basis identifying the two arrow sets at the given
// precision. Desk scale (generator-grading classes of size <= 3).
enum class IsoResult { kIsomorphic, kDistinct, kInconclusive };
IsoResult iso_check(const TypeDModule& a, const TypeDModule& b, UPrecision prec);

// The 0-framed surgery module X_0(K) of a staircase knot with even-generator
// monomials (a_i, b_i): the staircase differential plus arrows
// x_{2i} -> e (x) (U^{a_i} T^{b_i - a_i} sigma + U^{b_i} T^{b_i - a_i} tau).
TypeDModule knot_surgery_module(const std::vector<std::pair<int, int>>& even_monomials,
                                const std::string& prefix);

}  // namespace linksurg
