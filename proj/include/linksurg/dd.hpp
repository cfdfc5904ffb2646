#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linksurg/koszul.hpp"

namespace linksurg {

// A generator of a (K^!, K) DD-bimodule. `alg` is the staircase (algebraic)
// grading where meaningful; `boundary` marks window-truncation edges
// (-1 left edge, +1 right edge, 0 interior).
struct Generator {
    std::string id;
    Idem li = Idem::I0;
    Idem ri = Idem::I0;
    GradingVector gr;
    int alg = 0;
    int boundary = 0;
};

// delta^{1,1}(src) contains  left (x) dst (x) right.  Composability:
// left in I_{l(src)} K^! I_{l(dst)},  right in I_{r(dst)} K I_{r(src)}.
struct DDArrow {
    int src = 0;
    int dst = 0;
    KWord left;
    KElt right;
};

// A residual / closure term of the structure relation.
struct DDTerm {
    int src, dst;
    KWord left;
    KElt right;
    bool operator==(const DDTerm& o) const {
        return src == o.src && dst == o.dst && left == o.left && right == o.right;
    }
};

class DDModule {
public:
    const std::vector<Generator>& gens() const { return gens_; }
    const std::vector<DDArrow>& arrows() const { return arrows_; }
    std::vector<DDTerm>& closure() { return closure_; }
    const std::vector<DDTerm>& closure() const { return closure_; }

    int add_gen(Generator g);
    int gen_index(const std::string& id) const;  // -1 when absent
    void set_boundary(int g, int b) { gens_.at(g).boundary = b; }
    // XOR-merges into the arrow set; drops cancelled arrows.
    void add_arrow(int src, int dst, const KWord& left, const KElt& right);
    void sort_arrows();
    // Rebuild without the listed generators (and their incident arrows).
    DDModule without_gens(const std::vector<int>& drop) const;

    bool operator==(const DDModule& o) const;

private:
    std::vector<Generator> gens_;
    std::vector<DDArrow> arrows_;
    std::vector<DDTerm> closure_;
    std::map<std::string, int> index_;
};

enum class BoundaryPolicy { kStrict, kWindowClosure };

struct StructureReport {
    bool ok = true;
    std::vector<DDTerm> residual;          // after closure matching (if requested)
    std::vector<DDTerm> strict_residual;   // raw relation defect
    std::string str(const DDModule& m) const;
};

// Verifies (delta (x) delta) + mu_1-image + curvature  = 0, composing left
// words in path order and right coefficients in reverse path order; the
// curvature term is mu_0 (x) id (x) 1 on generators with left idempotent 1.
// Left words of composites above weight_cap are discarded (weight-completed
// semantics). With kWindowClosure the module's closure certificate is
// cancelled against the raw residual first.
StructureReport check_structure(const DDModule& m, int weight_cap,
                                BoundaryPolicy policy = BoundaryPolicy::kStrict);

// True iff every generator carries exactly the theta|U self-arrow and no
// other arrow is theta-weighted.
bool check_u_equivariance(const DDModule& m);

// A morphism of DD-bimodules: components shaped like arrows between two
// (possibly equal) modules.
struct DDMorphism {
    std::vector<DDTerm> comps;

    void xor_comp(int src, int dst, const KWord& left, const KElt& right);
    bool is_zero() const { return comps.empty(); }
    bool operator==(const DDMorphism& o) const { return comps == o.comps; }
    static DDMorphism identity(const DDModule& m);
};

// g after f (f: M -> N first, then g: N -> P).
DDMorphism compose(const DDMorphism& g, const DDMorphism& f, int weight_cap);
DDMorphism add(const DDMorphism& a, const DDMorphism& b);

// d(f) = delta_N o f + f o delta_M with the arrow composition rules.
DDMorphism morphism_differential(const DDMorphism& f, const DDModule& m, const DDModule& n,
                                 int weight_cap);

struct NotInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonConvergent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TwistResult {
    DDModule twisted;
    DDMorphism iso_fwd;  // 1 + h   : M -> twisted
    DDMorphism iso_bwd;  // (1+h)^-1
    DDMorphism alpha;    // the Maurer-Cartan element d(h)(1+h)^-1
};

// Twists delta by alpha = d(h)(1+h)^-1 (Maurer-Cartan by construction);
// requires the geometric series for (1+h)^-1 to terminate under weight_cap.
TwistResult twist_by_endomorphism(const DDModule& m, const DDMorphism& h, int weight_cap);

// Gaussian elimination of an arrow src->dst labelled 1|1 (unit word, unit
// coefficient). Used by tests as the brute-force reduction oracle.
DDModule dd_cancel_unit_arrow(const DDModule& m, int src, int dst, int weight_cap);

// Strong deformation retract data between (X, d_X) and (C, d_C), where the
// differentials are the unit-left-word parts of the structure maps.
struct SDR {
    DDMorphism pi;   // X -> C
    DDMorphism inc;  // C -> X
    DDMorphism h;    // X -> X
};

struct PreconditionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lambe-Stasheff: given pi inc = id_C and inc pi = id_X + d(Q), returns an
// SDR whose homotopy H = Q' d_X Q', Q' = (1 + inc pi) Q (1 + inc pi),
// satisfies H H = H inc = pi H = 0 and inc pi = id + d(H).
SDR strong_deformation_retract(const DDModule& x, const DDModule& c, const DDMorphism& pi,
                               const DDMorphism& inc, const DDMorphism& q, int weight_cap);

// Homological perturbation: transfers the weight >= 1 part alpha of X's
// structure map through the SDR;
//   beta = sum_n  pi o alpha o (H alpha)^n o inc,
// and the result is (C, d_C + beta). Throws NonConvergent if the series
// fails to terminate under the cap.
DDModule perturb_dd(const DDModule& x, const DDModule& c, const SDR& sdr, int weight_cap);

// Extracts the unit-left-word part of a module's structure map as a morphism
// (the internal differential), and the weight >= 1 part as a morphism.
DDMorphism internal_differential(const DDModule& m);
DDMorphism weighted_part(const DDModule& m);

}  // namespace linksurg
