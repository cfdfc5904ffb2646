#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "linksurg/coeff.hpp"
#include "linksurg/grading.hpp"

namespace linksurg {

struct MalformedH : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// H-function of a knot: non-increasing steps of 0/1, eventually 0 on the
// right, slope exactly 1 far left. Stored on [smin, smax] and extended by
// those rules.
struct KnotH {
    int smin = 0;
    std::vector<int> values;  // H(smin), ..., H(smax)

    int smax() const { return smin + static_cast<int>(values.size()) - 1; }
    int at(int s) const;
    void validate() const;
};

// H-function of a 2-component L-space link plus its component H-functions.
// s-values live in Z + lk/2 and are handled doubled throughout.
struct HFunction {
    int lk = 0;
    int s1min2 = 0, s2min2 = 0;             // doubled coordinates of table[0][0]
    std::vector<std::vector<int>> table;    // table[i1][i2], s1 = s1min2/2 + i1, ...
    KnotH hk1, hk2;

    int s1max2() const { return s1min2 + 2 * (static_cast<int>(table.size()) - 1); }
    int s2max2() const {
        return s2min2 + 2 * (table.empty() ? 0 : static_cast<int>(table[0].size()) - 1);
    }
    // Extended lookup (doubled coordinates, must be in Z + lk/2).
    int at2(int s1x2, int s2x2) const;
    void validate() const;
};

// Staircase complex over F[W,Z]: even generators x_0, x_2, ..., x_{2n} are
// the minimal monomials (a_i, b_i) of the homology ideal (a strictly
// increasing, b strictly decreasing); odd generator x_{2i+1} sits at the
// lcm bidegree (a_{i+1}, b_i) with d x_{2i+1} = x_{2i} W^{alpha_i} +
// x_{2i+2} Z^{beta_i}. Gradings: gr(x at bidegree (p,q)) = (-2p, -2q) for
// even generators and (-2p+1, -2q+1) for odd ones.
struct Staircase {
    std::vector<std::pair<int, int>> mono;  // even-generator monomials

    int n_odd() const { return static_cast<int>(mono.size()) - 1; }
    int gen_count() const { return 2 * static_cast<int>(mono.size()) - 1; }
    bool is_even(int g) const { return g % 2 == 0; }
    std::pair<int, int> bidegree(int g) const {
        if (is_even(g)) return mono[g / 2];
        return {mono[g / 2 + 1].first, mono[g / 2].second};
    }
    int alpha(int i) const { return mono[i + 1].first - mono[i].first; }
    int beta(int i) const { return mono[i].second - mono[i + 1].second; }
    GradingVector grading(int g) const {
        auto [p, q] = bidegree(g);
        int odd = is_even(g) ? 0 : 1;
        return GradingVector{-4 * p + 2 * odd, -4 * q + 2 * odd, 0, 2 * (q - p)};
    }
    // Is bidegree (p,q) in the homology ideal?
    bool in_ideal(int p, int q) const {
        for (auto [a, b] : mono)
            if (p >= a && q >= b) return true;
        return false;
    }
    void validate() const;
    bool operator==(const Staircase& o) const { return mono == o.mono; }
};

struct NonpositiveExponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The complex with d x_{2i+1} = x_{2i} W^{alpha_i} + x_{2i+2} Z^{beta_i};
// anchored so x_0 has monomial `anchor` (defaults to (0, sum beta)).
Staircase staircase_from_exponents(const std::vector<int>& alphas, const std::vector<int>& betas,
                                   std::optional<std::pair<int, int>> anchor = std::nullopt);

// Row s1 (doubled) of the H-function: minimal monomials of
// { (H(s1,s2), H(s1,s2) + s1 + s2) : s2 }.
Staircase staircase_from_h_row(const HFunction& h, int s1x2);

// Read the knot H-function back off a staircase (Alexander grading s ->
// minimal W-exponent in the ideal at A = s); inverse of row construction
// for single-row data.
KnotH h_from_staircase(const Staircase& s);

// A graded F[W,Z]-module map between staircase complexes: entries
// src -> dst (x) W^i Z^j, with every monomial forced by the grading shift.
struct StairMap {
    int shiftW2 = 0, shiftZ2 = 0;  // doubled (gr_w, gr_z) shift
    struct Entry {
        int src, dst, i, j;
        bool operator==(const Entry& o) const {
            return src == o.src && dst == o.dst && i == o.i && j == o.j;
        }
        bool operator<(const Entry& o) const {
            if (src != o.src) return src < o.src;
            if (dst != o.dst) return dst < o.dst;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::vector<Entry> entries;  // sorted, xor-semantics

    bool is_zero() const { return entries.empty(); }
    void xor_entry(int src, int dst, int i, int j);
    bool operator==(const StairMap& o) const {
        return shiftW2 == o.shiftW2 && shiftZ2 == o.shiftZ2 && entries == o.entries;
    }
};

StairMap stair_add(const StairMap& f, const StairMap& g);
// g after f: f : A -> B, g : B -> C.
StairMap stair_compose(const StairMap& g, const StairMap& f);
// d_B f + f d_A.
StairMap stair_d(const StairMap& f, const Staircase& a, const Staircase& b);
StairMap stair_identity(const Staircase& a);
StairMap stair_u_times(const Staircase& a);  // id (x) U

// Tie-break for the canonical solution: which coefficient letter to
// eliminate first when several chain-level lifts induce the same map on
// homology.
enum class SolveTieBreak { kNone, kPreferLowW, kPreferLowZ };

struct SolveOptions {
    bool require_nonzero_on_homology = false;
    SolveTieBreak tiebreak = SolveTieBreak::kNone;
};

// All chain maps A -> B of the given doubled (gr_w, gr_z) shift form an
// F_2 solution space; returns the canonical representative (see options),
// or nullopt when none (e.g. nonzero-on-homology requested but impossible).
std::optional<StairMap> solve_chain_map(const Staircase& a, const Staircase& b, int shiftW2,
                                        int shiftZ2, const SolveOptions& opts = {});

// A basis of the space of chain maps A -> B with the given shift.
std::vector<StairMap> chain_map_basis(const Staircase& a, const Staircase& b, int shiftW2,
                                      int shiftZ2);

// Solves d(h) = f + g; h has shift (f.shift + (2,2)). Returns nullopt when
// no homotopy exists.
std::optional<StairMap> solve_homotopy(const Staircase& a, const Staircase& b, const StairMap& f,
                                       const StairMap& g);

// Solves d(h) = rhs directly.
std::optional<StairMap> solve_primitive(const Staircase& a, const Staircase& b,
                                        const StairMap& rhs);

// F_2 dimensions (H_0, H_1) of the homology of the complex in the single
// bidegree (p,q) (brute force, used as the exactness/embedding oracle;
// H_1 = 0 everywhere is the free-resolution property).
std::pair<int, int> homology_rank_at(const Staircase& s, int p, int q);

// The induced map on homology of a chain map, as the set of even generators
// whose image class is nonzero; empty means zero on homology.
std::vector<int> homology_support(const StairMap& f, const Staircase& a, const Staircase& b);

Staircase random_staircase(std::mt19937_64& rng, int max_n = 4, int max_exp = 3);

}  // namespace linksurg
