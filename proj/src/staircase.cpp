#include "linksurg/staircase.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "linksurg/gf2.hpp"

namespace linksurg {

int KnotH::at(int s) const {
    if (values.empty()) throw MalformedH("empty knot H-function");
    if (s >= smax()) return values.back();
    if (s < smin) return values.front() + (smin - s);
    return values[s - smin];
}

void KnotH::validate() const {
    if (values.empty()) throw MalformedH("empty knot H-function");
    if (values.back() != 0) throw MalformedH("knot H-function must stabilize at 0");
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0) throw MalformedH("negative knot H-value");
        if (i + 1 < values.size()) {
            int step = values[i] - values[i + 1];
            if (step < 0 || step > 1) throw MalformedH("knot H-function one-step violation");
        }
    }
}

int HFunction::at2(int s1x2, int s2x2) const {
    if ((s1x2 - lk) % 2 != 0 || (s2x2 - lk) % 2 != 0)
        throw MalformedH("s-value outside Z + lk/2");
    long long add = 0;
    if (s1x2 < s1min2) {
        add += (s1min2 - s1x2) / 2;
        s1x2 = s1min2;
    }
    if (s2x2 < s2min2) {
        add += (s2min2 - s2x2) / 2;
        s2x2 = s2min2;
    }
    if (s1x2 > s1max2()) s1x2 = s1max2();
    if (s2x2 > s2max2()) s2x2 = s2max2();
    return table[(s1x2 - s1min2) / 2][(s2x2 - s2min2) / 2] + static_cast<int>(add);
}

void HFunction::validate() const {
    if (table.empty() || table[0].empty()) throw MalformedH("empty H table");
    for (const auto& row : table)
        if (row.size() != table[0].size()) throw MalformedH("ragged H table");
    hk1.validate();
    hk2.validate();
    if ((s1min2 - lk) % 2 != 0 || (s2min2 - lk) % 2 != 0)
        throw MalformedH("table origin outside Z + lk/2");
    for (int s1 = s1min2 - 2; s1 <= s1max2() + 2; s1 += 2)
        for (int s2 = s2min2 - 2; s2 <= s2max2() + 2; s2 += 2) {
            int h = at2(s1, s2);
            if (h < 0) throw MalformedH("negative H-value");
            int d1 = h - at2(s1 + 2, s2);
            int d2 = h - at2(s1, s2 + 2);
            if (d1 < 0 || d1 > 1 || d2 < 0 || d2 > 1)
                throw MalformedH("H-function one-step violation");
            if (h + (s1 + s2) / 2 < 0) throw MalformedH("negative Alexander-shifted exponent");
        }
    // Stable edges match the component H-functions: the top row is H_{K1}
    // (shifted by lk/2), the right column is H_{K2}.
    for (int s1 = s1min2 - 2; s1 <= s1max2() + 2; s1 += 2)
        if (at2(s1, s2max2()) != hk1.at((s1 - lk) / 2))
            throw MalformedH("top row does not match H_{K1}");
    for (int s2 = s2min2 - 2; s2 <= s2max2() + 2; s2 += 2)
        if (at2(s1max2(), s2) != hk2.at((s2 - lk) / 2))
            throw MalformedH("right column does not match H_{K2}");
}

void Staircase::validate() const {
    if (mono.empty()) throw MalformedH("staircase needs at least one generator");
    for (size_t i = 0; i + 1 < mono.size(); ++i) {
        if (alpha(static_cast<int>(i)) <= 0 || beta(static_cast<int>(i)) <= 0)
            throw NonpositiveExponent("staircase exponents must be positive");
    }
    for (auto [a, b] : mono)
        if (a < 0 || b < 0) throw MalformedH("negative staircase monomial");
}

Staircase staircase_from_exponents(const std::vector<int>& alphas, const std::vector<int>& betas,
                                   std::optional<std::pair<int, int>> anchor) {
    if (alphas.size() != betas.size()) throw NonpositiveExponent("alpha/beta length mismatch");
    for (int a : alphas)
        if (a <= 0) throw NonpositiveExponent("alpha must be positive");
    for (int b : betas)
        if (b <= 0) throw NonpositiveExponent("beta must be positive");
    int bsum = 0;
    for (int b : betas) bsum += b;
    std::pair<int, int> at = anchor.value_or(std::pair<int, int>{0, bsum});
    Staircase s;
    s.mono.push_back(at);
    for (size_t i = 0; i < alphas.size(); ++i) {
        at.first += alphas[i];
        at.second -= betas[i];
        s.mono.push_back(at);
    }
    s.validate();
    return s;
}

Staircase staircase_from_h_row(const HFunction& h, int s1x2) {
    std::set<std::pair<int, int>> monos;
    for (int s2x2 = h.s2min2 - 2; s2x2 <= h.s2max2() + 2; s2x2 += 2) {
        int a = h.at2(s1x2, s2x2);
        int b = a + (s1x2 + s2x2) / 2;
        if (b < 0) throw MalformedH("negative Z-exponent in row ideal");
        monos.insert({a, b});
    }
    // Minimal generators: scan a ascending, keep strict b-drops.
    std::vector<std::pair<int, int>> sorted(monos.begin(), monos.end());
    std::vector<std::pair<int, int>> minimal;
    for (auto [a, b] : sorted) {
        bool dominated = false;
        for (auto [a2, b2] : sorted)
            if ((a2 < a && b2 <= b) || (a2 <= a && b2 < b)) dominated = true;
        if (!dominated) minimal.push_back({a, b});
    }
    Staircase s;
    s.mono = minimal;
    s.validate();
    return s;
}

KnotH h_from_staircase(const Staircase& s) {
    // H(A) = min W-exponent among ideal monomials of Alexander grading A.
    int amax = s.mono.front().second - s.mono.front().first;  // top generator
    int amin = s.mono.back().second - s.mono.back().first;
    KnotH h;
    h.smin = amin;
    for (int al = amin; al <= amax + 1; ++al) {
        int best = -1;
        for (auto [a, b] : s.mono) {
            // monomial (a,b) * W^i Z^j has Alexander (b+j) - (a+i); minimize a+i.
            // For target al: need (b - a) + (j - i) = al with i,j >= 0.
            int diff = (b - a) - al;
            int cand = diff > 0 ? a + diff : a;  // multiply by W^diff (or Z^-diff)
            if (best < 0 || cand < best) best = cand;
        }
        h.values.push_back(best);
    }
    h.validate();
    return h;
}

void StairMap::xor_entry(int src, int dst, int i, int j) {
    detail::xor_term(entries, Entry{src, dst, i, j});
}

StairMap stair_add(const StairMap& f, const StairMap& g) {
    StairMap r = f;
    if (r.entries.empty() && !g.entries.empty()) {
        r.shiftW2 = g.shiftW2;
        r.shiftZ2 = g.shiftZ2;
    }
    for (const auto& e : g.entries) r.xor_entry(e.src, e.dst, e.i, e.j);
    return r;
}

StairMap stair_compose(const StairMap& g, const StairMap& f) {
    StairMap r;
    r.shiftW2 = f.shiftW2 + g.shiftW2;
    r.shiftZ2 = f.shiftZ2 + g.shiftZ2;
    for (const auto& a : f.entries)
        for (const auto& b : g.entries)
            if (a.dst == b.src) r.xor_entry(a.src, b.dst, a.i + b.i, a.j + b.j);
    return r;
}

namespace {

// Differential of a staircase as a StairMap (shift (-2,-2) doubled).
StairMap differential(const Staircase& s) {
    StairMap d;
    d.shiftW2 = -2;
    d.shiftZ2 = -2;
    for (int i = 0; i < s.n_odd(); ++i) {
        d.xor_entry(2 * i + 1, 2 * i, s.alpha(i), 0);
        d.xor_entry(2 * i + 1, 2 * i + 2, 0, s.beta(i));
    }
    return d;
}

}  // namespace

StairMap stair_d(const StairMap& f, const Staircase& a, const Staircase& b) {
    StairMap r = stair_add(stair_compose(differential(b), f), stair_compose(f, differential(a)));
    r.shiftW2 = f.shiftW2 - 2;
    r.shiftZ2 = f.shiftZ2 - 2;
    return r;
}

StairMap stair_identity(const Staircase& a) {
    StairMap r;
    for (int g = 0; g < a.gen_count(); ++g) r.xor_entry(g, g, 0, 0);
    return r;
}

StairMap stair_u_times(const Staircase& a) {
    StairMap r;
    r.shiftW2 = -4;
    r.shiftZ2 = -4;
    for (int g = 0; g < a.gen_count(); ++g) r.xor_entry(g, g, 1, 1);
    return r;
}

namespace {

struct Unknown {
    int src, dst, i, j;
};

// Enumerate the grading-forced unknowns of a map A -> B with the given shift.
std::vector<Unknown> unknowns_for(const Staircase& a, const Staircase& b, int shiftW2,
                                  int shiftZ2, SolveTieBreak tb) {
    std::vector<Unknown> u;
    for (int s = 0; s < a.gen_count(); ++s)
        for (int d = 0; d < b.gen_count(); ++d) {
            GradingVector gs = a.grading(s), gd = b.grading(d);
            int mw = gs.grw2 + shiftW2 - gd.grw2;
            int mz = gs.grz2 + shiftZ2 - gd.grz2;
            if (mw > 0 || mz > 0 || mw % 4 != 0 || mz % 4 != 0) continue;
            u.push_back(Unknown{s, d, -mw / 4, -mz / 4});
        }
    auto key = [&](const Unknown& x) {
        switch (tb) {
            case SolveTieBreak::kPreferLowZ: return std::tuple(x.src, -x.j, x.dst, x.i);
            case SolveTieBreak::kPreferLowW: return std::tuple(x.src, -x.i, x.dst, x.j);
            default: return std::tuple(x.src, x.dst, x.i, x.j);
        }
    };
    std::sort(u.begin(), u.end(), [&](const Unknown& x, const Unknown& y) { return key(x) < key(y); });
    return u;
}

// The chain-map condition d_B f + f d_A = 0 as a homogeneous F_2 system over
// the unknowns; equations are indexed by (src in A, dst in B).
gf2::BitMatrix chain_system(const Staircase& a, const Staircase& b,
                            const std::vector<Unknown>& u) {
    StairMap da = differential(a), db = differential(b);
    std::map<std::pair<int, int>, std::vector<std::size_t>> eq;
    for (std::size_t k = 0; k < u.size(); ++k) {
        for (const auto& e : db.entries)
            if (e.src == u[k].dst) eq[{u[k].src, e.dst}].push_back(k);
        for (const auto& e : da.entries)
            if (e.dst == u[k].src) eq[{e.src, u[k].dst}].push_back(k);
    }
    gf2::BitMatrix m(eq.size(), u.size());
    std::size_t r = 0;
    for (const auto& [key, ks] : eq) {
        for (std::size_t k : ks) m.flip(r, k);
        ++r;
    }
    return m;
}

StairMap from_bits(const std::vector<Unknown>& u, const gf2::BitVec& x, int shiftW2,
                   int shiftZ2) {
    StairMap f;
    f.shiftW2 = shiftW2;
    f.shiftZ2 = shiftZ2;
    for (std::size_t k = 0; k < u.size(); ++k)
        if (x.get(k)) f.xor_entry(u[k].src, u[k].dst, u[k].i, u[k].j);
    return f;
}

}  // namespace

std::vector<int> homology_support(const StairMap& f, const Staircase& a, const Staircase& b) {
    (void)b;
    std::vector<int> out;
    for (int s = 0; s < a.gen_count(); s += 2) {
        int parity = 0;
        for (const auto& e : f.entries)
            if (e.src == s && b.is_even(e.dst)) parity ^= 1;
        if (parity) out.push_back(s);
    }
    return out;
}

std::vector<StairMap> chain_map_basis(const Staircase& a, const Staircase& b, int shiftW2,
                                      int shiftZ2) {
    auto u = unknowns_for(a, b, shiftW2, shiftZ2, SolveTieBreak::kNone);
    auto sys = chain_system(a, b, u);
    std::vector<StairMap> out;
    for (const auto& v : gf2::nullspace(sys)) out.push_back(from_bits(u, v, shiftW2, shiftZ2));
    return out;
}

std::optional<StairMap> solve_chain_map(const Staircase& a, const Staircase& b, int shiftW2,
                                        int shiftZ2, const SolveOptions& opts) {
    auto u = unknowns_for(a, b, shiftW2, shiftZ2, opts.tiebreak);
    auto sys = chain_system(a, b, u);
    auto basis = gf2::nullspace(sys);
    if (!opts.require_nonzero_on_homology) {
        // Canonical zero solution (the least element of the solution space).
        return from_bits(u, gf2::BitVec(u.size()), shiftW2, shiftZ2);
    }
    // phi_s(f) = parity of even->even entries out of even source s; a
    // solution induces a nonzero homology map iff some phi_s != 0. phi is
    // linear, so the zero-on-homology solutions are the kernel of the
    // (even sources) x (basis) pairing matrix.
    std::size_t ne = static_cast<std::size_t>((a.gen_count() + 1) / 2);
    gf2::BitMatrix pairing(ne, basis.size());
    bool any = false;
    for (std::size_t col = 0; col < basis.size(); ++col)
        for (int s : homology_support(from_bits(u, basis[col], shiftW2, shiftZ2), a, b)) {
            pairing.flip(static_cast<std::size_t>(s / 2), col);
            any = true;
        }
    if (!any) return std::nullopt;
    std::vector<gf2::BitVec> zero_homology;
    for (const auto& combo : gf2::nullspace(pairing)) {
        gf2::BitVec v(u.size());
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (combo.get(k)) v.xor_in(basis[k]);
        zero_homology.push_back(std::move(v));
    }
    std::optional<gf2::BitVec> seed;
    for (const auto& v : basis)
        if (!homology_support(from_bits(u, v, shiftW2, shiftZ2), a, b).empty()) {
            seed = v;
            break;
        }
    if (!seed) return std::nullopt;
    gf2::BitVec canon = gf2::reduce_mod(*seed, zero_homology);
    return from_bits(u, canon, shiftW2, shiftZ2);
}

std::optional<StairMap> solve_primitive(const Staircase& a, const Staircase& b,
                                        const StairMap& rhs) {
    int hw = rhs.shiftW2 + 2, hz = rhs.shiftZ2 + 2;
    // Homogeneity guard: every rhs entry must carry its grading-forced monomial.
    for (const auto& e : rhs.entries) {
        int mw = a.grading(e.src).grw2 + rhs.shiftW2 - b.grading(e.dst).grw2;
        int mz = a.grading(e.src).grz2 + rhs.shiftZ2 - b.grading(e.dst).grz2;
        if (mw != -4 * e.i || mz != -4 * e.j) return std::nullopt;
    }
    auto u = unknowns_for(a, b, hw, hz, SolveTieBreak::kNone);
    // d(h) entries land in the rhs grading; equations over (src, dst) pairs.
    StairMap da = differential(a), db = differential(b);
    std::map<std::pair<int, int>, std::pair<std::vector<std::size_t>, int>> eq;
    for (std::size_t k = 0; k < u.size(); ++k) {
        for (const auto& e : db.entries)
            if (e.src == u[k].dst) eq[{u[k].src, e.dst}].first.push_back(k);
        for (const auto& e : da.entries)
            if (e.dst == u[k].src) eq[{e.src, u[k].dst}].first.push_back(k);
    }
    for (const auto& e : rhs.entries) eq[{e.src, e.dst}].second ^= 1;
    gf2::BitMatrix m(eq.size(), u.size());
    gf2::BitVec bvec(eq.size());
    std::size_t r = 0;
    for (const auto& [key, row] : eq) {
        for (std::size_t k : row.first) m.flip(r, k);
        if (row.second) bvec.set(r, true);
        ++r;
    }
    gf2::BitVec x;
    if (!gf2::solve(m, bvec, x)) return std::nullopt;
    return from_bits(u, x, hw, hz);
}

std::optional<StairMap> solve_homotopy(const Staircase& a, const Staircase& b, const StairMap& f,
                                       const StairMap& g) {
    return solve_primitive(a, b, stair_add(f, g));
}

std::pair<int, int> homology_rank_at(const Staircase& s, int p, int q) {
    std::vector<int> even, odd;
    for (int g = 0; g < s.gen_count(); ++g) {
        auto [a, b] = s.bidegree(g);
        if (a <= p && b <= q) (s.is_even(g) ? even : odd).push_back(g);
    }
    gf2::BitMatrix d(odd.size(), even.size());
    StairMap dm = differential(s);
    for (std::size_t r = 0; r < odd.size(); ++r)
        for (const auto& e : dm.entries)
            if (e.src == odd[r])
                for (std::size_t c = 0; c < even.size(); ++c)
                    if (even[c] == e.dst) d.flip(r, c);
    int rk = static_cast<int>(gf2::rank(d));
    return {static_cast<int>(even.size()) - rk, static_cast<int>(odd.size()) - rk};
}

Staircase random_staircase(std::mt19937_64& rng, int max_n, int max_exp) {
    std::uniform_int_distribution<int> nd(0, max_n), ed(1, max_exp), od(0, 2);
    int n = nd(rng);
    std::vector<int> alphas(n), betas(n);
    for (int i = 0; i < n; ++i) alphas[i] = ed(rng);
    for (int i = 0; i < n; ++i) betas[i] = ed(rng);
    int bsum = 0;
    for (int b : betas) bsum += b;
    return staircase_from_exponents(alphas, betas,
                                    std::pair<int, int>{od(rng), bsum + od(rng)});
}

}  // namespace linksurg
