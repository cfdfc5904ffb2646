#include "linksurg/bimodule.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace linksurg {

Staircase knot_staircase(const KnotH& h) {
    std::set<std::pair<int, int>> monos;
    for (int s = h.smin - 1; s <= h.smax() + 1; ++s) {
        int a = h.at(s);
        int b = a + s;
        if (b < 0) throw MalformedH("negative Z-exponent in knot ideal");
        monos.insert({a, b});
    }
    std::vector<std::pair<int, int>> sorted(monos.begin(), monos.end()), minimal;
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

namespace {

KElt r0(int i, int j) { return KElt::from_r0(R0Elt::monomial(i, j)); }
KElt r1(int k, int m) { return KElt::from_r1(R1Elt::monomial(k, m)); }

struct Builder {
    const LinkData& link;
    const HFunction& h;
    int lk;
    int lo2, hi2;    // window columns, doubled
    int elo2, ehi2;  // extended (halo) columns, doubled

    Staircase s2c;  // the second-component staircase S = CFK(K_2)

    std::map<int, Staircase> col;          // s1x2 -> staircase
    std::map<int, std::vector<int>> xg;    // s1x2 -> generator indices in m
    std::map<int, std::vector<int>> ug;    // T-index -> generator indices
    std::map<int, int> yg, eg;             // y-/e-index -> generator index
    std::map<int, StairMap> lz, lw, ls, lt;

    DDModule m;

    int t_of(int s1x2) const { return (s1x2 - lk) / 2; }  // L_s target column
    int ylo, yhi, tlo, thi, eelo, eehi;                   // block windows (extended)

    explicit Builder(const LinkData& l) : link(l), h(l.h), lk(l.h.lk), lo2(l.lo2), hi2(l.hi2) {
        if (lo2 > hi2 || (lo2 - lk) % 2 != 0 || (hi2 - lk) % 2 != 0)
            throw BuildError(BuildError::Kind::kBadInput, "window outside Z + lk/2");
        h.validate();
        elo2 = lo2 - 2;
        ehi2 = hi2 + 2;
        int al = std::abs(lk);
        ylo = (lo2 - al) / 2 - 1;
        yhi = (hi2 + al) / 2 + 1;
        tlo = (lo2 - lk) / 2 - 1;
        thi = (hi2 - lk) / 2 + 1;
        eelo = std::min(ylo, std::min(tlo, tlo + lk));
        eehi = std::max(yhi, std::max(thi, thi + lk));
        s2c = knot_staircase(h.hk2);
        for (int s = elo2; s <= ehi2; s += 2) col.emplace(s, staircase_from_h_row(h, s));
        check_window_stability();
    }

    void check_window_stability() {
        // Left-stable columns are W-translates of their right neighbour,
        // right-stable ones Z-translates of their left neighbour.
        auto translated = [](const Staircase& base, int da, int db) {
            Staircase t = base;
            for (auto& [a, b] : t.mono) {
                a += da;
                b += db;
            }
            return t;
        };
        if (!(col.at(elo2) == translated(col.at(lo2), 1, 0)) ||
            !(col.at(ehi2) == translated(col.at(hi2), 0, 1)))
            throw BuildError(BuildError::Kind::kBadInput,
                             "window boundary columns must be in the stable range");
    }

    static std::string s1_name(int s1x2) { return half_str(s1x2); }

    void add_generators() {
        for (int s = elo2; s <= ehi2; s += 2) {
            const Staircase& c = col.at(s);
            std::vector<int> idx;
            for (int g = 0; g < c.gen_count(); ++g) {
                auto [p, q] = c.bidegree(g);
                Generator gen;
                gen.id = "x[" + s1_name(s) + "]_" + std::to_string(g);
                gen.li = Idem::I0;
                gen.ri = Idem::I0;
                gen.gr = c.grading(g);
                gen.gr.a1x2 = s;
                gen.gr.a2x2 = 2 * (q - p) - s;
                gen.alg = c.is_even(g) ? 0 : 1;
                idx.push_back(m.add_gen(gen));
            }
            xg[s] = idx;
        }
        for (int t = tlo; t <= thi; ++t) {
            std::vector<int> idx;
            for (int g = 0; g < s2c.gen_count(); ++g) {
                auto [p, q] = s2c.bidegree(g);
                Generator gen;
                gen.id = "u[" + std::to_string(t) + "]_" + std::to_string(g);
                gen.li = Idem::I1;
                gen.ri = Idem::I0;
                gen.gr = s2c.grading(g);
                gen.gr.a1x2 = 2 * t;
                gen.gr.a2x2 = 2 * (q - p);
                gen.alg = s2c.is_even(g) ? 0 : 1;
                idx.push_back(m.add_gen(gen));
            }
            ug[t] = idx;
        }
        for (int y = ylo; y <= yhi; ++y) {
            Generator gen;
            gen.id = "y[" + std::to_string(y) + "]";
            gen.li = Idem::I0;
            gen.ri = Idem::I1;
            gen.gr = GradingVector{-4 * h.hk1.at(y), -4 * h.hk1.at(y) - 4 * y, 2 * y, 0};
            yg[y] = m.add_gen(gen);
        }
        for (int e = eelo; e <= eehi; ++e) {
            Generator gen;
            gen.id = "e[" + std::to_string(e) + "]";
            gen.li = Idem::I1;
            gen.ri = Idem::I1;
            gen.gr = GradingVector{0, 0, 2 * e, 0};
            eg[e] = m.add_gen(gen);
        }
    }

    void add_theta_loops() {
        for (size_t g = 0; g < m.gens().size(); ++g) {
            const Generator& gen = m.gens()[g];
            KElt u = gen.ri == Idem::I0 ? r0(1, 1) : r1(1, 0);
            m.add_arrow(static_cast<int>(g), static_cast<int>(g), KWord::theta_at(gen.li), u);
        }
    }

    void install_stair_map(const StairMap& f, const std::vector<int>& src,
                           const std::vector<int>& dst, const KWord& word) {
        for (const auto& e : f.entries)
            m.add_arrow(src.at(e.src), dst.at(e.dst), word, r0(e.i, e.j));
    }

    StairMap solve_or_throw(std::optional<StairMap> f, const char* what) {
        if (!f) throw BuildError(BuildError::Kind::kSolverFailure, what);
        return *f;
    }

    void build_idem00() {
        KWord wl = KWord::letter('w'), zl = KWord::letter('z');
        for (int s = elo2; s <= ehi2; s += 2) {
            const Staircase& c = col.at(s);
            for (int i = 0; i < c.n_odd(); ++i) {
                m.add_arrow(xg[s][2 * i + 1], xg[s][2 * i], KWord::unit(Idem::I0),
                            r0(c.alpha(i), 0));
                m.add_arrow(xg[s][2 * i + 1], xg[s][2 * i + 2], KWord::unit(Idem::I0),
                            r0(0, c.beta(i)));
            }
        }
        // L_z : C_s -> C_{s+1}, shift (0,-2); L_w : C_s -> C_{s-1}, shift (-2,0).
        for (int s = elo2; s <= hi2; s += 2) {
            SolveOptions o{true, SolveTieBreak::kPreferLowZ};
            lz[s] = solve_or_throw(solve_chain_map(col.at(s), col.at(s + 2), 0, -4, o), "L_z");
            install_stair_map(lz[s], xg[s], xg[s + 2], zl);
        }
        for (int s = lo2; s <= ehi2; s += 2) {
            SolveOptions o{true, SolveTieBreak::kPreferLowW};
            lw[s] = solve_or_throw(solve_chain_map(col.at(s), col.at(s - 2), -4, 0, o), "L_w");
            install_stair_map(lw[s], xg[s], xg[s - 2], wl);
        }
        // d(L_zw) = L_w L_z + U, d(L_wz) = L_z L_w + U on each window column.
        for (int s = lo2; s <= hi2; s += 2) {
            const Staircase& c = col.at(s);
            StairMap rzw = stair_add(stair_compose(lw.at(s + 2), lz.at(s)), stair_u_times(c));
            StairMap rwz = stair_add(stair_compose(lz.at(s - 2), lw.at(s)), stair_u_times(c));
            StairMap hzw = solve_or_throw(solve_primitive(c, c, rzw), "L_zw");
            StairMap hwz = solve_or_throw(solve_primitive(c, c, rwz), "L_wz");
            install_stair_map(hzw, xg[s], xg[s], *KWord::make(Idem::I0, Idem::I0, "zw", false));
            install_stair_map(hwz, xg[s], xg[s], *KWord::make(Idem::I0, Idem::I0, "wz", false));
        }
    }

    void build_idem10() {
        for (int t = tlo; t <= thi; ++t) {
            for (int i = 0; i < s2c.n_odd(); ++i) {
                m.add_arrow(ug[t][2 * i + 1], ug[t][2 * i], KWord::unit(Idem::I1),
                            r0(s2c.alpha(i), 0));
                m.add_arrow(ug[t][2 * i + 1], ug[t][2 * i + 2], KWord::unit(Idem::I1),
                            r0(0, s2c.beta(i)));
            }
            for (int g = 0; g < s2c.gen_count(); ++g) {
                if (t + 1 <= thi)
                    m.add_arrow(ug[t][g], ug[t + 1][g], KWord::letter('P'), r0(0, 0));
                if (t - 1 >= tlo)
                    m.add_arrow(ug[t][g], ug[t - 1][g], KWord::letter('M'), r0(0, 0));
            }
        }
    }

    void build_idem01() {
        for (int y = ylo; y <= yhi; ++y) {
            int eta = h.hk1.at(y) - h.hk1.at(y + 1);
            if (y + 1 <= yhi)
                m.add_arrow(yg.at(y), yg.at(y + 1), KWord::letter('z'), r1(eta, 0));
            int etad = h.hk1.at(y - 1) - h.hk1.at(y);
            if (y - 1 >= ylo)
                m.add_arrow(yg.at(y), yg.at(y - 1), KWord::letter('w'), r1(1 - etad, 0));
        }
    }

    void build_idem11() {
        for (int e = eelo; e <= eehi; ++e) {
            if (e + 1 <= eehi) m.add_arrow(eg[e], eg[e + 1], KWord::letter('P'), r1(0, 0));
            if (e - 1 >= eelo) m.add_arrow(eg[e], eg[e - 1], KWord::letter('M'), r1(0, 0));
        }
    }

    void build_len1_00_to_10() {
        // L_s shift (0, 2 s1 + lk), L_t shift (-2 s1 + lk, 0), both to column
        // t = s1 - lk/2; L_zs, L_wt one column over.
        for (int s = elo2; s <= ehi2; s += 2) {
            SolveOptions os{true, SolveTieBreak::kPreferLowZ};
            SolveOptions ot{true, SolveTieBreak::kPreferLowW};
            ls[s] = solve_or_throw(
                solve_chain_map(col.at(s), s2c, 0, 2 * s + 2 * lk, os), "L_s");
            lt[s] = solve_or_throw(
                solve_chain_map(col.at(s), s2c, -2 * s + 2 * lk, 0, ot), "L_t");
            int t = t_of(s);
            if (t >= tlo && t <= thi) {
                install_stair_map(ls[s], xg[s], ug[t], KWord::letter('s'));
                install_stair_map(lt[s], xg[s], ug[t], KWord::letter('t'));
            }
        }
        for (int s = lo2; s <= hi2; s += 2) {
            const Staircase& c = col.at(s);
            StairMap rzs = stair_add(stair_compose(ls.at(s + 2), lz.at(s)), ls.at(s));
            StairMap rwt = stair_add(stair_compose(lt.at(s - 2), lw.at(s)), lt.at(s));
            StairMap hzs = solve_or_throw(solve_primitive(c, s2c, rzs), "L_zs");
            StairMap hwt = solve_or_throw(solve_primitive(c, s2c, rwt), "L_wt");
            int t = t_of(s);
            if (t + 1 <= thi)
                install_stair_map(hzs, xg[s], ug[t + 1],
                                  *KWord::make(Idem::I0, Idem::I1, "zs", false));
            if (t - 1 >= tlo)
                install_stair_map(hwt, xg[s], ug[t - 1],
                                  *KWord::make(Idem::I0, Idem::I1, "wt", false));
        }
    }

    void build_len1_00_to_01() {
        // R^sigma to y_{s1 - lk/2}, R^tau to y_{s1 + lk/2}; on an even
        // generator with monomial (a,b), s2 = (b-a) - s1:
        //   R^sigma: U^(a - H_K1(s1 - lk/2)) T^(s2 - lk/2) sigma
        //   R^tau:   U^(b - H_K1(y) - y) T^(s2 - lk/2) tau, y = s1 + lk/2.
        for (int s = elo2; s <= ehi2; s += 2) {
            const Staircase& c = col.at(s);
            int ys = (s - lk) / 2, yt = (s + lk) / 2;
            for (size_t k = 0; k < c.mono.size(); ++k) {
                auto [a, b] = c.mono[k];
                int s2x2 = 2 * (b - a) - s;
                int j = (s2x2 - lk) / 2;
                int is = a - h.hk1.at(ys);
                int it = b - h.hk1.at(yt) - yt;
                if (is < 0 || it < 0)
                    throw BuildError(BuildError::Kind::kBadInput,
                                     "H-function incompatible with H_K1");
                if (ys >= ylo && ys <= yhi)
                    m.add_arrow(xg[s][2 * k], yg.at(ys), KWord::unit(Idem::I0),
                                KElt::from_sigma_tau(R1Elt::monomial(is, j), R1Elt::zero()));
                if (yt >= ylo && yt <= yhi)
                    m.add_arrow(xg[s][2 * k], yg.at(yt), KWord::unit(Idem::I0),
                                KElt::from_sigma_tau(R1Elt::zero(), R1Elt::monomial(it, j)));
            }
        }
    }

    void build_len1_10_to_11() {
        for (int t = tlo; t <= thi; ++t)
            for (size_t k = 0; k < s2c.mono.size(); ++k) {
                auto [a, b] = s2c.mono[k];
                if (t >= eelo && t <= eehi)
                    m.add_arrow(ug[t][2 * k], eg.at(t), KWord::unit(Idem::I1),
                                KElt::from_sigma_tau(R1Elt::monomial(a, b - a), R1Elt::zero()));
                if (t + lk >= eelo && t + lk <= eehi)
                    m.add_arrow(ug[t][2 * k], eg.at(t + lk), KWord::unit(Idem::I1),
                                KElt::from_sigma_tau(R1Elt::zero(), R1Elt::monomial(b, b - a)));
            }
    }

    void build_len1_01_to_11() {
        for (int y = ylo; y <= yhi; ++y) {
            if (y < eelo || y > eehi) continue;
            m.add_arrow(yg.at(y), eg.at(y), KWord::letter('s'), r1(h.hk1.at(y), 0));
            m.add_arrow(yg.at(y), eg.at(y), KWord::letter('t'), r1(h.hk1.at(y) + y, lk));
        }
    }

    // Window membership by block index ranges; halo generators fall outside.
    bool in_window(int gi) const {
        auto between = [](int v, int a, int b) { return v >= a && v <= b; };
        const Generator& g = m.gens()[gi];
        int a1 = g.gr.a1x2;
        if (g.li == Idem::I0 && g.ri == Idem::I0) return between(a1, lo2, hi2);
        if (g.li == Idem::I1 && g.ri == Idem::I0) return between(a1 / 2, tlo + 1, thi - 1);
        if (g.li == Idem::I0 && g.ri == Idem::I1) return between(a1 / 2, ylo + 1, yhi - 1);
        return between(a1 / 2, eelo + 1, eehi - 1);
    }

    void mark_boundaries_and_truncate() {
        std::vector<int> ring;
        std::vector<bool> win(m.gens().size(), false);
        for (size_t g = 0; g < m.gens().size(); ++g) {
            if (in_window(static_cast<int>(g)))
                win[g] = true;
            else
                ring.push_back(static_cast<int>(g));
        }
        // Closure certificate: two-step paths through ring generators with
        // both ends in the window.
        std::map<std::tuple<int, int, KWord>, KElt> cert;
        for (const auto& a : m.arrows()) {
            if (!win[a.src] || win[a.dst]) continue;
            for (const auto& b : m.arrows()) {
                if (b.src != a.dst || !win[b.dst]) continue;
                auto wprod = kw_mul(a.left, b.left);
                if (!wprod) continue;
                KElt rprod = k_mul(b.right, a.right);
                if (rprod.is_zero()) continue;
                auto key = std::make_tuple(a.src, b.dst, *wprod);
                auto it = cert.find(key);
                if (it == cert.end())
                    cert.emplace(key, rprod);
                else {
                    it->second = it->second + rprod;
                    if (it->second.is_zero()) cert.erase(it);
                }
            }
        }
        for (const auto& [k, v] : cert)
            m.closure().push_back(DDTerm{std::get<0>(k), std::get<1>(k), std::get<2>(k), v});
        DDModule out = m.without_gens(ring);
        m = std::move(out);
        // Boundary flags on the surviving edge columns.
        for (size_t g = 0; g < m.gens().size(); ++g) {
            const Generator& gen = m.gens()[g];
            int a1 = gen.gr.a1x2;
            int lo = 0, hi = 0;
            if (gen.li == Idem::I0 && gen.ri == Idem::I0) lo = lo2, hi = hi2;
            else if (gen.li == Idem::I1 && gen.ri == Idem::I0) lo = 2 * (tlo + 1), hi = 2 * (thi - 1);
            else if (gen.li == Idem::I0 && gen.ri == Idem::I1) lo = 2 * (ylo + 1), hi = 2 * (yhi - 1);
            else lo = 2 * (eelo + 1), hi = 2 * (eehi - 1);
            if (a1 == lo) m.set_boundary(static_cast<int>(g), -1);
            if (a1 == hi) m.set_boundary(static_cast<int>(g), +1);
        }
    }

    DDModule run() {
        add_generators();
        add_theta_loops();
        build_idem00();
        build_idem10();
        build_idem01();
        build_idem11();
        build_len1_00_to_10();
        build_len1_00_to_01();
        build_len1_10_to_11();
        build_len1_01_to_11();
        mark_boundaries_and_truncate();
        m.sort_arrows();
        return m;
    }
};

}  // namespace

DDModule build_candidate_bimodule(const LinkData& link) { return Builder(link).run(); }

DDModule build_idem_block(const LinkData& link, Idem li, Idem ri) {
    DDModule full = build_candidate_bimodule(link);
    std::vector<int> drop;
    for (size_t g = 0; g < full.gens().size(); ++g)
        if (!(full.gens()[g].li == li && full.gens()[g].ri == ri))
            drop.push_back(static_cast<int>(g));
    return full.without_gens(drop);
}

}  // namespace linksurg
