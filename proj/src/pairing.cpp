#include "linksurg/pairing.hpp"

#include <algorithm>
#include <functional>

namespace linksurg {

namespace {

// Match a sequence of dual letter codes against a K^!-word: the non-theta
// codes must spell the body in order, and exactly wt_theta codes are 'h'.
bool letters_match(const std::vector<char>& codes, const KWord& w) {
    std::string body;
    int thetas = 0;
    for (char c : codes) {
        if (c == 'h')
            ++thetas;
        else
            body += c;
    }
    return thetas == (w.theta ? 1 : 0) && body == w.body;
}

}  // namespace

std::vector<DualAction> dual_action(const DDModule& y, const std::vector<KElt>& inputs) {
    std::vector<DualAction> out;
    if (inputs.empty()) {
        for (const auto& a : y.arrows())
            if (a.left.is_unit()) out.push_back(DualAction{a.src, a.dst, a.right});
        return out;
    }
    std::vector<char> codes;
    for (const auto& b : inputs) {
        auto c = dual_letter_of(b);
        if (!c)
            throw PairError(PairError::Kind::kUnsupportedCoefficient,
                            "input is not a dual-basis generator: " + b.str());
        codes.push_back(*c);
    }
    for (const auto& a : y.arrows())
        if (letters_match(codes, a.left)) out.push_back(DualAction{a.src, a.dst, a.right});
    return out;
}

namespace {

// Split an arrow coefficient of X into its dual-basis letter monomials plus
// an optional unit; anything else is outside the guaranteed pairing domain.
struct Emission {
    char code;  // dual letter, or '1' for the algebra unit
};

std::vector<Emission> emissions_of(const KElt& coef) {
    std::vector<Emission> out;
    auto split = [&](auto terms, auto mono_of) {
        for (const auto& t : terms) {
            KElt m = mono_of(t);
            if (m.b00.is_one() || m.b11.is_one()) {
                out.push_back(Emission{'1'});
                continue;
            }
            auto c = dual_letter_of(m);
            if (!c)
                throw PairError(PairError::Kind::kUnsupportedCoefficient,
                                "arrow coefficient outside the letter domain: " + m.str());
            out.push_back(Emission{*c});
        }
    };
    split(coef.b00.terms(), [](const R0Elt::Term& t) {
        return KElt::from_r0(R0Elt::monomial(t.first, t.second));
    });
    split(coef.b11.terms(), [](const R1Elt::Term& t) {
        return KElt::from_r1(R1Elt::monomial(t.first, t.second));
    });
    for (const auto& t : coef.sig.terms()) {
        if (t != R1Elt::Term{0, 0})
            throw PairError(PairError::Kind::kUnsupportedCoefficient,
                            "sigma coefficient outside the letter domain");
        out.push_back(Emission{'s'});
    }
    for (const auto& t : coef.tau.terms()) {
        if (t != R1Elt::Term{0, 0})
            throw PairError(PairError::Kind::kUnsupportedCoefficient,
                            "tau coefficient outside the letter domain");
        out.push_back(Emission{'t'});
    }
    return out;
}

}  // namespace

TypeDModule pair_modules(const TypeDModule& x, const DDModule& y, UPrecision prec,
                         int depth_cap) {
    TypeDModule out;
    std::vector<std::vector<int>> pg(x.gens().size(),
                                     std::vector<int>(y.gens().size(), -1));
    for (size_t xi = 0; xi < x.gens().size(); ++xi)
        for (size_t yi = 0; yi < y.gens().size(); ++yi) {
            if (x.gens()[xi].idem != y.gens()[yi].li) continue;
            DGen g;
            g.id = x.gens()[xi].id + "|" + y.gens()[yi].id;
            g.idem = y.gens()[yi].ri;
            g.gr = x.gens()[xi].gr + y.gens()[yi].gr;
            pg[xi][yi] = out.add_gen(g);
        }

    // Index Y's arrows by (source, word) for the path walk.
    std::vector<std::vector<const DDArrow*>> ybysrc(y.gens().size());
    for (const auto& a : y.arrows()) ybysrc[a.src].push_back(&a);

    for (size_t xi = 0; xi < x.gens().size(); ++xi)
        for (size_t yi = 0; yi < y.gens().size(); ++yi) {
            if (pg[xi][yi] < 0) continue;
            // Internal part (no inputs consumed).
            for (const DDArrow* a : ybysrc[yi])
                if (a->left.is_unit() && pg[xi][a->dst] >= 0)
                    out.add_arrow(pg[xi][yi], pg[xi][a->dst],
                                  k_truncated(a->right, prec.n));

            // Walk X emission paths; consume one Y-arrow's word per path.
            // State: current X node, position in the target word's body,
            // theta consumed flag.
            for (const DDArrow* ya : ybysrc[yi]) {
                if (ya->left.is_unit()) continue;
                const KWord& w = ya->left;
                std::function<void(int, size_t, bool, int)> walk = [&](int xcur, size_t pos,
                                                                       bool th, int depth) {
                    if (pos == w.body.size() && th == w.theta) {
                        if (pg[xcur][ya->dst] >= 0)
                            out.add_arrow(pg[xi][yi], pg[xcur][ya->dst],
                                          k_truncated(ya->right, prec.n));
                        return;
                    }
                    for (const auto& xa : x.arrows()) {
                        if (xa.src != xcur) continue;
                        for (const Emission& em : emissions_of(xa.coef)) {
                            if (em.code == '1') continue;  // strict unitality
                            bool theta_step = em.code == 'h' && w.theta && !th;
                            bool body_step = em.code != 'h' && pos < w.body.size() &&
                                             em.code == w.body[pos];
                            if (!theta_step && !body_step) continue;
                            if (depth + 1 > depth_cap)
                                throw PairError(PairError::Kind::kDepthExceeded,
                                                "pairing path depth exceeded");
                            walk(xa.dst, theta_step ? pos : pos + 1, th || theta_step,
                                 depth + 1);
                        }
                    }
                };
                walk(static_cast<int>(xi), 0, false, 0);
            }

            // Strictly unital action of unit emissions: m_2(1, y) = y.
            for (const auto& xa : x.arrows()) {
                if (xa.src != static_cast<int>(xi)) continue;
                for (const Emission& em : emissions_of(xa.coef))
                    if (em.code == '1' && pg[xa.dst][yi] >= 0)
                        out.add_arrow(pg[xi][yi], pg[xa.dst][yi],
                                      KElt::unit(out.gens()[pg[xi][yi]].idem));
            }
        }

    // Drop generators that pair nothing? No: keep the full tensor basis.
    out.truncate(prec.n);
    out.sort_arrows();
    return out;
}

}  // namespace linksurg
