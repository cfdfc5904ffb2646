#include "linksurg/dd.hpp"

#include <algorithm>
#include <sstream>

namespace linksurg {

namespace {

struct TermKey {
    int src, dst;
    KWord left;
    bool operator<(const TermKey& o) const {
        if (src != o.src) return src < o.src;
        if (dst != o.dst) return dst < o.dst;
        return left < o.left;
    }
};

using TermMap = std::map<TermKey, KElt>;

void acc(TermMap& m, int src, int dst, const KWord& left, const KElt& right) {
    if (right.is_zero()) return;
    KElt& slot = m[TermKey{src, dst, left}];
    slot = slot + right;
    if (slot.is_zero()) m.erase(TermKey{src, dst, left});
}

std::vector<DDTerm> to_terms(const TermMap& m) {
    std::vector<DDTerm> out;
    out.reserve(m.size());
    for (const auto& [k, v] : m) out.push_back(DDTerm{k.src, k.dst, k.left, v});
    return out;
}

// Compose two labelled steps x --(a1|r1)--> y --(a2|r2)--> z: the left word
// is a1 a2 (path order in K^!), the right coefficient r2 r1 (reverse order
// in K).
std::optional<std::pair<KWord, KElt>> compose_step(const KWord& a1, const KElt& r1,
                                                   const KWord& a2, const KElt& r2,
                                                   int weight_cap) {
    auto w = kw_mul(a1, a2);
    if (!w) return std::nullopt;
    if (w->wt() > weight_cap) return std::nullopt;
    KElt r = k_mul(r2, r1);
    if (r.is_zero()) return std::nullopt;
    return std::make_pair(*w, r);
}

}  // namespace

int DDModule::add_gen(Generator g) {
    if (index_.count(g.id)) throw std::invalid_argument("duplicate generator id: " + g.id);
    int idx = static_cast<int>(gens_.size());
    index_[g.id] = idx;
    gens_.push_back(std::move(g));
    return idx;
}

int DDModule::gen_index(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

void DDModule::add_arrow(int src, int dst, const KWord& left, const KElt& right) {
    if (right.is_zero()) return;
    const Generator& s = gens_.at(src);
    const Generator& d = gens_.at(dst);
    if (left.l != s.li || left.r != d.li) throw std::invalid_argument("left word idempotents");
    if (!right.pure_block(d.ri, s.ri)) throw std::invalid_argument("right coefficient block");
    for (auto it = arrows_.begin(); it != arrows_.end(); ++it) {
        if (it->src == src && it->dst == dst && it->left == left) {
            it->right = it->right + right;
            if (it->right.is_zero()) arrows_.erase(it);
            return;
        }
    }
    arrows_.push_back(DDArrow{src, dst, left, right});
}

void DDModule::sort_arrows() {
    std::sort(arrows_.begin(), arrows_.end(), [](const DDArrow& a, const DDArrow& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.dst != b.dst) return a.dst < b.dst;
        return a.left < b.left;
    });
}

DDModule DDModule::without_gens(const std::vector<int>& drop) const {
    std::vector<bool> gone(gens_.size(), false);
    for (int i : drop) gone[i] = true;
    DDModule out;
    std::vector<int> remap(gens_.size(), -1);
    for (size_t i = 0; i < gens_.size(); ++i)
        if (!gone[i]) remap[i] = out.add_gen(gens_[i]);
    for (const auto& a : arrows_)
        if (remap[a.src] >= 0 && remap[a.dst] >= 0)
            out.add_arrow(remap[a.src], remap[a.dst], a.left, a.right);
    for (const auto& t : closure_)
        if (remap[t.src] >= 0 && remap[t.dst] >= 0)
            out.closure_.push_back(DDTerm{remap[t.src], remap[t.dst], t.left, t.right});
    out.sort_arrows();
    return out;
}

bool DDModule::operator==(const DDModule& o) const {
    if (gens_.size() != o.gens_.size() || arrows_.size() != o.arrows_.size()) return false;
    for (size_t i = 0; i < gens_.size(); ++i) {
        const Generator &a = gens_[i], &b = o.gens_[i];
        if (a.id != b.id || a.li != b.li || a.ri != b.ri || a.gr != b.gr) return false;
    }
    DDModule lhs = *this, rhs = o;
    lhs.sort_arrows();
    rhs.sort_arrows();
    for (size_t i = 0; i < lhs.arrows_.size(); ++i) {
        const DDArrow &a = lhs.arrows_[i], &b = rhs.arrows_[i];
        if (a.src != b.src || a.dst != b.dst || !(a.left == b.left) || a.right != b.right)
            return false;
    }
    return true;
}

std::string StructureReport::str(const DDModule& m) const {
    std::ostringstream os;
    for (const auto& t : residual)
        os << m.gens()[t.src].id << " -> " << m.gens()[t.dst].id << "  " << t.left.str() << "|"
           << t.right.str() << "\n";
    return os.str();
}

StructureReport check_structure(const DDModule& m, int weight_cap, BoundaryPolicy policy) {
    TermMap res;
    const auto& arrows = m.arrows();
    // Group arrows by source for the composition pass.
    std::map<int, std::vector<const DDArrow*>> by_src;
    for (const auto& a : arrows) by_src[a.src].push_back(&a);

    for (const auto& a : arrows) {
        auto it = by_src.find(a.dst);
        if (it != by_src.end())
            for (const DDArrow* b : it->second)
                if (auto c = compose_step(a.left, a.right, b->left, b->right, weight_cap))
                    acc(res, a.src, b->dst, c->first, c->second);
        for (const auto& dw : kw_mu1(a.left))
            if (dw.wt() <= weight_cap) acc(res, a.src, a.dst, dw, a.right);
    }
    const KDualElt curvature = mu0(Idem::I1);
    for (size_t g = 0; g < m.gens().size(); ++g) {
        if (m.gens()[g].li != Idem::I1) continue;
        KElt one = KElt::unit(m.gens()[g].ri);
        for (const auto& w : curvature.words())
            if (w.wt() <= weight_cap) acc(res, static_cast<int>(g), static_cast<int>(g), w, one);
    }

    StructureReport rep;
    rep.strict_residual = to_terms(res);
    if (policy == BoundaryPolicy::kWindowClosure)
        for (const auto& t : m.closure())
            if (t.left.wt() <= weight_cap) acc(res, t.src, t.dst, t.left, t.right);
    rep.residual = to_terms(res);
    rep.ok = rep.residual.empty();
    return rep;
}

bool check_u_equivariance(const DDModule& m) {
    std::vector<bool> has_theta_loop(m.gens().size(), false);
    for (const auto& a : m.arrows()) {
        if (!a.left.theta) continue;
        bool is_theta_u = a.src == a.dst && a.left.body.empty();
        if (is_theta_u) {
            Idem ri = m.gens()[a.src].ri;
            KElt u = ri == Idem::I0 ? KElt::from_r0(R0Elt::u_power(1))
                                    : KElt::from_r1(R1Elt::monomial(1, 0));
            if (a.right != u) return false;
            has_theta_loop[a.src] = true;
        } else {
            return false;  // some other theta-weighted component
        }
    }
    for (bool b : has_theta_loop)
        if (!b) return false;
    return true;
}

void DDMorphism::xor_comp(int src, int dst, const KWord& left, const KElt& right) {
    if (right.is_zero()) return;
    for (auto it = comps.begin(); it != comps.end(); ++it) {
        if (it->src == src && it->dst == dst && it->left == left) {
            it->right = it->right + right;
            if (it->right.is_zero()) comps.erase(it);
            return;
        }
    }
    comps.push_back(DDTerm{src, dst, left, right});
}

DDMorphism DDMorphism::identity(const DDModule& m) {
    DDMorphism f;
    for (size_t i = 0; i < m.gens().size(); ++i)
        f.xor_comp(static_cast<int>(i), static_cast<int>(i), KWord::unit(m.gens()[i].li),
                   KElt::unit(m.gens()[i].ri));
    return f;
}

DDMorphism compose(const DDMorphism& g, const DDMorphism& f, int weight_cap) {
    DDMorphism out;
    for (const auto& a : f.comps)
        for (const auto& b : g.comps) {
            if (a.dst != b.src) continue;
            if (auto c = compose_step(a.left, a.right, b.left, b.right, weight_cap))
                out.xor_comp(a.src, b.dst, c->first, c->second);
        }
    return out;
}

DDMorphism add(const DDMorphism& a, const DDMorphism& b) {
    DDMorphism out = a;
    for (const auto& t : b.comps) out.xor_comp(t.src, t.dst, t.left, t.right);
    return out;
}

DDMorphism morphism_differential(const DDMorphism& f, const DDModule& m, const DDModule& n,
                                 int weight_cap) {
    DDMorphism out;
    for (const auto& c : f.comps) {
        for (const auto& b : n.arrows()) {
            if (b.src != c.dst) continue;
            if (auto t = compose_step(c.left, c.right, b.left, b.right, weight_cap))
                out.xor_comp(c.src, b.dst, t->first, t->second);
        }
        for (const auto& a : m.arrows()) {
            if (a.dst != c.src) continue;
            if (auto t = compose_step(a.left, a.right, c.left, c.right, weight_cap))
                out.xor_comp(a.src, c.dst, t->first, t->second);
        }
        // mu_1 of the component's own left word (the algebra is dg).
        for (const auto& dw : kw_mu1(c.left))
            if (dw.wt() <= weight_cap) out.xor_comp(c.src, c.dst, dw, c.right);
    }
    return out;
}

DDMorphism internal_differential(const DDModule& m) {
    DDMorphism d;
    for (const auto& a : m.arrows())
        if (a.left.is_unit()) d.xor_comp(a.src, a.dst, a.left, a.right);
    return d;
}

DDMorphism weighted_part(const DDModule& m) {
    DDMorphism d;
    for (const auto& a : m.arrows())
        if (!a.left.is_unit()) d.xor_comp(a.src, a.dst, a.left, a.right);
    return d;
}

TwistResult twist_by_endomorphism(const DDModule& m, const DDMorphism& h, int weight_cap) {
    // (1+h)^-1 = sum h^k; require the series to terminate under the cap.
    DDMorphism id = DDMorphism::identity(m);
    DDMorphism inv = id;
    DDMorphism fwd = add(id, h);
    DDMorphism pw = h;
    int guard = 2 * weight_cap + static_cast<int>(m.gens().size()) + 2;
    int k = 0;
    while (!pw.is_zero()) {
        inv = add(inv, pw);
        pw = compose(pw, h, weight_cap);
        if (++k > guard) throw NotInvertible("1+h has no terminating inverse under the cap");
    }
    DDMorphism dh = morphism_differential(h, m, m, weight_cap);
    DDMorphism alpha = compose(dh, inv, weight_cap);

    TwistResult out;
    out.twisted = m;
    for (const auto& t : alpha.comps) out.twisted.add_arrow(t.src, t.dst, t.left, t.right);
    out.twisted.sort_arrows();
    out.iso_fwd = fwd;
    out.iso_bwd = inv;
    out.alpha = alpha;
    return out;
}

DDModule dd_cancel_unit_arrow(const DDModule& m, int src, int dst, int weight_cap) {
    bool has_unit = false;
    std::vector<std::pair<KWord, KElt>> weighted;  // the rest of the src->dst entry
    for (const auto& a : m.arrows()) {
        if (a.src != src || a.dst != dst) continue;
        if (a.left.is_unit() && a.right == KElt::unit(m.gens()[src].ri))
            has_unit = true;
        else
            weighted.emplace_back(a.left, a.right);
    }
    if (!has_unit) throw NotAUnit("no 1|1 arrow to cancel");

    // Invert the full entry 1 + N by the geometric series in the arrow
    // algebra (path-ordered words, reversed coefficients).
    std::vector<std::pair<KWord, KElt>> inv{{KWord::unit(m.gens()[src].li),
                                             KElt::unit(m.gens()[src].ri)}};
    std::vector<std::pair<KWord, KElt>> pw = weighted;
    int guard = 2 * weight_cap + 4;
    while (!pw.empty() && guard-- > 0) {
        inv.insert(inv.end(), pw.begin(), pw.end());
        std::vector<std::pair<KWord, KElt>> next;
        for (const auto& [w1, c1] : pw)
            for (const auto& [w2, c2] : weighted)
                if (auto c = compose_step(w1, c1, w2, c2, weight_cap)) next.push_back(*c);
        pw = std::move(next);
    }
    if (!pw.empty()) throw NotAUnit("src->dst entry has no terminating inverse");

    DDModule out = m.without_gens({src, dst});
    // Zig-zag: a -> dst, entry^-1, src -> b.
    for (const auto& p : m.arrows()) {
        if (p.dst != dst || p.src == src) continue;
        for (const auto& q : m.arrows()) {
            if (q.src != src || q.dst == dst) continue;
            for (const auto& [wi, ci] : inv) {
                auto half = compose_step(p.left, p.right, wi, ci, weight_cap);
                if (!half) continue;
                if (auto c = compose_step(half->first, half->second, q.left, q.right,
                                          weight_cap)) {
                    int a = out.gen_index(m.gens()[p.src].id);
                    int b = out.gen_index(m.gens()[q.dst].id);
                    if (a >= 0 && b >= 0) out.add_arrow(a, b, c->first, c->second);
                }
            }
        }
    }
    out.sort_arrows();
    return out;
}

SDR strong_deformation_retract(const DDModule& x, const DDModule& c, const DDMorphism& pi,
                               const DDMorphism& inc, const DDMorphism& q, int weight_cap) {
    DDMorphism dx = internal_differential(x);
    // d of an endomorphism of (X, d_X).
    auto d_endo = [&](const DDMorphism& f) {
        return add(compose(dx, f, weight_cap), compose(f, dx, weight_cap));
    };

    DDMorphism pi_inc = compose(pi, inc, weight_cap);  // inc then pi : C -> C
    if (!(pi_inc == DDMorphism::identity(c))) throw PreconditionFailed("pi o inc != id");
    DDMorphism inc_pi = compose(inc, pi, weight_cap);  // pi then inc : X -> X
    DDMorphism defect = add(add(inc_pi, DDMorphism::identity(x)), d_endo(q));
    if (!defect.is_zero()) throw PreconditionFailed("inc o pi != id + d(Q)");

    DDMorphism one_plus = add(DDMorphism::identity(x), inc_pi);
    DDMorphism qp = compose(one_plus, compose(q, one_plus, weight_cap), weight_cap);
    DDMorphism h = compose(qp, compose(dx, qp, weight_cap), weight_cap);
    return SDR{pi, inc, h};
}

DDModule perturb_dd(const DDModule& x, const DDModule& c, const SDR& sdr, int weight_cap) {
    DDMorphism alpha = weighted_part(x);
    // The small model starts from the bare internal differential of C; the
    // transferred series recreates the whole weighted structure.
    DDModule out;
    for (const auto& g : c.gens()) out.add_gen(g);
    for (const auto& a : c.arrows())
        if (a.left.is_unit()) out.add_arrow(a.src, a.dst, a.left, a.right);
    // beta = sum_n pi alpha (H alpha)^n inc
    DDMorphism stage = compose(alpha, sdr.inc, weight_cap);  // inc then alpha
    int guard = 4 * weight_cap + 8;
    int n = 0;
    while (!stage.is_zero()) {
        DDMorphism piece = compose(sdr.pi, stage, weight_cap);
        for (const auto& t : piece.comps) out.add_arrow(t.src, t.dst, t.left, t.right);
        stage = compose(alpha, compose(sdr.h, stage, weight_cap), weight_cap);
        if (++n > guard) throw NonConvergent("perturbation series does not terminate");
    }
    out.sort_arrows();
    return out;
}

}  // namespace linksurg
