#include "linksurg/koszul.hpp"

#include <algorithm>

namespace linksurg {

namespace {

bool alternating(const std::string& body, char a, char b) {
    for (size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c != a && c != b) return false;
        if (i > 0 && body[i - 1] == c) return false;
    }
    return true;
}

}  // namespace

KWord KWord::letter(char c) {
    switch (c) {
        case 'w':
        case 'z':
            return KWord{Idem::I0, Idem::I0, std::string(1, c), false};
        case 'P':
        case 'M':
            return KWord{Idem::I1, Idem::I1, std::string(1, c), false};
        case 's':
        case 't':
            return KWord{Idem::I0, Idem::I1, std::string(1, c), false};
        default:
            throw std::invalid_argument("bad K^! letter");
    }
}

std::optional<KWord> KWord::make(Idem l, Idem r, std::string body, bool theta) {
    KWord w{l, r, std::move(body), theta};
    if (!w.valid()) return std::nullopt;
    return w;
}

bool KWord::valid() const {
    if (l == Idem::I1 && r == Idem::I0) return false;  // the (1,0) block of K^! is zero
    if (l == Idem::I0 && r == Idem::I0) return alternating(body, 'w', 'z');
    if (l == Idem::I1 && r == Idem::I1) return alternating(body, 'P', 'M');
    return body == "s" || body == "zs" || body == "t" || body == "wt";
}

std::string KWord::str() const {
    if (body.empty() && !theta) return "1";
    std::string s;
    for (char c : body) {
        switch (c) {
            case 'P': s += "\xcf\x86+"; break;  // phi
            case 'M': s += "\xcf\x86-"; break;
            default: s += c;
        }
    }
    if (theta) s += "\xce\xb8";
    return s;
}

std::optional<KWord> KWord::parse(const std::string& s) { return parse(s, Idem::I0); }

std::optional<KWord> KWord::parse(const std::string& s, Idem idem_hint) {
    std::string body;
    bool theta = false;
    size_t i = 0;
    if (s == "1") i = s.size();
    while (i < s.size()) {
        if (theta) return std::nullopt;  // theta must come last
        char c = s[i];
        if (c == 'w' || c == 'z' || c == 's' || c == 't') {
            body += c;
            ++i;
        } else if (s.compare(i, 2, "\xcf\x86") == 0 && i + 2 < s.size()) {
            body += (s[i + 2] == '+') ? 'P' : 'M';
            if (s[i + 2] != '+' && s[i + 2] != '-') return std::nullopt;
            i += 3;
        } else if (s.compare(i, 2, "\xce\xb8") == 0) {
            theta = true;
            i += 2;
        } else {
            return std::nullopt;
        }
    }
    Idem l = idem_hint, r = idem_hint;
    for (char c : body) {
        if (c == 'w' || c == 'z') l = Idem::I0;
        if (c == 'P' || c == 'M') r = Idem::I1;
        if (c == 's' || c == 't') l = Idem::I0, r = Idem::I1;
    }
    if (!body.empty() && (body.front() == 'P' || body.front() == 'M')) l = Idem::I1;
    if (!body.empty() && (body.back() == 'w' || body.back() == 'z')) r = Idem::I0;
    return make(l, r, body, theta);
}

std::optional<KWord> kw_mul(const KWord& a, const KWord& b) {
    if (a.r != b.l) return std::nullopt;
    if (a.theta && b.theta) return std::nullopt;  // theta^2 = 0
    bool theta = a.theta || b.theta;
    // (0,1) x (1,1): rewrite s phi_+ = zs and t phi_- = wt; anything longer dies.
    if (a.l == Idem::I0 && a.r == Idem::I1 && !b.body.empty()) {
        if (b.body.size() > 1) return std::nullopt;
        if (a.body == "s" && b.body == "P") return KWord::make(Idem::I0, Idem::I1, "zs", theta);
        if (a.body == "t" && b.body == "M") return KWord::make(Idem::I0, Idem::I1, "wt", theta);
        return std::nullopt;
    }
    KWord w{a.l, b.r, a.body + b.body, theta};
    if (!w.valid()) return std::nullopt;
    return w;
}

std::vector<KWord> kw_mu1(const KWord& a) {
    std::vector<KWord> out;
    if (!a.theta || a.l != Idem::I0 || a.r != Idem::I0) return out;
    // mu_1(u theta) = u wz + u zw; at most one (both for u = empty) alternates.
    for (const char* tail : {"wz", "zw"}) {
        auto w = KWord::make(Idem::I0, Idem::I0, a.body + tail, false);
        if (w) out.push_back(*w);
    }
    return out;
}

KDualElt KDualElt::from_word(const KWord& w) {
    KDualElt e(w.l, w.r);
    e.w_.push_back(w);
    return e;
}

void KDualElt::set_cap(std::optional<int> c) {
    cap_ = c;
    if (cap_) {
        w_.erase(std::remove_if(w_.begin(), w_.end(),
                                [&](const KWord& w) { return w.wt() > *cap_; }),
                 w_.end());
    }
}

void KDualElt::xor_word(const KWord& w) {
    if (cap_ && w.wt() > *cap_) return;
    detail::xor_term(w_, w);
}

KDualElt operator+(const KDualElt& a, const KDualElt& b) {
    KDualElt r = a;
    if (r.w_.empty()) {
        r.l_ = b.l_;
        r.r_ = b.r_;
    }
    if (b.cap_ && (!r.cap_ || *b.cap_ < *r.cap_)) r.set_cap(b.cap_);
    for (const auto& w : b.w_) r.xor_word(w);
    return r;
}

std::string KDualElt::str() const {
    if (w_.empty()) return "0";
    std::string s;
    for (const auto& w : w_) {
        if (!s.empty()) s += "+";
        s += w.str();
    }
    return s;
}

KDualElt kdual_mul(const KDualElt& a, const KDualElt& b) {
    KDualElt r(a.left(), b.right());
    auto cap = a.cap();
    if (b.cap() && (!cap || *b.cap() < *cap)) cap = b.cap();
    r.set_cap(cap);
    for (const auto& u : a.words())
        for (const auto& v : b.words())
            if (auto p = kw_mul(u, v)) r.xor_word(*p);
    return r;
}

KDualElt mu1(const KDualElt& a) {
    KDualElt r(a.left(), a.right());
    r.set_cap(a.cap());
    for (const auto& w : a.words())
        for (const auto& d : kw_mu1(w)) r.xor_word(d);
    return r;
}

KDualElt mu0(Idem i) {
    KDualElt r(Idem::I1, Idem::I1);
    if (i == Idem::I1) {
        r.xor_word(*KWord::make(Idem::I1, Idem::I1, "MP", false));
        r.xor_word(*KWord::make(Idem::I1, Idem::I1, "PM", false));
    }
    return r;
}

std::optional<char> dual_letter_of(const KElt& m) {
    if (m.b00.is_monomial() && m.b11.is_zero() && m.sig.is_zero() && m.tau.is_zero()) {
        auto [i, j] = m.b00.terms()[0];
        if (i == 1 && j == 0) return 'w';
        if (i == 0 && j == 1) return 'z';
        if (i == 1 && j == 1) return 'h';
        return std::nullopt;
    }
    if (m.b11.is_monomial() && m.b00.is_zero() && m.sig.is_zero() && m.tau.is_zero()) {
        auto [k, t] = m.b11.terms()[0];
        if (k == 1 && t == 0) return 'h';
        if (k == 0 && t == 1) return 'P';
        if (k == 0 && t == -1) return 'M';
        return std::nullopt;
    }
    if (m.b00.is_zero() && m.b11.is_zero()) {
        if (m.sig.is_one() && m.tau.is_zero()) return 's';
        if (m.tau.is_one() && m.sig.is_zero()) return 't';
    }
    return std::nullopt;
}

KElt dual_kelt_of_letter(char code, Idem theta_side) {
    switch (code) {
        case 'w': return KElt::from_r0(R0Elt::monomial(1, 0));
        case 'z': return KElt::from_r0(R0Elt::monomial(0, 1));
        case 'h':
            return theta_side == Idem::I0 ? KElt::from_r0(R0Elt::u_power(1))
                                          : KElt::from_r1(R1Elt::monomial(1, 0));
        case 'P': return KElt::from_r1(R1Elt::monomial(0, 1));
        case 'M': return KElt::from_r1(R1Elt::monomial(0, -1));
        case 's': return KElt::from_sigma_tau(R1Elt::one(), R1Elt::zero());
        case 't': return KElt::from_sigma_tau(R1Elt::zero(), R1Elt::one());
        default: throw std::invalid_argument("bad dual letter code");
    }
}

}  // namespace linksurg
