#include "linksurg/surgery_algebra.hpp"

namespace linksurg {

std::string half_str(int doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

std::string GradingVector::str() const {
    return "(" + half_str(grw2) + "," + half_str(grz2) + "," + half_str(a1x2) + "," +
           half_str(a2x2) + ")";
}

bool KElt::pure_block(Idem l, Idem r) const {
    if (!b00.is_zero() && !(l == Idem::I0 && r == Idem::I0)) return false;
    if (!b11.is_zero() && !(l == Idem::I1 && r == Idem::I1)) return false;
    if ((!sig.is_zero() || !tau.is_zero()) && !(l == Idem::I1 && r == Idem::I0)) return false;
    return true;
}

std::string KElt::str() const {
    if (is_zero()) return "0";
    std::string s;
    auto app = [&s](const std::string& part) {
        if (part == "0") return;
        if (!s.empty()) s += "+";
        s += part;
    };
    app(b00.str());
    app(b11.str());
    if (!sig.is_zero()) app(sig.is_one() ? std::string("\xcf\x83") : sig.str() + "\xcf\x83");
    if (!tau.is_zero()) app(tau.is_one() ? std::string("\xcf\x84") : tau.str() + "\xcf\x84");
    return s;
}

R1Elt phi_sigma(const R0Elt& a) {
    R1Elt r;
    for (const auto& [i, j] : a.terms()) r.xor_term(i, j - i);
    return r;
}

R1Elt phi_tau(const R0Elt& a) {
    R1Elt r;
    for (const auto& [i, j] : a.terms()) r.xor_term(j, j - i);
    return r;
}

KElt k_mul(const KElt& a, const KElt& b) {
    // Block bookkeeping: (l,m) x (m,r) -> (l,r); everything else is zero.
    KElt r;
    r.b00 = a.b00 * b.b00;
    r.b11 = a.b11 * b.b11;
    // (1,0) x (0,0): push the R0 factor through sigma/tau.
    r.sig = a.sig * phi_sigma(b.b00) + a.b11 * b.sig;
    r.tau = a.tau * phi_tau(b.b00) + a.b11 * b.tau;
    return r;
}

KElt k_truncated(const KElt& a, int uprec) {
    KElt r;
    r.b00 = truncated(a.b00, uprec);
    r.b11 = truncated(a.b11, uprec);
    r.sig = truncated(a.sig, uprec);
    r.tau = truncated(a.tau, uprec);
    return r;
}

GradingVector grading_of(const KElt& a) {
    if (!a.sig.is_zero() || !a.tau.is_zero()) throw NotMonomial(a.str());
    if (!a.b00.is_zero() && !a.b11.is_zero()) throw NotMonomial(a.str());
    if (a.b00.is_monomial() && a.b11.is_zero()) {
        auto [i, j] = a.b00.terms()[0];
        return GradingVector{-4 * i, -4 * j, 0, 2 * (j - i)};
    }
    if (a.b11.is_monomial() && a.b00.is_zero()) {
        auto [k, m] = a.b11.terms()[0];
        return GradingVector{-4 * k, -4 * k, 0, 2 * m};
    }
    throw NotMonomial(a.str());
}

}  // namespace linksurg
