#include "linksurg/coeff.hpp"

#include <algorithm>

namespace linksurg {

namespace {

void append_power(std::string& s, const char* sym, int e) {
    if (e == 0) return;
    s += sym;
    if (e != 1) {
        s += '^';
        s += std::to_string(e);
    }
}

}  // namespace

std::string R0Elt::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [i, j] : t_) {
        if (!s.empty()) s += "+";
        int u = std::min(i, j);
        std::string m;
        append_power(m, "W", i - u);
        append_power(m, "Z", j - u);
        append_power(m, "U", u);
        s += m.empty() ? "1" : m;
    }
    return s;
}

std::string R1Elt::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [k, m] : t_) {
        if (!s.empty()) s += "+";
        std::string t;
        append_power(t, "U", k);
        append_power(t, "T", m);
        s += t.empty() ? "1" : t;
    }
    return s;
}

R0Elt truncated(const R0Elt& a, int uprec) {
    R0Elt r;
    for (const auto& t : a.terms())
        if (u_order_r0(t) < uprec) r.xor_term(t.first, t.second);
    return r;
}

R1Elt truncated(const R1Elt& a, int uprec) {
    R1Elt r;
    for (const auto& t : a.terms())
        if (u_order_r1(t) < uprec) r.xor_term(t.first, t.second);
    return r;
}

namespace {

// Common geometric-series core: a = lead * (1 + eps), returns lead^-1 * sum eps^k.
template <typename Elt>
Elt invert_with(const Elt& lead_inv, const Elt& eps, int prec) {
    Elt acc = Elt::one();
    Elt pow = Elt::one();
    for (int k = 1; k < prec; ++k) {
        pow = truncated(pow * eps, prec);
        if (pow.is_zero()) break;
        acc = acc + pow;
    }
    return truncated(lead_inv * acc, prec);
}

}  // namespace

R1Elt invert_unit(const R1Elt& a, UPrecision prec) {
    // Exactly one term with U-exponent 0, and that term is T^m.
    int lead_m = 0;
    int nlead = 0;
    for (const auto& [k, m] : a.terms())
        if (k == 0) {
            lead_m = m;
            ++nlead;
        }
    if (nlead != 1) throw NotAUnit(a.str());
    R1Elt lead_inv = R1Elt::monomial(0, -lead_m);
    R1Elt eps;
    for (const auto& [k, m] : a.terms())
        if (k > 0) eps.xor_term(k, m - lead_m);
    return invert_with(lead_inv, eps, prec.n);
}

R0Elt invert_unit(const R0Elt& a, UPrecision prec) {
    bool has_one = false;
    R0Elt eps;
    for (const auto& [i, j] : a.terms()) {
        if (i == 0 && j == 0) {
            has_one = true;
        } else if (std::min(i, j) >= 1) {
            eps.xor_term(i, j);
        } else {
            throw NotAUnit(a.str());  // e.g. 1+W is not U-adically invertible
        }
    }
    if (!has_one) throw NotAUnit(a.str());
    return invert_with(R0Elt::one(), eps, prec.n);
}

}  // namespace linksurg
