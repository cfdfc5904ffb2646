#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linksurg/surgery_algebra.hpp"

namespace linksurg {

// Normal-form monomial of the Koszul dual algebra K^!.
//
// Letters (internal one-byte codes): 'w' 'z' (idempotent (0,0) block),
// 'P' = phi_+, 'M' = phi_- (idempotent (1,1) block), 's' 't' (the (0,1)
// block), plus a central theta flag. The defining relations
//   w^2 = z^2 = phi_+^2 = phi_-^2 = theta^2 = 0,  theta central,
//   ws = s phi_- = 0, zt = t phi_+ = 0, zs = s phi_+, wt = t phi_-
// make the normal forms: alternating {w,z} words at (0,0), alternating
// {phi_+,phi_-} words at (1,1), and bodies {s, zs, t, wt} at (0,1), each
// with an optional theta. The (1,0) block of K^! is zero.
struct KWord {
    Idem l = Idem::I0;
    Idem r = Idem::I0;
    std::string body;  // letters, theta excluded
    bool theta = false;

    static KWord unit(Idem i) { return KWord{i, i, "", false}; }
    static KWord theta_at(Idem i) { return KWord{i, i, "", true}; }
    static KWord letter(char c);
    static std::optional<KWord> make(Idem l, Idem r, std::string body, bool theta);

    bool is_unit() const { return body.empty() && !theta; }
    int wt() const { return static_cast<int>(body.size()) + (theta ? 1 : 0); }
    int wt_theta() const { return theta ? 1 : 0; }
    int wt_plus() const { return wt() + wt_theta(); }
    bool valid() const;

    bool operator==(const KWord& o) const {
        return l == o.l && r == o.r && body == o.body && theta == o.theta;
    }
    bool operator!=(const KWord& o) const { return !(*this == o); }
    bool operator<(const KWord& o) const {
        if (l != o.l) return l < o.l;
        if (r != o.r) return r < o.r;
        if (body.size() != o.body.size()) return body.size() < o.body.size();
        if (body != o.body) return body < o.body;
        return theta < o.theta;
    }

    std::string str() const;                                // e.g. "zwθ", "φ+φ-", "1"
    static std::optional<KWord> parse(const std::string&);  // unit/theta are ambiguous: idem 0 assumed
    static std::optional<KWord> parse(const std::string&, Idem idem_hint);
};

// Product of two normal-form words; nullopt encodes zero.
std::optional<KWord> kw_mul(const KWord& a, const KWord& b);

// mu_1 on a word: nonzero only on theta-flagged (0,0) words,
// mu_1(u theta) = u(wz + zw) collapsed to the alternating survivors.
std::vector<KWord> kw_mu1(const KWord& a);

// F_2 linear combination of words sharing one idempotent pair, with an
// optional weight cap standing in for the weight completion.
class KDualElt {
public:
    KDualElt() = default;
    KDualElt(Idem l, Idem r) : l_(l), r_(r) {}
    static KDualElt zero(Idem l, Idem r) { return KDualElt(l, r); }
    static KDualElt unit(Idem i) { return from_word(KWord::unit(i)); }
    static KDualElt from_word(const KWord& w);

    Idem left() const { return l_; }
    Idem right() const { return r_; }
    const std::vector<KWord>& words() const { return w_; }
    bool is_zero() const { return w_.empty(); }
    std::optional<int> cap() const { return cap_; }
    void set_cap(std::optional<int> c);
    void xor_word(const KWord& w);

    friend KDualElt operator+(const KDualElt& a, const KDualElt& b);
    bool operator==(const KDualElt& o) const { return l_ == o.l_ && r_ == o.r_ && w_ == o.w_; }

    std::string str() const;

private:
    Idem l_ = Idem::I0, r_ = Idem::I0;
    std::vector<KWord> w_;
    std::optional<int> cap_;
};

KDualElt kdual_mul(const KDualElt& a, const KDualElt& b);
KDualElt mu1(const KDualElt& a);
KDualElt mu0(Idem i);  // phi_- phi_+ + phi_+ phi_- at idempotent 1, zero at 0

// Dual basis of the cotrace bimodule: letter of K^! <-> generator of K
// (w|W, z|Z, theta|U, s|sigma, t|tau, phi_+|T, phi_-|T^-1). Theta is coded
// as 'h' where a letter char is exchanged.
std::optional<char> dual_letter_of(const KElt& monomial);  // K generator -> K^! letter code
KElt dual_kelt_of_letter(char code, Idem theta_side);      // K^! letter code -> K generator

}  // namespace linksurg
