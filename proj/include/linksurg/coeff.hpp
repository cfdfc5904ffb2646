#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linksurg {

// Coefficients throughout are F_2 = Z/2: a term is present or absent, and
// addition is symmetric difference of term sets.

struct NotAUnit : std::runtime_error {
    explicit NotAUnit(const std::string& w) : std::runtime_error("not a unit: " + w) {}
};
struct NotMonomial : std::runtime_error {
    explicit NotMonomial(const std::string& w) : std::runtime_error("not a monomial: " + w) {}
};

struct UPrecision {
    int n;
    explicit UPrecision(int n_) : n(n_) {
        if (n < 1) throw std::invalid_argument("U-precision must be >= 1");
    }
};

namespace detail {
// Sorted-unique term list with xor-merge semantics.
template <typename T>
void xor_term(std::vector<T>& v, const T& t) {
    auto it = std::lower_bound(v.begin(), v.end(), t);
    if (it != v.end() && *it == t)
        v.erase(it);
    else
        v.insert(it, t);
}
}  // namespace detail

// F_2[W, Z]. Term (i, j) is W^i Z^j; U := WZ is the pair (1, 1).
class R0Elt {
public:
    using Term = std::pair<int, int>;

    R0Elt() = default;
    static R0Elt zero() { return {}; }
    static R0Elt one() { return monomial(0, 0); }
    static R0Elt monomial(int i, int j) {
        if (i < 0 || j < 0) throw std::invalid_argument("negative W/Z exponent");
        R0Elt e;
        e.t_.emplace_back(i, j);
        return e;
    }
    static R0Elt u_power(int k) { return monomial(k, k); }

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const { return t_.size() == 1 && t_[0] == Term{0, 0}; }
    bool is_monomial() const { return t_.size() == 1; }
    void xor_term(int i, int j) {
        if (i < 0 || j < 0) throw std::invalid_argument("negative W/Z exponent");
        detail::xor_term(t_, Term{i, j});
    }
    friend R0Elt operator+(const R0Elt& a, const R0Elt& b) {
        R0Elt r = a;
        for (const auto& t : b.t_) detail::xor_term(r.t_, t);
        return r;
    }
    friend R0Elt operator*(const R0Elt& a, const R0Elt& b) {
        R0Elt r;
        for (const auto& s : a.t_)
            for (const auto& t : b.t_) detail::xor_term(r.t_, Term{s.first + t.first, s.second + t.second});
        return r;
    }
    bool operator==(const R0Elt& o) const { return t_ == o.t_; }
    bool operator!=(const R0Elt& o) const { return !(*this == o); }
    bool operator<(const R0Elt& o) const { return t_ < o.t_; }

    std::string str() const;

private:
    std::vector<Term> t_;
};

// F_2[U, T, T^-1]. Term (k, m) is U^k T^m with k >= 0, m in Z.
class R1Elt {
public:
    using Term = std::pair<int, int>;

    R1Elt() = default;
    static R1Elt zero() { return {}; }
    static R1Elt one() { return monomial(0, 0); }
    static R1Elt monomial(int k, int m) {
        if (k < 0) throw std::invalid_argument("negative U exponent");
        R1Elt e;
        e.t_.emplace_back(k, m);
        return e;
    }

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const { return t_.size() == 1 && t_[0] == Term{0, 0}; }
    bool is_monomial() const { return t_.size() == 1; }
    void xor_term(int k, int m) {
        if (k < 0) throw std::invalid_argument("negative U exponent");
        detail::xor_term(t_, Term{k, m});
    }
    friend R1Elt operator+(const R1Elt& a, const R1Elt& b) {
        R1Elt r = a;
        for (const auto& t : b.t_) detail::xor_term(r.t_, t);
        return r;
    }
    friend R1Elt operator*(const R1Elt& a, const R1Elt& b) {
        R1Elt r;
        for (const auto& s : a.t_)
            for (const auto& t : b.t_) detail::xor_term(r.t_, Term{s.first + t.first, s.second + t.second});
        return r;
    }
    bool operator==(const R1Elt& o) const { return t_ == o.t_; }
    bool operator!=(const R1Elt& o) const { return !(*this == o); }
    bool operator<(const R1Elt& o) const { return t_ < o.t_; }

    std::string str() const;

private:
    std::vector<Term> t_;
};

// U-adic order: for R0 the U-exponent of W^i Z^j is min(i, j).
inline int u_order_r0(const R0Elt::Term& t) { return t.first < t.second ? t.first : t.second; }
inline int u_order_r1(const R1Elt::Term& t) { return t.first; }

R0Elt truncated(const R0Elt& a, int uprec);
R1Elt truncated(const R1Elt& a, int uprec);

// Geometric-series inversion in the U-adic completion, truncated at prec.
// R1 units are T^m (1 + eps) with every eps-term of positive U-exponent;
// R0 units are 1 + eps with every eps-term divisible by U.
R1Elt invert_unit(const R1Elt& a, UPrecision prec);
R0Elt invert_unit(const R0Elt& a, UPrecision prec);

}  // namespace linksurg
