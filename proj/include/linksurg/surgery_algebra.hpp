#pragma once

#include "linksurg/coeff.hpp"
#include "linksurg/grading.hpp"

namespace linksurg {

enum class Idem : unsigned char { I0 = 0, I1 = 1 };

inline int idem_index(Idem i) { return static_cast<int>(i); }
inline Idem idem_of(int i) { return i == 0 ? Idem::I0 : Idem::I1; }

// The surgery algebra K over the idempotent ring I0 + I1:
//   I0.K.I0 = F[W,Z],  I1.K.I1 = F[U,T,T^-1],  I0.K.I1 = 0,
//   I1.K.I0 = F[U,T,T^-1]<sigma,tau>  with
//   sigma W^i Z^j = U^i T^(j-i) sigma,  tau W^i Z^j = U^j T^(j-i) tau.
// Elements keep sigma/tau coefficients normalized on the left.
struct KElt {
    R0Elt b00;
    R1Elt b11;
    R1Elt sig;  // coefficient of sigma in the (1,0) block
    R1Elt tau;  // coefficient of tau in the (1,0) block

    static KElt zero() { return {}; }
    static KElt unit(Idem i) {
        KElt e;
        if (i == Idem::I0)
            e.b00 = R0Elt::one();
        else
            e.b11 = R1Elt::one();
        return e;
    }
    static KElt from_r0(R0Elt a) {
        KElt e;
        e.b00 = std::move(a);
        return e;
    }
    static KElt from_r1(R1Elt a) {
        KElt e;
        e.b11 = std::move(a);
        return e;
    }
    static KElt from_sigma_tau(R1Elt s, R1Elt t) {
        KElt e;
        e.sig = std::move(s);
        e.tau = std::move(t);
        return e;
    }

    bool is_zero() const { return b00.is_zero() && b11.is_zero() && sig.is_zero() && tau.is_zero(); }
    // Nonzero only in the single block I_l . K . I_r?
    bool pure_block(Idem l, Idem r) const;

    friend KElt operator+(const KElt& a, const KElt& b) {
        return {a.b00 + b.b00, a.b11 + b.b11, a.sig + b.sig, a.tau + b.tau};
    }
    bool operator==(const KElt& o) const {
        return b00 == o.b00 && b11 == o.b11 && sig == o.sig && tau == o.tau;
    }
    bool operator!=(const KElt& o) const { return !(*this == o); }

    std::string str() const;
};

// The algebra maps phi^sigma, phi^tau : F[W,Z] -> F[U,T,T^-1],
//   phi^sigma(W^i Z^j) = U^i T^(j-i),  phi^tau(W^i Z^j) = U^j T^(j-i).
R1Elt phi_sigma(const R0Elt& a);
R1Elt phi_tau(const R0Elt& a);

KElt k_mul(const KElt& a, const KElt& b);
KElt k_truncated(const KElt& a, int uprec);

// Gradings of a single monomial: (gr_w, gr_z, A)(W) = (-2, 0, -1),
// (Z) = (0, -2, 1), so W^i Z^j has A2 = j - i; on R1, gr(U) = -2 and
// A2(T) = 1. Throws NotMonomial otherwise.
GradingVector grading_of(const KElt& a);

}  // namespace linksurg
