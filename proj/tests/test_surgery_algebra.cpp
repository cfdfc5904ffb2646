#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "linksurg/surgery_algebra.hpp"

using namespace linksurg;

namespace {

KElt sigma() { return KElt::from_sigma_tau(R1Elt::one(), R1Elt::zero()); }
KElt tau() { return KElt::from_sigma_tau(R1Elt::zero(), R1Elt::one()); }

// All monomials of K with exponents <= 2 (and T-powers in [-2,2]).
std::vector<KElt> small_monomials() {
    std::vector<KElt> out;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) out.push_back(KElt::from_r0(R0Elt::monomial(i, j)));
    for (int k = 0; k <= 2; ++k)
        for (int m = -2; m <= 2; ++m) out.push_back(KElt::from_r1(R1Elt::monomial(k, m)));
    for (int k = 0; k <= 2; ++k)
        for (int m = -2; m <= 2; ++m) {
            out.push_back(KElt::from_sigma_tau(R1Elt::monomial(k, m), R1Elt::zero()));
            out.push_back(KElt::from_sigma_tau(R1Elt::zero(), R1Elt::monomial(k, m)));
        }
    return out;
}

}  // namespace

TEST_CASE("commutation rules") {
    // sigma W^2 Z^3 = U^2 T sigma, tau W^2 Z^3 = U^3 T tau.
    KElt w2z3 = KElt::from_r0(R0Elt::monomial(2, 3));
    CHECK(k_mul(sigma(), w2z3) == KElt::from_sigma_tau(R1Elt::monomial(2, 1), R1Elt::zero()));
    CHECK(k_mul(tau(), w2z3) == KElt::from_sigma_tau(R1Elt::zero(), R1Elt::monomial(3, 1)));
    // sigma tau = 0: the idempotents do not compose.
    CHECK(k_mul(sigma(), tau()).is_zero());
}

TEST_CASE("phi_sigma and phi_tau") {
    R0Elt w2z3 = R0Elt::monomial(2, 3);
    CHECK(phi_sigma(w2z3) == R1Elt::monomial(2, 1));
    CHECK(phi_tau(w2z3) == R1Elt::monomial(3, 1));
    CHECK(phi_sigma(R0Elt::one()) == R1Elt::one());
    CHECK(phi_tau(R0Elt::one()) == R1Elt::one());
    // Both are algebra maps.
    R0Elt a = R0Elt::monomial(1, 2), b = R0Elt::monomial(2, 0);
    CHECK(phi_sigma(a * b) == phi_sigma(a) * phi_sigma(b));
    CHECK(phi_tau(a * b) == phi_tau(a) * phi_tau(b));
}

TEST_CASE("associativity on all small monomial triples") {
    auto ms = small_monomials();
    for (const auto& a : ms)
        for (const auto& b : ms)
            for (const auto& c : ms)
                CHECK(k_mul(k_mul(a, b), c) == k_mul(a, k_mul(b, c)));
}

TEST_CASE("idempotent bookkeeping of products") {
    auto ms = small_monomials();
    auto block = [](const KElt& a, Idem& l, Idem& r) {
        if (!a.b00.is_zero()) l = Idem::I0, r = Idem::I0;
        else if (!a.b11.is_zero()) l = Idem::I1, r = Idem::I1;
        else l = Idem::I1, r = Idem::I0;
    };
    for (const auto& a : ms)
        for (const auto& b : ms) {
            KElt p = k_mul(a, b);
            if (p.is_zero()) continue;
            Idem la, ra, lb, rb, lp, rp;
            block(a, la, ra);
            block(b, lb, rb);
            block(p, lp, rp);
            CHECK(ra == lb);
            CHECK(lp == la);
            CHECK(rp == rb);
        }
}

TEST_CASE("grading_of base values") {
    CHECK(grading_of(KElt::from_r0(R0Elt::monomial(1, 0))) ==
          GradingVector{-4, 0, 0, -2});
    CHECK(grading_of(KElt::from_r0(R0Elt::monomial(0, 1))) == GradingVector{0, -4, 0, 2});
    CHECK(grading_of(KElt::from_r0(R0Elt::u_power(1))) == GradingVector{-4, -4, 0, 0});
    CHECK(grading_of(KElt::from_r1(R1Elt::monomial(1, 0))) == GradingVector{-4, -4, 0, 0});
    CHECK_THROWS_AS(grading_of(KElt::from_r0(R0Elt::monomial(1, 0) + R0Elt::monomial(0, 1))),
                    NotMonomial);
}

TEST_CASE("grading additive under composable products") {
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            for (int k = 0; k <= 2; ++k)
                for (int l = 0; l <= 2; ++l) {
                    KElt a = KElt::from_r0(R0Elt::monomial(i, j));
                    KElt b = KElt::from_r0(R0Elt::monomial(k, l));
                    CHECK(grading_of(k_mul(a, b)) == grading_of(a) + grading_of(b));
                }
}
