#pragma once

#include <string>

namespace linksurg {

// All gradings are half-integers; they are stored doubled so arithmetic is
// exact. grw2 == 2*gr_w etc. Generators in idempotent (1,1) carry a single
// Maslov grading, stored in both grw2 and grz2.
struct GradingVector {
    int grw2 = 0;
    int grz2 = 0;
    int a1x2 = 0;
    int a2x2 = 0;

    friend GradingVector operator+(const GradingVector& a, const GradingVector& b) {
        return {a.grw2 + b.grw2, a.grz2 + b.grz2, a.a1x2 + b.a1x2, a.a2x2 + b.a2x2};
    }
    friend GradingVector operator-(const GradingVector& a, const GradingVector& b) {
        return {a.grw2 - b.grw2, a.grz2 - b.grz2, a.a1x2 - b.a1x2, a.a2x2 - b.a2x2};
    }
    bool operator==(const GradingVector& o) const {
        return grw2 == o.grw2 && grz2 == o.grz2 && a1x2 == o.a1x2 && a2x2 == o.a2x2;
    }
    bool operator!=(const GradingVector& o) const { return !(*this == o); }
    bool operator<(const GradingVector& o) const {
        if (grw2 != o.grw2) return grw2 < o.grw2;
        if (grz2 != o.grz2) return grz2 < o.grz2;
        if (a1x2 != o.a1x2) return a1x2 < o.a1x2;
        return a2x2 < o.a2x2;
    }
    std::string str() const;
};

// Render a doubled half-integer, e.g. -3 -> "-3/2", 4 -> "2".
std::string half_str(int doubled);

}  // namespace linksurg
