#pragma once

#include <string>

#include "modcurve/zmodn.hpp"

namespace modcurve {

struct IntMat2 {
    i64 a = 1, b = 0, c = 0, d = 1;

    i64 det() const { return a * d - b * c; }
    i64 trace() const { return a + d; }
    IntMat2 adj() const { return {d, -b, -c, a}; }
    IntMat2 neg() const { return {-a, -b, -c, -d}; }
    i64 content() const;
    IntMat2 primitive() const;  // divided by content, sign kept
    // Sign fixed so that the first nonzero of (c, a) is positive.
    IntMat2 normalized_sign() const;
    bool is_scalar() const { return b == 0 && c == 0 && a == d; }
    bool proj_equal(const IntMat2& o) const;

    bool operator==(const IntMat2& o) const = default;
    auto operator<=>(const IntMat2& o) const = default;

    // "[[a,b],[c,d]]"
    std::string str() const;
};

IntMat2 operator*(const IntMat2& x, const IntMat2& y);

inline const IntMat2 kS{0, -1, 1, 0};
inline const IntMat2 kT{1, 1, 0, 1};
inline const IntMat2 kI{1, 0, 0, 1};

// Conjugate g by m: m*g*m^{-1}, exact when integral. Returns false if not integral.
bool conjugate(const IntMat2& m, const IntMat2& g, IntMat2& out);

// Divide out the content and return the result if its determinant is 1.
bool scale_to_sl2(const IntMat2& m, IntMat2& out);

}  // namespace modcurve
