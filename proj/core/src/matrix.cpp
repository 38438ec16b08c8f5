#include "modcurve/matrix.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace modcurve {

i64 IntMat2::content() const {
    return std::gcd(std::gcd(std::llabs(a), std::llabs(b)), std::gcd(std::llabs(c), std::llabs(d)));
}

IntMat2 IntMat2::primitive() const {
    i64 g = content();
    if (g == 0) return *this;
    return {a / g, b / g, c / g, d / g};
}

IntMat2 IntMat2::normalized_sign() const {
    if (c < 0 || (c == 0 && (a < 0 || (a == 0 && b < 0)))) return neg();
    return *this;
}

bool IntMat2::proj_equal(const IntMat2& o) const {
    return *this == o || *this == o.neg();
}

std::string IntMat2::str() const {
    std::ostringstream os;
    os << "[[" << a << ',' << b << "],[" << c << ',' << d << "]]";
    return os.str();
}

IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
}

bool conjugate(const IntMat2& m, const IntMat2& g, IntMat2& out) {
    using i128 = __int128;
    i128 det = m.det();
    IntMat2 ad = m.adj();
    i128 x[4] = {i128(m.a) * g.a + i128(m.b) * g.c, i128(m.a) * g.b + i128(m.b) * g.d,
                 i128(m.c) * g.a + i128(m.d) * g.c, i128(m.c) * g.b + i128(m.d) * g.d};
    i128 p[4] = {x[0] * ad.a + x[1] * ad.c, x[0] * ad.b + x[1] * ad.d, x[2] * ad.a + x[3] * ad.c,
                 x[2] * ad.b + x[3] * ad.d};
    for (auto& e : p) {
        if (e % det) return false;
        e /= det;
    }
    out = {i64(p[0]), i64(p[1]), i64(p[2]), i64(p[3])};
    return true;
}

bool scale_to_sl2(const IntMat2& m, IntMat2& out) {
    IntMat2 p = m.primitive();
    if (p.det() != 1) return false;
    out = p;
    return true;
}

}  // namespace modcurve
