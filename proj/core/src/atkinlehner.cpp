#include "modcurve/atkinlehner.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace modcurve {

std::string NormalizerElement::name() const {
    std::string pre = diamond != 1 ? "[" + std::to_string(diamond) + "]" : "";
    switch (kind) {
    case ElementKind::Diamond: return "[" + std::to_string(diamond) + "]";
    case ElementKind::AtkinLehner:
    case ElementKind::DiamondAtkinLehner:
        return pre + (hat ? "Ŵ" : "W") + std::to_string(hall);
    case ElementKind::Explicit: return pre + (diamond != 1 ? base : matrix).str();
    }
    return matrix.str();
}

IntMat2 diamond(i64 a, i64 n) {
    if (std::gcd(mod(a, n), n) != 1 && n > 1) throw NotCoprime("diamond: a not coprime to N");
    if (n == 1) return kI;
    i64 ap = mod(a, n);
    if (ap == 1) return kI;
    auto e = ext_gcd(ap, n);  // x*ap + y*n = 1
    return {ap, -e.y, n, e.x};
}

i64 t_map(i64 d, i64 n, i64 a) {
    if (!is_hall_divisor(d, n)) throw InvalidInput("t_map: d is not a Hall divisor");
    i64 m = n / d;
    i64 ainv = d == 1 ? 0 : *inverse_mod(a, d);
    return crt(mod(a, m), m, ainv, d);
}

std::vector<i64> t_image(i64 d, const DeltaSubgroup& delta) {
    std::set<i64> s;
    for (i64 a : delta.elements()) s.insert(t_map(d, delta.modulus(), a));
    return {s.begin(), s.end()};
}

bool descends(i64 d, const DeltaSubgroup& delta) {
    return t_image(d, delta) == delta.elements();
}

std::optional<IntMat2> hat_W_matrix(i64 d, i64 n) {
    if (!is_hall_divisor(d, n)) throw InvalidInput("hat_W: d is not a Hall divisor");
    if (d == n) return IntMat2{0, -1, n, 0};
    i64 m = n / d;
    for (i64 x = 0; x < m; ++x) {
        i64 t = -d * x * x - 1;
        if (mod(t, m) == 0) return IntMat2{d * x, t / m, n, -d * x};
    }
    if (d == 2 || d == 3) {
        for (i64 t : {1, -1})
            for (i64 x = 0; x < m; ++x) {
                i64 u = d * x * (t - x) - 1;
                if (mod(u, m) == 0) return IntMat2{d * x, (d * d * x * (t - x) - d) / n, n, d * (t - x)};
            }
    }
    return std::nullopt;
}

std::optional<IntMat2> hat_W(i64 d, const DeltaSubgroup& delta) {
    if (!descends(d, delta)) throw DoesNotDescend("W_" + std::to_string(d) + " does not descend");
    return hat_W_matrix(d, delta.modulus());
}

IntMat2 generic_W(i64 d, i64 n) {
    if (!is_hall_divisor(d, n)) throw InvalidInput("W_d: d is not a Hall divisor");
    if (d == n) return {0, -1, n, 0};
    if (d == 1) return kI;
    i64 m = n / d;
    i64 w = *inverse_mod(d, m);
    return {d, (d * w - 1) / m, n, d * w};
}

NormalizerElement atkin_lehner(i64 d, i64 n) {
    NormalizerElement e;
    e.kind = ElementKind::AtkinLehner;
    e.hall = d;
    if (auto h = hat_W_matrix(d, n)) {
        e.matrix = *h;
        e.hat = true;
    } else {
        e.matrix = generic_W(d, n);
    }
    return e;
}

i64 atkin_lehner_type(const IntMat2& m, i64 n) {
    IntMat2 p = m.primitive();
    i64 d = p.det();
    if (d <= 0 || !is_hall_divisor(d, n)) return 0;
    if (mod(p.c, n) != 0 || mod(p.a, d) != 0 || mod(p.d, d) != 0) return 0;
    return d;
}

bool normalizes(const IntMat2& m, const DeltaSubgroup& delta, const std::vector<IntMat2>& gens) {
    if (m.det() <= 0) return false;
    for (const auto& g : gens) {
        IntMat2 h;
        if (!conjugate(m, g, h) || !is_member(h, delta)) return false;
    }
    return true;
}

bool normalizes(const IntMat2& m, const CosetAction& action) {
    return normalizes(m, action.delta(), schreier_generators(action));
}

namespace {

bool mul_checked(const IntMat2& x, const IntMat2& y, IntMat2& out) {
    using i128 = __int128;
    i128 v[4] = {i128(x.a) * y.a + i128(x.b) * y.c, i128(x.a) * y.b + i128(x.b) * y.d,
                 i128(x.c) * y.a + i128(x.d) * y.c, i128(x.c) * y.b + i128(x.d) * y.d};
    const i128 lim = std::numeric_limits<i64>::max() / 4;
    for (auto& e : v)
        if (e > lim || e < -lim) return false;
    out = {i64(v[0]), i64(v[1]), i64(v[2]), i64(v[3])};
    return true;
}

}  // namespace

std::optional<int> automorphism_order(const IntMat2& m, const DeltaSubgroup& delta, int cap) {
    IntMat2 p = m.primitive();
    IntMat2 base = p;
    for (int k = 1; k <= cap; ++k) {
        IntMat2 e;
        if (scale_to_sl2(p, e) && is_member(e, delta)) return k;
        IntMat2 next;
        if (!mul_checked(p, base, next)) return std::nullopt;
        p = next.primitive();
    }
    return std::nullopt;
}

int fricke_field_degree(const DeltaSubgroup& delta) {
    return static_cast<int>(delta.index());
}

}  // namespace modcurve
