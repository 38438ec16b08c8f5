#include "modcurve/fixedpoints.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace modcurve {

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i128 floor_div128(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct Form128 {
    i128 p, q, r;
};

struct Mat128 {
    i128 a, b, c, d;
};

Mat128 mul(const Mat128& x, const Mat128& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Form128 compose(const Form128& f, const Mat128& m) {
    return {f.p * m.a * m.a + f.q * m.a * m.c + f.r * m.c * m.c,
            2 * f.p * m.a * m.b + f.q * (m.a * m.d + m.b * m.c) + 2 * f.r * m.c * m.d,
            f.p * m.b * m.b + f.q * m.b * m.d + f.r * m.d * m.d};
}

// Reduced form of f (positive definite) and gamma with reduced = f∘gamma.
std::pair<QForm, IntMat2> reduce128(Form128 f) {
    Mat128 g{1, 0, 0, 1};
    const Mat128 s{0, -1, 1, 0};
    for (;;) {
        if (!(-f.p < f.q && f.q <= f.p)) {
            i128 k = floor_div128(f.p - f.q, 2 * f.p);
            Mat128 t{1, k, 0, 1};
            f = compose(f, t);
            g = mul(g, t);
            continue;
        }
        if (f.p > f.r || (f.p == f.r && f.q < 0)) {
            f = compose(f, s);
            g = mul(g, s);
            continue;
        }
        break;
    }
    return {QForm{i64(f.p), i64(f.q), i64(f.r)}, IntMat2{i64(g.a), i64(g.b), i64(g.c), i64(g.d)}};
}

// Elliptic elements of finite projective order have t^2/det in {0, 1, 2, 3}.
std::vector<i64> candidate_discriminants(i64 m) {
    std::set<i64> out;
    for (i64 t = 0; t * t < 4 * m; ++t) {
        if (t * t % m != 0) continue;
        i64 d0 = t * t - 4 * m;
        for (i64 l = 1; l * l <= -d0; ++l)
            if (d0 % (l * l) == 0 && is_discriminant(d0 / (l * l))) out.insert(d0 / (l * l));
    }
    return {out.begin(), out.end()};
}

}  // namespace

i64 signed_residue(i64 a, i64 n) {
    i64 r = mod(a, n);
    return 2 * r > n ? r - n : r;
}

int cusp_image(const CosetAction& action, const IntMat2& m, int k) {
    const IntMat2& a = action.rep(action.cusp_cycles()[k][0]);
    i64 x = m.a * a.a + m.b * a.c;
    i64 y = m.c * a.a + m.d * a.c;
    i64 g = std::gcd(std::llabs(x), std::llabs(y));
    x /= g;
    y /= g;
    auto e = ext_gcd(x, y);
    IntMat2 b{x, -e.y, y, e.x};
    return action.cusp_of_coset(action.coset_of(b));
}

int cuspidal_fixed_count(const CosetAction& action, const IntMat2& m) {
    int count = 0;
    for (int k = 0; k < action.cusp_count(); ++k) count += cusp_image(action, m, k) == k;
    return count;
}

FixedCount orbit_fixed_points(const CosetAction& action, const IntMat2& m) {
    IntMat2 mm = m.primitive();
    if (mm.det() <= 0) throw InvalidInput("orbit_fixed_points: determinant must be positive");
    FixedCount out;
    int mu = action.size();
    for (i64 disc : candidate_discriminants(mm.det())) {
        for (const QForm& f0 : reduced_classes(disc)) {
            auto s = root_stabilizer(f0);
            std::vector<char> seen(mu, 0);
            for (int i = 0; i < mu; ++i) {
                if (seen[i]) continue;
                std::vector<int> orbit{i};
                if (s)
                    for (int k = action.coset_of(action.rep(i) * *s); k != i; k = action.coset_of(action.rep(k) * *s))
                        orbit.push_back(k);
                for (int j : orbit) seen[j] = 1;
                IntMat2 p = (mm * action.rep(i)).adj();
                Mat128 p128{p.a, p.b, p.c, p.d};
                Form128 g = compose(Form128{f0.p, f0.q, f0.r}, p128);
                i128 c = gcd128(gcd128(g.p, g.q), g.r);
                g = {g.p / c, g.q / c, g.r / c};
                auto [g0, gamma] = reduce128(g);
                if (g0 == f0 && std::find(orbit.begin(), orbit.end(), action.coset_of(gamma)) != orbit.end()) ++out.elliptic;
            }
        }
    }
    out.cuspidal = cuspidal_fixed_count(action, mm);
    return out;
}

LiftReport lift_fixed_points(const CosetAction& action, const NormalizerElement& candidate,
                             const FixedPointSet& base) {
    const DeltaSubgroup& delta = action.delta();
    i64 n = delta.modulus();
    if (base.n != n) throw InvalidInput("lift_fixed_points: base level differs from curve level");
    if (atkin_lehner_type(candidate.matrix, n) != base.d)
        throw InvalidInput("lift_fixed_points: candidate does not induce W_" + std::to_string(base.d));
    if (!normalizes(candidate.matrix, action)) throw NotNormalizing("lift_fixed_points: candidate does not normalize");
    LiftReport rep;
    rep.n = n;
    rep.delta = delta;
    rep.candidate = candidate;
    rep.base = base;
    auto cosets = delta.coset_representatives();
    for (std::size_t j = 0; j < base.points.size(); ++j) {
        const FixedPoint& pt = base.points[j];
        IntMat2 wadj = pt.matrix.adj();
        std::vector<IntMat2> stab{kI};
        if (auto s = root_stabilizer(pt.form); s && mod(s->c, n) == 0) {
            stab.push_back(*s);
            IntMat2 s2 = *s * *s;
            if (!s2.proj_equal(kI)) stab.push_back(s2);
        }
        std::set<i64> h;
        for (const auto& s : stab) h.insert(delta.coset_key(s.a));
        std::set<i64> done;
        for (i64 g : cosets) {
            if (done.count(g)) continue;
            for (i64 x : h) done.insert(delta.coset_key(g * x));
            IntMat2 dg = diamond(g, n);
            for (const auto& s : stab) {
                IntMat2 e = (candidate.matrix * dg * wadj * s * dg.adj()).primitive();
                if (!is_member(e, delta)) continue;
                ++rep.fixed_count_elliptic;
                rep.per_point_witnesses.push_back({static_cast<int>(j), g, signed_residue(e.a, n)});
                break;
            }
        }
    }
    rep.fixed_count_cuspidal = cuspidal_fixed_count(action, candidate.matrix);
    return rep;
}

int involution_quotient_genus(int genus, int fixed_count) {
    int num = 2 * genus + 2 - fixed_count;
    if (fixed_count < 0 || num < 0 || num % 4 != 0)
        throw ParityViolation("fixed count " + std::to_string(fixed_count) + " impossible in genus " +
                              std::to_string(genus));
    return num / 4;
}

int castelnuovo_bound(int n1, int g1, int n2, int g2) {
    if (n1 < 1 || n2 < 1) throw InvalidInput("castelnuovo_bound: degrees must be positive");
    return n1 * g1 + n2 * g2 + (n1 - 1) * (n2 - 1);
}

}  // namespace modcurve
