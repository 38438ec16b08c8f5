#include "modcurve/qforms.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace modcurve {

namespace {

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i64 gcd3(i64 a, i64 b, i64 c) {
    return std::gcd(std::gcd(std::llabs(a), std::llabs(b)), std::llabs(c));
}

}  // namespace

i64 QForm::content() const { return gcd3(p, q, r); }

QForm QForm::primitive() const {
    i64 g = content();
    if (g == 0) return *this;
    return {p / g, q / g, r / g};
}

QForm QForm::compose(const IntMat2& m) const {
    return {p * m.a * m.a + q * m.a * m.c + r * m.c * m.c,
            2 * p * m.a * m.b + q * (m.a * m.d + m.b * m.c) + 2 * r * m.c * m.d,
            p * m.b * m.b + q * m.b * m.d + r * m.d * m.d};
}

std::string QForm::str() const {
    std::ostringstream os;
    os << '[' << p << ',' << q << ',' << r << ']';
    return os.str();
}

bool is_reduced(const QForm& f) {
    if (!f.positive_definite()) return false;
    if (!(-f.p < f.q && f.q <= f.p)) return false;
    if (f.p > f.r) return false;
    if (f.p == f.r && f.q < 0) return false;
    return true;
}

Reduction reduce(const QForm& f) {
    if (!f.positive_definite()) throw NotPositiveDefinite("reduce: form " + f.str() + " is not positive definite");
    QForm g = f;
    IntMat2 gamma = kI;
    for (;;) {
        if (!(-g.p < g.q && g.q <= g.p)) {
            i64 k = floor_div(g.p - g.q, 2 * g.p);
            IntMat2 t{1, k, 0, 1};
            g = g.compose(t);
            gamma = gamma * t;
            continue;
        }
        if (g.p > g.r || (g.p == g.r && g.q < 0)) {
            g = g.compose(kS);
            gamma = gamma * kS;
            continue;
        }
        return {g, gamma};
    }
}

bool is_discriminant(i64 disc) {
    return disc < 0 && (mod(disc, 4) == 0 || mod(disc, 4) == 1);
}

std::vector<QForm> reduced_classes(i64 disc) {
    if (!is_discriminant(disc)) throw BadDiscriminant("not a negative discriminant: " + std::to_string(disc));
    std::vector<QForm> out;
    for (i64 a = 1; 3 * a * a <= -disc; ++a)
        for (i64 b = -a + 1; b <= a; ++b) {
            i64 num = b * b - disc;
            if (num % (4 * a)) continue;
            i64 c = num / (4 * a);
            QForm f{a, b, c};
            if (is_reduced(f) && f.content() == 1) out.push_back(f);
        }
    return out;
}

std::optional<IntMat2> root_stabilizer(const QForm& f) {
    QForm g = f.primitive();
    i64 d = g.disc();
    if (d == -4) return IntMat2{-g.q / 2, -g.r, g.p, g.q / 2};
    if (d == -3) return IntMat2{(1 - g.q) / 2, -g.r, g.p, (1 + g.q) / 2};
    return std::nullopt;
}

std::vector<BetaCandidate> beta_candidates(i64 n, i64 d) {
    if (d < 1 || !is_hall_divisor(d, n)) throw InvalidInput("beta_candidates: d is not a Hall divisor of N");
    std::vector<BetaCandidate> out;
    i64 disc = -4 * d;
    for (i64 b = 0; b < 2 * n; ++b)
        if (mod(b * b - disc, 4 * n) == 0 && mod(b, 2 * d) == 0) out.push_back({b, disc});
    if (d == 2 || d == 3) {
        disc = d * d - 4 * d;
        for (i64 b = 0; b < 2 * n; ++b)
            if (mod(b * b - disc, 4 * n) == 0 && mod(b, 2 * d) == d) out.push_back({b, disc});
    }
    return out;
}

std::vector<GKZClass> gkz_decompose(i64 disc, i64 n, i64 beta) {
    if (mod(beta * beta - disc, 4 * n) != 0) throw InvalidInput("gkz_decompose: beta^2 != D mod 4N");
    std::vector<GKZClass> out;
    for (i64 l = 1; l * l <= -disc; ++l) {
        if (disc % (l * l) || !is_discriminant(disc / (l * l))) continue;
        i64 dp = disc / (l * l);
        auto classes = reduced_classes(dp);
        for (i64 lam = 0; lam < 2 * n; ++lam) {
            if (mod(l * lam - beta, 2 * n) || mod(lam * lam - dp, 4 * n)) continue;
            i64 m = gcd3(n, lam, (lam * lam - dp) / (4 * n));
            for (i64 m1 : divisors(m)) {
                if (std::gcd(m1, m / m1) != 1) continue;
                for (const auto& f : classes) {
                    GKZClass c;
                    c.disc = disc;
                    c.n = n;
                    c.beta = mod(beta, 2 * n);
                    c.ell = l;
                    c.lambda = lam;
                    c.m = m;
                    c.m1 = m1;
                    c.m2 = m / m1;
                    c.reduced_image = f;
                    out.push_back(c);
                }
            }
        }
    }
    return out;
}

namespace {

i64 prime_power_part(i64 n, i64 m) {
    i64 out = 1;
    for (i64 p : prime_factors(m))
        while (n % p == 0) {
            n /= p;
            out *= p;
        }
    return out;
}

bool matches(const GKZClass& cls, i64 q, i64 pp, i64 r, i64 n1, i64 n2) {
    i64 n = cls.n;
    if (gcd3(pp, q, r) != 1) return false;
    if (gcd3(n, q, pp) != cls.m1 || gcd3(n, q, r) != cls.m2) return false;
    QForm image{pp * n1, q, r * n2};
    return reduce(image).form == cls.reduced_image;
}

}  // namespace

QForm class_representative(const GKZClass& cls) {
    i64 n = cls.n;
    i64 dp = cls.layer_disc();
    i64 n1 = prime_power_part(n, cls.m1);
    i64 n2 = n / n1;
    i64 lo = 0;
    for (i64 bound = 2 * n * 8; bound <= 2 * n * 8 * 1024; bound *= 2) {
        std::vector<i64> qs;
        for (i64 q = mod(cls.lambda, 2 * n) - 2 * n * (bound / (2 * n) + 1); q <= bound; q += 2 * n)
            if (std::llabs(q) <= bound && std::llabs(q) >= lo) qs.push_back(q);
        std::sort(qs.begin(), qs.end(), [](i64 x, i64 y) {
            return std::llabs(x) != std::llabs(y) ? std::llabs(x) < std::llabs(y) : x > y;
        });
        for (i64 q : qs) {
            i64 a = (q * q - dp) / (4 * n);
            for (i64 pp : divisors(a))
                if (matches(cls, q, pp, a / pp, n1, n2)) return {pp * n, q, a / pp};
        }
        lo = bound + 1;
    }
    throw SearchExhausted("class_representative: no form found for stratum");
}

PointKey point_key(const CosetAction& action, const QForm& f) {
    QForm g = f.primitive();
    auto red = reduce(g);
    int best = action.coset_of(red.gamma);
    if (auto s = root_stabilizer(red.form)) {
        IntMat2 x = red.gamma;
        for (int k = 0; k < 3; ++k) {
            x = x * *s;
            best = std::min(best, action.coset_of(x));
        }
    }
    return {red.form, best};
}

IntMat2 elliptic_element(const QForm& f, i64 d) {
    i64 disc = f.disc();
    if (disc == -4 * d) {
        if (f.q % (2 * d)) throw InvalidInput("elliptic_element: middle coefficient not divisible by 2d");
        i64 x = -f.q / (2 * d);
        return {d * x, -f.r, f.p, -d * x};
    }
    if ((d == 2 || d == 3) && disc == d * d - 4 * d) {
        if ((d - f.q) % (2 * d)) throw InvalidInput("elliptic_element: middle coefficient not = d mod 2d");
        i64 x = (d - f.q) / (2 * d);
        return {d * x, -f.r, f.p, d * (1 - x)};
    }
    throw BadDiscriminant("elliptic_element: discriminant is not -4d or d^2-4d");
}

FixedPointSet fixed_points_X0(i64 n, i64 d) {
    if (d < 2 || !is_hall_divisor(d, n)) throw InvalidInput("fixed_points_X0: d must be a Hall divisor >= 2");
    FixedPointSet out;
    out.n = n;
    out.d = d;
    CosetAction action(full_group(static_cast<int>(n)));
    std::set<PointKey> seen;
    for (const auto& bc : beta_candidates(n, d)) {
        for (const auto& cls : gkz_decompose(bc.disc, n, bc.beta)) {
            if (d == 3 && bc.disc == -12 && cls.ell == 2) continue;
            QForm rep = class_representative(cls);
            FixedPoint pt;
            pt.form = rep.scaled(cls.ell);
            pt.matrix = elliptic_element(pt.form, d);
            pt.cls = cls;
            auto s = root_stabilizer(rep);
            pt.elliptic_point = s && mod(s->c, n) == 0;
            if (!seen.insert(point_key(action, pt.form)).second)
                throw InternalError("fixed_points_X0: two strata gave the same point");
            out.points.push_back(pt);
        }
    }
    return out;
}

}  // namespace modcurve
