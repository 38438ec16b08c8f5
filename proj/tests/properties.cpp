#include "properties.hpp"

#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "modcurve/atkinlehner.hpp"
#include "modcurve/congruence.hpp"
#include "modcurve/fixedpoints.hpp"
#include "modcurve/qforms.hpp"
#include "oracles.hpp"

using namespace modcurve;

namespace props {

namespace {

std::string where(int n, const DeltaSubgroup& d) {
    std::ostringstream os;
    os << "N=" << n << " Delta=" << d.display();
    return os.str();
}

IntMat2 random_sl2(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<int> k(-bound, bound);
    IntMat2 m = kI;
    for (int step = 0; step < 6; ++step) {
        int e = k(rng);
        switch (pick(rng)) {
        case 0: m = m * IntMat2{1, e, 0, 1}; break;
        case 1: m = m * IntMat2{1, 0, e, 1}; break;
        case 2: m = m * kS; break;
        default: m = m * IntMat2{1, -e, 0, 1}; break;
        }
    }
    return m;
}

struct Matrix {
    i64 a, b, c, d;
    auto operator<=>(const Matrix&) const = default;
};

}  // namespace

Outcome involution_parity(int max_n) {
    Outcome out;
    for (int n = 3; n <= max_n; ++n) {
        for (const auto& delta : subgroups_containing_minus1(n)) {
            CosetAction action(delta);
            int g = action.genus();
            for (i64 d : hall_divisors(n)) {
                if (!descends(d, delta)) continue;
                IntMat2 w = d == 1 ? kI : atkin_lehner(d, n).matrix;
                for (i64 a : delta.coset_representatives()) {
                    IntMat2 m = a == 1 ? w : diamond(a, n) * w;
                    if (automorphism_order(m, delta) != 2) continue;
                    int r = orbit_fixed_points(action, m).total();
                    ++out.checks;
                    if (r < 0 || r > 2 * g + 2 || (2 * g + 2 - r) % 4 != 0)
                        out.fail(where(n, delta) + " d=" + std::to_string(d) + " a=" + std::to_string(a) +
                                 " r=" + std::to_string(r) + " g=" + std::to_string(g));
                }
            }
        }
    }
    return out;
}

Outcome reduction_invariance(long min_disc, int transforms) {
    Outcome out;
    std::mt19937_64 rng(20240131);
    for (i64 disc = -3; disc >= min_disc; --disc) {
        if (!is_discriminant(disc)) continue;
        auto classes = reduced_classes(disc);
        for (int t = 0; t < transforms; ++t) {
            const QForm& f = classes[t % classes.size()];
            IntMat2 g = random_sl2(rng, 6);
            QForm h = f.compose(g);
            auto r = reduce(h);
            ++out.checks;
            auto o = oracle::gauss_reduce({h.p, h.q, h.r});
            bool ok = r.form == f && reduce(r.form).form == r.form && h.compose(r.gamma) == r.form &&
                      r.gamma.det() == 1 && o == oracle::Form{f.p, f.q, f.r} && is_reduced(r.form);
            if (!ok) out.fail("D=" + std::to_string(disc) + " form " + h.str());
        }
    }
    return out;
}

Outcome cusp_counts(int max_n) {
    Outcome out;
    for (int n = 3; n <= max_n; ++n) {
        for (const auto& delta : subgroups_containing_minus1(n)) {
            CosetAction action(delta);
            int brute = oracle::cusp_orbits(n, delta.elements());
            auto list = cusps(action);
            ++out.checks;
            if (action.cusp_count() != brute || static_cast<int>(list.size()) != brute)
                out.fail(where(n, delta) + " cycles=" + std::to_string(action.cusp_count()) +
                         " brute=" + std::to_string(brute));
        }
    }
    return out;
}

Outcome descent_symmetry(int max_n) {
    Outcome out;
    for (int n = 3; n <= max_n; ++n)
        for (const auto& delta : subgroups_containing_minus1(n))
            for (i64 d : hall_divisors(n)) {
                ++out.checks;
                if (descends(d, delta) != descends(n / d, delta))
                    out.fail(where(n, delta) + " d=" + std::to_string(d));
            }
    return out;
}

Outcome schreier_regeneration(int max_n) {
    Outcome out;
    for (int n = 3; n <= max_n; ++n) {
        for (const auto& delta : subgroups_containing_minus1(n)) {
            CosetAction action(delta);
            auto gens = schreier_generators(action);
            std::vector<Matrix> red;
            bool members = true;
            for (const auto& g : gens) {
                members &= is_member(g, delta);
                red.push_back({mod(g.a, n), mod(g.b, n), mod(g.c, n), mod(g.d, n)});
            }
            std::set<Matrix> group{{1 % n, 0, 0, 1 % n}};
            std::vector<Matrix> todo{{1 % n, 0, 0, 1 % n}};
            while (!todo.empty()) {
                Matrix x = todo.back();
                todo.pop_back();
                for (const auto& g : red) {
                    Matrix y{(x.a * g.a + x.b * g.c) % n, (x.a * g.b + x.b * g.d) % n, (x.c * g.a + x.d * g.c) % n,
                             (x.c * g.b + x.d * g.d) % n};
                    if (group.insert(y).second) todo.push_back(y);
                }
            }
            std::set<i64> scalars;
            for (const auto& m : group) scalars.insert(m.d);
            std::vector<i64> lower(scalars.begin(), scalars.end());
            // Rows modulo the regenerated scalars must reproduce the coset table.
            std::map<int, std::set<int>> classes;
            bool table = lower == delta.elements() ;
            std::set<std::pair<i64, i64>> seen;
            int count = 0;
            for (i64 c = 0; c < n && table; ++c)
                for (i64 d = 0; d < n && table; ++d) {
                    if (std::gcd(std::gcd(c, d), static_cast<i64>(n)) != 1 || seen.count({c, d})) continue;
                    ++count;
                    int id = action.coset_of_row(c, d);
                    for (i64 s : lower) {
                        seen.insert({s * c % n, s * d % n});
                        table &= action.coset_of_row(s * c % n, s * d % n) == id;
                    }
                }
            ++out.checks;
            bool size_ok = static_cast<i64>(group.size()) == n * static_cast<i64>(delta.order());
            if (!members || !table || !size_ok || count != action.size())
                out.fail(where(n, delta) + " image=" + std::to_string(group.size()) +
                         " classes=" + std::to_string(count) + " cosets=" + std::to_string(action.size()));
        }
    }
    return out;
}

Outcome genus_sweep(int max_n) {
    Outcome out;
    for (int n = 3; n <= max_n; ++n) {
        for (const auto& delta : subgroups_containing_minus1(n)) {
            auto o = oracle::genus_data(n, delta.elements());
            CosetAction action(delta);
            ++out.checks;
            if (action.genus() != o.genus || action.size() != o.index || action.e2() != o.e2 || action.e3() != o.e3)
                out.fail(where(n, delta) + " genus=" + std::to_string(action.genus()) +
                         " oracle=" + std::to_string(o.genus));
        }
    }
    return out;
}

}  // namespace props
