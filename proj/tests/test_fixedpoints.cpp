#include <doctest.h>

#include <set>

#include "modcurve/atkinlehner.hpp"
#include "modcurve/fixedpoints.hpp"
#include "modcurve/qforms.hpp"

using namespace modcurve;

TEST_CASE("lifting W2 to X_D2(34)") {
    auto delta = resolve_delta(34, "D2");
    CosetAction action(delta);
    auto base = fixed_points_X0(34, 2);
    NormalizerElement cand = atkin_lehner(2, 34);
    cand.matrix = base.points.front().matrix;
    cand.hat = false;
    auto rep = lift_fixed_points(action, cand, base);
    CHECK(rep.total() == 8);
    CHECK(rep.fixed_count_cuspidal == 0);
    std::multiset<i64> a;
    for (const auto& w : rep.per_point_witnesses) a.insert(w.a_class);
    CHECK(a == std::multiset<i64>{1, 1, -1, -1, 15, 15, 9, 9});
    CHECK(orbit_fixed_points(action, cand.matrix).total() == 8);
    CHECK(orbit_fixed_points(action, atkin_lehner(2, 34).matrix).total() == 8);
}

TEST_CASE("negative control on X_D3(64)") {
    auto delta = intermediate_subgroups(64)[2];
    CosetAction action(delta);
    IntMat2 w = hat_W(64, delta).value();
    CHECK(orbit_fixed_points(action, w).total() == 4);
    CHECK(orbit_fixed_points(action, diamond(3, 64) * w).total() == 4);
    IntMat2 e{1, 0, 32, 1};
    CHECK(normalizes(e, action));
    CHECK(orbit_fixed_points(action, e).total() == 8);
}

TEST_CASE("W9 on X_D4(45)") {
    auto delta = intermediate_subgroups(45)[3];
    CosetAction action(delta);
    auto base = fixed_points_X0(45, 9);
    auto rep = lift_fixed_points(action, atkin_lehner(9, 45), base);
    CHECK(rep.total() == 8);
}

TEST_CASE("cuspidal fixed points") {
    for (int n : {29, 31, 37}) {
        for (const auto& delta : intermediate_subgroups(n)) {
            CosetAction action(delta);
            CHECK(cuspidal_fixed_count(action, hat_W_matrix(n, n).value()) == 0);
            for (const auto& c : cusps(action))
                CHECK(cusp_image(action, hat_W_matrix(n, n).value(), c.index) != c.index);
        }
    }
}

TEST_CASE("conservation of points above the base") {
    for (int n : {34, 45, 35}) {
        for (i64 d : hall_divisors(n)) {
            if (d == 1 || d == 3 || d == 4) continue;
            auto base = fixed_points_X0(n, d);
            for (const auto& delta : intermediate_subgroups(n)) {
                if (!descends(d, delta)) continue;
                CosetAction action(delta);
                NormalizerElement w = atkin_lehner(d, n);
                int sum = 0;
                for (i64 g : delta.coset_representatives()) {
                    NormalizerElement c = w;
                    c.matrix = diamond(g, n) * w.matrix;
                    c.diamond = g;
                    sum += lift_fixed_points(action, c, base).fixed_count_elliptic;
                }
                CHECK(sum == static_cast<int>(delta.index() * base.count()));
            }
        }
    }
}

TEST_CASE("Hurwitz helpers") {
    CHECK(involution_quotient_genus(9, 16) == 1);
    CHECK(involution_quotient_genus(5, 8) == 1);
    CHECK(involution_quotient_genus(3, 8) == 0);
    CHECK_THROWS_AS(involution_quotient_genus(5, 7), ParityViolation);
    CHECK(castelnuovo_bound(3, 1, 2, 1) == 7);
    CHECK(castelnuovo_bound(1, 4, 1, 4) == 8);
    CHECK(castelnuovo_bound(7, 1, 2, 1) == 15);
    CHECK(signed_residue(33, 34) == -1);
    CHECK(signed_residue(17, 34) == 17);
}
