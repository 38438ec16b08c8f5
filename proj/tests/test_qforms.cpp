#include <doctest.h>

#include "modcurve/qforms.hpp"
#include "oracles.hpp"

using namespace modcurve;

TEST_CASE("reduction") {
    auto r = reduce({1, 0, 2});
    CHECK(r.form == QForm{1, 0, 2});
    CHECK(r.gamma == kI);
    CHECK(reduce({34, 20, 3}).form == QForm{1, 0, 2});
    CHECK(reduce({34, 26, 5}).form == QForm{1, 0, 1});
    auto s = reduce({34, -26, 5});
    CHECK(QForm{34, -26, 5}.compose(s.gamma) == s.form);
    CHECK(s.gamma.det() == 1);
    CHECK_THROWS_AS(reduce({-1, 0, -1}), NotPositiveDefinite);
    CHECK(is_reduced({2, 2, 3}));
    CHECK_FALSE(is_reduced({2, -2, 3}));
    CHECK_FALSE(is_reduced({3, 1, 2}));
    CHECK(QForm{2, 2, 4}.content() == 2);
    CHECK(QForm{2, 2, 4}.primitive() == QForm{1, 1, 2});
    CHECK(QForm{34, 20, 3}.str() == "[34,20,3]");
}

TEST_CASE("reduced classes match an exhaustive scan") {
    CHECK(reduced_classes(-4) == std::vector<QForm>{{1, 0, 1}});
    CHECK(reduced_classes(-8) == std::vector<QForm>{{1, 0, 2}});
    CHECK(reduced_classes(-3) == std::vector<QForm>{{1, 1, 1}});
    CHECK_THROWS_AS(reduced_classes(-5), BadDiscriminant);
    CHECK_THROWS_AS(reduced_classes(4), BadDiscriminant);
    for (i64 disc = -3; disc >= -524; --disc) {
        if (!is_discriminant(disc)) continue;
        auto got = reduced_classes(disc);
        auto want = oracle::class_forms(disc);
        std::vector<QForm> w;
        for (const auto& f : want) w.push_back({f.p, f.q, f.r});
        std::sort(got.begin(), got.end());
        std::sort(w.begin(), w.end());
        CHECK(got == w);
    }
}

TEST_CASE("root stabilizers") {
    auto s = root_stabilizer({1, 0, 1});
    REQUIRE(s.has_value());
    CHECK(s->trace() == 0);
    CHECK(QForm{1, 0, 1}.compose(*s) == QForm{1, 0, 1});
    CHECK(root_stabilizer({1, 1, 1}).has_value());
    CHECK_FALSE(root_stabilizer({1, 0, 2}).has_value());
}

TEST_CASE("beta candidates") {
    auto b = beta_candidates(34, 2);
    std::set<std::pair<i64, i64>> got;
    for (const auto& c : b) got.insert({c.beta, c.disc});
    CHECK(got.count({20, -8}));
    CHECK(got.count({48, -8}));
    CHECK(got.count({26, -4}));
    CHECK(got.count({42, -4}));
    CHECK(got.size() == 4);
    for (const auto& c : b) CHECK(mod(c.beta * c.beta - c.disc, 4 * 34) == 0);

    std::set<i64> discs;
    for (const auto& c : beta_candidates(39, 3)) discs.insert(c.disc);
    CHECK(discs == std::set<i64>{-12, -3});
}

TEST_CASE("GKZ strata") {
    auto a = gkz_decompose(-8, 34, 20);
    REQUIRE(a.size() == 1);
    CHECK(a[0].m1 == 1);
    CHECK(a[0].m2 == 1);
    CHECK(class_representative(a[0]) == QForm{34, 20, 3});
    auto b = gkz_decompose(-4, 34, mod(-26, 68));
    REQUIRE(b.size() == 1);
    CHECK(class_representative(b[0]) == QForm{34, -26, 5});
    auto t = gkz_decompose(-4, 1, 0);
    REQUIRE(t.size() == 1);
    CHECK(reduce(class_representative(t[0])).form == QForm{1, 0, 1});

    bool saw_layer = false;
    for (i64 n : {7, 13, 39})
        for (i64 beta = 0; beta < 2 * n; ++beta) {
            if (mod(beta * beta + 12, 4 * n) != 0) continue;
            for (const auto& c : gkz_decompose(-12, n, beta)) {
                if (c.ell == 2) {
                    saw_layer = true;
                    CHECK(c.layer_disc() == -3);
                }
                QForm f = class_representative(c).scaled(c.ell);
                CHECK(f.p % n == 0);
                CHECK(mod(f.q - beta, 2 * n) == 0);
                CHECK(f.disc() == -12);
            }
        }
    CHECK(saw_layer);
}

TEST_CASE("fixed points of W2 on X0(34)") {
    auto s = fixed_points_X0(34, 2);
    REQUIRE(s.count() == 4);
    std::vector<QForm> forms;
    std::vector<IntMat2> mats;
    for (const auto& p : s.points) {
        forms.push_back(p.form);
        mats.push_back(p.matrix);
    }
    CHECK(forms == std::vector<QForm>{{34, 20, 3}, {34, -20, 3}, {34, 26, 5}, {34, -26, 5}});
    CHECK(mats == std::vector<IntMat2>{{-10, -3, 34, 10}, {10, -3, 34, -10}, {-12, -5, 34, 14}, {14, -5, 34, -12}});
}

TEST_CASE("fixed point sets satisfy their structural invariants") {
    CHECK(fixed_points_X0(21, 7).count() == 0);
    for (i64 n = 2; n <= 131; ++n)
        for (i64 d : hall_divisors(n)) {
            if (d == 1) continue;
            auto s = fixed_points_X0(n, d);
            for (const auto& p : s.points) {
                CHECK(p.matrix.det() == d);
                CHECK(mod(p.matrix.c, n) == 0);
                CHECK(p.matrix.trace() * p.matrix.trace() < 4 * d);
                if (d > 3) CHECK(p.matrix.trace() == 0);
                CHECK(p.form.p % n == 0);
                CHECK((p.form.disc() == -4 * d || p.form.disc() == d * d - 4 * d));
                CHECK(p.matrix.c == p.form.p);
            }
        }
}

TEST_CASE("elliptic element from a form") {
    CHECK(elliptic_element({34, 20, 3}, 2) == IntMat2{-10, -3, 34, 10});
    CHECK(elliptic_element({34, -26, 5}, 2) == IntMat2{14, -5, 34, -12});
}
