#include <doctest.h>

#include "modcurve/atkinlehner.hpp"
#include "modcurve/congruence.hpp"

using namespace modcurve;

TEST_CASE("diamond operators") {
    for (i64 n : {24, 34, 65}) {
        for (i64 a : unit_group(static_cast<int>(n)).elements) {
            IntMat2 m = diamond(a, n);
            CHECK(m.det() == 1);
            CHECK(mod(m.a - a, n) == 0);
            CHECK(mod(m.c, n) == 0);
        }
    }
    CHECK(is_member(diamond(1, 34), full_group(34)));
    CHECK_THROWS_AS(diamond(2, 34), NotCoprime);
    auto d2 = intermediate_subgroups(24)[1];
    CHECK(d2.display() == "±{1,7}");
    CHECK(automorphism_order(diamond(5, 24), d2) == 2);
}

TEST_CASE("diamond order equals the order of its class in the quotient") {
    for (int n : {21, 35, 56, 63}) {
        for (const auto& d : intermediate_subgroups(n)) {
            for (i64 a : d.coset_representatives()) {
                int k = 1;
                i64 x = a;
                while (!d.contains(x)) {
                    x = mod(x * a, n);
                    ++k;
                }
                CHECK(automorphism_order(diamond(a, n), d) == k);
            }
        }
    }
}

TEST_CASE("t_map") {
    CHECK(t_map(65, 65, 8) == inverse_mod(8, 65).value());
    auto s = intermediate_subgroups(65);
    auto img = t_image(5, s[0]);
    CHECK(img == s[2].elements());
    CHECK_FALSE(descends(5, s[0]));
    CHECK(descends(5, s[1]));
    for (int n : {35, 56, 65, 120})
        for (i64 d : hall_divisors(n))
            for (i64 a : unit_group(n).elements) {
                CHECK(t_map(d, n, t_map(d, n, a)) == a);
                CHECK(t_map(d, n, t_map(n / d, n, a)) == inverse_mod(a, n).value_or(0) % n);
            }
}

TEST_CASE("descent is symmetric in d and N/d") {
    for (int n = 3; n <= 131; ++n)
        for (const auto& delta : intermediate_subgroups(n))
            for (i64 d : hall_divisors(n)) CHECK(descends(d, delta) == descends(n / d, delta));
}

TEST_CASE("canonical Atkin-Lehner matrices") {
    CHECK(hat_W_matrix(35, 35).value() == IntMat2{0, -1, 35, 0});
    CHECK(hat_W_matrix(5, 35).value() == IntMat2{10, -3, 35, -10});
    auto d2 = resolve_delta(34, "D2");
    REQUIRE(hat_W(2, d2).has_value());
    auto s65 = intermediate_subgroups(65);
    CHECK_THROWS_AS(hat_W(5, s65[0]), DoesNotDescend);
    IntMat2 g = generic_W(7, 56);
    CHECK(g.det() == 7);
    CHECK(atkin_lehner_type(g, 56) == 7);
    CHECK(atkin_lehner_type(diamond(3, 56), 56) == 1);
}

TEST_CASE("canonical matrices are elliptic and normalize the group") {
    for (int n = 3; n <= 80; ++n) {
        for (const auto& delta : intermediate_subgroups(n)) {
            CosetAction action(delta);
            for (i64 d : hall_divisors(n)) {
                if (d == 1 || !descends(d, delta)) continue;
                auto w = hat_W(d, delta);
                if (!w) continue;
                CHECK(w->det() == d);
                CHECK(w->trace() * w->trace() < 4 * w->det());
                if (d > 3) CHECK(w->trace() == 0);
                CHECK(normalizes(*w, action));
            }
        }
    }
}

TEST_CASE("the Fricke involution inverts diamonds") {
    for (int n : {21, 29, 41, 55}) {
        IntMat2 w = hat_W_matrix(n, n).value();
        for (const auto& delta : intermediate_subgroups(n)) {
            for (i64 a : unit_group(n).elements) {
                IntMat2 lhs = w * diamond(a, n) * w.adj();
                IntMat2 rhs = diamond(inverse_mod(a, n).value(), n);
                IntMat2 q;
                REQUIRE(scale_to_sl2(lhs * rhs.adj(), q));
                CHECK(is_member(q, delta));
                CHECK(automorphism_order(diamond(a, n) * w, delta) == 2);
            }
        }
    }
}

TEST_CASE("automorphism orders") {
    auto s35 = intermediate_subgroups(35);
    IntMat2 w5 = hat_W(5, s35[1]).value();
    IntMat2 w35 = hat_W(35, s35[1]).value();
    CHECK(automorphism_order(w5 * w35, s35[1]) == 8);
    auto s55 = intermediate_subgroups(55);
    CHECK(automorphism_order({11, 2, 55, 11}, s55[2]) == 4);
    auto s65 = intermediate_subgroups(65);
    IntMat2 w = generic_W(5, 65);
    CHECK(automorphism_order(w, s65[1]).value() > 2);
    CHECK_FALSE(automorphism_order({2, 1, 0, 1}, s65[1], 24).has_value());
}

TEST_CASE("Fricke field degree") {
    CHECK(fricke_field_degree(full_group(37)) == 1);
    CHECK(fricke_field_degree(intermediate_subgroups(37)[3]) == 2);
    CHECK(fricke_field_degree(intermediate_subgroups(41)[3]) == 2);
}

TEST_CASE("element names") {
    auto e = atkin_lehner(26, 26);
    CHECK(e.name() == "Ŵ26");
    NormalizerElement x;
    x.matrix = {1, 0, 14, 1};
    x.base = x.matrix;
    CHECK(x.name() == "[[1,0],[14,1]]");
}
