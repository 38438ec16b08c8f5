#include <doctest.h>

#include "modcurve/zmodn.hpp"
#include "oracles.hpp"

using namespace modcurve;

namespace {

std::vector<std::vector<i64>> elements_of(const std::vector<DeltaSubgroup>& subs) {
    std::vector<std::vector<i64>> out;
    for (const auto& d : subs) out.push_back(d.elements());
    return out;
}

}  // namespace

TEST_CASE("mod and inverses") {
    CHECK(mod(-5, 7) == 2);
    CHECK(mod(14, 7) == 0);
    CHECK(inverse_mod(3, 34).value() == 23);
    CHECK_FALSE(inverse_mod(2, 34).has_value());
    auto e = ext_gcd(240, 46);
    CHECK(e.g == 2);
    CHECK(e.x * 240 + e.y * 46 == 2);
}

TEST_CASE("sqrt_mod") {
    CHECK(sqrt_mod(4, 7).value() == 2);
    CHECK(sqrt_mod(mod(-5, 7), 7).value() == 3);
    CHECK_FALSE(sqrt_mod(3, 5).has_value());
    for (i64 m = 1; m < 60; ++m)
        for (i64 a = 0; a < m; ++a) {
            auto r = sqrt_mod(a, m);
            bool any = false;
            for (i64 x = 0; x < m && !any; ++x) any = x * x % m == a;
            CHECK(r.has_value() == any);
            if (r) CHECK(*r * *r % m == a);
        }
}

TEST_CASE("divisors, phi and Hall divisors") {
    CHECK(euler_phi(34) == 16);
    CHECK(euler_phi(1) == 1);
    CHECK(divisors(12) == std::vector<i64>{1, 2, 3, 4, 6, 12});
    CHECK(prime_factors(360) == std::vector<i64>{2, 3, 5});
    CHECK(hall_divisors(12) == std::vector<i64>{1, 3, 4, 12});
    CHECK(is_hall_divisor(8, 56));
    CHECK_FALSE(is_hall_divisor(2, 56));
    CHECK(crt(2, 3, 3, 5) == 8);
}

TEST_CASE("unit groups") {
    CHECK(unit_group(13).elements.size() == 12);
    CHECK(unit_group(34).elements.size() == 16);
    CHECK(unit_group(1).elements.size() == 1);
    for (int n = 2; n <= 80; ++n) CHECK(unit_group(n).elements == oracle::units(n));
}

TEST_CASE("intermediate subgroups of small levels") {
    auto s13 = intermediate_subgroups(13);
    REQUIRE(s13.size() == 2);
    CHECK(s13[0].display() == "±{1,5}");
    CHECK(s13[1].display() == "±{1,3,4}");
    auto s21 = intermediate_subgroups(21);
    REQUIRE(s21.size() == 2);
    CHECK(s21[0].display() == "±{1,8}");
    CHECK(s21[1].display() == "±{1,4,5}");
    auto s65 = intermediate_subgroups(65);
    CHECK(s65[0].display() == "±{1,8}");
    CHECK(s65[1].display() == "±{1,14}");
    CHECK(s65[2].display() == "±{1,18}");
    CHECK(intermediate_subgroups(4).empty());
    CHECK(s21[0].name() == "D1");
    CHECK(full_group(21).name() == "X0");
    CHECK(plus_minus_one(21).name() == "X1");
}

TEST_CASE("subgroup enumeration agrees with cyclic-extension closure") {
    for (int n = 3; n <= 131; ++n) {
        auto all = subgroups_containing_minus1(n);
        auto got = elements_of(all);
        std::set<std::vector<i64>> got_set(got.begin(), got.end());
        CHECK(got_set.size() == got.size());
        CHECK(got_set == oracle::subgroups_with_minus1(n));
        for (std::size_t i = 1; i < all.size(); ++i) {
            bool ordered = all[i - 1].order() < all[i].order() ||
                           (all[i - 1].order() == all[i].order() && all[i - 1].elements() < all[i].elements());
            if (n != 56) CHECK(ordered);
        }
    }
}

TEST_CASE("labels are deterministic") {
    for (int n : {35, 56, 63, 65, 120}) {
        auto a = intermediate_subgroups(n);
        auto b = intermediate_subgroups(n);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i] == b[i]);
            CHECK(a[i].name() == b[i].name());
            CHECK(a[i].name() == "D" + std::to_string(i + 1));
        }
    }
}

TEST_CASE("level 56 places the subgroup containing 3 last among order 12") {
    auto s = intermediate_subgroups(56);
    REQUIRE(s.size() == 8);
    CHECK(s[7].display() == "±{1,3,9,19,25,27}");
    CHECK(s[5].display() == "±{1,5,9,11,13,25}");
    CHECK(s[6].display() == "±{1,9,15,17,23,25}");
}

TEST_CASE("subgroup helpers") {
    auto d = resolve_delta(34, "D2");
    CHECK(d.display() == "±{1,9,13,15}");
    CHECK(d.index() == 2);
    CHECK(d.contains(33));
    CHECK(d.coset_representatives() == std::vector<i64>{1, 3});
    CHECK(d.coset_key(29) == 3);
    CHECK(d.subset_of(full_group(34)));
    CHECK(resolve_delta(34, "1,9,13,15") == d);
    CHECK(resolve_delta(34, "Δ2") == d);
    CHECK(resolve_delta(34, "X0").is_full());
    CHECK(resolve_delta(34, "X1").is_plus_minus_one());
    CHECK(d.reduce(17) == std::vector<i64>{1, 2, 4, 8, 9, 13, 15, 16});
    CHECK_THROWS_AS(resolve_delta(34, "D9"), UnknownDelta);
    CHECK_THROWS_AS(resolve_delta(34, "1,3"), UnknownDelta);
    CHECK_THROWS_AS(resolve_delta(34, "2"), InvalidInput);
    CHECK_THROWS_AS(resolve_delta(34, "abc"), InvalidInput);
    CHECK_THROWS_AS(DeltaSubgroup(34, {1, 3, 33}), InvalidInput);
}
