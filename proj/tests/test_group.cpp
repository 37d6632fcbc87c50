#include <doctest.h>

#include <set>

#include "prymcover/group.hpp"

using namespace prym;

TEST_CASE("normalize_group") {
    CHECK(normalize_group({2, 3}).invariant_factors() == std::vector<long>{6});
    CHECK(normalize_group({4}).invariant_factors() == std::vector<long>{4});
    CHECK(normalize_group({2, 2, 4}).invariant_factors() == std::vector<long>{2, 2, 4});
    CHECK(normalize_group({4, 6}).invariant_factors() == std::vector<long>{2, 12});
    CHECK(normalize_group({2, 2, 4}).order() == 16);
    CHECK_THROWS_AS(normalize_group({1}), std::invalid_argument);
    CHECK_THROWS_AS(normalize_group({}), std::invalid_argument);
    // Idempotent on normalized input.
    auto g = normalize_group({2, 6, 12});
    CHECK(normalize_group(g.invariant_factors()) == g);
}

TEST_CASE("abelian group enumeration") {
    CHECK(abelian_groups_of_order(8).size() == 3);   // Z8, Z2xZ4, Z2^3
    CHECK(abelian_groups_of_order(12).size() == 2);  // Z12, Z2xZ6
    CHECK(abelian_groups_of_order(7).size() == 1);
    for (const AbGroup& G : abelian_groups_up_to(16))
        CHECK(static_cast<long>(g_elements(G).size()) == G.order());
}

TEST_CASE("characters") {
    AbGroup z2({2});
    auto chars2 = characters(z2);
    REQUIRE(chars2.size() == 2);
    CHECK(chars2[0].is_trivial());
    CHECK(chars2[1].eval(GElem{{1}}) == CycloNum(Rat(-1)));

    AbGroup v4 = normalize_group({2, 2});
    auto chars4 = characters(v4);
    REQUIRE(chars4.size() == 4);
    for (const GChar& chi : chars4)
        for (const GElem& x : g_elements(v4)) {
            CycloNum v = chi.eval(x);
            CHECK((v == CycloNum(Rat(1)) || v == CycloNum(Rat(-1))));
        }

    AbGroup z4({4});
    std::multiset<long> orders;
    for (const GChar& chi : characters(z4)) orders.insert(chi.order());
    CHECK(orders == std::multiset<long>{1, 2, 4, 4});
}

TEST_CASE("galois orbits and fields") {
    AbGroup z4({4});
    auto orbits4 = galois_orbits(z4);
    REQUIRE(orbits4.size() == 3);
    CHECK(orbits4[0].is_trivial());
    CHECK(orbits4[1].field_conductor == 2);
    CHECK(orbits4[2].field_conductor == 4);
    CHECK(orbits4[2].orbit.size() == 2);

    auto orbits_v4 = galois_orbits(normalize_group({2, 2}));
    CHECK(orbits_v4.size() == 4);
    for (const auto& o : orbits_v4) CHECK(o.dim_over_Q() == 1);

    auto orbits6 = galois_orbits(AbGroup({6}));
    std::vector<long> conductors, dims;
    for (const auto& o : orbits6) {
        conductors.push_back(o.field_conductor);
        dims.push_back(o.dim_over_Q());
    }
    CHECK(conductors == std::vector<long>{1, 2, 3, 6});
    CHECK(dims == std::vector<long>{1, 1, 2, 2});
}

TEST_CASE("rational idempotents") {
    AbGroup z2({2});
    auto orbits = galois_orbits(z2);
    // Sign character of Z/2: (1 - sigma)/2.
    CHECK(orbits[1].idempotent == std::vector<Rat>{Rat(1, 2), Rat(-1, 2)});
    // Trivial orbit: the averaging idempotent.
    CHECK(orbits[0].idempotent == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});

    // Order-4 orbit of Z/4: (1 - sigma^2)/2.
    auto orbits4 = galois_orbits(AbGroup({4}));
    CHECK(orbits4[2].idempotent ==
          std::vector<Rat>{Rat(1, 2), Rat(0), Rat(-1, 2), Rat(0)});
}

TEST_CASE("split_group_algebra") {
    // Z/3 -> Q x Q(zeta_3).
    auto s3 = split_group_algebra(AbGroup({3}));
    REQUIRE(s3.nontrivial_factors.size() == 1);
    CHECK(s3.nontrivial_factors[0].field_conductor == 3);
    CHECK(s3.dim_nontrivial() == 2);

    // Z/2 x Z/2 -> Q^4.
    auto sv4 = split_group_algebra(normalize_group({2, 2}));
    CHECK(sv4.nontrivial_factors.size() == 3);
    CHECK(sv4.dim_nontrivial() == 3);

    // Z/8 -> Q x Q x Q(zeta_4) x Q(zeta_8).
    auto s8 = split_group_algebra(AbGroup({8}));
    std::vector<long> dims{s8.trivial_factor.dim_over_Q()};
    for (const auto& o : s8.nontrivial_factors) dims.push_back(o.dim_over_Q());
    CHECK(dims == std::vector<long>{1, 1, 2, 4});
}

TEST_CASE("orthogonality and completeness for |G| <= 16") {
    for (const AbGroup& G : abelian_groups_up_to(16)) {
        auto elems = g_elements(G);
        auto chars = characters(G);
        // Character orthogonality (spot-check the full |G| <= 16 range;
        // the verify grid runs it exhaustively as well).
        for (const GChar& chi : chars) {
            for (const GChar& psi : chars) {
                CycloNum sum;
                for (const GElem& x : elems) sum = sum + chi.eval(x) * psi.eval(g_neg(G, x));
                CHECK(sum == CycloNum(Rat(chi == psi ? G.order() : 0)));
            }
        }
        // split_group_algebra throws if idempotent completeness or
        // orthogonality fails.
        auto split = split_group_algebra(G);
        CHECK(split.dim_nontrivial() == G.order() - 1);
    }
}
