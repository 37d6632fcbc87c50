#include <doctest.h>

#include "prymcover/cover.hpp"
#include "prymcover/oracles.hpp"

using namespace prym;

TEST_CASE("total genus") {
    CHECK(total_genus(CoverDatum(2, AbGroup({3}))) == 4);
    CHECK(total_genus(CoverDatum(2, AbGroup())) == 2);
    CHECK(total_genus(CoverDatum(3, normalize_group({2, 2}))) == 9);
    // Euler-characteristic oracle across a grid.
    for (const AbGroup& G : abelian_groups_up_to(12))
        for (long g = 2; g <= 6; ++g)
            CHECK(total_genus(CoverDatum(g, G)) ==
                  oracle::total_genus_euler(G.order(), g));
    CHECK_THROWS_AS(CoverDatum(1, AbGroup({3})), std::invalid_argument);
}

TEST_CASE("h1 of the cover") {
    CoverDatum d(2, AbGroup({3}));
    GHodge h1 = h1_cover(d);
    for (const GChar& chi : characters(d.group)) {
        long expect = chi.is_trivial() ? 2 : 1;
        CHECK(h1.mult(chi, 1, 0) == expect);
        CHECK(h1.mult(chi, 0, 1) == expect);
    }
    CHECK(h1.total_dim() == 2 * total_genus(d));

    // Multiplicity g'-1 = 2 at genus 3 for nontrivial characters.
    for (long m : {2L, 3L, 5L}) {
        GHodge h = h1_cover(CoverDatum(3, AbGroup({m})));
        for (const GChar& chi : characters(AbGroup({m}))) {
            if (chi.is_trivial()) continue;
            CHECK(h.mult(chi, 1, 0) == 2);
        }
    }

    // Trivial group: H^1 of the base curve alone.
    GHodge ht = h1_cover(CoverDatum(4, AbGroup()));
    CHECK(ht.total_dim() == 8);
}

TEST_CASE("prym ledger") {
    PrymLedger l3 = prym_ledger(CoverDatum(2, AbGroup({3})));
    CHECK(l3.prym_dim == 2);
    CHECK(l3.total_genus == 4);

    PrymLedger l4 = prym_ledger(CoverDatum(3, AbGroup({4})));
    CHECK(l4.per_orbit_dims == std::vector<long>{2, 4});
    CHECK(l4.prym_dim == 6);

    CHECK(prym_ledger(CoverDatum(2, AbGroup())).prym_dim == 0);

    for (const AbGroup& G : abelian_groups_up_to(12)) {
        for (long g = 2; g <= 5; ++g) {
            PrymLedger l = prym_ledger(CoverDatum(g, G));
            long sum = 0;
            for (long x : l.per_orbit_dims) sum += x;
            CHECK(g + sum == l.total_genus);
            CHECK(is_hodge_space(l.weil).is_hodge);
        }
    }
}

TEST_CASE("schoen primitive") {
    SchoenPrimitive s33 = schoen_primitive(CoverDatum(3, AbGroup({3})));
    CHECK(s33.b_prim_dim == 4);  // the Weil abelian fourfold for Q(mu_3)
    SchoenPrimitive s34 = schoen_primitive(CoverDatum(3, AbGroup({4})));
    CHECK(s34.b_prim_dim == 4);  // for Q(i)
    SchoenPrimitive s22 = schoen_primitive(CoverDatum(2, AbGroup({2})));
    CHECK(s22.b_prim_dim == 1);
    CHECK(s22.u_prim_dim == 1);
    for (const auto& [k, m] : s33.tangent_multiplicities) CHECK(m == 2);
    CHECK_THROWS_AS(schoen_primitive(CoverDatum(2, normalize_group({2, 2}))),
                    std::invalid_argument);
}

TEST_CASE("group lattice skeleton") {
    // Z/3, h = 2: |N| = 3 inside 9, index 3.
    auto r3 = group_lattice_check(CoverDatum(2, AbGroup({3})));
    CHECK(r3.ok);
    CHECK(r3.n_size == 3);
    CHECK(r3.index == 3);
    CHECK(r3.antidiagonal_in_kernel);

    auto r2 = group_lattice_check(CoverDatum(2, AbGroup({2})));
    CHECK(r2.n_size == 2);  // N = {(0,0), (1,1)}
    CHECK(r2.index == 2);

    auto rv4 = group_lattice_check(CoverDatum(2, normalize_group({2, 2})));
    CHECK(rv4.index == 4);
    CHECK(rv4.n_size == 4);

    CHECK_THROWS_AS(group_lattice_check(CoverDatum(5, AbGroup({12})), 1000000),
                    std::length_error);
}
