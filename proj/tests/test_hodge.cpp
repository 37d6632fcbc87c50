#include <doctest.h>

#include "prymcover/cover.hpp"
#include "prymcover/hodge.hpp"

using namespace prym;

TEST_CASE("tate twist") {
    AbGroup triv;
    GChar chi(triv, {});
    GHodge q(triv, 0);
    q.set_mult(chi, 0, 0, 1);

    GHodge twisted = q.tate_twist(1);
    CHECK(twisted.weight() == 2);
    CHECK(twisted.mult(chi, 1, 1) == 1);
    CHECK(q.tate_twist(0).table() == q.table());

    // Weight-1 structure shifted by g-1, as the Leray ledger uses.
    GHodge h1(triv, 1);
    h1.set_mult(chi, 1, 0, 2);
    h1.set_mult(chi, 0, 1, 2);
    GHodge shifted = h1.tate_twist(2);
    CHECK(shifted.weight() == 5);
    CHECK(shifted.mult(chi, 3, 2) == 2);
    CHECK(shifted.conjugation_symmetric());
}

TEST_CASE("wedge top over the algebra") {
    // G = Z/3, h = 2, balanced (1,1) per nontrivial character.
    CoverDatum d(2, AbGroup({3}));
    auto claim = FreeModClaim::from_h1(h1_cover(d));
    CHECK(claim.rank == 2);
    WeilSpace w = wedge_top_over_algebra(claim);
    CHECK(dim_weil(w) == 2);  // phi(3)
    for (const auto& piece : w.pieces)
        for (const auto& [chi, pq] : piece.types) CHECK(pq == std::make_pair(1L, 1L));

    // G = Z/2 x Z/2, h = 2 -> Q-dimension 3.
    CoverDatum d4(2, normalize_group({2, 2}));
    CHECK(dim_weil(wedge_top_over_algebra(FreeModClaim::from_h1(h1_cover(d4)))) == 3);

    // Non-free input is rejected.
    GHodge bad(AbGroup({3}), 1);
    auto chars = characters(AbGroup({3}));
    bad.set_mult(chars[1], 1, 0, 1);
    bad.set_mult(chars[1], 0, 1, 1);
    bad.set_mult(chars[2], 1, 0, 2);
    bad.set_mult(chars[2], 0, 1, 2);
    CHECK_THROWS_AS(FreeModClaim::from_h1(bad), std::invalid_argument);
}

TEST_CASE("is_hodge_space") {
    // Balanced input from the cover model.
    CoverDatum d(3, AbGroup({4}));
    WeilSpace w = wedge_top_over_algebra(FreeModClaim::from_h1(h1_cover(d)));
    CHECK(is_hodge_space(w).is_hodge);
    CHECK(dim_weil(w) == 3);

    // Adversarial table: all of the multiplicity on the (1,0) side.
    GHodge skew(AbGroup({3}), 1);
    auto chars = characters(AbGroup({3}));
    for (const GChar& chi : chars) {
        if (chi.is_trivial()) continue;
        skew.set_mult(chi, 1, 0, 2);
    }
    auto witness = is_hodge_space(wedge_top_over_algebra(FreeModClaim::from_h1(skew)));
    CHECK_FALSE(witness.is_hodge);
    CHECK_FALSE(witness.failures.empty());

    // Trivial group: vacuously a Hodge space.
    CoverDatum dt(2, AbGroup());
    CHECK(is_hodge_space(wedge_top_over_algebra(FreeModClaim::from_h1(h1_cover(dt)))).is_hodge);
}

TEST_CASE("dim_weil across small groups") {
    CHECK(dim_weil(wedge_top_over_algebra(
              FreeModClaim::from_h1(h1_cover(CoverDatum(2, AbGroup({3})))))) == 2);
    CHECK(dim_weil(wedge_top_over_algebra(FreeModClaim::from_h1(
              h1_cover(CoverDatum(2, normalize_group({2, 2})))))) == 3);
    CHECK(dim_weil(wedge_top_over_algebra(
              FreeModClaim::from_h1(h1_cover(CoverDatum(2, AbGroup({6})))))) == 5);
    for (const AbGroup& G : abelian_groups_up_to(16))
        for (long g = 2; g <= 6; ++g)
            CHECK(dim_weil(wedge_top_over_algebra(
                      FreeModClaim::from_h1(h1_cover(CoverDatum(g, G))))) ==
                  G.order() - 1);
}
