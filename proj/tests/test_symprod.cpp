#include <doctest.h>

#include "prymcover/oracles.hpp"
#include "prymcover/symprod.hpp"

using namespace prym;

TEST_CASE("poincare polynomials of jacobians and symmetric products") {
    CHECK(poincare_jacobian(1).str() == "1,2,1");
    CHECK(poincare_jacobian(2).str() == "1,4,6,4,1");

    CHECK(poincare_sym(1, 2).str() == "1,4,1");       // Sym^1 = the curve
    CHECK(poincare_sym(2, 2).str() == "1,4,7,4,1");   // middle b_2 = 7
    CHECK(poincare_sym(2, 3).str() == "1,6,16,6,1");
    CHECK(poincare_sym(0, 5).str() == "1");

    for (long g = 2; g <= 5; ++g)
        for (long d = 0; d <= 2 * g; ++d)
            CHECK(poincare_sym(d, g).palindromic());

    // High-degree symmetric products are projective bundles over J.
    for (long g = 2; g <= 4; ++g)
        for (long d = 2 * g - 1; d <= 2 * g + 3; ++d)
            CHECK(poincare_sym(d, g) == proj_bundle_cohomology(d, g));
    CHECK_THROWS_AS(proj_bundle_cohomology(2, 2), std::invalid_argument);
}

TEST_CASE("macdonald middle decomposition") {
    MacdonaldDecomposition m2 = macdonald_middle(2);  // d = 2, genus 2
    CHECK(m2.total == 7);  // C(4,2) + C(4,0)
    REQUIRE(m2.summands.size() == 2);
    CHECK(m2.summands[0].wedge_degree == 2);
    CHECK(m2.summands[0].dim == 6);
    CHECK(m2.summands[1].twist == 1);
    CHECK(m2.summands[1].dim == 1);

    CHECK(macdonald_middle(3).total == 31);              // d = 4: 15+15+1
    CHECK(macdonald_middle(4, 2).total == 29);           // C(8,2)+C(8,0)
    // Off-middle degree: total matches the x^3 coefficient of Sym^3.
    CHECK(macdonald_middle(2, 3).total == poincare_sym(3, 2).betti(3));
    CHECK(macdonald_middle(2, 3).total == 8);  // C(4,3) + C(4,1)

    for (long g = 2; g <= 6; ++g) {
        MacdonaldDecomposition m = macdonald_middle(g);
        CHECK(m.total == poincare_sym(2 * g - 2, g).betti(2 * g - 2));
    }
}

TEST_CASE("pushforward layers") {
    PushforwardModel p = aj_pushforward(3);
    using L = PushforwardModel::Layer;
    CHECK(p.layer(0) == L::kFree);
    CHECK(p.layer(1) == L::kZero);
    CHECK(p.layer(2) == L::kFree);
    CHECK(p.layer(4) == L::kSkyscraper);
    CHECK(p.twist(2) == 1);

    // Fibration ledger reproduces the generating-function expansion.
    for (long g = 2; g <= 6; ++g)
        CHECK(oracle::sym_middle_fibration_ledger(g) == poincare_sym(2 * g - 2, g));
}

TEST_CASE("torus local systems") {
    AbGroup G({3});
    auto chis = characters(G);
    CHECK(torus_ls_cohomology(chis[0], 2) == poincare_jacobian(2));
    CHECK(torus_ls_cohomology(chis[1], 2).is_zero());
    CHECK(torus_ls_cohomology(chis[2], 4).is_zero());

    // Circle-complex oracle agrees character by character.
    for (const AbGroup& H : abelian_groups_up_to(8))
        for (const GChar& chi : characters(H))
            for (long g = 2; g <= 4; ++g)
                CHECK(torus_ls_cohomology(chi, g) ==
                      oracle::torus_circle_complex(chi, H, g));
}

TEST_CASE("cohomology of W") {
    CoverDatum d(2, AbGroup({3}));
    WCohomology w = cohomology_of_W(d);
    CHECK(w.middle_degree == 2);
    CHECK(w.betti_sym.str() == "1,4,7,4,1");
    CHECK(w.betti.str() == "1,4,9,4,1");  // middle bumped by |G|-1 = 2

    CHECK(w.isotypic_middle.size() == 2);
    for (const auto& [chi, dim] : w.isotypic_middle) {
        CHECK(!chi.is_trivial());
        CHECK(dim == 1);
    }

    // Genus-3 cover: b_4(Sym^4) = 31, bumped by |G| - 1.
    for (long n : {2L, 3L, 4L}) {
        WCohomology w3 = cohomology_of_W(CoverDatum(3, AbGroup({n})));
        CHECK(w3.betti.betti(4) == 31 + n - 1);
        CHECK(w3.betti.betti(3) == w3.betti_sym.betti(3));  // off-middle untouched
    }

    E2Page e2 = e2_page_nontrivial(d);
    CHECK(e2.entry(0, 2) == 2);
    CHECK(e2.entry(1, 1) == 0);
    CHECK(e2.entry(0, 0) == 0);
    CHECK(e2.total_degree_of_abutment() == 2);
}
