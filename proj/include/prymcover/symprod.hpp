#ifndef PRYMCOVER_SYMPROD_HPP
#define PRYMCOVER_SYMPROD_HPP

#include <optional>
#include <string>
#include <vector>

#include "prymcover/cover.hpp"

namespace prym {

// Poincare polynomial: coefficient of x^n = n-th Betti number.
class PoincarePoly {
public:
    PoincarePoly() : coeffs_(1, Int(0)) {}
    explicit PoincarePoly(std::vector<Int> coeffs);

    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int betti(std::size_t n) const {
        return n < coeffs_.size() ? coeffs_[n] : Int(0);
    }
    std::size_t degree() const { return coeffs_.size() - 1; }
    Int total() const;
    bool is_zero() const;
    bool palindromic() const;  // b_n = b_{2d-n}, Poincare duality

    friend PoincarePoly operator+(const PoincarePoly& a, const PoincarePoly& b);
    friend PoincarePoly operator*(const PoincarePoly& a, const PoincarePoly& b);
    bool operator==(const PoincarePoly&) const = default;

    std::string str() const;  // "1,4,7,4,1"

private:
    void trim();
    std::vector<Int> coeffs_;
};

// (1 + x)^{2g}: the Jacobian (exterior algebra on H^1).
PoincarePoly poincare_jacobian(long g);

// Betti numbers of Sym^d of a genus-g curve: coefficient of t^d in
// (1 + xt)^{2g} / ((1 - t)(1 - x^2 t)), expanded exactly.
PoincarePoly poincare_sym(long d, long g);

// The middle-cohomology decomposition of Sym^d: one summand
// wedge^{d-2i} H^1 (-i) per 0 <= i <= d/2.
struct MacdonaldSummand {
    long wedge_degree;  // d - 2i
    long twist;         // i
    Int dim;            // C(2g, d-2i)
};
struct MacdonaldDecomposition {
    long genus;
    long degree;                         // d
    std::vector<MacdonaldSummand> summands;
    Int total;                           // = x^d coefficient of poincare_sym(d,g)
};
// Default degree is h = 2g-2, the case the fibration ledger needs.
MacdonaldDecomposition macdonald_middle(long g, std::optional<long> degree = {});

// (1 + x^2 + ... + x^{2(d-g)}) (1+x)^{2g} for d >= 2g-1; rejects
// smaller d, where the Abel-Jacobi map is not a projective bundle.
PoincarePoly proj_bundle_cohomology(long d, long g);

// The pushforward sheaf ledger of AJ_h at d = 2g-2: free rank-1
// twisted layers in even degrees 0..2(g-2), a skyscraper layer at
// 2(g-1), zero elsewhere.
struct PushforwardModel {
    long genus;
    enum class Layer { kFree, kSkyscraper, kZero };
    // Layer in cohomological degree n, for n = 0..2(g-1).
    Layer layer(long n) const;
    long twist(long n) const;  // k for degree n = 2k layers
};
PushforwardModel aj_pushforward(long g);

// Cohomology of a torus with coefficients in the rank-1 local system
// attached to chi: zero for nontrivial chi, (1+x)^{2g} for trivial.
PoincarePoly torus_ls_cohomology(const GChar& chi, long g);

// Leray E2 page for L_nt coefficients: a single entry of dimension
// |G| - 1 at (p, q) = (0, 2(g-1)).
struct E2Page {
    long genus;
    long group_order;
    Int entry(long p, long q) const;
    long total_degree_of_abutment() const { return 2 * (genus - 1); }
};
E2Page e2_page_nontrivial(const CoverDatum& d);

// H*(W): Betti numbers of Sym^h(C') with the middle degree bumped by
// |G| - 1, plus the per-character isotypic annotation in degree h.
struct WCohomology {
    PoincarePoly betti;          // of W
    PoincarePoly betti_sym;      // of Sym^h(C')
    long middle_degree;          // h
    // character -> dimension in degree h carried by that character.
    std::vector<std::pair<GChar, Int>> isotypic_middle;
};
WCohomology cohomology_of_W(const CoverDatum& d);

}  // namespace prym

#endif
