#ifndef PRYMCOVER_GROUP_HPP
#define PRYMCOVER_GROUP_HPP

#include <compare>
#include <vector>

#include "prymcover/cyclotomic.hpp"
#include "prymcover/rational.hpp"

namespace prym {

// A finite abelian group in invariant-factor form d_1 | d_2 | ... | d_r.
// The trivial group is represented by an empty factor list.
class AbGroup {
public:
    AbGroup() = default;
    // Takes factors as given; use normalize_group for arbitrary products.
    explicit AbGroup(std::vector<long> invariant_factors);

    const std::vector<long>& invariant_factors() const { return factors_; }
    long order() const;
    long exponent() const;  // d_r, or 1 for the trivial group
    bool is_trivial() const { return factors_.empty(); }
    bool is_cyclic() const { return factors_.size() <= 1; }

    std::string str() const;  // e.g. "Z/2 x Z/4"

    bool operator==(const AbGroup&) const = default;

private:
    std::vector<long> factors_;
};

// Invariant-factor form of the direct product of Z/f for the given
// factor list, via prime-power regrouping. Rejects factors < 2.
AbGroup normalize_group(const std::vector<long>& factors);

// All abelian groups of order exactly n (resp. 2..max), in a fixed
// deterministic order.
std::vector<AbGroup> abelian_groups_of_order(long n);
std::vector<AbGroup> abelian_groups_up_to(long max_order);

// An element, componentwise residues modulo the invariant factors.
struct GElem {
    std::vector<long> coords;
    auto operator<=>(const GElem&) const = default;
};

GElem g_identity(const AbGroup& G);
GElem g_add(const AbGroup& G, const GElem& a, const GElem& b);
GElem g_neg(const AbGroup& G, const GElem& a);
// All elements in lexicographic coordinate order; the index of an
// element in this list is its canonical index.
std::vector<GElem> g_elements(const AbGroup& G);
long g_index(const AbGroup& G, const GElem& a);

// A character chi(x) = zeta_m^{sum a_i x_i m/d_i}, m the exponent.
class GChar {
public:
    GChar() = default;
    GChar(const AbGroup& G, std::vector<long> coords);

    const std::vector<long>& coords() const { return coords_; }
    bool is_trivial() const;
    long order() const;  // lcm of d_i / gcd(a_i, d_i)

    // Value at x, as a CycloNum at the group exponent's conductor.
    CycloNum eval(const GElem& x) const;

    // chi^k (the Galois twist a |-> k*a).
    GChar power(long k) const;
    GChar conj() const { return power(-1); }

    auto operator<=>(const GChar&) const = default;

private:
    std::vector<long> factors_;  // copy of the group's invariant factors
    std::vector<long> coords_;
};

// All |G| characters; the trivial character first, then sorted by
// (order, coords).
std::vector<GChar> characters(const AbGroup& G);

// A Galois orbit of characters = one irreducible rational
// representation, with its field Q(zeta_f) and rational idempotent.
struct RatIrrep {
    std::vector<GChar> orbit;       // sorted
    long field_conductor = 1;       // f = common order of the orbit
    std::vector<Rat> idempotent;    // indexed by canonical element index

    bool is_trivial() const { return field_conductor == 1 && orbit.size() == 1 && orbit[0].is_trivial(); }
    long dim_over_Q() const { return static_cast<long>(orbit.size()); }  // phi(f)
};

// Partition of the characters into Galois orbits, sorted by
// (character order, lex coords of the smallest member). The trivial
// orbit comes first.
std::vector<RatIrrep> galois_orbits(const AbGroup& G);

// e_O(g) = (1/|G|) sum_{chi in O} chi(g^{-1}); rationality is proved
// by the arithmetic (throws if the character sum fails to descend).
std::vector<Rat> rational_idempotent(const RatIrrep& orbit, const AbGroup& G);

// The full splitting Q[G] = Q x Q[G]_nt.
struct AlgebraSplit {
    RatIrrep trivial_factor;
    std::vector<RatIrrep> nontrivial_factors;

    long dim_nontrivial() const;  // |G| - 1
};

// Computes the splitting and verifies, exactly, that the idempotents
// are pairwise orthogonal and sum to the identity of Q[G].
AlgebraSplit split_group_algebra(const AbGroup& G);

// Convolution product in Q[G] (coefficient vectors indexed by
// canonical element index).
std::vector<Rat> algebra_mul(const AbGroup& G, const std::vector<Rat>& a,
                             const std::vector<Rat>& b);

}  // namespace prym

#endif
