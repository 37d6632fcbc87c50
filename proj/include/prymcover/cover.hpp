#ifndef PRYMCOVER_COVER_HPP
#define PRYMCOVER_COVER_HPP

#include <map>
#include <string>
#include <vector>

#include "prymcover/hodge.hpp"

namespace prym {

// An unramified abelian cover C -> C' presented by its deck group and
// the base genus g' >= 2; h = 2g' - 2.
struct CoverDatum {
    long base_genus;
    AbGroup group;

    CoverDatum(long g, AbGroup G) : base_genus(g), group(std::move(G)) {
        if (base_genus < 2)
            throw std::invalid_argument("CoverDatum: base genus must be >= 2");
    }
    long h() const { return 2 * base_genus - 2; }
};

// g = |G|(g' - 1) + 1, multiplicativity of the Euler characteristic
// under unramified covers.
long total_genus(const CoverDatum& d);

// Weight-1 structure of the covering curve: the trivial character has
// (1,0)- and (0,1)-multiplicity g'; every nontrivial character has
// g' - 1 each. The balanced model is stated in the source material
// only for cyclic covers and adopted here for all abelian G; reports
// carry this as an assumption flag.
GHodge h1_cover(const CoverDatum& d);

// Dimension ledger of the isogeny J(C) ~ J(C') x prod A_i.
struct PrymLedger {
    long total_genus = 0;
    long prym_dim = 0;
    // Per nontrivial orbit, in galois_orbits order: phi(f) * (g'-1).
    std::vector<long> per_orbit_dims;
    WeilSpace weil;
};

PrymLedger prym_ledger(const CoverDatum& d);

// Schoen's specialization for cyclic G = Z/m: the sub-abelian variety
// cut out by the primitive (injective) characters.
struct SchoenPrimitive {
    long b_prim_dim = 0;      // phi(m) * (g' - 1)
    long u_prim_dim = 0;      // phi(m)
    // eigenvalue exponent k (coprime to m) -> tangent multiplicity.
    std::map<long, long> tangent_multiplicities;  // each g' - 1
};

// Throws std::invalid_argument for noncyclic groups.
SchoenPrimitive schoen_primitive(const CoverDatum& d);

// Skeleton of the normal-subgroup lattice inside G^h: N = kernel of
// the coordinate-sum map, of index |G|; a section subgroup of G^h
// mapping isomorphically onto G^h/N.
struct LatticeCheckResult {
    bool ok = false;
    long n_size = 0;          // |N| = |G|^{h-1}
    long index = 0;           // [G^h : N] = |G|
    bool section_isomorphic = false;   // {(g,0,...,0)} -> G^h/N bijective
    bool antidiagonal_in_kernel = false;  // {(g,-g,0,...,0)} lands inside N
    std::string detail;
};

// Exhaustive enumeration of G^h; throws std::length_error when
// |G|^h exceeds cap.
LatticeCheckResult group_lattice_check(const CoverDatum& d, long cap = 1000000);

}  // namespace prym

#endif
