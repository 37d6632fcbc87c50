#ifndef PRYMCOVER_CYCLES_HPP
#define PRYMCOVER_CYCLES_HPP

#include <vector>

#include "prymcover/group.hpp"
#include "prymcover/ratmat.hpp"

namespace prym {

// A formal linear combination of the fiber classes Q_t, t in G, with
// cyclotomic coefficients at the group exponent's conductor. The
// coefficient vector is indexed by the canonical element order.
struct CycleVec {
    AbGroup group;
    std::vector<CycloNum> coeffs;  // size |G|

    static CycleVec zero(const AbGroup& G);
    static CycleVec basis(const AbGroup& G, const GElem& t);

    bool rational() const;

    friend CycleVec operator+(const CycleVec& a, const CycleVec& b);
    friend CycleVec operator*(const CycloNum& s, const CycleVec& v);
    bool operator==(const CycleVec&) const;
};

// The span of the Q_t with intersection form c * Identity; c is a
// symbolic nonzero rational, and exported results must not depend on
// it (the disjointness + nondegeneracy the construction needs).
struct CycleLattice {
    AbGroup group;
    Rat gram_scale = Rat(1);

    CycleLattice(AbGroup G, Rat c = Rat(1)) : group(std::move(G)), gram_scale(std::move(c)) {
        if (gram_scale == 0)
            throw std::invalid_argument("CycleLattice: gram scale must be nonzero");
    }
};

// Basis permutation Q_t -> Q_{s+t}, extended linearly.
CycleVec g_act(const GElem& s, const CycleVec& v);

// Sum of all Q_t; fixed by every g_act.
CycleVec diagonal_class(const CycleLattice& L);

// Intersection pairing under c * Identity.
CycloNum pair_cycles(const CycleLattice& L, const CycleVec& a, const CycleVec& b);

// Rational basis of the augmentation-zero subspace {sum a_t Q_t :
// sum a_t = 0}, of dimension |G| - 1; independent of the gram scale.
std::vector<CycleVec> u_subspace(const CycleLattice& L);

// chi_* Q_0 = sum_t chi(-t) Q_t; satisfies g_act(s, .) = chi(s) . .
CycleVec chi_pushforward(const GChar& chi, const CycleLattice& L);

// Galois (trace) descent of the chi-eigenvector line of a nontrivial
// orbit to a rational basis of size phi(f): for each power-basis
// element alpha of Q(zeta_f), the trace of alpha * chi_pushforward.
std::vector<CycleVec> rational_orbit_basis(const RatIrrep& orbit, const CycleLattice& L);

// The full rational decomposition of the augmentation-zero subspace.
struct UDecomposition {
    // Per nontrivial orbit, in galois_orbits order.
    std::vector<std::vector<CycleVec>> blocks;
    long total_dim = 0;  // |G| - 1
};

// Concatenates rational_orbit_basis over the nontrivial orbits and
// verifies: the union is a Q-basis of u_subspace, and distinct blocks
// are intersection-orthogonal under c * Identity.
UDecomposition assemble_u(const CycleLattice& L, const AlgebraSplit& split);

// Rows = cycle vectors with rational coefficients (throws on
// irrational input); for rank and span computations.
RatMat cycle_matrix(const std::vector<CycleVec>& vectors);

}  // namespace prym

#endif
