#include "prymcover/cycles.hpp"

#include <stdexcept>

namespace prym {

CycleVec CycleVec::zero(const AbGroup& G) {
    return CycleVec{G, std::vector<CycloNum>(static_cast<std::size_t>(G.order()))};
}

CycleVec CycleVec::basis(const AbGroup& G, const GElem& t) {
    CycleVec v = zero(G);
    v.coeffs[static_cast<std::size_t>(g_index(G, t))] = CycloNum(Rat(1));
    return v;
}

bool CycleVec::rational() const {
    for (const CycloNum& c : coeffs)
        if (!c.is_rational()) return false;
    return true;
}

CycleVec operator+(const CycleVec& a, const CycleVec& b) {
    if (!(a.group == b.group)) throw std::invalid_argument("CycleVec: group mismatch");
    CycleVec c = a;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i)
        c.coeffs[i] = c.coeffs[i] + b.coeffs[i];
    return c;
}

CycleVec operator*(const CycloNum& s, const CycleVec& v) {
    CycleVec c = v;
    for (CycloNum& x : c.coeffs) x = s * x;
    return c;
}

bool CycleVec::operator==(const CycleVec& other) const {
    if (!(group == other.group)) return false;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != other.coeffs[i]) return false;
    return true;
}

CycleVec g_act(const GElem& s, const CycleVec& v) {
    CycleVec out = CycleVec::zero(v.group);
    auto elems = g_elements(v.group);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        long j = g_index(v.group, g_add(v.group, s, elems[i]));
        out.coeffs[static_cast<std::size_t>(j)] = v.coeffs[i];
    }
    return out;
}

CycleVec diagonal_class(const CycleLattice& L) {
    CycleVec v = CycleVec::zero(L.group);
    for (CycloNum& c : v.coeffs) c = CycloNum(Rat(1));
    return v;
}

CycloNum pair_cycles(const CycleLattice& L, const CycleVec& a, const CycleVec& b) {
    CycloNum sum;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        sum = sum + a.coeffs[i] * b.coeffs[i];
    return CycloNum(L.gram_scale) * sum;
}

std::vector<CycleVec> u_subspace(const CycleLattice& L) {
    // Deterministic basis Q_0 - Q_t for t != 0; augmentation zero and
    // orthogonal to the diagonal under c * Identity for every c != 0.
    std::vector<CycleVec> basis;
    auto elems = g_elements(L.group);
    for (std::size_t i = 1; i < elems.size(); ++i) {
        CycleVec v = CycleVec::basis(L.group, elems[0]);
        v.coeffs[i] = CycloNum(Rat(-1));
        basis.push_back(std::move(v));
    }
    return basis;
}

CycleVec chi_pushforward(const GChar& chi, const CycleLattice& L) {
    CycleVec v = CycleVec::zero(L.group);
    auto elems = g_elements(L.group);
    long m = L.group.exponent();
    for (std::size_t i = 0; i < elems.size(); ++i)
        v.coeffs[i] = chi.eval(g_neg(L.group, elems[i])).lift(m);
    return v;
}

std::vector<CycleVec> rational_orbit_basis(const RatIrrep& orbit, const CycleLattice& L) {
    if (orbit.is_trivial())
        throw std::invalid_argument("rational_orbit_basis: orbit must be nontrivial");
    // Fixed representative: lexicographically smallest coords.
    const GChar& chi = orbit.orbit.front();
    long f = orbit.field_conductor;
    CycleVec pushed = chi_pushforward(chi, L);

    std::vector<CycleVec> out;
    for (long j = 0; j < euler_phi(f); ++j) {
        CycloNum alpha = CycloNum::zeta(f, j);
        CycleVec v = CycleVec::zero(L.group);
        for (std::size_t i = 0; i < v.coeffs.size(); ++i) {
            // Trace from Q(zeta_f) down to Q, coefficientwise.
            CycloNum e = (alpha * pushed.coeffs[i]).reduce_conductor().lift(f);
            CycloNum tr;
            for (long k = 1; k <= f; ++k) {
                if (gcd_long(k, f) != 1) continue;
                tr = tr + e.galois(k);
            }
            v.coeffs[i] = CycloNum(tr.as_rat());
        }
        out.push_back(std::move(v));
    }
    // Descent correctness: rational coefficients, independent, same
    // span as the chi-eigenvector family over the orbit.
    RatMat m = cycle_matrix(out);
    if (m.rank() != static_cast<std::size_t>(euler_phi(f)))
        throw std::logic_error("rational_orbit_basis: descent lost rank");
    return out;
}

RatMat cycle_matrix(const std::vector<CycleVec>& vectors) {
    if (vectors.empty()) return RatMat(0, 0);
    RatMat m(vectors.size(), vectors[0].coeffs.size());
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < vectors[i].coeffs.size(); ++j)
            m.at(i, j) = vectors[i].coeffs[j].as_rat();
    return m;
}

UDecomposition assemble_u(const CycleLattice& L, const AlgebraSplit& split) {
    UDecomposition out;
    std::vector<CycleVec> all;
    for (const RatIrrep& orbit : split.nontrivial_factors) {
        auto block = rational_orbit_basis(orbit, L);
        out.total_dim += static_cast<long>(block.size());
        all.insert(all.end(), block.begin(), block.end());
        out.blocks.push_back(std::move(block));
    }
    if (out.total_dim != L.group.order() - 1)
        throw std::logic_error("assemble_u: total dimension != |G| - 1");
    if (!all.empty()) {
        // Q-basis of the augmentation-zero subspace.
        RatMat ours = cycle_matrix(all);
        RatMat aug = cycle_matrix(u_subspace(L));
        if (ours.rank() != static_cast<std::size_t>(out.total_dim) ||
            !same_row_span(ours, aug))
            throw std::logic_error("assemble_u: span differs from u_subspace");
        // Blocks pairwise intersection-orthogonal under c * Identity.
        for (std::size_t a = 0; a < out.blocks.size(); ++a)
            for (std::size_t b = a + 1; b < out.blocks.size(); ++b)
                for (const CycleVec& x : out.blocks[a])
                    for (const CycleVec& y : out.blocks[b])
                        if (!pair_cycles(L, x, y).is_zero())
                            throw std::logic_error("assemble_u: blocks not orthogonal");
    }
    return out;
}

}  // namespace prym
