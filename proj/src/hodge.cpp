#include "prymcover/hodge.hpp"

#include <sstream>
#include <stdexcept>

namespace prym {

long GHodge::mult(const GChar& chi, int p, int q) const {
    auto it = mult_.find({chi, {p, q}});
    return it == mult_.end() ? 0 : it->second;
}

void GHodge::set_mult(const GChar& chi, int p, int q, long m) {
    if (p + q != weight_)
        throw std::invalid_argument("GHodge: p + q must equal the weight");
    if (m < 0) throw std::invalid_argument("GHodge: negative multiplicity");
    if (m == 0) mult_.erase({chi, {p, q}});
    else mult_[{chi, {p, q}}] = m;
}

void GHodge::add_mult(const GChar& chi, int p, int q, long m) {
    set_mult(chi, p, q, mult(chi, p, q) + m);
}

long GHodge::total_dim() const {
    long d = 0;
    for (const auto& [key, m] : mult_) d += m;
    return d;
}

long GHodge::total_dim_of(const GChar& chi) const {
    long d = 0;
    for (const auto& [key, m] : mult_)
        if (key.first == chi) d += m;
    return d;
}

bool GHodge::conjugation_symmetric() const {
    for (const auto& [key, m] : mult_) {
        const auto& [chi, pq] = key;
        if (mult(chi.conj(), pq.second, pq.first) != m) return false;
    }
    return true;
}

GHodge GHodge::tate_twist(int k) const {
    GHodge out(group_, weight_ + 2 * k);
    for (const auto& [key, m] : mult_)
        out.set_mult(key.first, key.second.first + k, key.second.second + k, m);
    return out;
}

GHodge GHodge::direct_sum(const GHodge& other) const {
    if (weight_ != other.weight_ || !(group_ == other.group_))
        throw std::invalid_argument("direct_sum: weight/group mismatch");
    GHodge out = *this;
    for (const auto& [key, m] : other.mult_)
        out.add_mult(key.first, key.second.first, key.second.second, m);
    return out;
}

FreeModClaim FreeModClaim::from_h1(const GHodge& h1) {
    if (h1.weight() != 1)
        throw std::invalid_argument("FreeModClaim: weight must be 1");
    GHodge base(h1.group(), 1);
    long rank = -1;
    for (const GChar& chi : characters(h1.group())) {
        if (chi.is_trivial()) continue;
        long d = h1.total_dim_of(chi);
        if (rank == -1) rank = d;
        else if (d != rank)
            throw std::invalid_argument(
                "FreeModClaim: unequal multiplicities, module is not free");
        base.set_mult(chi, 1, 0, h1.mult(chi, 1, 0));
        base.set_mult(chi, 0, 1, h1.mult(chi, 0, 1));
    }
    if (h1.group().is_trivial()) return FreeModClaim{std::move(base), 0};
    if (rank <= 0)
        throw std::invalid_argument("FreeModClaim: degenerate rank (needs g' >= 2)");
    return FreeModClaim{std::move(base), rank};
}

WeilSpace wedge_top_over_algebra(const FreeModClaim& claim) {
    WeilSpace w;
    w.group = claim.base.group();
    w.rank = claim.rank;
    for (const RatIrrep& orbit : galois_orbits(w.group)) {
        if (orbit.is_trivial()) continue;
        WeilSpace::OrbitPiece piece;
        piece.field_conductor = orbit.field_conductor;
        for (const GChar& chi : orbit.orbit) {
            long p = claim.base.mult(chi, 1, 0);
            long q = claim.base.mult(chi, 0, 1);
            if (p + q != claim.rank)
                throw std::logic_error("wedge_top: type does not sum to the rank");
            piece.types.emplace_back(chi, std::make_pair(p, q));
        }
        w.pieces.push_back(std::move(piece));
    }
    return w;
}

HodgeWitness is_hodge_space(const WeilSpace& w) {
    HodgeWitness witness;
    for (const auto& piece : w.pieces) {
        for (const auto& [chi, pq] : piece.types) {
            if (2 * pq.first == w.rank && 2 * pq.second == w.rank) continue;
            witness.is_hodge = false;
            std::ostringstream out;
            out << "orbit f=" << piece.field_conductor << " chi=(";
            for (std::size_t i = 0; i < chi.coords().size(); ++i)
                out << (i ? "," : "") << chi.coords()[i];
            out << ") type=(" << pq.first << "," << pq.second << ")";
            witness.failures.push_back(out.str());
        }
    }
    return witness;
}

long dim_weil(const WeilSpace& w) {
    long d = 0;
    for (const auto& piece : w.pieces) d += euler_phi(piece.field_conductor);
    return d;
}

}  // namespace prym
