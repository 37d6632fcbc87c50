#ifndef PRYMCOVER_HODGE_HPP
#define PRYMCOVER_HODGE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "prymcover/group.hpp"

namespace prym {

// A G-graded pure rational Hodge structure of fixed weight, recorded
// as a multiplicity table (character, (p,q)) -> nonnegative integer.
// No lattices or period data: the engine tracks dimensions, types,
// and the group action, nothing else.
class GHodge {
public:
    using Key = std::pair<GChar, std::pair<int, int>>;

    GHodge(AbGroup group, int weight) : group_(std::move(group)), weight_(weight) {}

    const AbGroup& group() const { return group_; }
    int weight() const { return weight_; }

    long mult(const GChar& chi, int p, int q) const;
    void set_mult(const GChar& chi, int p, int q, long m);
    void add_mult(const GChar& chi, int p, int q, long m);

    const std::map<Key, long>& table() const { return mult_; }

    long total_dim() const;
    long total_dim_of(const GChar& chi) const;

    // mult(chi, p, q) == mult(conj chi, q, p) for every entry.
    bool conjugation_symmetric() const;

    // Weight += 2k, every (p,q) -> (p+k, q+k).
    GHodge tate_twist(int k) const;

    GHodge direct_sum(const GHodge& other) const;

private:
    AbGroup group_;
    int weight_;
    std::map<Key, long> mult_;
};

// The free-module assertion for the nontrivial part of a weight-1
// structure: every nontrivial character carries the same total
// multiplicity, the rank.
struct FreeModClaim {
    GHodge base;   // restricted to nontrivial characters
    long rank = 0;

    // Throws std::invalid_argument if multiplicities are unequal
    // across nontrivial characters, or if the rank is 0 (degenerate).
    static FreeModClaim from_h1(const GHodge& h1);
};

// One rank-1-over-F piece per nontrivial Galois orbit: the Hodge type
// of the top wedge at each complex embedding, indexed by the orbit's
// characters.
struct WeilSpace {
    struct OrbitPiece {
        long field_conductor = 1;
        // character -> (p, q) of the wedge at that embedding; p+q = rank.
        std::vector<std::pair<GChar, std::pair<long, long>>> types;
    };
    AbGroup group;
    long rank = 0;  // the h of the wedge
    std::vector<OrbitPiece> pieces;
};

// Top exterior power over Q[G]_nt of a free weight-1 module; the type
// at the embedding attached to chi is (n_chi^{1,0}, n_chi^{0,1}).
WeilSpace wedge_top_over_algebra(const FreeModClaim& claim);

// Witness for the Hodge-class criterion n_sigma = n_sigma-bar.
struct HodgeWitness {
    bool is_hodge = true;
    // (orbit conductor, character coords as string, p, q) for failures.
    std::vector<std::string> failures;
};

// True iff every piece has type (rank/2, rank/2) at every embedding.
HodgeWitness is_hodge_space(const WeilSpace& w);

// Total Q-dimension: sum of phi(f) over nontrivial orbits = |G| - 1.
long dim_weil(const WeilSpace& w);

}  // namespace prym

#endif
