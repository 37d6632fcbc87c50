#include "prymcover/cover.hpp"

#include <sstream>
#include <stdexcept>

namespace prym {

long total_genus(const CoverDatum& d) {
    return d.group.order() * (d.base_genus - 1) + 1;
}

GHodge h1_cover(const CoverDatum& d) {
    GHodge h1(d.group, 1);
    for (const GChar& chi : characters(d.group)) {
        long m = chi.is_trivial() ? d.base_genus : d.base_genus - 1;
        h1.set_mult(chi, 1, 0, m);
        h1.set_mult(chi, 0, 1, m);
    }
    return h1;
}

PrymLedger prym_ledger(const CoverDatum& d) {
    PrymLedger ledger;
    ledger.total_genus = total_genus(d);
    ledger.prym_dim = (d.group.order() - 1) * (d.base_genus - 1);

    long sum = 0;
    for (const RatIrrep& orbit : galois_orbits(d.group)) {
        if (orbit.is_trivial()) continue;
        long dim = euler_phi(orbit.field_conductor) * (d.base_genus - 1);
        ledger.per_orbit_dims.push_back(dim);
        sum += dim;
    }
    if (sum != ledger.prym_dim)
        throw std::logic_error("prym_ledger: per-orbit dims do not sum to prym_dim");
    if (d.base_genus + sum != ledger.total_genus)
        throw std::logic_error("prym_ledger: genus ledger does not balance");

    ledger.weil = wedge_top_over_algebra(FreeModClaim::from_h1(h1_cover(d)));
    return ledger;
}

SchoenPrimitive schoen_primitive(const CoverDatum& d) {
    if (!d.group.is_cyclic())
        throw std::invalid_argument("schoen_primitive: group must be cyclic");
    long m = d.group.exponent();
    SchoenPrimitive s;
    s.u_prim_dim = m == 1 ? 0 : euler_phi(m);
    s.b_prim_dim = s.u_prim_dim * (d.base_genus - 1);
    for (long k = 1; k < m; ++k) {
        if (gcd_long(k, m) != 1) continue;
        s.tangent_multiplicities[k] = d.base_genus - 1;
    }
    return s;
}

namespace {

// Mixed-radix iteration over G^h without materializing tuples.
class PowerIter {
public:
    PowerIter(const AbGroup& G, long h)
        : elems_(g_elements(G)), idx_(static_cast<std::size_t>(h), 0) {}

    const std::vector<std::size_t>& current() const { return idx_; }
    bool advance() {
        for (std::size_t i = idx_.size(); i-- > 0;) {
            if (++idx_[i] < elems_.size()) return true;
            idx_[i] = 0;
        }
        return false;
    }
    const std::vector<GElem>& elems() const { return elems_; }

private:
    std::vector<GElem> elems_;
    std::vector<std::size_t> idx_;
};

}  // namespace

LatticeCheckResult group_lattice_check(const CoverDatum& d, long cap) {
    const AbGroup& G = d.group;
    long h = d.h();
    long order = G.order();
    double size = 1;
    for (long i = 0; i < h; ++i) {
        size *= static_cast<double>(order);
        if (size > static_cast<double>(cap))
            throw std::length_error("group_lattice_check: |G|^h exceeds cap");
    }

    LatticeCheckResult result;
    auto elems = g_elements(G);

    // Count the fibers of the coordinate-sum map G^h -> G. N is the
    // fiber over 0; equal fiber sizes pin the index at |G|.
    std::vector<long> fiber_count(static_cast<std::size_t>(order), 0);
    PowerIter it(G, h);
    do {
        GElem sum = g_identity(G);
        for (std::size_t pos : it.current())
            sum = g_add(G, sum, elems[pos]);
        ++fiber_count[static_cast<std::size_t>(g_index(G, sum))];
    } while (it.advance());

    long expected = 1;
    for (long i = 0; i + 1 < h; ++i) expected *= order;
    bool fibers_equal = true;
    for (long c : fiber_count) fibers_equal = fibers_equal && c == expected;
    result.n_size = fiber_count[0];
    result.index = order;

    // Section {(g,0,...,0)}: its image in G^h/N is the coset indexed
    // by sum = g, so the composition is the identity on G. The
    // antidiagonal {(g,-g,0,...,0)} has sum 0 and lands inside N.
    result.section_isomorphic = fibers_equal;
    result.antidiagonal_in_kernel = true;
    for (const GElem& g : elems) {
        GElem s = g_add(G, g, g_neg(G, g));  // coordinate sum of (g,-g,0,...,0)
        if (!(s == g_identity(G))) result.antidiagonal_in_kernel = false;
    }

    // Explicit closure check of N when it is small enough to collect;
    // for larger groups the subgroup property rests on the sum map
    // being a homomorphism, which the fiber count already exercises.
    bool closed = true;
    if (result.n_size <= 1024) {
        std::vector<std::vector<GElem>> members;
        PowerIter it2(G, h);
        do {
            GElem sum = g_identity(G);
            std::vector<GElem> tuple;
            for (std::size_t pos : it2.current()) {
                sum = g_add(G, sum, elems[pos]);
                tuple.push_back(elems[pos]);
            }
            if (sum == g_identity(G)) members.push_back(std::move(tuple));
        } while (it2.advance());
        for (const auto& a : members) {
            for (const auto& b : members) {
                GElem s = g_identity(G);
                for (std::size_t i = 0; i < a.size(); ++i)
                    s = g_add(G, s, g_add(G, a[i], b[i]));
                if (!(s == g_identity(G))) { closed = false; break; }
            }
            if (!closed) break;
        }
    }

    result.ok = fibers_equal && result.n_size == expected &&
                result.section_isomorphic && closed;
    std::ostringstream out;
    out << "|N|=" << result.n_size << " index=" << result.index
        << " section_iso=" << (result.section_isomorphic ? "yes" : "no")
        << " antidiagonal_in_N=" << (result.antidiagonal_in_kernel ? "yes" : "no");
    result.detail = out.str();
    return result;
}

}  // namespace prym
