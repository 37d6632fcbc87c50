#include "prymcover/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace prym {

AbGroup::AbGroup(std::vector<long> invariant_factors)
    : factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2)
            throw std::invalid_argument("AbGroup: invariant factors must be >= 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw std::invalid_argument("AbGroup: divisibility chain violated");
    }
}

long AbGroup::order() const {
    long n = 1;
    for (long d : factors_) n *= d;
    return n;
}

long AbGroup::exponent() const {
    return factors_.empty() ? 1 : factors_.back();
}

std::string AbGroup::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out << " x ";
        out << "Z/" << factors_[i];
    }
    return out.str();
}

AbGroup normalize_group(const std::vector<long>& factors) {
    if (factors.empty()) throw std::invalid_argument("normalize_group: empty factor list");
    // Split every factor into prime powers, then rebuild invariant
    // factors by peeling off the largest prime power of each prime.
    std::map<long, std::vector<long>> prime_powers;  // p -> exponents, descending
    for (long f : factors) {
        if (f < 2) throw std::invalid_argument("normalize_group: factors must be >= 2");
        long m = f;
        for (long p = 2; p * p <= m; ++p) {
            if (m % p != 0) continue;
            long e = 0;
            while (m % p == 0) { m /= p; ++e; }
            prime_powers[p].push_back(e);
        }
        if (m > 1) prime_powers[m].push_back(1);
    }
    std::size_t rows = 0;
    for (auto& [p, es] : prime_powers) {
        std::sort(es.begin(), es.end(), std::greater<long>());
        rows = std::max(rows, es.size());
    }
    std::vector<long> inv;
    for (std::size_t i = 0; i < rows; ++i) {
        long d = 1;
        for (auto& [p, es] : prime_powers) {
            if (i < es.size()) {
                long pe = 1;
                for (long k = 0; k < es[i]; ++k) pe *= p;
                d *= pe;
            }
        }
        inv.push_back(d);
    }
    std::reverse(inv.begin(), inv.end());  // ascending: d_1 | d_2 | ...
    return AbGroup(inv);
}

namespace {

// Partitions of n in a fixed order (descending parts, lexicographic).
std::vector<std::vector<long>> partitions(long n) {
    std::vector<std::vector<long>> result;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long rem, long max_part) {
        if (rem == 0) { result.push_back(cur); return; }
        for (long p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return result;
}

}  // namespace

std::vector<AbGroup> abelian_groups_of_order(long n) {
    if (n < 1) throw std::invalid_argument("abelian_groups_of_order: n >= 1");
    if (n == 1) return {AbGroup()};
    // Factor n; one partition choice per prime exponent.
    std::vector<std::pair<long, long>> pf;  // (prime, exponent)
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        long e = 0;
        while (m % p == 0) { m /= p; ++e; }
        pf.emplace_back(p, e);
    }
    if (m > 1) pf.emplace_back(m, 1);

    std::vector<std::vector<std::vector<long>>> choices;  // per prime: partitions
    for (auto [p, e] : pf) choices.push_back(partitions(e));

    std::vector<AbGroup> groups;
    std::vector<std::size_t> idx(pf.size(), 0);
    while (true) {
        std::vector<long> prime_power_factors;
        for (std::size_t i = 0; i < pf.size(); ++i) {
            for (long e : choices[i][idx[i]]) {
                long pe = 1;
                for (long k = 0; k < e; ++k) pe *= pf[i].first;
                prime_power_factors.push_back(pe);
            }
        }
        groups.push_back(normalize_group(prime_power_factors));
        std::size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++idx[i] < choices[i].size()) break;
            idx[i] = 0;
        }
        if (i == idx.size()) break;
    }
    std::sort(groups.begin(), groups.end(), [](const AbGroup& a, const AbGroup& b) {
        return a.invariant_factors() < b.invariant_factors();
    });
    return groups;
}

std::vector<AbGroup> abelian_groups_up_to(long max_order) {
    std::vector<AbGroup> all;
    for (long n = 2; n <= max_order; ++n) {
        auto gs = abelian_groups_of_order(n);
        all.insert(all.end(), gs.begin(), gs.end());
    }
    return all;
}

GElem g_identity(const AbGroup& G) {
    return GElem{std::vector<long>(G.invariant_factors().size(), 0)};
}

GElem g_add(const AbGroup& G, const GElem& a, const GElem& b) {
    const auto& d = G.invariant_factors();
    GElem c{std::vector<long>(d.size())};
    for (std::size_t i = 0; i < d.size(); ++i)
        c.coords[i] = (a.coords[i] + b.coords[i]) % d[i];
    return c;
}

GElem g_neg(const AbGroup& G, const GElem& a) {
    const auto& d = G.invariant_factors();
    GElem c{std::vector<long>(d.size())};
    for (std::size_t i = 0; i < d.size(); ++i)
        c.coords[i] = (d[i] - a.coords[i]) % d[i];
    return c;
}

std::vector<GElem> g_elements(const AbGroup& G) {
    const auto& d = G.invariant_factors();
    std::vector<GElem> out;
    out.reserve(static_cast<std::size_t>(G.order()));
    GElem cur{std::vector<long>(d.size(), 0)};
    while (true) {
        out.push_back(cur);
        std::size_t i = d.size();
        while (i-- > 0) {
            if (++cur.coords[i] < d[i]) break;
            cur.coords[i] = 0;
            if (i == 0) return out;
        }
        if (d.empty()) return out;
    }
}

long g_index(const AbGroup& G, const GElem& a) {
    const auto& d = G.invariant_factors();
    long idx = 0;
    for (std::size_t i = 0; i < d.size(); ++i) idx = idx * d[i] + a.coords[i];
    return idx;
}

GChar::GChar(const AbGroup& G, std::vector<long> coords)
    : factors_(G.invariant_factors()), coords_(std::move(coords)) {
    if (coords_.size() != factors_.size())
        throw std::invalid_argument("GChar: coordinate arity mismatch");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        coords_[i] %= factors_[i];
        if (coords_[i] < 0) coords_[i] += factors_[i];
    }
}

bool GChar::is_trivial() const {
    return std::all_of(coords_.begin(), coords_.end(), [](long a) { return a == 0; });
}

long GChar::order() const {
    long o = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        o = lcm_long(o, factors_[i] / gcd_long(coords_[i], factors_[i]));
    return o;
}

CycloNum GChar::eval(const GElem& x) const {
    long m = factors_.empty() ? 1 : factors_.back();
    long e = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        e = (e + coords_[i] * x.coords[i] % m * (m / factors_[i])) % m;
    }
    return CycloNum::zeta(m, e);
}

GChar GChar::power(long k) const {
    std::vector<long> c(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        long v = (coords_[i] * (k % factors_[i])) % factors_[i];
        if (v < 0) v += factors_[i];
        c[i] = v;
    }
    GChar out;
    out.factors_ = factors_;
    out.coords_ = std::move(c);
    return out;
}

std::vector<GChar> characters(const AbGroup& G) {
    std::vector<GChar> chars;
    for (const GElem& a : g_elements(G)) chars.emplace_back(G, a.coords);
    std::sort(chars.begin(), chars.end(), [](const GChar& x, const GChar& y) {
        long ox = x.order(), oy = y.order();
        if (ox != oy) return ox < oy;
        return x.coords() < y.coords();
    });
    return chars;
}

std::vector<RatIrrep> galois_orbits(const AbGroup& G) {
    long m = G.exponent();
    std::set<GChar> seen;
    std::vector<RatIrrep> orbits;
    for (const GChar& chi : characters(G)) {
        if (seen.count(chi)) continue;
        RatIrrep rep;
        for (long k = 1; k <= m; ++k) {
            if (gcd_long(k, m) != 1) continue;
            GChar twisted = chi.power(k);
            if (!seen.count(twisted)) {
                seen.insert(twisted);
                rep.orbit.push_back(twisted);
            }
        }
        std::sort(rep.orbit.begin(), rep.orbit.end());
        rep.field_conductor = chi.order();
        // All orbit members share the same order.
        for (const GChar& c : rep.orbit) {
            if (c.order() != rep.field_conductor)
                throw std::logic_error("galois_orbits: mixed orders in one orbit");
        }
        if (rep.dim_over_Q() != euler_phi(rep.field_conductor))
            throw std::logic_error("galois_orbits: orbit size != phi(f)");
        rep.idempotent = rational_idempotent(rep, G);
        orbits.push_back(std::move(rep));
    }
    // characters() is sorted by (order, coords), so the orbit order is
    // already deterministic with the trivial orbit first.
    return orbits;
}

std::vector<Rat> rational_idempotent(const RatIrrep& orbit, const AbGroup& G) {
    long n = G.order();
    auto elems = g_elements(G);
    std::vector<Rat> e(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        CycloNum sum;
        GElem ginv = g_neg(G, elems[static_cast<std::size_t>(i)]);
        for (const GChar& chi : orbit.orbit) sum = sum + chi.eval(ginv);
        // The imaginary parts cancel across the orbit; as_rat throws
        // if that ever fails.
        e[static_cast<std::size_t>(i)] = sum.as_rat() / Rat(n);
    }
    return e;
}

std::vector<Rat> algebra_mul(const AbGroup& G, const std::vector<Rat>& a,
                             const std::vector<Rat>& b) {
    auto elems = g_elements(G);
    long n = G.order();
    std::vector<Rat> c(static_cast<std::size_t>(n), Rat(0));
    for (long i = 0; i < n; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (long j = 0; j < n; ++j) {
            if (b[static_cast<std::size_t>(j)] == 0) continue;
            long k = g_index(G, g_add(G, elems[static_cast<std::size_t>(i)],
                                      elems[static_cast<std::size_t>(j)]));
            c[static_cast<std::size_t>(k)] +=
                a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    }
    return c;
}

long AlgebraSplit::dim_nontrivial() const {
    long d = 0;
    for (const auto& f : nontrivial_factors) d += f.dim_over_Q();
    return d;
}

AlgebraSplit split_group_algebra(const AbGroup& G) {
    auto orbits = galois_orbits(G);
    AlgebraSplit split;
    long dim_sum = 0;
    std::vector<Rat> total(static_cast<std::size_t>(G.order()), Rat(0));
    for (auto& o : orbits) {
        dim_sum += o.dim_over_Q();
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += o.idempotent[i];
        // e^2 = e, exactly.
        if (algebra_mul(G, o.idempotent, o.idempotent) != o.idempotent)
            throw std::logic_error("split_group_algebra: idempotent not idempotent");
        if (o.is_trivial()) split.trivial_factor = std::move(o);
        else split.nontrivial_factors.push_back(std::move(o));
    }
    if (dim_sum != G.order())
        throw std::logic_error("split_group_algebra: phi-sum != |G|");
    // Sum of idempotents is the identity of Q[G] (delta at 0).
    for (std::size_t i = 0; i < total.size(); ++i) {
        if (total[i] != (i == 0 ? Rat(1) : Rat(0)))
            throw std::logic_error("split_group_algebra: idempotents do not sum to 1");
    }
    // Pairwise orthogonality.
    std::vector<const RatIrrep*> all;
    all.push_back(&split.trivial_factor);
    for (const auto& f : split.nontrivial_factors) all.push_back(&f);
    std::vector<Rat> zero(total.size(), Rat(0));
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (algebra_mul(G, all[i]->idempotent, all[j]->idempotent) != zero)
                throw std::logic_error("split_group_algebra: idempotents not orthogonal");
        }
    }
    return split;
}

}  // namespace prym
