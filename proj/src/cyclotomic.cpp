#include "prymcover/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "prymcover/ratmat.hpp"

namespace prym {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

using IPoly = std::vector<Int>;  // integer polynomial, index = degree

IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
    IPoly c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

// Exact division of integer polynomials with monic divisor.
IPoly ipoly_divexact(IPoly num, const IPoly& den) {
    if (den.empty() || den.back() != 1)
        throw std::logic_error("ipoly_divexact: divisor must be monic");
    if (num.size() < den.size()) throw std::logic_error("ipoly_divexact: degree");
    IPoly q(num.size() - den.size() + 1, Int(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Int c = num[k + den.size() - 1];
        q[k] = c;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[k + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("ipoly_divexact: remainder nonzero");
    return q;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
    static std::map<long, IPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1 divided by the product of Phi_d over proper divisors d.
    std::function<const IPoly&(long)> get = [&](long m) -> const IPoly& {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        IPoly num(m + 1, Int(0));
        num[0] = -1;
        num[m] = 1;
        IPoly den{Int(1)};
        for (long d : divisors(m)) {
            if (d == m) continue;
            den = ipoly_mul(den, get(d));
        }
        return cache.emplace(m, ipoly_divexact(std::move(num), den)).first->second;
    };
    return get(n);
}

namespace {

// Reduce a coefficient vector in powers of zeta_n modulo Phi_n.
std::vector<Rat> reduce_mod_phi(long n, std::vector<Rat> c) {
    const IPoly& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    if (c.size() < deg) c.resize(deg, Rat(0));
    for (std::size_t k = c.size(); k-- > deg;) {
        Rat lead = c[k];
        if (lead == 0) continue;
        for (std::size_t j = 0; j < deg; ++j)
            c[k - deg + j] -= lead * Rat(phi[j]);
        c[k] = 0;
    }
    c.resize(deg);
    return c;
}

}  // namespace

CycloNum CycloNum::zeta(long n, long e) {
    if (n < 1) throw std::invalid_argument("zeta: conductor must be >= 1");
    e %= n;
    if (e < 0) e += n;
    std::vector<Rat> c(static_cast<std::size_t>(e) + 1, Rat(0));
    c[e] = 1;
    return CycloNum(n, reduce_mod_phi(n, std::move(c)));
}

CycloNum CycloNum::from_powers(long n, const std::vector<Rat>& powers) {
    if (n < 1) throw std::invalid_argument("from_powers: conductor must be >= 1");
    // mpq arithmetic and comparison require canonical fractions; inputs
    // built as Rat(p, q) may not be reduced yet.
    std::vector<Rat> canon = powers;
    for (Rat& c : canon) c.canonicalize();
    return CycloNum(n, reduce_mod_phi(n, canon));
}

bool CycloNum::is_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloNum::is_rational() const {
    return reduce_conductor().conductor_ == 1;
}

Rat CycloNum::as_rat() const {
    CycloNum r = reduce_conductor();
    if (r.conductor_ != 1) throw std::domain_error("as_rat: value is irrational");
    return r.coeffs_[0];
}

CycloNum CycloNum::lift(long m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0)
        throw std::invalid_argument("lift: target conductor not a multiple");
    long step = m / conductor_;  // zeta_n = zeta_m^step
    std::vector<Rat> c(static_cast<std::size_t>(coeffs_.size() - 1) * step + 1, Rat(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j * step] = coeffs_[j];
    return CycloNum(m, reduce_mod_phi(m, std::move(c)));
}

CycloNum CycloNum::reduce_conductor() const {
    const long n = conductor_;
    for (long d : divisors(n)) {
        if (d == n) break;
        // Fixed by Gal(Q(zeta_n)/Q(zeta_d)) = { k == 1 mod d, gcd(k,n)=1 }?
        bool fixed = true;
        for (long k = 1; k < n && fixed; ++k) {
            if (k % d != 1 % d || gcd_long(k, n) != 1) continue;
            if (galois(k) != *this) fixed = false;
        }
        if (!fixed) continue;
        // Express in powers of zeta_d = zeta_n^{n/d}: solve the exact
        // linear system over the power basis of Q(zeta_n).
        long phi_d = euler_phi(d);
        long phi_n = static_cast<long>(coeffs_.size());
        RatMat m(static_cast<std::size_t>(phi_n), static_cast<std::size_t>(phi_d));
        for (long j = 0; j < phi_d; ++j) {
            CycloNum basis = zeta(n, j * (n / d));
            for (long i = 0; i < phi_n; ++i)
                m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    basis.coeffs_[static_cast<std::size_t>(i)];
        }
        std::vector<Rat> sol;
        try {
            sol = m.solve(coeffs_);
        } catch (const std::domain_error&) {
            continue;  // not actually in Q(zeta_d)
        }
        return CycloNum(d, reduce_mod_phi(d, std::move(sol)));
    }
    return *this;
}

CycloNum CycloNum::operator-() const {
    std::vector<Rat> c = coeffs_;
    for (Rat& x : c) x = -x;
    return CycloNum(conductor_, std::move(c));
}

std::pair<CycloNum, CycloNum> to_common_conductor(const CycloNum& a, const CycloNum& b) {
    long m = lcm_long(a.conductor(), b.conductor());
    return {a.lift(m), b.lift(m)};
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
    if (a.conductor_ == b.conductor_) {
        std::vector<Rat> c = a.coeffs_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
        return CycloNum(a.conductor_, std::move(c));
    }
    auto [x, y] = to_common_conductor(a, b);
    return (x + y).reduce_conductor();
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    if (a.conductor_ == b.conductor_) {
        std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return CycloNum::from_powers(a.conductor_, c);
    }
    auto [x, y] = to_common_conductor(a, b);
    return (x * y).reduce_conductor();
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    auto [x, y] = to_common_conductor(a, b);
    return x.coeffs_ == y.coeffs_;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw std::domain_error("inverse: division by zero");
    // Extended Euclid in Q[x] on (Phi_n, a): u*a == gcd (mod Phi_n),
    // and the gcd is a nonzero constant since a != 0 in the field.
    using QPoly = std::vector<Rat>;
    auto deg = [](const QPoly& p) {
        for (std::size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<long>(i);
        return -1L;
    };
    // rem = rem - q * div in place; returns the remainder.
    auto poly_mod = [&](QPoly rem, const QPoly& div, QPoly& quot) {
        long dd = deg(div);
        quot.assign(1, Rat(0));
        long dr = deg(rem);
        if (dr >= dd) quot.assign(static_cast<std::size_t>(dr - dd) + 1, Rat(0));
        while ((dr = deg(rem)) >= dd) {
            Rat q = rem[dr] / div[dd];
            quot[dr - dd] = q;
            for (long i = 0; i <= dd; ++i) rem[dr - dd + i] -= q * div[i];
        }
        return rem;
    };
    auto poly_mulsub = [](QPoly a, const QPoly& q, const QPoly& b) {
        // a - q*b
        if (a.size() < q.size() + b.size()) a.resize(q.size() + b.size(), Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
        }
        return a;
    };
    const IPoly& phi_int = cyclotomic_polynomial(conductor_);
    QPoly r0(phi_int.size());
    for (std::size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rat(phi_int[i]);
    QPoly r1 = coeffs_;
    QPoly s0{Rat(0)}, s1{Rat(1)};  // Bezout coefficients of `a`
    while (deg(r1) > 0) {
        QPoly quot;
        QPoly rem = poly_mod(r0, r1, quot);
        r0 = std::move(r1);
        r1 = std::move(rem);
        QPoly s2 = poly_mulsub(s0, quot, s1);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (deg(r1) != 0) throw std::logic_error("inverse: gcd(a, Phi_n) not constant");
    Rat c = r1[0];
    for (Rat& x : s1) x /= c;
    return from_powers(conductor_, s1);
}

CycloNum CycloNum::galois(long k) const {
    long kk = k % conductor_;
    if (kk < 0) kk += conductor_;
    if (conductor_ == 1) kk = 0;  // the identity is the only automorphism
    if (conductor_ > 1 && gcd_long(kk, conductor_) != 1)
        throw std::invalid_argument("galois: k not coprime to conductor");
    std::vector<Rat> c(static_cast<std::size_t>(conductor_), Rat(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        c[(j * static_cast<std::size_t>(kk)) % static_cast<std::size_t>(conductor_)] +=
            coeffs_[j];
    }
    return from_powers(conductor_, c);
}

CycloNum CycloNum::conj() const {
    if (conductor_ <= 2) return *this;
    return galois(conductor_ - 1);
}

Rat CycloNum::trace_to_Q() const {
    CycloNum sum;
    for (long k = 1; k <= conductor_; ++k) {
        if (gcd_long(k, conductor_) != 1) continue;
        sum = sum + galois(k);
    }
    return sum.as_rat();
}

std::string CycloNum::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        Rat c = coeffs_[j];
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        Rat a = abs(c);
        if (j == 0) out << to_fraction_string(a);
        else {
            if (a != 1) out << to_fraction_string(a) << "*";
            out << "z" << conductor_;
            if (j > 1) out << "^" << j;
        }
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace prym
