#ifndef PRYMCOVER_CYCLOTOMIC_HPP
#define PRYMCOVER_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "prymcover/rational.hpp"

namespace prym {

// ---------------------------------------------------------------------------
// Elementary number theory helpers (exact, long-range inputs only).
// ---------------------------------------------------------------------------
long gcd_long(long a, long b);
long lcm_long(long a, long b);
long euler_phi(long n);
std::vector<long> divisors(long n);

// The n-th cyclotomic polynomial, monic of degree phi(n), as its
// integer coefficient vector (index = power of x). Computed by exact
// division of x^n - 1 by the product of Phi_d over proper divisors d,
// and memoized. Rejects n < 1.
const std::vector<Int>& cyclotomic_polynomial(long n);

// ---------------------------------------------------------------------------
// CycloNum: an exact element of Q(zeta_n), stored as its unique
// representative in the power basis 1, zeta, ..., zeta^{phi(n)-1}
// modulo Phi_n. Values are immutable after construction.
// ---------------------------------------------------------------------------
class CycloNum {
public:
    CycloNum() : conductor_(1), coeffs_(1, Rat(0)) {}
    explicit CycloNum(const Rat& q) : conductor_(1), coeffs_(1, q) {
        coeffs_[0].canonicalize();
    }
    explicit CycloNum(long n) : CycloNum(Rat(n)) {}

    // zeta_n^e, reduced mod Phi_n.
    static CycloNum zeta(long n, long e = 1);

    // From an arbitrary coefficient vector in powers of zeta_n
    // (any length; reduced mod Phi_n on construction).
    static CycloNum from_powers(long n, const std::vector<Rat>& powers);

    long conductor() const { return conductor_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // The rational value; throws std::domain_error for irrational input.
    Rat as_rat() const;

    // Embed into Q(zeta_m) for conductor_ | m.
    CycloNum lift(long m) const;
    // Canonical form at the smallest conductor d | n containing the value.
    CycloNum reduce_conductor() const;

    CycloNum operator-() const;
    friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    // Multiplicative inverse; throws std::domain_error on zero.
    CycloNum inverse() const;

    // The Galois automorphism zeta |-> zeta^k, gcd(k, n) = 1.
    // Throws std::invalid_argument for k not coprime to the conductor.
    CycloNum galois(long k) const;
    CycloNum conj() const;  // galois(n-1), complex conjugation

    // Trace to Q: sum of galois(k) over all k coprime to the conductor.
    Rat trace_to_Q() const;

    // Human-readable form, e.g. "1 - 1/2*z3".
    std::string str() const;

private:
    CycloNum(long n, std::vector<Rat> reduced)
        : conductor_(n), coeffs_(std::move(reduced)) {}

    long conductor_;
    std::vector<Rat> coeffs_;  // length phi(conductor_)
};

// Lift both operands to the lcm of their conductors; used by the
// mixed-conductor arithmetic path. Results of mixed-conductor
// operations are descended back to their minimal conductor.
std::pair<CycloNum, CycloNum> to_common_conductor(const CycloNum& a, const CycloNum& b);

}  // namespace prym

#endif
