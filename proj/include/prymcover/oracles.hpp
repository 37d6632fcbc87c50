#ifndef PRYMCOVER_ORACLES_HPP
#define PRYMCOVER_ORACLES_HPP

#include "prymcover/symprod.hpp"

namespace prym {
// Independent brute-force routes used only for cross-checking the
// engine; nothing here shares code with the implementation paths it
// is checking.
namespace oracle {

// Genus of the covering curve from Euler-characteristic
// multiplicativity: chi(C) = |G| * chi(C'), chi = 2 - 2g.
long total_genus_euler(long cover_degree, long base_genus);

// Cohomology of a rank-1 local system on a product of 2g circles,
// factor-by-factor via the two-term complex (lambda - 1), Kunneth
// over the factors. The monodromy of circle i is chi evaluated at
// the image of the i-th standard loop under a fixed surjection
// Z^{2g} -> G (generators onto the invariant-factor generators,
// remaining loops to 0). Requires 2g >= number of invariant factors.
PoincarePoly torus_circle_complex(const GChar& chi, const AbGroup& G, long g);

// Betti numbers of Sym^d via the fibration ledger at d = 2g-2: the
// free layers contribute a shifted copy of H*(J) each, the skyscraper
// one class in degree 2(g-1). Independent of the generating-function
// expansion in poincare_sym.
PoincarePoly sym_middle_fibration_ledger(long g);

// Phi_n via dense remainder: x^n - 1 divided by the product of
// Phi_d over proper divisors, each obtained recursively by the same
// route but starting from scratch (no shared cache with
// cyclotomic_polynomial).
std::vector<Int> cyclotomic_poly_bruteforce(long n);

}  // namespace oracle
}  // namespace prym

#endif
