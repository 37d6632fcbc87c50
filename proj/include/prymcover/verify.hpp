#ifndef PRYMCOVER_VERIFY_HPP
#define PRYMCOVER_VERIFY_HPP

#include <string>
#include <vector>

#include "prymcover/cover.hpp"

namespace prym {

struct CheckResult {
    std::string cell;      // "(Z/2 x Z/2, g'=3)" or "(global)"
    std::string property;
    bool pass = false;
    std::string detail;    // populated on failure
};

// All per-(G, g') property checks: dimension identities, free-module
// rank, Hodge criterion plus its unbalancing mutation, middle-degree
// Betti bookkeeping, torus vanishing against the circle-complex
// oracle, the fibration/Macdonald cross-check, and the group-lattice
// skeleton (bounded).
std::vector<CheckResult> run_cell_checks(const AbGroup& G, long genus,
                                         long lattice_cap = 100000);

// Genus-independent checks for one group: character orthogonality,
// idempotent integrity, regular-representation multiplicities, and
// the cycle-lattice suite (eigen-equivariance, descent, gram-scale
// independence, golden Z/3 basis).
std::vector<CheckResult> run_group_checks(const AbGroup& G);

// Scalar-level checks of the cyclotomic kernel: product identity for
// Phi_d, random ring laws, Galois composition, trace rationality.
std::vector<CheckResult> run_scalar_checks(unsigned seed = 20240616);

struct GridSummary {
    long total_checks = 0;
    std::vector<CheckResult> failures;
    double seconds = 0.0;
    bool passed() const { return failures.empty(); }
};

// The verification grid over all abelian groups of order <= max_order
// and genus <= max_genus. jobs <= 1 runs the serial reference loop;
// jobs > 1 distributes cells over an OpenMP worker pool. Both paths
// produce identical summaries (aggregation is order-independent).
GridSummary run_grid(long max_order, long max_genus, int jobs = 1);

}  // namespace prym

#endif
