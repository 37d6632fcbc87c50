#ifndef PRYMCOVER_REPORT_HPP
#define PRYMCOVER_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "prymcover/cycles.hpp"
#include "prymcover/symprod.hpp"

namespace prym {

// The full per-cover report surfaced by the CLI: every number exact,
// serialization deterministic (stable key order, fractions as
// strings).
struct Report {
    std::vector<long> input_factors;     // as given on the command line
    long base_genus = 0;

    AbGroup group;                       // normalized invariant factors
    AlgebraSplit split;
    PrymLedger ledger;
    GHodge hodge = GHodge(AbGroup(), 1); // h1 of the covering curve
    WCohomology w;
    UDecomposition u;                    // rational cycle bases
    bool schoen_applicable = false;
    SchoenPrimitive schoen;              // valid when schoen_applicable

    // Assumption flags carried on every report.
    static constexpr const char* kBalancedModelFlag =
        "balanced-multiplicity model for all abelian deck groups";
    static constexpr const char* kStandardConjectureFlag =
        "algebraicity of the inverse Lefschetz operator assumed, not computed";
    static constexpr const char* kPoincareSeriesFlag =
        "full symmetric-product Poincare series: standard extension, not in paper";
};

Report build_report(const std::vector<long>& factors, long genus);

nlohmann::ordered_json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

}  // namespace prym

#endif
