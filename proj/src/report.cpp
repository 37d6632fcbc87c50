#include "prymcover/report.hpp"

#include <sstream>

namespace prym {

using nlohmann::ordered_json;

Report build_report(const std::vector<long>& factors, long genus) {
    Report r;
    r.input_factors = factors;
    r.base_genus = genus;
    r.group = normalize_group(factors);
    CoverDatum d(genus, r.group);
    r.split = split_group_algebra(r.group);
    r.ledger = prym_ledger(d);
    r.hodge = h1_cover(d);
    r.w = cohomology_of_W(d);
    r.u = assemble_u(CycleLattice(r.group), r.split);
    r.schoen_applicable = r.group.is_cyclic() && !r.group.is_trivial();
    if (r.schoen_applicable) r.schoen = schoen_primitive(d);
    return r;
}

namespace {

std::string char_label(const GChar& chi) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < chi.coords().size(); ++i)
        out << (i ? "," : "") << chi.coords()[i];
    out << ")";
    return out.str();
}

ordered_json betti_json(const PoincarePoly& p) {
    ordered_json arr = ordered_json::array();
    for (const Int& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

ordered_json cycle_vec_json(const CycleVec& v) {
    ordered_json arr = ordered_json::array();
    for (const CycloNum& c : v.coeffs) arr.push_back(to_fraction_string(c.as_rat()));
    return arr;
}

}  // namespace

ordered_json report_to_json(const Report& r) {
    ordered_json j;
    j["inputs"]["group_factors"] = r.input_factors;
    j["inputs"]["base_genus"] = r.base_genus;
    j["group"]["invariant_factors"] = r.group.invariant_factors();
    j["group"]["order"] = r.group.order();
    j["group"]["exponent"] = r.group.exponent();

    ordered_json factors = ordered_json::array();
    auto orbit_json = [&](const RatIrrep& o) {
        ordered_json f;
        f["field_conductor"] = o.field_conductor;
        f["dim_over_Q"] = o.dim_over_Q();
        ordered_json chars = ordered_json::array();
        for (const GChar& chi : o.orbit) chars.push_back(char_label(chi));
        f["characters"] = chars;
        ordered_json idem = ordered_json::array();
        for (const Rat& c : o.idempotent) idem.push_back(to_fraction_string(c));
        f["idempotent"] = idem;
        return f;
    };
    factors.push_back(orbit_json(r.split.trivial_factor));
    for (const RatIrrep& o : r.split.nontrivial_factors) factors.push_back(orbit_json(o));
    j["algebra_split"]["factors"] = factors;
    j["algebra_split"]["dim_nontrivial"] = r.split.dim_nontrivial();

    j["genus_ledger"]["base_genus"] = r.base_genus;
    j["genus_ledger"]["h"] = 2 * r.base_genus - 2;
    j["genus_ledger"]["total_genus"] = r.ledger.total_genus;
    j["genus_ledger"]["prym_dim"] = r.ledger.prym_dim;
    j["genus_ledger"]["per_orbit_dims"] = r.ledger.per_orbit_dims;
    j["genus_ledger"]["dim_weil"] = dim_weil(r.ledger.weil);

    ordered_json hodge = ordered_json::array();
    for (const auto& [key, m] : r.hodge.table()) {
        ordered_json row;
        row["chi"] = char_label(key.first);
        row["p"] = key.second.first;
        row["q"] = key.second.second;
        row["mult"] = m;
        hodge.push_back(row);
    }
    j["hodge_multiplicities"] = hodge;

    j["betti"]["sym_h_base"] = betti_json(r.w.betti_sym);
    j["betti"]["W"] = betti_json(r.w.betti);
    ordered_json iso = ordered_json::array();
    for (const auto& [chi, dim] : r.w.isotypic_middle) {
        ordered_json row;
        row["chi"] = char_label(chi);
        row["dim"] = dim.get_str();
        iso.push_back(row);
    }
    j["betti"]["middle_isotypic"] = iso;

    ordered_json blocks = ordered_json::array();
    for (const auto& block : r.u.blocks) {
        ordered_json b = ordered_json::array();
        for (const CycleVec& v : block) b.push_back(cycle_vec_json(v));
        blocks.push_back(b);
    }
    j["cycle_basis"]["blocks"] = blocks;
    j["cycle_basis"]["total_dim"] = r.u.total_dim;

    if (r.schoen_applicable) {
        j["schoen_primitive"]["B_prim_dim"] = r.schoen.b_prim_dim;
        j["schoen_primitive"]["U_prim_dim"] = r.schoen.u_prim_dim;
        ordered_json tangent;
        for (const auto& [k, m] : r.schoen.tangent_multiplicities)
            tangent[std::to_string(k)] = m;
        j["schoen_primitive"]["tangent_multiplicities"] = tangent;
    }

    j["assumptions"] = {Report::kBalancedModelFlag, Report::kStandardConjectureFlag,
                        Report::kPoincareSeriesFlag};
    return j;
}

std::string report_to_text(const Report& r) {
    std::ostringstream out;
    out << "cover: G = " << r.group.str() << " (order " << r.group.order()
        << "), base genus g' = " << r.base_genus << ", h = " << 2 * r.base_genus - 2
        << "\n";
    out << "group algebra: Q[G] = Q";
    for (const RatIrrep& o : r.split.nontrivial_factors)
        out << " x Q(zeta_" << o.field_conductor << ")";
    out << "   (dim Q[G]_nt = " << r.split.dim_nontrivial() << ")\n";
    out << "genus ledger: g = " << r.ledger.total_genus
        << ", prym_dim = " << r.ledger.prym_dim << ", per-orbit dims =";
    for (long d : r.ledger.per_orbit_dims) out << " " << d;
    out << "\n";
    out << "weil space: dim = " << dim_weil(r.ledger.weil) << ", hodge = "
        << (is_hodge_space(r.ledger.weil).is_hodge ? "yes" : "no") << "\n";
    out << "betti Sym^h(C'): " << r.w.betti_sym.str() << "\n";
    out << "betti W:         " << r.w.betti.str() << "\n";
    out << "U basis blocks:\n";
    for (std::size_t b = 0; b < r.u.blocks.size(); ++b) {
        for (const CycleVec& v : r.u.blocks[b]) {
            out << "  [" << b << "]";
            for (const CycloNum& c : v.coeffs)
                out << " " << to_fraction_string(c.as_rat());
            out << "\n";
        }
    }
    if (r.schoen_applicable) {
        out << "schoen primitive: B_prim_dim = " << r.schoen.b_prim_dim
            << ", U_prim_dim = " << r.schoen.u_prim_dim << "\n";
    }
    out << "assumptions: " << Report::kBalancedModelFlag << "; "
        << Report::kStandardConjectureFlag << "; " << Report::kPoincareSeriesFlag
        << "\n";
    return out.str();
}

}  // namespace prym
