// Command-line front end: exact reports for an abelian cover datum,
// the verification grid, and machine-readable tables.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prymcover/report.hpp"
#include "prymcover/verify.hpp"

namespace {

std::vector<long> parse_factors(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stol(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("group", "bad factor '" + item + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError("group", "empty factor list");
    return out;
}

int cmd_compute(const std::string& group_csv, long genus, const std::string& format) {
    std::vector<long> factors;
    try {
        factors = parse_factors(group_csv);
        for (long f : factors) {
            if (f < 2) {
                std::cerr << "error: group factors must be >= 2 (got " << f << ")\n";
                return 2;
            }
        }
        if (genus < 2) {
            std::cerr << "error: base genus must be >= 2 (the construction assumes "
                         "g(C') >= 2); got "
                      << genus << "\n";
            return 2;
        }
        prym::Report r = prym::build_report(factors, genus);
        if (format == "json")
            std::cout << prym::report_to_json(r).dump(2) << "\n";
        else
            std::cout << prym::report_to_text(r);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_verify(long max_order, long max_genus, int jobs) {
    if (max_order < 2 || max_genus < 2) {
        std::cerr << "error: minimal grid is order 2, genus 2\n";
        return 2;
    }
    prym::GridSummary s = prym::run_grid(max_order, max_genus, jobs);
    for (const auto& f : s.failures)
        std::cout << "FAIL " << f.cell << " " << f.property
                  << (f.detail.empty() ? "" : ": " + f.detail) << "\n";
    std::cout << (s.passed() ? "PASS" : "FAIL") << " " << s.total_checks
              << " checks over groups of order <= " << max_order << ", genus <= "
              << max_genus << " (" << s.failures.size() << " failures, "
              << static_cast<long>(s.seconds * 1000) << " ms)\n";
    return s.passed() ? 0 : 1;
}

void csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << "\r\n";
}

int cmd_table_betti(long genus, long max_d) {
    csv_row(std::cout, {"d", "betti"});
    for (long d = 0; d <= max_d; ++d) {
        std::string b = prym::poincare_sym(d, genus).str();
        csv_row(std::cout, {std::to_string(d), "\"" + b + "\""});
    }
    return 0;
}

int cmd_table_dims(long max_order, long max_genus) {
    csv_row(std::cout, {"group", "order", "genus", "total_genus", "prym_dim", "dim_U"});
    for (const prym::AbGroup& G : prym::abelian_groups_up_to(max_order)) {
        for (long g = 2; g <= max_genus; ++g) {
            prym::CoverDatum d(g, G);
            prym::PrymLedger ledger = prym::prym_ledger(d);
            csv_row(std::cout,
                    {"\"" + G.str() + "\"", std::to_string(G.order()), std::to_string(g),
                     std::to_string(ledger.total_genus), std::to_string(ledger.prym_dim),
                     std::to_string(prym::dim_weil(ledger.weil))});
        }
    }
    return 0;
}

int cmd_table_idempotents(const std::string& group_csv) {
    prym::AbGroup G = prym::normalize_group(parse_factors(group_csv));
    prym::AlgebraSplit split = prym::split_group_algebra(G);
    csv_row(std::cout, {"field_conductor", "dim_over_Q", "coefficients"});
    auto row = [&](const prym::RatIrrep& o) {
        std::string coeffs;
        for (std::size_t i = 0; i < o.idempotent.size(); ++i)
            coeffs += (i ? " " : "") + prym::to_fraction_string(o.idempotent[i]);
        csv_row(std::cout, {std::to_string(o.field_conductor),
                            std::to_string(o.dim_over_Q()), "\"" + coeffs + "\""});
    };
    row(split.trivial_factor);
    for (const auto& o : split.nontrivial_factors) row(o);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dimension/cycle-class engine for abelian covers of "
                 "symmetric products and their Prym varieties"};
    app.require_subcommand(1);

    std::string group_csv, format = "text", kind;
    long genus = 2, max_order = 12, max_genus = 5, table_genus = 2, table_max_d = 6;
    int jobs = 1;

    auto* compute = app.add_subcommand("compute", "full exact report for one cover datum");
    compute->add_option("--group", group_csv, "comma-separated direct-product factors")
        ->required();
    compute->add_option("--genus", genus, "base genus g' (>= 2)")->required();
    compute->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* verify = app.add_subcommand("verify", "run the verification grid");
    verify->add_option("--max-order", max_order, "largest group order (default 12)");
    verify->add_option("--max-genus", max_genus, "largest base genus (default 5)");
    verify->add_option("--jobs", jobs, "worker count (1 = serial reference loop)");

    auto* table = app.add_subcommand("table", "machine-readable CSV tables");
    table->add_option("--kind", kind, "betti|dims|idempotents")->required();
    table->add_option("--group", group_csv, "group factors (for idempotents)");
    table->add_option("--genus", table_genus, "curve genus (for betti)");
    table->add_option("--max-d", table_max_d, "largest symmetric power (for betti)");
    table->add_option("--max-order", max_order, "largest group order (for dims)");
    table->add_option("--max-genus", max_genus, "largest base genus (for dims)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(group_csv, genus, format);
        if (verify->parsed()) return cmd_verify(max_order, max_genus, jobs);
        if (table->parsed()) {
            if (kind == "betti") return cmd_table_betti(table_genus, table_max_d);
            if (kind == "dims") return cmd_table_dims(max_order, max_genus);
            if (kind == "idempotents") {
                if (group_csv.empty()) {
                    std::cerr << "error: --group required for idempotents\n";
                    return 2;
                }
                return cmd_table_idempotents(group_csv);
            }
            std::cerr << "error: unknown table kind '" << kind << "'\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
