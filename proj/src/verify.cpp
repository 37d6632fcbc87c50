#include "prymcover/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "prymcover/cycles.hpp"
#include "prymcover/oracles.hpp"
#include "prymcover/symprod.hpp"

namespace prym {

namespace {

class Checker {
public:
    explicit Checker(std::string cell) : cell_(std::move(cell)) {}

    void check(const std::string& property, bool pass, const std::string& detail = "") {
        results_.push_back({cell_, property, pass, pass ? "" : detail});
    }

    template <typename F>
    void guarded(const std::string& property, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            check(property, false, std::string("exception: ") + e.what());
        }
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::string cell_;
    std::vector<CheckResult> results_;
};

std::string cell_name(const AbGroup& G, long genus) {
    std::ostringstream out;
    out << "(" << G.str() << ", g'=" << genus << ")";
    return out.str();
}

GHodge unbalanced_mutation(const GHodge& h1) {
    GHodge mutated = h1;
    for (const GChar& chi : characters(h1.group())) {
        if (chi.is_trivial()) continue;
        mutated.add_mult(chi, 1, 0, 1);
        mutated.set_mult(chi, 0, 1, mutated.mult(chi, 0, 1) - 1);
        break;
    }
    return mutated;
}

}  // namespace

std::vector<CheckResult> run_cell_checks(const AbGroup& G, long genus, long lattice_cap) {
    Checker c(cell_name(G, genus));
    CoverDatum d(genus, G);
    const long n = G.order();
    const long h = d.h();

    c.guarded("genus-ledger", [&] {
        long g = total_genus(d);
        c.check("total-genus-euler-oracle", g == oracle::total_genus_euler(n, genus));
        GHodge h1 = h1_cover(d);
        c.check("dimension-identity-2g",
                h1.total_dim() == 2 * genus + (n - 1) * h &&
                    h1.total_dim() == 2 * g,
                "2g != 2g' + (|G|-1)h");
        c.check("h1-conjugation-symmetric", h1.conjugation_symmetric());
        c.check("tate-twist-preserves-symmetry",
                h1.tate_twist(3).conjugation_symmetric() &&
                    h1.tate_twist(3).weight() == 7);

        auto claim = FreeModClaim::from_h1(h1);
        c.check("free-module-rank-h", G.is_trivial() || claim.rank == h,
                "nontrivial part is not free of rank h");

        PrymLedger ledger = prym_ledger(d);
        c.check("prym-dim-formula", ledger.prym_dim == (n - 1) * (genus - 1));
        long orbit_sum = 0;
        for (long x : ledger.per_orbit_dims) orbit_sum += x;
        c.check("isogeny-ledger-sum", genus + orbit_sum == ledger.total_genus);
        c.check("dim-weil", dim_weil(ledger.weil) == n - 1);
        c.check("weil-is-hodge", is_hodge_space(ledger.weil).is_hodge);

        if (!G.is_trivial()) {
            auto mutated = wedge_top_over_algebra(FreeModClaim::from_h1(unbalanced_mutation(h1)));
            auto witness = is_hodge_space(mutated);
            c.check("mutation-breaks-hodge", !witness.is_hodge,
                    "unbalancing mutation not detected");
        }

        if (G.is_cyclic() && !G.is_trivial()) {
            SchoenPrimitive s = schoen_primitive(d);
            c.check("schoen-prim-dim", s.b_prim_dim == euler_phi(G.exponent()) * (genus - 1));
            bool tangent_ok = true;
            for (const auto& [k, m] : s.tangent_multiplicities)
                tangent_ok = tangent_ok && m == genus - 1;
            c.check("schoen-tangent-multiplicities",
                    tangent_ok && static_cast<long>(s.tangent_multiplicities.size()) ==
                                      s.u_prim_dim);
            // The primitive orbit is one of the ledger blocks.
            bool found = std::find(ledger.per_orbit_dims.begin(), ledger.per_orbit_dims.end(),
                                   s.b_prim_dim) != ledger.per_orbit_dims.end() ||
                         s.b_prim_dim == 0;
            c.check("schoen-block-in-ledger", found);
        }
    });

    c.guarded("w-cohomology", [&] {
        WCohomology w = cohomology_of_W(d);
        bool offmiddle_ok = true;
        for (std::size_t i = 0; i <= std::max(w.betti.degree(), w.betti_sym.degree()); ++i) {
            if (static_cast<long>(i) == h) continue;
            offmiddle_ok = offmiddle_ok && w.betti.betti(i) == w.betti_sym.betti(i);
        }
        c.check("w-betti-offmiddle", offmiddle_ok);
        c.check("w-betti-middle-bump",
                w.betti.betti(static_cast<std::size_t>(h)) -
                        w.betti_sym.betti(static_cast<std::size_t>(h)) ==
                    n - 1);
        bool iso_ok = true;
        Int iso_total = 0;
        for (const auto& [chi, dim] : w.isotypic_middle) {
            iso_total += dim;
            iso_ok = iso_ok && !chi.is_trivial() && dim == 1;
        }
        c.check("w-isotypic-one-dimensional", iso_ok);
        c.check("w-isotypic-total", iso_total == n - 1);
        c.check("w-betti-palindromic", w.betti.palindromic() && w.betti_sym.palindromic());

        // Fibration ledger vs Macdonald generating function.
        c.check("leray-macdonald-agreement",
                poincare_sym(h, genus) == oracle::sym_middle_fibration_ledger(genus));
        c.check("macdonald-middle-total",
                macdonald_middle(genus).total ==
                    poincare_sym(h, genus).betti(static_cast<std::size_t>(h)));

        // E2 ledger: single entry, abutment in total degree h.
        E2Page e2 = e2_page_nontrivial(d);
        Int nonzero_total = 0;
        bool single = true;
        for (long p = 0; p <= 2 * genus; ++p)
            for (long q = 0; q <= 2 * genus; ++q) {
                Int v = e2.entry(p, q);
                if (v != 0 && !(p == 0 && q == 2 * (genus - 1))) single = false;
                nonzero_total += v;
            }
        c.check("e2-single-entry", single && nonzero_total == n - 1);
        c.check("e2-abutment-degree", e2.total_degree_of_abutment() == h);
    });

    c.guarded("proj-bundle", [&] {
        bool ok = true;
        for (long dd = 2 * genus - 1; dd <= 2 * genus + 3; ++dd)
            ok = ok && poincare_sym(dd, genus) == proj_bundle_cohomology(dd, genus);
        c.check("proj-bundle-agreement", ok);
        PushforwardModel push = aj_pushforward(genus);
        bool layers_ok = push.layer(2 * (genus - 1)) == PushforwardModel::Layer::kSkyscraper;
        for (long k = 0; k <= genus - 2; ++k)
            layers_ok = layers_ok && push.layer(2 * k) == PushforwardModel::Layer::kFree;
        for (long nn = 1; nn <= 2 * genus; nn += 2)
            layers_ok = layers_ok && push.layer(nn) == PushforwardModel::Layer::kZero;
        c.check("pushforward-layers", layers_ok);
    });

    c.guarded("torus-vanishing", [&] {
        bool ok = true;
        for (const GChar& chi : characters(G)) {
            PoincarePoly expect = torus_ls_cohomology(chi, genus);
            PoincarePoly got = oracle::torus_circle_complex(chi, G, genus);
            ok = ok && expect == got;
        }
        c.check("torus-vanishing-circle-oracle", ok);
    });

    c.guarded("group-lattice", [&] {
        double size = 1;
        for (long i = 0; i < h; ++i) size *= static_cast<double>(n);
        if (size <= static_cast<double>(lattice_cap)) {
            auto r = group_lattice_check(d, lattice_cap);
            c.check("group-lattice-skeleton",
                    r.ok && r.index == n && r.antidiagonal_in_kernel, r.detail);
        }
    });

    return c.take();
}

std::vector<CheckResult> run_group_checks(const AbGroup& G) {
    Checker c("(" + G.str() + ")");
    const long n = G.order();
    auto elems = g_elements(G);

    c.guarded("characters", [&] {
        auto chars = characters(G);
        c.check("character-count", static_cast<long>(chars.size()) == n);
        c.check("trivial-character-first", chars.empty() || chars.front().is_trivial());
        // Distinctness + multiplicity one in the regular representation.
        std::vector<GChar> uniq = chars;
        std::sort(uniq.begin(), uniq.end());
        c.check("characters-distinct",
                std::adjacent_find(uniq.begin(), uniq.end()) == uniq.end());
        // chi(x + y) = chi(x) chi(y), exhaustive.
        bool hom = true;
        for (const GChar& chi : chars)
            for (const GElem& x : elems)
                for (const GElem& y : elems)
                    hom = hom && chi.eval(g_add(G, x, y)) == chi.eval(x) * chi.eval(y);
        c.check("character-homomorphism", hom);
        // Orthogonality, exhaustive over pairs.
        bool orth = true;
        for (const GChar& chi : chars) {
            for (const GChar& psi : chars) {
                CycloNum sum;
                for (const GElem& x : elems)
                    sum = sum + chi.eval(x) * psi.eval(g_neg(G, x));
                Rat expect = chi == psi ? Rat(1) : Rat(0);
                orth = orth && sum == CycloNum(Rat(n) * expect);
            }
        }
        c.check("character-orthogonality", orth);
    });

    c.guarded("algebra-split", [&] {
        // split_group_algebra verifies completeness and orthogonality
        // internally and throws on violation.
        AlgebraSplit split = split_group_algebra(G);
        c.check("idempotent-integrity", true);
        c.check("dim-nontrivial", split.dim_nontrivial() == n - 1);
    });

    c.guarded("cycle-lattice", [&] {
        AlgebraSplit split = split_group_algebra(G);
        CycleLattice L(G);
        CycleVec diag = diagonal_class(L);
        bool fixed = true, equivariant = true;
        for (const GElem& s : elems) {
            fixed = fixed && g_act(s, diag) == diag;
            for (const GChar& chi : characters(G)) {
                CycleVec pushed = chi_pushforward(chi, L);
                CycleVec lhs = g_act(s, pushed);
                CycleVec rhs = chi.eval(s) * pushed;
                equivariant = equivariant && lhs == rhs;
            }
        }
        c.check("diagonal-fixed", fixed);
        c.check("chi-pushforward-eigenvector", equivariant);

        auto aug = u_subspace(L);
        c.check("u-subspace-dim", static_cast<long>(aug.size()) == n - 1);
        bool diag_orth = true;
        for (const CycleVec& v : aug)
            diag_orth = diag_orth && pair_cycles(L, diag, v).is_zero();
        c.check("u-orthogonal-to-diagonal", diag_orth);

        if (n > 1) {
            UDecomposition u = assemble_u(L, split);
            c.check("assemble-u", u.total_dim == n - 1);
            bool rational_ok = true;
            for (const auto& block : u.blocks)
                for (const CycleVec& v : block)
                    for (const CycloNum& x : v.coeffs) {
                        rational_ok = rational_ok && x.is_rational();
                        // Fixed by every Galois index of the exponent field.
                        long m = G.exponent();
                        for (long k = 1; k <= m; ++k) {
                            if (gcd_long(k, m) != 1) continue;
                            rational_ok = rational_ok && x.lift(m).galois(k) == x.lift(m);
                        }
                    }
            c.check("descent-galois-fixed", rational_ok);

            // Gram-scale independence: identical U bases for several c.
            UDecomposition u2 = assemble_u(CycleLattice(G, Rat(2)), split);
            UDecomposition u3 = assemble_u(CycleLattice(G, Rat(7, 3)), split);
            bool same = u.blocks.size() == u2.blocks.size() && u.blocks.size() == u3.blocks.size();
            for (std::size_t i = 0; same && i < u.blocks.size(); ++i)
                same = u.blocks[i] == u2.blocks[i] && u.blocks[i] == u3.blocks[i];
            c.check("gram-scale-independence", same);

            // Completeness: diagonal + U spans everything over Q.
            std::vector<CycleVec> full = {diag};
            for (const auto& block : u.blocks)
                full.insert(full.end(), block.begin(), block.end());
            c.check("completeness-rank",
                    cycle_matrix(full).rank() == static_cast<std::size_t>(n));
        }
    });

    return c.take();
}

std::vector<CheckResult> run_scalar_checks(unsigned seed) {
    Checker c("(global)");

    c.guarded("cyclotomic-product-identity", [&] {
        bool ok = true;
        for (long n = 1; n <= 64; ++n) {
            std::vector<Int> prod{Int(1)};
            for (long d : divisors(n)) {
                const auto& phi = cyclotomic_polynomial(d);
                std::vector<Int> next(prod.size() + phi.size() - 1, Int(0));
                for (std::size_t i = 0; i < prod.size(); ++i)
                    for (std::size_t j = 0; j < phi.size(); ++j)
                        next[i + j] += prod[i] * phi[j];
                prod = std::move(next);
            }
            std::vector<Int> target(static_cast<std::size_t>(n) + 1, Int(0));
            target[0] = -1;
            target[static_cast<std::size_t>(n)] = 1;
            ok = ok && prod == target;
        }
        c.check("prod-phi-d-equals-x^n-1", ok);
    });

    c.guarded("cyclotomic-ring-laws", [&] {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<long> coeff(-3, 3);
        std::vector<long> conductors{3, 4, 5, 8, 12, 15, 24};
        bool inv_ok = true, ring_ok = true, galois_ok = true, trace_ok = true;
        for (long n : conductors) {
            long deg = euler_phi(n);
            auto random_elt = [&] {
                std::vector<Rat> v(static_cast<std::size_t>(deg));
                for (Rat& x : v) x = Rat(coeff(rng));
                return CycloNum::from_powers(n, v);
            };
            for (int trial = 0; trial < 8; ++trial) {
                CycloNum a = random_elt(), b = random_elt(), x = random_elt();
                if (!a.is_zero()) inv_ok = inv_ok && a * a.inverse() == CycloNum(Rat(1));
                ring_ok = ring_ok && a * (b + x) == a * b + a * x && a * b == b * a;
                // Galois composition and trace rationality.
                std::vector<long> units;
                for (long k = 1; k <= n; ++k)
                    if (gcd_long(k, n) == 1) units.push_back(k);
                long k1 = units[static_cast<std::size_t>(rng() % units.size())];
                long k2 = units[static_cast<std::size_t>(rng() % units.size())];
                galois_ok = galois_ok && a.galois(k1).galois(k2) == a.galois((k1 * k2) % n);
                Rat tr = a.trace_to_Q();
                for (long k : units)
                    trace_ok = trace_ok && CycloNum(tr).lift(n).galois(k) == CycloNum(tr).lift(n);
            }
        }
        c.check("inverse-law", inv_ok);
        c.check("ring-laws", ring_ok);
        c.check("galois-composition", galois_ok);
        c.check("trace-rational", trace_ok);
    });

    c.guarded("cyclotomic-polynomial-oracle", [&] {
        bool ok = true;
        for (long n : {1L, 2L, 6L, 12L, 30L, 36L})
            ok = ok && cyclotomic_polynomial(n) == oracle::cyclotomic_poly_bruteforce(n);
        c.check("phi-bruteforce-agreement", ok);
    });

    return c.take();
}

GridSummary run_grid(long max_order, long max_genus, int jobs) {
    auto start = std::chrono::steady_clock::now();
    GridSummary summary;

    std::vector<CheckResult> scalar = run_scalar_checks();

    auto groups = abelian_groups_up_to(std::max(max_order, 2L));
    struct Cell { AbGroup group; long genus; };  // genus 0 marks group-only checks
    std::vector<Cell> cells;
    for (const AbGroup& G : groups) {
        cells.push_back({G, 0});
        for (long g = 2; g <= std::max(max_genus, 2L); ++g) cells.push_back({G, g});
    }

    std::vector<std::vector<CheckResult>> per_cell(cells.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            per_cell[i] = cells[i].genus == 0 ? run_group_checks(cells[i].group)
                                              : run_cell_checks(cells[i].group, cells[i].genus);
    } else {
        const long long count = static_cast<long long>(cells.size());
#ifdef _OPENMP
        omp_set_num_threads(jobs);
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long i = 0; i < count; ++i) {
            auto idx = static_cast<std::size_t>(i);
            per_cell[idx] = cells[idx].genus == 0
                                ? run_group_checks(cells[idx].group)
                                : run_cell_checks(cells[idx].group, cells[idx].genus);
        }
    }

    auto absorb = [&](const std::vector<CheckResult>& rs) {
        for (const CheckResult& r : rs) {
            ++summary.total_checks;
            if (!r.pass) summary.failures.push_back(r);
        }
    };
    absorb(scalar);
    for (const auto& rs : per_cell) absorb(rs);

    summary.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

}  // namespace prym
