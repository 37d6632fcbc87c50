#include "prymcover/oracles.hpp"

#include <functional>
#include <stdexcept>

namespace prym {
namespace oracle {

long total_genus_euler(long cover_degree, long base_genus) {
    long chi_base = 2 - 2 * base_genus;
    long chi_cover = cover_degree * chi_base;
    return (2 - chi_cover) / 2;
}

PoincarePoly torus_circle_complex(const GChar& chi, const AbGroup& G, long g) {
    const auto& d = G.invariant_factors();
    if (2 * g < static_cast<long>(d.size()))
        throw std::invalid_argument("torus_circle_complex: too few circle factors");
    // Monodromy of loop i: the character value at the i-th generator
    // (0 for the padding loops).
    PoincarePoly result(std::vector<Int>{Int(1)});
    for (long i = 0; i < 2 * g; ++i) {
        CycloNum lambda;
        if (i < static_cast<long>(d.size())) {
            GElem gen{std::vector<long>(d.size(), 0)};
            gen.coords[static_cast<std::size_t>(i)] = 1;
            lambda = chi.eval(gen);
        } else {
            lambda = CycloNum(Rat(1));
        }
        // Two-term complex C --(lambda - 1)--> C on one circle:
        // H^0 = ker, H^1 = coker; both are C iff lambda == 1, else 0.
        bool unit = (lambda == CycloNum(Rat(1)));
        PoincarePoly factor(unit ? std::vector<Int>{Int(1), Int(1)}
                                 : std::vector<Int>{Int(0)});
        result = result * factor;
    }
    return result;
}

PoincarePoly sym_middle_fibration_ledger(long g) {
    if (g < 2) throw std::invalid_argument("sym_middle_fibration_ledger: g >= 2");
    // Free layer in degree 2k, 0 <= k <= g-2: a copy of H*(J) shifted
    // by 2k. Skyscraper layer: one class in degree 2(g-1).
    PoincarePoly total;
    PoincarePoly jac = poincare_jacobian(g);
    for (long k = 0; k <= g - 2; ++k) {
        std::vector<Int> shift(static_cast<std::size_t>(2 * k) + 1, Int(0));
        shift.back() = 1;
        total = total + PoincarePoly(std::move(shift)) * jac;
    }
    std::vector<Int> sky(static_cast<std::size_t>(2 * (g - 1)) + 1, Int(0));
    sky.back() = 1;
    return total + PoincarePoly(std::move(sky));
}

std::vector<Int> cyclotomic_poly_bruteforce(long n) {
    // Fresh recursion, no memoization shared with the engine.
    std::function<std::vector<Int>(long)> phi = [&](long m) -> std::vector<Int> {
        std::vector<Int> num(static_cast<std::size_t>(m) + 1, Int(0));
        num[0] = -1;
        num[static_cast<std::size_t>(m)] = 1;
        for (long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            std::vector<Int> q = phi(d);
            // Long division num / q (q monic), exact.
            std::vector<Int> out(num.size() - q.size() + 1, Int(0));
            for (std::size_t k = out.size(); k-- > 0;) {
                Int c = num[k + q.size() - 1];
                out[k] = c;
                for (std::size_t j = 0; j < q.size(); ++j) num[k + j] -= c * q[j];
            }
            num = std::move(out);
        }
        return num;
    };
    return phi(n);
}

}  // namespace oracle
}  // namespace prym
