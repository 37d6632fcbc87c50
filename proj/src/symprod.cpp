#include "prymcover/symprod.hpp"

#include <sstream>
#include <stdexcept>

namespace prym {

PoincarePoly::PoincarePoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, Int(0));
    for (const Int& c : coeffs_)
        if (c < 0) throw std::invalid_argument("PoincarePoly: negative Betti number");
    trim();
}

void PoincarePoly::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

Int PoincarePoly::total() const {
    Int t = 0;
    for (const Int& c : coeffs_) t += c;
    return t;
}

bool PoincarePoly::is_zero() const {
    return coeffs_.size() == 1 && coeffs_[0] == 0;
}

bool PoincarePoly::palindromic() const {
    for (std::size_t i = 0, j = coeffs_.size() - 1; i < j; ++i, --j)
        if (coeffs_[i] != coeffs_[j]) return false;
    return true;
}

PoincarePoly operator+(const PoincarePoly& a, const PoincarePoly& b) {
    std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return PoincarePoly(std::move(c));
}

PoincarePoly operator*(const PoincarePoly& a, const PoincarePoly& b) {
    if (a.is_zero() || b.is_zero()) return PoincarePoly();
    std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PoincarePoly(std::move(c));
}

std::string PoincarePoly::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out << (i ? "," : "") << coeffs_[i].get_str();
    return out.str();
}

namespace {

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

}  // namespace

PoincarePoly poincare_jacobian(long g) {
    if (g < 0) throw std::invalid_argument("poincare_jacobian: g >= 0");
    std::vector<Int> c(static_cast<std::size_t>(2 * g) + 1);
    for (long k = 0; k <= 2 * g; ++k) c[static_cast<std::size_t>(k)] = binomial(2 * g, k);
    return PoincarePoly(std::move(c));
}

PoincarePoly poincare_sym(long d, long g) {
    if (d < 0) throw std::invalid_argument("poincare_sym: d >= 0");
    if (g < 0) throw std::invalid_argument("poincare_sym: g >= 0");
    // Coefficient of t^d in (1+xt)^{2g} / ((1-t)(1-x^2 t)):
    // sum over i + j + k = d of C(2g, i) x^i * x^{2k}.
    std::vector<Int> c(static_cast<std::size_t>(2 * d) + 1, Int(0));
    for (long i = 0; i <= std::min(d, 2 * g); ++i) {
        Int b = binomial(2 * g, i);
        for (long k = 0; i + k <= d; ++k)  // j = d - i - k absorbs the 1/(1-t)
            c[static_cast<std::size_t>(i + 2 * k)] += b;
    }
    return PoincarePoly(std::move(c));
}

MacdonaldDecomposition macdonald_middle(long g, std::optional<long> degree) {
    if (g < 0) throw std::invalid_argument("macdonald_middle: g >= 0");
    long d = degree.value_or(2 * g - 2);
    if (d < 0) throw std::invalid_argument("macdonald_middle: degree >= 0");
    MacdonaldDecomposition out;
    out.genus = g;
    out.degree = d;
    out.total = 0;
    for (long i = 0; 2 * i <= d; ++i) {
        MacdonaldSummand s{d - 2 * i, i, binomial(2 * g, d - 2 * i)};
        if (s.dim == 0) continue;
        out.total += s.dim;
        out.summands.push_back(s);
    }
    return out;
}

PoincarePoly proj_bundle_cohomology(long d, long g) {
    if (d < 2 * g - 1)
        throw std::invalid_argument(
            "proj_bundle_cohomology: requires d >= 2g-1 (bundle range)");
    std::vector<Int> fiber(static_cast<std::size_t>(2 * (d - g)) + 1, Int(0));
    for (long k = 0; k <= d - g; ++k) fiber[static_cast<std::size_t>(2 * k)] = 1;
    return PoincarePoly(std::move(fiber)) * poincare_jacobian(g);
}

PushforwardModel::Layer PushforwardModel::layer(long n) const {
    if (n < 0 || n % 2 != 0 || n > 2 * (genus - 1)) return Layer::kZero;
    return n == 2 * (genus - 1) ? Layer::kSkyscraper : Layer::kFree;
}

long PushforwardModel::twist(long n) const { return n / 2; }

PushforwardModel aj_pushforward(long g) {
    if (g < 2) throw std::invalid_argument("aj_pushforward: g >= 2");
    return PushforwardModel{g};
}

PoincarePoly torus_ls_cohomology(const GChar& chi, long g) {
    if (chi.is_trivial()) return poincare_jacobian(g);
    return PoincarePoly();
}

Int E2Page::entry(long p, long q) const {
    if (p == 0 && q == 2 * (genus - 1)) return Int(group_order - 1);
    return Int(0);
}

E2Page e2_page_nontrivial(const CoverDatum& d) {
    return E2Page{d.base_genus, d.group.order()};
}

WCohomology cohomology_of_W(const CoverDatum& d) {
    WCohomology out;
    long h = d.h();
    out.middle_degree = h;
    out.betti_sym = poincare_sym(h, d.base_genus);
    std::vector<Int> bumped = out.betti_sym.coeffs();
    if (static_cast<long>(bumped.size()) <= h) bumped.resize(static_cast<std::size_t>(h) + 1, Int(0));
    bumped[static_cast<std::size_t>(h)] += d.group.order() - 1;
    out.betti = PoincarePoly(std::move(bumped));
    for (const GChar& chi : characters(d.group)) {
        if (chi.is_trivial()) continue;  // the bump is entirely nontrivial
        out.isotypic_middle.emplace_back(chi, Int(1));
    }
    return out;
}

}  // namespace prym
