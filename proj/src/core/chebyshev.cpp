#include "chebyshev.hpp"

#include <mutex>

namespace liss {

namespace {

std::mutex g_tableMutex;
std::vector<std::vector<mpz_class>> g_table; // g_table[n][k] = coeff of x^k in T_n

void growTable(int n) {
    if (g_table.empty()) {
        g_table.push_back({mpz_class(1)});             // T_0 = 1
        g_table.push_back({mpz_class(0), mpz_class(1)}); // T_1 = x
    }
    while (static_cast<int>(g_table.size()) <= n) {
        const auto& tn = g_table[g_table.size() - 1];
        const auto& tm = g_table[g_table.size() - 2];
        std::vector<mpz_class> next(tn.size() + 1, mpz_class(0));
        for (size_t k = 0; k < tn.size(); ++k) next[k + 1] = 2 * tn[k];
        for (size_t k = 0; k < tm.size(); ++k) next[k] -= tm[k];
        g_table.push_back(std::move(next));
    }
}

BiPoly chebAsBiPoly(int n, bool inY) {
    const auto& coeffs = chebCoeffs(n);
    std::vector<std::pair<ExpPair, Coefficient>> terms;
    for (int k = 0; k <= n; ++k) {
        if (coeffs[k] == 0) continue;
        ExpPair e = inY ? ExpPair{0, k} : ExpPair{k, 0};
        terms.emplace_back(e, Coefficient(mpq_class(coeffs[k])));
    }
    return BiPoly::fromTerms(Domain::ExactRational, BigReal::kDefaultPrec, terms);
}

} // namespace

const std::vector<mpz_class>& chebCoeffs(int n) {
    if (n < 0) throw InvalidArgumentError("Chebyshev index must be nonnegative");
    std::lock_guard<std::mutex> lock(g_tableMutex);
    growTable(n);
    return g_table[n];
}

ChebPoly cheb(int n) {
    return ChebPoly{n, chebAsBiPoly(n, false)};
}

BiPoly chebInY(int n) {
    return chebAsBiPoly(n, true);
}

ChebPoly chebNested(int m, int n) {
    if (m < 1 || n < 1) throw InvalidArgumentError("nested indices must be positive");
    BiPoly outer = cheb(m).poly;
    BiPoly composed = compose(outer, cheb(n).poly, chebInY(1));
    return ChebPoly{m * n, composed};
}

ShiftedRoots chebShiftedRoots(int n, const Angle& delta, mpfr_prec_t prec) {
    if (n < 1) throw InvalidArgumentError("index must be positive");
    ShiftedRoots out;
    out.leading = mpq_class(mpz_class(1) << (n - 1));
    out.roots.reserve(n);
    for (int k = 1; k <= n; ++k) {
        out.roots.push_back(delta.shiftScaled(k, n).cos(prec));
    }
    return out;
}

} // namespace liss
