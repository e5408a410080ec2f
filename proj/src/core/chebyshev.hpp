#pragma once

#include <vector>

#include "angle.hpp"
#include "bipoly.hpp"

namespace liss {

/// The n-th Chebyshev polynomial of the first kind with exact integer
/// coefficients, as a univariate BiPoly.
struct ChebPoly {
    int n;
    BiPoly poly;
};

/// Dense coefficient list of T_n (index = exponent), from the memoized
/// recurrence T_{n+1} = 2x T_n - T_{n-1}. Thread-safe.
const std::vector<mpz_class>& chebCoeffs(int n);

/// T_n in the x indeterminate, ExactRational domain.
ChebPoly cheb(int n);

/// T_n in the y indeterminate.
BiPoly chebInY(int n);

/// T_m(T_n(x)) built by composition; equals cheb(m*n) exactly.
ChebPoly chebNested(int m, int n);

struct ShiftedRoots {
    mpq_class leading;         // 2^(n-1)
    std::vector<BigReal> roots; // cos((delta + 2k*pi)/n), k = 1..n
};

/// Linear factorization data of T_n(x) - cos(delta).
ShiftedRoots chebShiftedRoots(int n, const Angle& delta, mpfr_prec_t prec);

} // namespace liss
