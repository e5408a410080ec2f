#pragma once

#include <vector>

#include "chebyshev.hpp"

namespace liss {

enum class Sign { Plus, Minus };

/// Parameters of a non-degenerate Chebyshev-Lissajous polynomial.
/// Convention: the polynomial applies T_n to x and T_m to y, while the
/// parametrized curve runs x at frequency m and y at frequency n with
/// delta = m*b - n*a.
struct LissajousParams {
    int m;
    int n;
    Angle delta;
};

/// T_n(x) + T_m(y) or T_n(x) - T_m(y).
struct DegenerateParams {
    int n;
    int m;
    Sign sign;
};

struct Parametrization {
    long freqX;
    long freqY;
    Angle phaseA;
    Angle phaseB;
};

/// Algebraic identity of one irreducible factor.
/// ConicComposed: T_{n'}(x)^2 - 2cos(phi) T_{n'}(x) T_{m'}(y) + T_{m'}(y)^2 - sin^2(phi)
/// LinearComposed: T_{n'}(x) -/+ T_{m'}(y)
struct ComponentDescriptor {
    enum class Variant { ConicComposed, LinearComposed };

    Variant variant;
    int nPrime;
    int mPrime;
    Angle phi;              // ConicComposed only
    Sign sign = Sign::Minus; // LinearComposed only
    bool irreducibleOverC = true;

    Parametrization parametrization() const;
};

struct Factor {
    BiPoly poly;
    ComponentDescriptor desc;
    int multiplicity = 1;
};

struct Factorization {
    Coefficient constant;
    std::vector<Factor> factors;

    /// constant * product of factor polynomials, in BigReal at prec.
    BiPoly expand(mpfr_prec_t prec) const;
};

struct IrreducibilityReport {
    int d;
    bool irreducibleOverR;
    bool irreducibleOverC;
    long predictedFactorCount;
};

struct VerifyResult {
    BigReal residual;
    bool pass;
};

/// T_n(x)^2 - 2cos(delta) T_n(x) T_m(y) + T_m(y)^2 - sin^2(delta), BigReal.
BiPoly buildNonDegenerate(const LissajousParams& params, mpfr_prec_t prec);

/// T_n(x) +/- T_m(y) with exact integer coefficients.
BiPoly buildDegenerate(const DegenerateParams& params);

/// The conic pattern x^2 - 2cos(phi) xy + y^2 - sin^2(phi), BigReal.
BiPoly conicPoly(const Angle& phi, mpfr_prec_t prec);

/// Equal-index split: constant 4^(n-1) and n conics at phases (delta+2k*pi)/n.
Factorization factorEqualIndices(int n, const Angle& delta, mpfr_prec_t prec);

/// T_{2n+1}(x) - T_{2n+1}(y): constant 4^n, the (x - y) factor, n conics.
Factorization factorOddDifference(int n, mpfr_prec_t prec);

/// d = gcd(m,n) composed conic factors; the full non-degenerate factorization.
Factorization factorGeneral(const LissajousParams& params, mpfr_prec_t prec);

/// Complete factorization of T_n(x) +/- T_m(y) into real-irreducible factors.
Factorization factorDegenerate(const DegenerateParams& params, mpfr_prec_t prec);

IrreducibilityReport classifyNonDegenerate(const LissajousParams& params);
IrreducibilityReport classifyDegenerate(const DegenerateParams& params);

VerifyResult verifyFactorization(const BiPoly& original, const Factorization& fact,
                                 const BigReal& tolerance);

} // namespace liss
