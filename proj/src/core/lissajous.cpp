#include "lissajous.hpp"

#include <numeric>

namespace liss {

namespace {

void requirePositive(int v, const char* what) {
    if (v < 1) throw InvalidArgumentError(std::string(what) + " must be positive");
}

void requireNonDegenerate(const Angle& delta) {
    if (delta.sinIsZero()) {
        throw DegenerateDeltaError("sin(delta) = 0: use the degenerate form");
    }
}

Coefficient ratPow4(int e) {
    return Coefficient(mpq_class(mpz_class(1) << (2 * e)));
}

/// Conic pattern composed with (T_{n'}(x), T_{m'}(y)).
BiPoly conicComposed(const Angle& phi, int nPrime, int mPrime, mpfr_prec_t prec) {
    BiPoly pattern = conicPoly(phi, prec);
    if (nPrime == 1 && mPrime == 1) return pattern;
    return compose(pattern, cheb(nPrime).poly.toBigReal(prec), chebInY(mPrime).toBigReal(prec));
}

BiPoly linearComposed(Sign sign, int nPrime, int mPrime, mpfr_prec_t prec) {
    BiPoly tx = cheb(nPrime).poly;
    BiPoly ty = chebInY(mPrime);
    return (sign == Sign::Minus ? tx - ty : tx + ty).toBigReal(prec);
}

Factor makeConic(const Angle& phi, int nPrime, int mPrime, mpfr_prec_t prec) {
    ComponentDescriptor desc;
    desc.variant = ComponentDescriptor::Variant::ConicComposed;
    desc.nPrime = nPrime;
    desc.mPrime = mPrime;
    desc.phi = phi;
    return Factor{conicComposed(phi, nPrime, mPrime, prec), desc, 1};
}

Factor makeLinear(Sign sign, int nPrime, int mPrime, mpfr_prec_t prec) {
    ComponentDescriptor desc;
    desc.variant = ComponentDescriptor::Variant::LinearComposed;
    desc.nPrime = nPrime;
    desc.mPrime = mPrime;
    desc.sign = sign;
    return Factor{linearComposed(sign, nPrime, mPrime, prec), desc, 1};
}

long countMinus(long d);

long countPlus(long d) {
    if (d <= 2) return 1;
    if (d % 2 == 1) return (d + 1) / 2;
    return d / 2;
}

long countMinus(long d) {
    if (d % 2 == 1) return (d + 1) / 2;
    return countMinus(d / 2) + countPlus(d / 2);
}

} // namespace

Parametrization ComponentDescriptor::parametrization() const {
    Parametrization p;
    p.freqX = mPrime;
    p.freqY = nPrime;
    p.phaseA = Angle(0, 1);
    if (variant == Variant::ConicComposed) {
        p.phaseB = phi.dividedBy(mPrime);
    } else if (sign == Sign::Minus) {
        p.phaseB = Angle(0, 1);
    } else {
        p.phaseB = Angle(1, mPrime);
    }
    return p;
}

BiPoly Factorization::expand(mpfr_prec_t prec) const {
    BiPoly acc = BiPoly::constant(Coefficient(constant.toBigReal(prec)), prec);
    for (const auto& f : factors) {
        for (int k = 0; k < f.multiplicity; ++k) acc = acc * f.poly.toBigReal(prec);
    }
    return acc;
}

BiPoly buildNonDegenerate(const LissajousParams& params, mpfr_prec_t prec) {
    requirePositive(params.m, "m");
    requirePositive(params.n, "n");
    requireNonDegenerate(params.delta);
    BiPoly tn = cheb(params.n).poly.toBigReal(prec);
    BiPoly tm = chebInY(params.m).toBigReal(prec);
    Coefficient twoCos(params.delta.cos(prec) * BigReal(2, prec));
    Coefficient sin2(params.delta.sin2(prec));
    return tn * tn - (tn * tm).scaled(twoCos) + tm * tm
           - BiPoly::constant(sin2, prec);
}

BiPoly buildDegenerate(const DegenerateParams& params) {
    requirePositive(params.n, "n");
    requirePositive(params.m, "m");
    BiPoly tx = cheb(params.n).poly;
    BiPoly ty = chebInY(params.m);
    return params.sign == Sign::Minus ? tx - ty : tx + ty;
}

BiPoly conicPoly(const Angle& phi, mpfr_prec_t prec) {
    Coefficient one(BigReal(1, prec));
    Coefficient minusTwoCos(phi.cos(prec) * BigReal(-2, prec));
    Coefficient minusSin2(-phi.sin2(prec));
    std::vector<std::pair<ExpPair, Coefficient>> terms = {
        {ExpPair{2, 0}, one},
        {ExpPair{1, 1}, minusTwoCos},
        {ExpPair{0, 2}, one},
        {ExpPair{0, 0}, minusSin2},
    };
    return BiPoly::fromTerms(Domain::BigReal, prec, terms);
}

Factorization factorEqualIndices(int n, const Angle& delta, mpfr_prec_t prec) {
    requirePositive(n, "n");
    requireNonDegenerate(delta);
    Factorization out;
    out.constant = ratPow4(n - 1);
    for (int k = 1; k <= n; ++k) {
        out.factors.push_back(makeConic(delta.shiftScaled(k, n), 1, 1, prec));
    }
    return out;
}

Factorization factorOddDifference(int n, mpfr_prec_t prec) {
    if (n < 0) throw InvalidArgumentError("n must be nonnegative");
    long N = 2L * n + 1;
    Factorization out;
    out.constant = ratPow4(n);
    out.factors.push_back(makeLinear(Sign::Minus, 1, 1, prec));
    for (long k = 1; k <= n; ++k) {
        out.factors.push_back(makeConic(Angle(2 * k, N), 1, 1, prec));
    }
    return out;
}

Factorization factorGeneral(const LissajousParams& params, mpfr_prec_t prec) {
    requirePositive(params.m, "m");
    requirePositive(params.n, "n");
    requireNonDegenerate(params.delta);
    int d = std::gcd(params.m, params.n);
    int nPrime = params.n / d;
    int mPrime = params.m / d;
    Factorization out;
    out.constant = ratPow4(d - 1);
    if (d == 1) {
        ComponentDescriptor desc;
        desc.variant = ComponentDescriptor::Variant::ConicComposed;
        desc.nPrime = nPrime;
        desc.mPrime = mPrime;
        desc.phi = params.delta;
        out.factors.push_back(Factor{buildNonDegenerate(params, prec), desc, 1});
        return out;
    }
    for (int k = 1; k <= d; ++k) {
        out.factors.push_back(makeConic(params.delta.shiftScaled(k, d), nPrime, mPrime, prec));
    }
    return out;
}

Factorization factorDegenerate(const DegenerateParams& params, mpfr_prec_t prec) {
    requirePositive(params.n, "n");
    requirePositive(params.m, "m");
    int d = std::gcd(params.n, params.m);
    int nPrime = params.n / d;
    int mPrime = params.m / d;
    Factorization out;

    if (params.sign == Sign::Minus) {
        if (d % 2 == 1) {
            // T_d split as 4^e (x-y) prod of conics at 2k*pi/d, composed.
            int e = (d - 1) / 2;
            out.constant = ratPow4(e);
            out.factors.push_back(makeLinear(Sign::Minus, nPrime, mPrime, prec));
            for (int k = 1; k <= e; ++k) {
                out.factors.push_back(makeConic(Angle(2 * k, d), nPrime, mPrime, prec));
            }
            return out;
        }
        // even d: T_n - T_m = 2 (T_{n/2} - T_{m/2})(T_{n/2} + T_{m/2})
        Factorization a = factorDegenerate({params.n / 2, params.m / 2, Sign::Minus}, prec);
        Factorization b = factorDegenerate({params.n / 2, params.m / 2, Sign::Plus}, prec);
        out.constant = Coefficient(mpq_class(2)) * a.constant * b.constant;
        out.factors = std::move(a.factors);
        out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
        return out;
    }

    if (d % 2 == 1) {
        // odd d: T_d(x)+T_d(y) = T_d(x)-T_d(-y); sign-flipped conics at pi - 2k*pi/d.
        int e = (d - 1) / 2;
        out.constant = ratPow4(e);
        out.factors.push_back(makeLinear(Sign::Plus, nPrime, mPrime, prec));
        for (int k = 1; k <= e; ++k) {
            out.factors.push_back(makeConic(Angle(d - 2 * k, d), nPrime, mPrime, prec));
        }
        return out;
    }
    // even d = 2e: 2 * 4^(e-1) times conics at (4k+1)*pi/(2e).
    int e = d / 2;
    out.constant = Coefficient(mpq_class(2)) * ratPow4(e - 1);
    for (int k = 1; k <= e; ++k) {
        out.factors.push_back(makeConic(Angle(4 * k + 1, 2 * e), nPrime, mPrime, prec));
    }
    return out;
}

IrreducibilityReport classifyNonDegenerate(const LissajousParams& params) {
    requirePositive(params.m, "m");
    requirePositive(params.n, "n");
    requireNonDegenerate(params.delta);
    int d = std::gcd(params.m, params.n);
    return IrreducibilityReport{d, d == 1, d == 1, d};
}

IrreducibilityReport classifyDegenerate(const DegenerateParams& params) {
    requirePositive(params.n, "n");
    requirePositive(params.m, "m");
    int d = std::gcd(params.n, params.m);
    bool irr = params.sign == Sign::Minus ? d == 1 : d <= 2;
    long count = params.sign == Sign::Minus ? countMinus(d) : countPlus(d);
    return IrreducibilityReport{d, irr, irr, count};
}

VerifyResult verifyFactorization(const BiPoly& original, const Factorization& fact,
                                 const BigReal& tolerance) {
    mpfr_prec_t prec = tolerance.prec();
    for (const auto& f : fact.factors) {
        if (f.poly.domain() == Domain::BigReal) prec = std::max(prec, f.poly.prec());
    }
    if (original.domain() == Domain::BigReal) prec = std::max(prec, original.prec());
    BiPoly lhs = original.toBigReal(prec);
    BiPoly rhs = fact.expand(prec);
    BigReal residual = maxAbsCoeffDiff(lhs, rhs).real();
    return VerifyResult{residual, residual <= tolerance};
}

} // namespace liss
