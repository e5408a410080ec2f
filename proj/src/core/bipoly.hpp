#pragma once

#include <map>
#include <string>
#include <vector>

#include "coefficient.hpp"

namespace liss {

struct ExpPair {
    int i = 0; // exponent of x
    int j = 0; // exponent of y
};

/// Graded lexicographic order on (i+j, i); fixes iteration and serialization.
struct GradedLex {
    bool operator()(const ExpPair& a, const ExpPair& b) const {
        int ta = a.i + a.j, tb = b.i + b.j;
        if (ta != tb) return ta < tb;
        return a.i < b.i;
    }
};

/// Sparse bivariate polynomial over one coefficient domain. Immutable in
/// use: every operation returns a new value.
class BiPoly {
public:
    using TermMap = std::map<ExpPair, Coefficient, GradedLex>;

    explicit BiPoly(Domain domain = Domain::ExactRational,
                    mpfr_prec_t prec = BigReal::kDefaultPrec)
        : domain_(domain), prec_(prec) {}

    static BiPoly zero(Domain domain, mpfr_prec_t prec = BigReal::kDefaultPrec) {
        return BiPoly(domain, prec);
    }

    static BiPoly constant(const Coefficient& c, mpfr_prec_t prec = BigReal::kDefaultPrec);
    static BiPoly monomial(int i, int j, const Coefficient& c,
                           mpfr_prec_t prec = BigReal::kDefaultPrec);
    static BiPoly fromTerms(Domain domain, mpfr_prec_t prec,
                            const std::vector<std::pair<ExpPair, Coefficient>>& terms);

    Domain domain() const { return domain_; }
    mpfr_prec_t prec() const { return prec_; }
    const TermMap& terms() const { return terms_; }

    bool isZero() const { return terms_.empty(); }
    size_t termCount() const { return terms_.size(); }
    int degX() const;
    int degY() const;
    int totalDeg() const;

    /// Coefficient of x^i y^j (zero when absent).
    Coefficient coeff(int i, int j) const;

    /// Copy with one coefficient replaced (zero removes the term).
    BiPoly withCoeff(int i, int j, const Coefficient& c) const;

    BiPoly operator+(const BiPoly& rhs) const;
    BiPoly operator-(const BiPoly& rhs) const;
    BiPoly operator*(const BiPoly& rhs) const;
    BiPoly operator-() const;
    BiPoly pow(unsigned e) const;
    BiPoly scaled(const Coefficient& c) const;

    Coefficient eval(const Coefficient& x0, const Coefficient& y0) const;
    BigReal evalReal(const BigReal& x0, const BigReal& y0) const;

    BiPoly toBigReal(mpfr_prec_t prec) const;

    /// Human-readable form, highest terms first, e.g. "4*x^3 - 3*x".
    std::string toText() const;

private:
    void insertAdd(const ExpPair& e, const Coefficient& c);
    void prune();
    void requireCompatible(const BiPoly& rhs) const;

    Domain domain_;
    mpfr_prec_t prec_;
    TermMap terms_;
};

/// result(x, y) = F(P(x), Q(y)). P must be univariate in x, Q univariate in y.
BiPoly compose(const BiPoly& F, const BiPoly& P, const BiPoly& Q);

/// Max over all exponent pairs of |coeff_f - coeff_g| (absent terms are 0).
Coefficient maxAbsCoeffDiff(const BiPoly& f, const BiPoly& g);

} // namespace liss
