#pragma once

#include <numeric>
#include <string>

#include "bigreal.hpp"
#include "errors.hpp"

namespace liss {

/// An exact rational multiple of pi: the angle p*pi/q with gcd(|p|,q)=1, q>0.
/// The numerator is deliberately not reduced mod 2q, so phases such as
/// 13pi/6 keep their index-derived form.
class Angle {
public:
    Angle() : p_(0), q_(1) {}

    Angle(long long p, long long q) : p_(p), q_(q) {
        if (q_ == 0) throw InvalidArgumentError("Angle denominator must be nonzero");
        if (q_ < 0) {
            p_ = -p_;
            q_ = -q_;
        }
        long long g = std::gcd(p_ < 0 ? -p_ : p_, q_);
        if (g > 1) {
            p_ /= g;
            q_ /= g;
        }
    }

    long long p() const { return p_; }
    long long q() const { return q_; }

    /// sin(p*pi/q) == 0 exactly iff the reduced denominator is 1.
    bool sinIsZero() const { return q_ == 1; }

    mpq_class piMultiple() const { return mpq_class(static_cast<long>(p_), static_cast<long>(q_)); }

    BigReal cos(mpfr_prec_t prec) const { return cosPiTimes(piMultiple(), prec); }
    BigReal sin(mpfr_prec_t prec) const { return sinPiTimes(piMultiple(), prec); }
    BigReal sin2(mpfr_prec_t prec) const {
        BigReal s = sin(prec + 8);
        return (s * s).toPrec(prec);
    }

    /// Numeric value p*pi/q at the given precision.
    BigReal value(mpfr_prec_t prec) const {
        return (BigReal::pi(prec + 8) * BigReal(piMultiple(), prec + 8)).toPrec(prec);
    }

    /// (this + 2k*pi) / d
    Angle shiftScaled(long long k, long long d) const { return Angle(p_ + 2 * k * q_, q_ * d); }

    /// this / d
    Angle dividedBy(long long d) const { return Angle(p_, q_ * d); }

    bool operator==(const Angle& rhs) const { return p_ == rhs.p_ && q_ == rhs.q_; }

    std::string toString() const {
        if (p_ == 0) return "0";
        return std::to_string(p_) + "/" + std::to_string(q_) + " of pi";
    }

private:
    long long p_;
    long long q_;
};

} // namespace liss
