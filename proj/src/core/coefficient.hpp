#pragma once

#include <string>
#include <variant>

#include "bigreal.hpp"
#include "errors.hpp"

namespace liss {

enum class Domain { ExactRational, BigReal };

/// A scalar from one of the two coefficient domains: an exact normalized
/// rational, or a BigReal carrying its precision. Cross-domain arithmetic
/// is rejected; convert explicitly with toBigReal.
class Coefficient {
public:
    Coefficient() : v_(mpq_class(0)) {}
    explicit Coefficient(mpq_class q) : v_(std::move(q)) {
        std::get<mpq_class>(v_).canonicalize();
    }
    explicit Coefficient(BigReal r) : v_(std::move(r)) {}
    Coefficient(long num, long den) : v_(mpq_class(num, den)) {
        std::get<mpq_class>(v_).canonicalize();
    }

    Domain domain() const {
        return std::holds_alternative<mpq_class>(v_) ? Domain::ExactRational : Domain::BigReal;
    }

    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    const BigReal& real() const { return std::get<BigReal>(v_); }

    bool isZero() const {
        if (domain() == Domain::ExactRational) return rational() == 0;
        return real().isZero();
    }

    mpfr_prec_t prec() const {
        return domain() == Domain::BigReal ? real().prec() : BigReal::kDefaultPrec;
    }

    Coefficient operator+(const Coefficient& rhs) const {
        requireSameDomain(rhs);
        if (domain() == Domain::ExactRational) return Coefficient(rational() + rhs.rational());
        return Coefficient(real() + rhs.real());
    }

    Coefficient operator-(const Coefficient& rhs) const {
        requireSameDomain(rhs);
        if (domain() == Domain::ExactRational) return Coefficient(rational() - rhs.rational());
        return Coefficient(real() - rhs.real());
    }

    Coefficient operator*(const Coefficient& rhs) const {
        requireSameDomain(rhs);
        if (domain() == Domain::ExactRational) return Coefficient(rational() * rhs.rational());
        return Coefficient(real() * rhs.real());
    }

    Coefficient operator-() const {
        if (domain() == Domain::ExactRational) return Coefficient(mpq_class(-rational()));
        return Coefficient(-real());
    }

    /// |this - rhs| in the common domain.
    Coefficient absDiff(const Coefficient& rhs) const {
        requireSameDomain(rhs);
        if (domain() == Domain::ExactRational) {
            return Coefficient(mpq_class(abs(rational() - rhs.rational())));
        }
        return Coefficient((real() - rhs.real()).abs());
    }

    /// Compare |this| to |rhs| (same domain).
    int absCmp(const Coefficient& rhs) const {
        requireSameDomain(rhs);
        if (domain() == Domain::ExactRational) {
            return cmp(abs(rational()), abs(rhs.rational()));
        }
        return real().abs().cmp(rhs.real().abs());
    }

    BigReal toBigReal(mpfr_prec_t prec) const {
        if (domain() == Domain::ExactRational) return BigReal(rational(), prec);
        return real().toPrec(prec);
    }

    std::string toString() const {
        if (domain() == Domain::ExactRational) return rational().get_str();
        return real().toString();
    }

private:
    void requireSameDomain(const Coefficient& rhs) const {
        if (domain() != rhs.domain()) {
            throw MixedDomainError("coefficient domains differ; convert explicitly");
        }
    }

    std::variant<mpq_class, BigReal> v_;
};

} // namespace liss
