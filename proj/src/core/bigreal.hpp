#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace liss {

/// Arbitrary-precision binary floating-point value (MPFR-backed).
/// Every value carries its precision in bits; binary operations work at
/// the larger of the two operand precisions.
class BigReal {
public:
    static constexpr mpfr_prec_t kMinPrec = 64;
    static constexpr mpfr_prec_t kDefaultPrec = 256;

    explicit BigReal(mpfr_prec_t prec = kDefaultPrec);
    BigReal(long value, mpfr_prec_t prec);
    BigReal(const mpq_class& value, mpfr_prec_t prec);
    BigReal(const mpz_class& value, mpfr_prec_t prec);

    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static BigReal pi(mpfr_prec_t prec);
    /// 2^e exactly, at the given precision.
    static BigReal pow2(long e, mpfr_prec_t prec);
    /// Parse a decimal string produced by toString (exact round trip at equal precision).
    static BigReal fromString(const std::string& s, mpfr_prec_t prec);

    BigReal operator+(const BigReal& rhs) const;
    BigReal operator-(const BigReal& rhs) const;
    BigReal operator*(const BigReal& rhs) const;
    BigReal operator/(const BigReal& rhs) const;
    BigReal operator-() const;

    BigReal abs() const;
    BigReal sqrt() const;
    BigReal cos() const;

    int cmp(const BigReal& rhs) const { return mpfr_cmp(v_, rhs.v_); }
    bool operator==(const BigReal& rhs) const { return cmp(rhs) == 0; }
    bool operator!=(const BigReal& rhs) const { return cmp(rhs) != 0; }
    bool operator<(const BigReal& rhs) const { return cmp(rhs) < 0; }
    bool operator<=(const BigReal& rhs) const { return cmp(rhs) <= 0; }
    bool operator>(const BigReal& rhs) const { return cmp(rhs) > 0; }
    bool operator>=(const BigReal& rhs) const { return cmp(rhs) >= 0; }

    bool isZero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Re-round to a new precision.
    BigReal toPrec(mpfr_prec_t prec) const;

    double toDouble() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Decimal scientific form with enough digits for a loss-free round trip.
    std::string toString() const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
};

/// cos(r*pi) and sin^2(r*pi) for an exact rational r, correctly reduced mod 2.
BigReal cosPiTimes(const mpq_class& r, mpfr_prec_t prec);
BigReal sinPiTimes(const mpq_class& r, mpfr_prec_t prec);

} // namespace liss
