#include "bigreal.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "errors.hpp"

namespace liss {

namespace {

mpfr_prec_t checked(mpfr_prec_t prec) {
    if (prec < BigReal::kMinPrec) {
        throw InvalidArgumentError("BigReal precision must be at least 64 bits");
    }
    return prec;
}

} // namespace

BigReal::BigReal(mpfr_prec_t prec) {
    mpfr_init2(v_, checked(prec));
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, mpfr_prec_t prec) {
    mpfr_init2(v_, checked(prec));
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const mpq_class& value, mpfr_prec_t prec) {
    mpfr_init2(v_, checked(prec));
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, mpfr_prec_t prec) {
    mpfr_init2(v_, checked(prec));
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
    mpfr_init2(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
    mpfr_init2(v_, other.prec());
    mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.prec());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    if (this != &other) {
        mpfr_swap(v_, other.v_);
    }
    return *this;
}

BigReal::~BigReal() {
    mpfr_clear(v_);
}

BigReal BigReal::pi(mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::pow2(long e, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

BigReal BigReal::fromString(const std::string& s, mpfr_prec_t prec) {
    BigReal r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 && mpfr_nan_p(r.v_)) {
        throw InvalidArgumentError("unparsable BigReal literal: " + s);
    }
    return r;
}

BigReal BigReal::operator+(const BigReal& rhs) const {
    BigReal r(std::max(prec(), rhs.prec()));
    mpfr_add(r.v_, v_, rhs.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator-(const BigReal& rhs) const {
    BigReal r(std::max(prec(), rhs.prec()));
    mpfr_sub(r.v_, v_, rhs.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator*(const BigReal& rhs) const {
    BigReal r(std::max(prec(), rhs.prec()));
    mpfr_mul(r.v_, v_, rhs.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator/(const BigReal& rhs) const {
    BigReal r(std::max(prec(), rhs.prec()));
    mpfr_div(r.v_, v_, rhs.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator-() const {
    BigReal r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::abs() const {
    BigReal r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::sqrt() const {
    BigReal r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::cos() const {
    BigReal r(prec());
    mpfr_cos(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::toPrec(mpfr_prec_t prec) const {
    BigReal r(checked(prec));
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string BigReal::toString() const {
    if (mpfr_zero_p(v_)) return "0";
    // prec * log10(2) digits, plus slack, guarantees a round trip.
    size_t digits = static_cast<size_t>(static_cast<double>(prec()) * 0.30103) + 4;
    std::vector<char> buf(digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits), v_);
    return std::string(buf.data());
}

namespace {

// Reduce r into [0, 2) exactly; cos/sin of r*pi only depend on r mod 2.
mpq_class reduceMod2(const mpq_class& r) {
    mpz_class twoQ = 2 * r.get_den();
    mpz_class num = r.get_num();
    mpz_class m;
    mpz_fdiv_r(m.get_mpz_t(), num.get_mpz_t(), twoQ.get_mpz_t());
    mpq_class out(m, r.get_den());
    out.canonicalize();
    return out;
}

BigReal trigPiTimes(const mpq_class& r, mpfr_prec_t prec, bool wantSin) {
    mpq_class red = reduceMod2(r);
    mpfr_prec_t work = prec + 64;
    BigReal arg = BigReal::pi(work) * BigReal(red, work);
    BigReal out(prec);
    if (wantSin) {
        mpfr_sin(out.raw(), arg.raw(), MPFR_RNDN);
    } else {
        mpfr_cos(out.raw(), arg.raw(), MPFR_RNDN);
    }
    return out;
}

} // namespace

BigReal cosPiTimes(const mpq_class& r, mpfr_prec_t prec) {
    // Exact special values keep degenerate detection honest downstream.
    mpq_class red = reduceMod2(r);
    if (red.get_den() == 1) {
        return BigReal(red.get_num() == 0 ? 1L : -1L, prec);
    }
    if (red.get_den() == 2) {
        return BigReal(0L, prec);
    }
    return trigPiTimes(r, prec, false);
}

BigReal sinPiTimes(const mpq_class& r, mpfr_prec_t prec) {
    mpq_class red = reduceMod2(r);
    if (red.get_den() == 1) {
        return BigReal(0L, prec);
    }
    if (red.get_den() == 2) {
        return BigReal(red.get_num() == 1 ? 1L : -1L, prec);
    }
    return trigPiTimes(r, prec, true);
}

} // namespace liss
