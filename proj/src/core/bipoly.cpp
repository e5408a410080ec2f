#include "bipoly.hpp"

#include <algorithm>

namespace liss {

BiPoly BiPoly::constant(const Coefficient& c, mpfr_prec_t prec) {
    return monomial(0, 0, c, prec);
}

BiPoly BiPoly::monomial(int i, int j, const Coefficient& c, mpfr_prec_t prec) {
    if (i < 0 || j < 0) throw InvalidArgumentError("negative exponent");
    BiPoly p(c.domain(), c.domain() == Domain::BigReal ? c.prec() : prec);
    if (!c.isZero()) p.terms_.emplace(ExpPair{i, j}, c);
    return p;
}

BiPoly BiPoly::fromTerms(Domain domain, mpfr_prec_t prec,
                         const std::vector<std::pair<ExpPair, Coefficient>>& terms) {
    BiPoly p(domain, prec);
    for (const auto& [e, c] : terms) {
        if (e.i < 0 || e.j < 0) throw InvalidArgumentError("negative exponent");
        if (c.domain() != domain) throw MixedDomainError("term coefficient domain mismatch");
        p.insertAdd(e, domain == Domain::BigReal ? Coefficient(c.real().toPrec(prec)) : c);
    }
    p.prune();
    return p;
}

int BiPoly::degX() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.i);
    return d;
}

int BiPoly::degY() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.j);
    return d;
}

int BiPoly::totalDeg() const {
    // graded order: the last term has the highest total degree
    if (terms_.empty()) return 0;
    const auto& e = terms_.rbegin()->first;
    return e.i + e.j;
}

Coefficient BiPoly::coeff(int i, int j) const {
    auto it = terms_.find(ExpPair{i, j});
    if (it == terms_.end()) {
        if (domain_ == Domain::ExactRational) return Coefficient(mpq_class(0));
        return Coefficient(BigReal(prec_));
    }
    return it->second;
}

BiPoly BiPoly::withCoeff(int i, int j, const Coefficient& c) const {
    if (c.domain() != domain_) throw MixedDomainError("coefficient domain mismatch");
    BiPoly out = *this;
    if (c.isZero()) {
        out.terms_.erase(ExpPair{i, j});
    } else {
        out.terms_[ExpPair{i, j}] = c;
    }
    return out;
}

void BiPoly::requireCompatible(const BiPoly& rhs) const {
    if (domain_ != rhs.domain_) {
        throw MixedDomainError("cannot combine ExactRational and BigReal polynomials");
    }
}

void BiPoly::insertAdd(const ExpPair& e, const Coefficient& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.isZero()) terms_.emplace(e, c);
        return;
    }
    Coefficient sum = it->second + c;
    if (sum.isZero()) {
        terms_.erase(it);
    } else {
        it->second = sum;
    }
}

void BiPoly::prune() {
    if (domain_ == Domain::ExactRational) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            it = it->second.isZero() ? terms_.erase(it) : std::next(it);
        }
        return;
    }
    // BigReal: drop terms below 2^-(P-8) of the largest magnitude.
    BigReal maxAbs(prec_);
    for (const auto& [e, c] : terms_) {
        BigReal a = c.real().abs();
        if (a > maxAbs) maxAbs = a;
    }
    if (maxAbs.isZero()) {
        terms_.clear();
        return;
    }
    BigReal cutoff = maxAbs * BigReal::pow2(-(prec_ - 8), prec_);
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = (it->second.real().abs() < cutoff) ? terms_.erase(it) : std::next(it);
    }
}

BiPoly BiPoly::operator+(const BiPoly& rhs) const {
    requireCompatible(rhs);
    BiPoly out(domain_, std::max(prec_, rhs.prec_));
    out.terms_ = terms_;
    for (const auto& [e, c] : rhs.terms_) out.insertAdd(e, c);
    out.prune();
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& rhs) const {
    requireCompatible(rhs);
    BiPoly out(domain_, std::max(prec_, rhs.prec_));
    out.terms_ = terms_;
    for (const auto& [e, c] : rhs.terms_) out.insertAdd(e, -c);
    out.prune();
    return out;
}

BiPoly BiPoly::operator*(const BiPoly& rhs) const {
    requireCompatible(rhs);
    BiPoly out(domain_, std::max(prec_, rhs.prec_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            out.insertAdd(ExpPair{ea.i + eb.i, ea.j + eb.j}, ca * cb);
        }
    }
    out.prune();
    return out;
}

BiPoly BiPoly::operator-() const {
    BiPoly out(domain_, prec_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

BiPoly BiPoly::pow(unsigned e) const {
    Coefficient one = domain_ == Domain::ExactRational
                          ? Coefficient(mpq_class(1))
                          : Coefficient(BigReal(1, prec_));
    BiPoly acc = BiPoly::constant(one, prec_);
    for (unsigned k = 0; k < e; ++k) acc = acc * *this;
    return acc;
}

BiPoly BiPoly::scaled(const Coefficient& c) const {
    if (c.domain() != domain_) throw MixedDomainError("scalar domain mismatch");
    BiPoly out(domain_, prec_);
    for (const auto& [e, t] : terms_) {
        Coefficient p = t * c;
        if (!p.isZero()) out.terms_.emplace(e, p);
    }
    out.prune();
    return out;
}

Coefficient BiPoly::eval(const Coefficient& x0, const Coefficient& y0) const {
    if (x0.domain() != domain_ || y0.domain() != domain_) {
        throw MixedDomainError("evaluation point domain mismatch");
    }
    int dx = degX(), dy = degY();
    std::vector<Coefficient> xp, yp;
    xp.reserve(dx + 1);
    yp.reserve(dy + 1);
    Coefficient one = domain_ == Domain::ExactRational
                          ? Coefficient(mpq_class(1))
                          : Coefficient(BigReal(1, prec_));
    xp.push_back(one);
    yp.push_back(one);
    for (int i = 1; i <= dx; ++i) xp.push_back(xp.back() * x0);
    for (int j = 1; j <= dy; ++j) yp.push_back(yp.back() * y0);
    Coefficient acc = domain_ == Domain::ExactRational
                          ? Coefficient(mpq_class(0))
                          : Coefficient(BigReal(prec_));
    for (const auto& [e, c] : terms_) acc = acc + c * xp[e.i] * yp[e.j];
    return acc;
}

BigReal BiPoly::evalReal(const BigReal& x0, const BigReal& y0) const {
    mpfr_prec_t base = std::max(x0.prec(), y0.prec());
    if (domain_ == Domain::BigReal) base = std::max(base, prec_);
    // Guard bits absorb the cancellation of large monomial-basis coefficients.
    mpfr_prec_t work = base + 64;
    BiPoly p = toBigReal(work);
    return p.eval(Coefficient(x0.toPrec(work)), Coefficient(y0.toPrec(work)))
        .real()
        .toPrec(base);
}

BiPoly BiPoly::toBigReal(mpfr_prec_t prec) const {
    if (domain_ == Domain::BigReal) {
        if (prec == prec_) return *this;
        BiPoly out(Domain::BigReal, prec);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, Coefficient(c.real().toPrec(prec)));
        return out;
    }
    BiPoly out(Domain::BigReal, prec);
    for (const auto& [e, c] : terms_) {
        out.terms_.emplace(e, Coefficient(BigReal(c.rational(), prec)));
    }
    return out;
}

std::string BiPoly::toText() const {
    if (terms_.empty()) return "0";
    std::string out;
    // highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool negative;
        std::string mag;
        if (c.domain() == Domain::ExactRational) {
            negative = c.rational() < 0;
            mag = mpq_class(abs(c.rational())).get_str();
        } else {
            negative = c.real().sign() < 0;
            BigReal a = c.real().abs();
            if (mpfr_integer_p(a.raw())) {
                mpz_class z;
                mpfr_get_z(z.get_mpz_t(), a.raw(), MPFR_RNDN);
                mag = z.get_str();
            } else {
                mag = a.toString();
            }
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string vars;
        if (e.i > 0) vars += e.i == 1 ? "x" : "x^" + std::to_string(e.i);
        if (e.j > 0) {
            if (!vars.empty()) vars += "*";
            vars += e.j == 1 ? "y" : "y^" + std::to_string(e.j);
        }
        if (vars.empty()) {
            out += mag;
        } else if (mag == "1") {
            out += vars;
        } else {
            out += mag + "*" + vars;
        }
    }
    return out;
}

BiPoly compose(const BiPoly& F, const BiPoly& P, const BiPoly& Q) {
    if (F.domain() != P.domain() || F.domain() != Q.domain()) {
        throw MixedDomainError("compose requires one shared coefficient domain");
    }
    if (P.degY() != 0) throw InvalidArgumentError("P must be univariate in x");
    if (Q.degX() != 0) throw InvalidArgumentError("Q must be univariate in y");
    mpfr_prec_t prec = std::max({F.prec(), P.prec(), Q.prec()});
    Coefficient one = F.domain() == Domain::ExactRational
                          ? Coefficient(mpq_class(1))
                          : Coefficient(BigReal(1, prec));
    int du = F.degX(), dv = F.degY();
    std::vector<BiPoly> pPow, qPow;
    pPow.push_back(BiPoly::constant(one, prec));
    qPow.push_back(BiPoly::constant(one, prec));
    for (int i = 1; i <= du; ++i) pPow.push_back(pPow.back() * P);
    for (int j = 1; j <= dv; ++j) qPow.push_back(qPow.back() * Q);
    BiPoly out = BiPoly::zero(F.domain(), prec);
    for (const auto& [e, c] : F.terms()) {
        out = out + (pPow[e.i] * qPow[e.j]).scaled(c);
    }
    return out;
}

Coefficient maxAbsCoeffDiff(const BiPoly& f, const BiPoly& g) {
    if (f.domain() != g.domain()) {
        throw MixedDomainError("maxAbsCoeffDiff requires one shared domain");
    }
    Coefficient best = f.domain() == Domain::ExactRational
                           ? Coefficient(mpq_class(0))
                           : Coefficient(BigReal(std::max(f.prec(), g.prec())));
    auto consider = [&](const Coefficient& d) {
        if (d.absCmp(best) > 0) best = d;
    };
    for (const auto& [e, c] : f.terms()) consider(c.absDiff(g.coeff(e.i, e.j)));
    for (const auto& [e, c] : g.terms()) consider(c.absDiff(f.coeff(e.i, e.j)));
    return best;
}

} // namespace liss
