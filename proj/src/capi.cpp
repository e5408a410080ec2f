#include "lissajous.h"

#include <cstring>
#include <string>

#include "core/curves.hpp"
#include "core/json_io.hpp"
#include "core/verify_suites.hpp"

using namespace liss;

struct liss_poly {
    BiPoly poly;
};

// Keeps the generating polynomial next to its factorization so verification
// needs no second handle.
struct liss_factorization {
    BiPoly original;
    Factorization fact;
    mpfr_prec_t prec;
};

namespace {

char* dupString(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

liss_status mapError(const Error& e) {
    switch (e.code()) {
        case ErrorCode::InvalidArgument: return LISS_ERR_ARG;
        case ErrorCode::MixedDomain: return LISS_ERR_DOMAIN;
        case ErrorCode::DegenerateDelta: return LISS_ERR_DEGENERATE;
        case ErrorCode::InvalidConic: return LISS_ERR_ARG;
        case ErrorCode::Io: return LISS_ERR_IO;
    }
    return LISS_ERR_INTERNAL;
}

template <typename Fn>
liss_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        return mapError(e);
    } catch (const std::exception&) {
        return LISS_ERR_INTERNAL;
    }
}

liss_status parseSign(char sign, Sign* out) {
    if (sign == '+') {
        *out = Sign::Plus;
        return LISS_OK;
    }
    if (sign == '-') {
        *out = Sign::Minus;
        return LISS_OK;
    }
    return LISS_ERR_ARG;
}

BigReal toleranceValue(double tolerance, mpfr_prec_t prec) {
    if (!(tolerance > 0)) throw InvalidArgumentError("tolerance must be positive");
    BigReal t(prec);
    mpfr_set_d(t.raw(), tolerance, MPFR_RNDN);
    return t;
}

struct PlotOutput {
    std::vector<CurveSample> samples;
    nlohmann::ordered_json summary;
};

liss_status runPlot(const BiPoly& original, const Factorization& fact, mpfr_prec_t prec,
                    int points, double tolerance, const char* svg_path,
                    const char* csv_prefix, char** summary) {
    BigReal tol = toleranceValue(tolerance, prec);
    VerifyResult v = verifyFactorization(original, fact, tol);

    std::vector<CurveSample> samples;
    nlohmann::ordered_json components = nlohmann::ordered_json::array();
    BigReal worstCurve(prec);
    for (size_t k = 0; k < fact.factors.size(); ++k) {
        const Factor& f = fact.factors[k];
        CurveSample s = sampleParametric(f.desc.parametrization(), points, prec);
        BigReal res = residual(f.poly, s);
        if (res > worstCurve) worstCurve = res;
        nlohmann::ordered_json comp{
            {"parametrization", parametrizationToJson(f.desc.parametrization())},
            {"curveResidual", res.toString()},
        };
        if (f.desc.variant == ComponentDescriptor::Variant::ConicComposed) {
            ConicInfo info = classifyConic(f.desc.phi.cos(prec), f.desc.phi.sin2(prec));
            comp["conic"] = conicInfoToJson(info);
        }
        components.push_back(std::move(comp));
        if (csv_prefix != nullptr) {
            emitCSV(s, std::string(csv_prefix) + std::to_string(k) + ".csv");
        }
        samples.push_back(std::move(s));
    }
    emitSVG(samples, SvgStyle{}, svg_path);

    nlohmann::ordered_json out{
        {"svg", svg_path},
        {"factorizationResidual", v.residual.toString()},
        {"pass", v.pass},
        {"worstCurveResidual", worstCurve.toString()},
        {"components", std::move(components)},
    };
    if (summary != nullptr) *summary = dupString(out.dump(2));
    return v.pass ? LISS_OK : LISS_ERR_VERIFY;
}

} // namespace

extern "C" {

const char* liss_version(void) {
    return "1.0.0";
}

void liss_string_free(char* s) {
    delete[] s;
}

void liss_poly_free(liss_poly* p) {
    delete p;
}

void liss_factorization_free(liss_factorization* f) {
    delete f;
}

liss_status liss_cheb(int n, liss_poly** out) {
    if (out == nullptr || n < 0 || n > 512) return LISS_ERR_ARG;
    return guarded([&] {
        *out = new liss_poly{cheb(n).poly};
        return LISS_OK;
    });
}

liss_status liss_cheb_nested(int m, int n, liss_poly** out) {
    if (out == nullptr || m < 1 || n < 1 || m * n > 512) return LISS_ERR_ARG;
    return guarded([&] {
        *out = new liss_poly{chebNested(m, n).poly};
        return LISS_OK;
    });
}

liss_status liss_build_nondegenerate(int m, int n, long dp, long dq, unsigned prec,
                                     liss_poly** out) {
    if (out == nullptr || dq == 0) return LISS_ERR_ARG;
    return guarded([&] {
        *out = new liss_poly{buildNonDegenerate({m, n, Angle(dp, dq)}, prec)};
        return LISS_OK;
    });
}

liss_status liss_build_degenerate(int n, int m, char sign, liss_poly** out) {
    Sign s;
    if (out == nullptr || parseSign(sign, &s) != LISS_OK) return LISS_ERR_ARG;
    return guarded([&] {
        *out = new liss_poly{buildDegenerate({n, m, s})};
        return LISS_OK;
    });
}

int liss_poly_degx(const liss_poly* p) {
    return p == nullptr ? -1 : p->poly.degX();
}

int liss_poly_degy(const liss_poly* p) {
    return p == nullptr ? -1 : p->poly.degY();
}

size_t liss_poly_term_count(const liss_poly* p) {
    return p == nullptr ? 0 : p->poly.termCount();
}

liss_status liss_poly_to_json(const liss_poly* p, char** out) {
    if (p == nullptr || out == nullptr) return LISS_ERR_ARG;
    return guarded([&] {
        *out = dupString(polyToJson(p->poly).dump());
        return LISS_OK;
    });
}

liss_status liss_poly_to_text(const liss_poly* p, char** out) {
    if (p == nullptr || out == nullptr) return LISS_ERR_ARG;
    return guarded([&] {
        *out = dupString(p->poly.toText());
        return LISS_OK;
    });
}

liss_status liss_factor_nondegenerate(int m, int n, long dp, long dq, unsigned prec,
                                      liss_factorization** out) {
    if (out == nullptr || dq == 0) return LISS_ERR_ARG;
    return guarded([&] {
        LissajousParams params{m, n, Angle(dp, dq)};
        BiPoly original = buildNonDegenerate(params, prec);
        Factorization fact = factorGeneral(params, prec);
        *out = new liss_factorization{std::move(original), std::move(fact),
                                      static_cast<mpfr_prec_t>(prec)};
        return LISS_OK;
    });
}

liss_status liss_factor_degenerate(int n, int m, char sign, unsigned prec,
                                   liss_factorization** out) {
    Sign s;
    if (out == nullptr || parseSign(sign, &s) != LISS_OK) return LISS_ERR_ARG;
    return guarded([&] {
        DegenerateParams params{n, m, s};
        BiPoly original = buildDegenerate(params);
        Factorization fact = factorDegenerate(params, prec);
        *out = new liss_factorization{std::move(original), std::move(fact),
                                      static_cast<mpfr_prec_t>(prec)};
        return LISS_OK;
    });
}

size_t liss_factorization_count(const liss_factorization* f) {
    return f == nullptr ? 0 : f->fact.factors.size();
}

liss_status liss_factorization_verify(const liss_factorization* f, double tolerance,
                                      char** residual, int* pass) {
    if (f == nullptr) return LISS_ERR_ARG;
    return guarded([&] {
        VerifyResult v = verifyFactorization(f->original, f->fact,
                                             toleranceValue(tolerance, f->prec));
        if (residual != nullptr) *residual = dupString(v.residual.toString());
        if (pass != nullptr) *pass = v.pass ? 1 : 0;
        return v.pass ? LISS_OK : LISS_ERR_VERIFY;
    });
}

liss_status liss_factorization_to_json(const liss_factorization* f, double tolerance,
                                       char** out) {
    if (f == nullptr || out == nullptr) return LISS_ERR_ARG;
    return guarded([&] {
        VerifyResult v = verifyFactorization(f->original, f->fact,
                                             toleranceValue(tolerance, f->prec));
        *out = dupString(factorizationToJson(f->fact, v.residual.toString()).dump(2));
        return v.pass ? LISS_OK : LISS_ERR_VERIFY;
    });
}

liss_status liss_classify_nondegenerate(int m, int n, long dp, long dq, char** out) {
    if (out == nullptr || dq == 0) return LISS_ERR_ARG;
    return guarded([&] {
        IrreducibilityReport rep = classifyNonDegenerate({m, n, Angle(dp, dq)});
        *out = dupString(reportToJson(rep).dump(2));
        return LISS_OK;
    });
}

liss_status liss_classify_degenerate(int n, int m, char sign, char** out) {
    Sign s;
    if (out == nullptr || parseSign(sign, &s) != LISS_OK) return LISS_ERR_ARG;
    return guarded([&] {
        *out = dupString(reportToJson(classifyDegenerate({n, m, s})).dump(2));
        return LISS_OK;
    });
}

liss_status liss_plot_nondegenerate(int m, int n, long dp, long dq, unsigned prec,
                                    int points, double tolerance, const char* svg_path,
                                    const char* csv_prefix, char** summary) {
    if (svg_path == nullptr || dq == 0 || points < 2) return LISS_ERR_ARG;
    return guarded([&] {
        LissajousParams params{m, n, Angle(dp, dq)};
        BiPoly original = buildNonDegenerate(params, prec);
        Factorization fact = factorGeneral(params, prec);
        return runPlot(original, fact, prec, points, tolerance, svg_path, csv_prefix,
                       summary);
    });
}

liss_status liss_plot_degenerate(int n, int m, char sign, unsigned prec, int points,
                                 double tolerance, const char* svg_path,
                                 const char* csv_prefix, char** summary) {
    Sign s;
    if (svg_path == nullptr || points < 2 || parseSign(sign, &s) != LISS_OK) {
        return LISS_ERR_ARG;
    }
    return guarded([&] {
        DegenerateParams params{n, m, s};
        BiPoly original = buildDegenerate(params);
        Factorization fact = factorDegenerate(params, prec);
        return runPlot(original, fact, prec, points, tolerance, svg_path, csv_prefix,
                       summary);
    });
}

liss_status liss_verify_suite(const char* suite, int max_index, unsigned prec,
                              double tolerance, char** report, int* all_pass) {
    if (suite == nullptr || max_index < 1) return LISS_ERR_ARG;
    return guarded([&] {
        auto results = runVerifySuites(suite, max_index, prec,
                                       toleranceValue(tolerance, prec));
        bool pass = true;
        for (const auto& r : results) pass = pass && r.pass;
        if (report != nullptr) *report = dupString(formatSuiteReport(results));
        if (all_pass != nullptr) *all_pass = pass ? 1 : 0;
        return pass ? LISS_OK : LISS_ERR_VERIFY;
    });
}

} // extern "C"
