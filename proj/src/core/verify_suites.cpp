#include "verify_suites.hpp"

#include <numeric>
#include <sstream>

namespace liss {

namespace {

const Angle kDeltas[] = {Angle(1, 2), Angle(1, 3), Angle(2, 5), Angle(5, 7)};

void record(SuiteResult& r, const std::string& label, const VerifyResult& v) {
    ++r.casesRun;
    if (v.residual > r.worstResidual) {
        r.worstResidual = v.residual;
        r.worstCase = label;
    }
    if (!v.pass && r.pass) {
        r.pass = false;
        r.failedCase = label;
    }
}

void fail(SuiteResult& r, const std::string& label) {
    ++r.casesRun;
    if (r.pass) {
        r.pass = false;
        r.failedCase = label;
    }
}

SuiteResult runTheorem1(int maxIndex, mpfr_prec_t prec, const BigReal& tol) {
    SuiteResult r{"theorem1"};
    r.worstResidual = BigReal(prec);
    for (int n = 1; n <= maxIndex; ++n) {
        for (const Angle& delta : kDeltas) {
            BiPoly lhs = buildNonDegenerate({n, n, delta}, prec);
            Factorization f = factorEqualIndices(n, delta, prec);
            record(r, "n=" + std::to_string(n) + " delta=" + delta.toString(),
                   verifyFactorization(lhs, f, tol));
            if (static_cast<int>(f.factors.size()) != n) {
                fail(r, "factor count n=" + std::to_string(n));
            }
        }
    }
    return r;
}

SuiteResult runTheorem2(int maxIndex, mpfr_prec_t prec, const BigReal& tol) {
    SuiteResult r{"theorem2"};
    r.worstResidual = BigReal(prec);
    for (int N = 1; N <= maxIndex; N += 2) {
        int n = (N - 1) / 2;
        BiPoly lhs = buildDegenerate({N, N, Sign::Minus});
        Factorization f = factorOddDifference(n, prec);
        record(r, "2n+1=" + std::to_string(N), verifyFactorization(lhs, f, tol));
        if (static_cast<int>(f.factors.size()) != n + 1) {
            fail(r, "factor count 2n+1=" + std::to_string(N));
        }
    }
    return r;
}

SuiteResult runGeneral(int maxIndex, mpfr_prec_t prec, const BigReal& tol) {
    SuiteResult r{"general"};
    r.worstResidual = BigReal(prec);
    for (int m = 1; m <= maxIndex; ++m) {
        for (int n = 1; n <= maxIndex; ++n) {
            for (const Angle& delta : {Angle(1, 2), Angle(1, 3)}) {
                std::string label = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                    " delta=" + delta.toString();
                BiPoly lhs = buildNonDegenerate({m, n, delta}, prec);
                Factorization f = factorGeneral({m, n, delta}, prec);
                record(r, label, verifyFactorization(lhs, f, tol));
                if (static_cast<int>(f.factors.size()) != std::gcd(m, n)) {
                    fail(r, "factor count " + label);
                }
            }
        }
    }
    return r;
}

SuiteResult runDegenerate(int maxIndex, mpfr_prec_t prec, const BigReal& tol) {
    SuiteResult r{"degenerate"};
    r.worstResidual = BigReal(prec);
    for (int n = 1; n <= maxIndex; ++n) {
        for (int m = 1; m <= maxIndex; ++m) {
            for (Sign sign : {Sign::Minus, Sign::Plus}) {
                DegenerateParams p{n, m, sign};
                std::string label = std::string("T_") + std::to_string(n) + "(x) " +
                                    (sign == Sign::Minus ? "-" : "+") + " T_" +
                                    std::to_string(m) + "(y)";
                BiPoly lhs = buildDegenerate(p);
                Factorization f = factorDegenerate(p, prec);
                record(r, label, verifyFactorization(lhs, f, tol));
                IrreducibilityReport rep = classifyDegenerate(p);
                if (static_cast<long>(f.factors.size()) != rep.predictedFactorCount) {
                    fail(r, "factor count " + label);
                }
                for (const auto& fac : f.factors) {
                    if (std::gcd(fac.desc.nPrime, fac.desc.mPrime) != 1) {
                        fail(r, "coprimality " + label);
                    }
                }
            }
        }
    }
    return r;
}

} // namespace

std::vector<SuiteResult> runVerifySuites(const std::string& suite, int maxIndex,
                                         mpfr_prec_t prec, const BigReal& tolerance) {
    std::vector<SuiteResult> out;
    bool all = suite == "all";
    if (all || suite == "theorem1") out.push_back(runTheorem1(maxIndex, prec, tolerance));
    if (all || suite == "theorem2") out.push_back(runTheorem2(maxIndex, prec, tolerance));
    if (all || suite == "general") out.push_back(runGeneral(maxIndex, prec, tolerance));
    if (all || suite == "degenerate") out.push_back(runDegenerate(maxIndex, prec, tolerance));
    if (out.empty()) {
        throw InvalidArgumentError("unknown suite: " + suite +
                                   " (expected theorem1|theorem2|general|degenerate|all)");
    }
    return out;
}

std::string formatSuiteReport(const std::vector<SuiteResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << " " << r.suite << ": " << r.casesRun
           << " cases, worst residual " << r.worstResidual.toString();
        if (!r.worstCase.empty()) os << " at " << r.worstCase;
        if (!r.pass) os << "; first failure: " << r.failedCase;
        os << "\n";
    }
    return os.str();
}

} // namespace liss
