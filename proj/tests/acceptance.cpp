// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/curves.hpp"
#include "core/verify_suites.hpp"

using namespace liss;

namespace {

const mpfr_prec_t P = 256;

BigReal tol200() {
    return BigReal::pow2(-200, P);
}

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::string&)> body;
};

const Angle kTheorem1Deltas[] = {Angle(1, 2), Angle(1, 3), Angle(2, 5), Angle(5, 7)};

bool checkResidual(const BiPoly& original, const Factorization& fact, BigReal& worst,
                   std::string& detail, const std::string& label) {
    VerifyResult v = verifyFactorization(original, fact, tol200());
    if (v.residual > worst) worst = v.residual;
    if (!v.pass) {
        detail = label + ": residual " + v.residual.toString();
        return false;
    }
    return true;
}

// Components collected from criteria 1-5 for criterion 8.
std::vector<Factor> g_components;

bool criterion1(std::string& detail) {
    BigReal worst(P);
    for (int n = 1; n <= 10; ++n) {
        for (const Angle& delta : kTheorem1Deltas) {
            BiPoly lhs = buildNonDegenerate({n, n, delta}, P);
            Factorization f = factorEqualIndices(n, delta, P);
            if (!checkResidual(lhs, f, worst, detail,
                               "n=" + std::to_string(n) + " delta=" + delta.toString())) {
                return false;
            }
            for (const auto& fac : f.factors) g_components.push_back(fac);
        }
    }
    detail = "worst residual " + worst.toString();
    return true;
}

bool criterion2(std::string& detail) {
    BigReal worst(P);
    for (int n = 1; n <= 10; ++n) {
        BiPoly lhs = buildNonDegenerate({n, n, Angle(1, 2)}, P);
        Factorization f = factorEqualIndices(n, Angle(1, 2), P);
        if (!checkResidual(lhs, f, worst, detail, "n=" + std::to_string(n))) return false;
    }
    // n = 3: the factor set contains the unit circle
    Factorization f3 = factorEqualIndices(3, Angle(1, 2), P);
    bool circleFound = false;
    for (const auto& fac : f3.factors) {
        BigReal one(1, P);
        bool circle = (fac.poly.coeff(2, 0).real() - one).abs() <= tol200() &&
                      (fac.poly.coeff(0, 2).real() - one).abs() <= tol200() &&
                      (fac.poly.coeff(0, 0).real() + one).abs() <= tol200() &&
                      fac.poly.coeff(1, 1).real().abs() <= tol200();
        circleFound = circleFound || circle;
    }
    if (!circleFound) {
        detail = "no unit-circle factor in n=3, delta=pi/2";
        return false;
    }
    detail = "worst residual " + worst.toString() + "; unit circle present at n=3";
    return true;
}

bool criterion3(std::string& detail) {
    BigReal worst(P);
    for (int N = 1; N <= 15; N += 2) {
        int n = (N - 1) / 2;
        BiPoly lhs = buildDegenerate({N, N, Sign::Minus});
        Factorization f = factorOddDifference(n, P);
        if (!checkResidual(lhs, f, worst, detail, "2n+1=" + std::to_string(N))) {
            return false;
        }
        // the (x - y) factor is exact
        const BiPoly& lin = f.factors[0].poly;
        if (!(lin.termCount() == 2 && lin.coeff(1, 0).real() == BigReal(1, P) &&
              lin.coeff(0, 1).real() == BigReal(-1, P))) {
            detail = "linear factor of 2n+1=" + std::to_string(N) + " is not exactly x - y";
            return false;
        }
        for (const auto& fac : f.factors) g_components.push_back(fac);
    }
    detail = "worst residual " + worst.toString() + "; x - y exact";
    return true;
}

bool criterion4(std::string& detail) {
    BigReal worst(P);
    for (int m = 1; m <= 12; ++m) {
        for (int n = 1; n <= 12; ++n) {
            for (const Angle& delta : {Angle(1, 2), Angle(1, 3)}) {
                LissajousParams params{m, n, delta};
                std::string label = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                    " delta=" + delta.toString();
                BiPoly lhs = buildNonDegenerate(params, P);
                Factorization f = factorGeneral(params, P);
                int d = std::gcd(m, n);
                if (static_cast<int>(f.factors.size()) != d) {
                    detail = label + ": expected " + std::to_string(d) + " factors, got " +
                             std::to_string(f.factors.size());
                    return false;
                }
                if (!checkResidual(lhs, f, worst, detail, label)) return false;
                if (d == 1 && !maxAbsCoeffDiff(lhs, f.factors[0].poly).isZero()) {
                    detail = label + ": coprime factor differs from the input";
                    return false;
                }
                for (const auto& fac : f.factors) g_components.push_back(fac);
            }
        }
    }
    detail = "worst residual " + worst.toString();
    return true;
}

bool criterion5(std::string& detail) {
    BigReal worst(P);
    for (int n = 1; n <= 16; ++n) {
        for (int m = 1; m <= 16; ++m) {
            for (Sign sign : {Sign::Minus, Sign::Plus}) {
                DegenerateParams params{n, m, sign};
                std::string label = "T_" + std::to_string(n) +
                                    (sign == Sign::Minus ? "-" : "+") + "T_" +
                                    std::to_string(m);
                BiPoly lhs = buildDegenerate(params);
                Factorization f = factorDegenerate(params, P);
                if (!checkResidual(lhs, f, worst, detail, label)) return false;
                long predicted = classifyDegenerate(params).predictedFactorCount;
                if (static_cast<long>(f.factors.size()) != predicted) {
                    detail = label + ": factor count " + std::to_string(f.factors.size()) +
                             " != predicted " + std::to_string(predicted);
                    return false;
                }
                for (const auto& fac : f.factors) {
                    if (std::gcd(fac.desc.nPrime, fac.desc.mPrime) != 1) {
                        detail = label + ": non-coprime descriptor";
                        return false;
                    }
                    g_components.push_back(fac);
                }
            }
        }
    }
    detail = "worst residual " + worst.toString();
    return true;
}

bool criterion6(std::string& detail) {
    for (int m = 1; m <= 16; ++m) {
        for (int n = 1; n <= 16; ++n) {
            int d = std::gcd(m, n);
            IrreducibilityReport nd = classifyNonDegenerate({m, n, Angle(1, 2)});
            if (nd.irreducibleOverR != (d == 1) || nd.irreducibleOverC != (d == 1)) {
                detail = "non-degenerate rule failed at m=" + std::to_string(m) +
                         " n=" + std::to_string(n);
                return false;
            }
            IrreducibilityReport minus = classifyDegenerate({n, m, Sign::Minus});
            if (minus.irreducibleOverR != (d == 1) || minus.irreducibleOverC != (d == 1)) {
                detail = "minus rule failed at n=" + std::to_string(n) +
                         " m=" + std::to_string(m);
                return false;
            }
            IrreducibilityReport plus = classifyDegenerate({n, m, Sign::Plus});
            if (plus.irreducibleOverR != (d <= 2) || plus.irreducibleOverC != (d <= 2)) {
                detail = "plus rule failed at n=" + std::to_string(n) +
                         " m=" + std::to_string(m);
                return false;
            }
        }
    }
    detail = "all 256 index pairs agree with the gcd rules";
    return true;
}

bool criterion7(std::string& detail) {
    for (int n = 0; n <= 32; ++n) {
        const BiPoly& p = cheb(n).poly;
        mpq_class lead = p.coeff(n, 0).rational();
        mpq_class wantLead = n == 0 ? mpq_class(1) : mpq_class(mpz_class(1) << (n - 1));
        bool parityOk = true;
        for (const auto& [e, c] : p.terms()) parityOk = parityOk && (e.i % 2 == n % 2);
        mpq_class at1 = p.eval(Coefficient(1, 1), Coefficient(0, 1)).rational();
        mpq_class atm1 = p.eval(Coefficient(-1, 1), Coefficient(0, 1)).rational();
        if (p.degX() != n || lead != wantLead || !parityOk || at1 != 1 ||
            atm1 != (n % 2 == 0 ? 1 : -1)) {
            detail = "exactness failed at n=" + std::to_string(n);
            return false;
        }
    }
    for (int m = 1; m <= 64; ++m) {
        for (int n = 1; m * n <= 64; ++n) {
            if (!maxAbsCoeffDiff(chebNested(m, n).poly, cheb(m * n).poly).isZero()) {
                detail = "nesting failed at (" + std::to_string(m) + "," +
                         std::to_string(n) + ")";
                return false;
            }
        }
    }
    BigReal tol240 = BigReal::pow2(-240, P);
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> frac(0, 999999);
    std::uniform_int_distribution<int> idx(1, 32);
    BigReal worst(P);
    for (int iter = 0; iter < 100; ++iter) {
        int n = idx(rng);
        BigReal theta =
            BigReal::pi(P) * BigReal(2, P) * BigReal(mpq_class(frac(rng), 1000000L), P);
        BigReal err = (cheb(n).poly.evalReal(theta.cos(), BigReal(0, P)) -
                       (theta * BigReal(n, P)).cos())
                          .abs();
        if (err > worst) worst = err;
    }
    if (worst >= tol240) {
        detail = "defining identity error " + worst.toString();
        return false;
    }
    detail = "exactness, nesting, identity (worst " + worst.toString() + ")";
    return true;
}

bool criterion8(std::string& detail) {
    BigReal worst(P);
    for (const Factor& fac : g_components) {
        CurveSample s = sampleParametric(fac.desc.parametrization(), 1024, P);
        BigReal res = residual(fac.poly, s);
        if (res > worst) worst = res;
        if (res >= tol200()) {
            detail = "component residual " + res.toString() + " (n'=" +
                     std::to_string(fac.desc.nPrime) + ", m'=" +
                     std::to_string(fac.desc.mPrime) + ")";
            return false;
        }
    }
    // original-curve identity: x = cos(mt), y = cos(nt + delta/m)
    for (auto [m, n] : {std::pair{3, 2}, {5, 3}, {6, 4}, {12, 8}}) {
        for (const Angle& delta : {Angle(1, 2), Angle(1, 3)}) {
            BiPoly f = buildNonDegenerate({m, n, delta}, P);
            CurveSample s =
                sampleParametric({m, n, Angle(0, 1), delta.dividedBy(m)}, 1024, P);
            BigReal res = residual(f, s);
            if (res > worst) worst = res;
            if (res >= tol200()) {
                detail = "original-curve residual " + res.toString() + " at m=" +
                         std::to_string(m) + " n=" + std::to_string(n);
                return false;
            }
        }
    }
    detail = std::to_string(g_components.size()) + " components, worst residual " +
             worst.toString();
    return true;
}

std::string slurpFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

size_t countOccurrences(const std::string& hay, const std::string& needle) {
    size_t count = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

bool criterion9(std::string& detail) {
    auto plot = [](const std::string& args, const std::string& out) {
        std::string cmd = std::string(LISS_CLI_PATH) + " --out " + out + " plot " + args +
                          " > /dev/null 2>&1";
        return std::system(cmd.c_str()) == 0;
    };
    for (int rep = 0; rep < 2; ++rep) {
        std::string suffix = rep == 0 ? "a" : "b";
        if (!plot("--m 3 --n 2 --delta 1/2", "acc_fig1" + suffix + ".svg") ||
            !plot("--m 3 --n 3 --delta 1/2", "acc_fig2" + suffix + ".svg")) {
            detail = "CLI plot invocation failed";
            return false;
        }
    }
    std::string fig1 = slurpFile("acc_fig1a.svg");
    std::string fig2 = slurpFile("acc_fig2a.svg");
    bool stable = fig1 == slurpFile("acc_fig1b.svg") && fig2 == slurpFile("acc_fig2b.svg");
    for (const char* f : {"acc_fig1a.svg", "acc_fig1b.svg", "acc_fig2a.svg",
                          "acc_fig2b.svg"}) {
        std::remove(f);
    }
    if (!stable) {
        detail = "SVG output is not byte-stable";
        return false;
    }
    if (countOccurrences(fig1, "<polyline") != 1 || countOccurrences(fig2, "<polyline") != 3) {
        detail = "polyline counts are not 1 and 3";
        return false;
    }
    // conic geometry of the 3-component case
    Factorization f = factorEqualIndices(3, Angle(1, 2), P);
    int circles = 0, ellipses = 0;
    BigReal tol190 = BigReal::pow2(-190, P);
    BigReal sqrt2 = BigReal(2, P).sqrt();
    BigReal axisA = sqrt2 * Angle(5, 12).cos(P).abs(); // sqrt 2 |cos(5pi/12)|
    BigReal axisB = sqrt2 * Angle(5, 12).sin(P).abs(); // sqrt 2 |sin(5pi/12)|
    for (const auto& fac : f.factors) {
        ConicInfo info = classifyConic(fac.desc.phi.cos(P), fac.desc.phi.sin2(P));
        if (info.shape == ConicShape::Circle) {
            ++circles;
            if ((info.semiAxisMajor - BigReal(1, P)).abs() > tol200()) {
                detail = "circle radius deviates from 1";
                return false;
            }
        } else if (info.shape == ConicShape::Ellipse) {
            ++ellipses;
            bool match = ((info.semiAxisMajor - axisB).abs() <= tol190 &&
                          (info.semiAxisMinor - axisA).abs() <= tol190) ||
                         ((info.semiAxisMajor - axisA).abs() <= tol190 &&
                          (info.semiAxisMinor - axisB).abs() <= tol190);
            if (!match) {
                detail = "ellipse semi-axes do not match sqrt2|cos(5pi/12)|, sqrt2|sin(5pi/12)|";
                return false;
            }
        }
    }
    if (circles != 1 || ellipses != 2) {
        detail = "expected one circle and two ellipses, got " + std::to_string(circles) +
                 " / " + std::to_string(ellipses);
        return false;
    }
    detail = "figures byte-stable; circle + two congruent ellipses confirmed";
    return true;
}

bool criterion10(std::string& detail) {
    struct Case {
        std::string label;
        BiPoly original;
        Factorization fact;
    };
    std::vector<Case> cases;
    cases.push_back({"theorem1 n=3", buildNonDegenerate({3, 3, Angle(1, 2)}, P),
                     factorEqualIndices(3, Angle(1, 2), P)});
    cases.push_back({"general m=6 n=4", buildNonDegenerate({6, 4, Angle(1, 3)}, P),
                     factorGeneral({6, 4, Angle(1, 3)}, P)});
    cases.push_back({"degenerate T_4-T_6", buildDegenerate({4, 6, Sign::Minus}),
                     factorDegenerate({4, 6, Sign::Minus}, P)});
    BigReal bump = BigReal::pow2(-64, P);
    long checked = 0;
    for (const Case& c : cases) {
        for (size_t fi = 0; fi < c.fact.factors.size(); ++fi) {
            std::vector<ExpPair> exps;
            for (const auto& [e, coeff] : c.fact.factors[fi].poly.terms()) exps.push_back(e);
            for (const ExpPair& e : exps) {
                Factorization mutated = c.fact;
                BiPoly& target = mutated.factors[fi].poly;
                Coefficient bumped(target.coeff(e.i, e.j).real() + bump);
                target = target.withCoeff(e.i, e.j, bumped);
                if (verifyFactorization(c.original, mutated, tol200()).pass) {
                    detail = c.label + ": perturbation of x^" + std::to_string(e.i) +
                             " y^" + std::to_string(e.j) + " in factor " +
                             std::to_string(fi) + " was silently accepted";
                    return false;
                }
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " single-coefficient perturbations all detected";
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "equal-index factorization identity (n <= 10, four deltas)", criterion1},
        {2, "delta = pi/2 phases + unit circle at n = 3", criterion2},
        {3, "odd-index difference identity (indices to 15)", criterion3},
        {4, "general factorization (m, n <= 12)", criterion4},
        {5, "degenerate factorization (n, m <= 16, both signs)", criterion5},
        {6, "classifier truth table (indices <= 16)", criterion6},
        {7, "Chebyshev exactness, nesting, defining identity", criterion7},
        {8, "end-to-end parametrization residuals", criterion8},
        {9, "figure reproduction + conic geometry", criterion9},
        {10, "fault detection under coefficient perturbation", criterion10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
