// Command-line front end for the Chebyshev-Lissajous library.
// Links only the public C API.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "lissajous.h"

namespace {

constexpr int kExitUsage = 2;

struct Global {
    unsigned precision = 256;
    double tolerance = 0; // 2^-200 set in main
    std::string format;   // json|csv|svg|text; per-command default when empty
    std::string out;
};

// delta is accepted only as a reduced fraction "p/q" meaning p*pi/q.
bool parseDelta(const std::string& s, long* p, long* q) {
    if (s.find('.') != std::string::npos) {
        std::fprintf(stderr, "error: delta must be a fraction p/q of pi, not a decimal\n");
        return false;
    }
    size_t slash = s.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            *p = std::stol(s, &used);
            if (used != s.size()) return false;
            *q = 1;
            return true;
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        *p = std::stol(num, &used);
        if (used != num.size()) return false;
        *q = std::stol(den, &used);
        return used == den.size() && *q > 0;
    } catch (const std::exception&) {
        return false;
    }
}

bool parseTolerance(const std::string& s, double* out) {
    if (s.rfind("2^", 0) == 0) {
        try {
            *out = std::ldexp(1.0, std::stoi(s.substr(2)));
            return *out > 0;
        } catch (const std::exception&) {
            return false;
        }
    }
    char* end = nullptr;
    *out = std::strtod(s.c_str(), &end);
    return end != nullptr && *end == '\0' && *out > 0;
}

void printString(char* s, const std::string& outPath) {
    if (s == nullptr) return;
    if (outPath.empty()) {
        std::fputs(s, stdout);
        if (s[0] != '\0' && s[std::strlen(s) - 1] != '\n') std::fputc('\n', stdout);
    } else {
        FILE* f = std::fopen(outPath.c_str(), "wb");
        if (f == nullptr) {
            std::perror("fopen");
        } else {
            std::fputs(s, f);
            std::fclose(f);
        }
    }
    liss_string_free(s);
}

int reportStatus(liss_status st, const char* context) {
    if (st == LISS_OK) return 0;
    switch (st) {
        case LISS_ERR_DEGENERATE:
            std::fprintf(stderr,
                         "error: sin(delta) = 0 (%s); use --degenerate with --sign +/-\n",
                         context);
            break;
        case LISS_ERR_VERIFY:
            std::fprintf(stderr, "error: verification failed (%s)\n", context);
            break;
        case LISS_ERR_IO:
            std::fprintf(stderr, "error: file output failed (%s)\n", context);
            break;
        default:
            std::fprintf(stderr, "error: invalid arguments (%s)\n", context);
            break;
    }
    return static_cast<int>(st);
}

struct FamilyArgs {
    bool degenerate = false;
    int m = 1;
    int n = 1;
    std::string delta;
    std::string sign;
};

void addFamilyOptions(CLI::App* cmd, FamilyArgs* args) {
    cmd->fallthrough(); // global flags remain valid after the subcommand name
    cmd->add_flag("--degenerate", args->degenerate, "use the T_n(x) +/- T_m(y) family");
    cmd->add_option("-m,--m", args->m, "frequency of x in the parametrization (T_m on y)")
        ->required();
    cmd->add_option("-n,--n", args->n, "frequency of y in the parametrization (T_n on x)")
        ->required();
    cmd->add_option("--delta", args->delta, "phase delta as a fraction p/q of pi");
    cmd->add_option("--sign", args->sign, "+ or - (degenerate family)");
}

// 0 on success, kExitUsage on bad combination; fills dp/dq or sign.
int resolveFamily(const FamilyArgs& args, long* dp, long* dq, char* sign) {
    if (args.degenerate) {
        if (args.sign != "+" && args.sign != "-") {
            std::fprintf(stderr, "error: --degenerate requires --sign + or --sign -\n");
            return kExitUsage;
        }
        *sign = args.sign[0];
        return 0;
    }
    if (args.delta.empty()) {
        std::fprintf(stderr, "error: --delta p/q is required (or pass --degenerate)\n");
        return kExitUsage;
    }
    if (!parseDelta(args.delta, dp, dq)) {
        std::fprintf(stderr, "error: cannot parse --delta '%s' as p/q\n",
                     args.delta.c_str());
        return kExitUsage;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Global g;
    g.tolerance = std::ldexp(1.0, -200);
    if (const char* env = std::getenv("LISS_PRECISION")) {
        g.precision = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    }
    if (const char* env = std::getenv("LISS_TOLERANCE")) {
        if (!parseTolerance(env, &g.tolerance)) {
            std::fprintf(stderr, "error: bad LISS_TOLERANCE\n");
            return kExitUsage;
        }
    }

    CLI::App app{"Chebyshev-Lissajous polynomials: construction, closed-form "
                 "factorization, irreducibility classification, plotting"};
    app.require_subcommand(1);
    std::string tolStr;
    app.add_option("--precision", g.precision, "working precision in bits (>= 64)")
        ->capture_default_str();
    app.add_option("--tolerance", tolStr, "verification tolerance (e.g. 2^-200)");
    app.add_option("--format", g.format, "output format: json|text");
    app.add_option("--out", g.out, "output path (default stdout)");

    app.fallthrough(); // global flags remain valid after a subcommand name

    // cheb
    auto* cmdCheb = app.add_subcommand("cheb", "print the Chebyshev polynomial T_n");
    cmdCheb->fallthrough();
    int chebN = 0;
    cmdCheb->add_option("n", chebN, "index, 0..512")->required();

    // build
    auto* cmdBuild = app.add_subcommand("build", "construct the Chebyshev-Lissajous polynomial");
    FamilyArgs buildArgs;
    addFamilyOptions(cmdBuild, &buildArgs);

    // factor
    auto* cmdFactor = app.add_subcommand("factor", "factor into irreducible components");
    FamilyArgs factorArgs;
    addFamilyOptions(cmdFactor, &factorArgs);

    // classify
    auto* cmdClassify = app.add_subcommand("classify", "irreducibility report");
    FamilyArgs classifyArgs;
    addFamilyOptions(cmdClassify, &classifyArgs);

    // plot
    auto* cmdPlot = app.add_subcommand("plot", "factor, sample components, write SVG/CSV");
    FamilyArgs plotArgs;
    addFamilyOptions(cmdPlot, &plotArgs);
    int plotPoints = 1024;
    std::string csvPrefix;
    cmdPlot->add_option("--points", plotPoints, "samples per component")
        ->capture_default_str();
    cmdPlot->add_option("--csv-prefix", csvPrefix,
                        "write per-component CSVs at <prefix><k>.csv");

    // verify
    auto* cmdVerify = app.add_subcommand("verify", "run theorem verification sweeps");
    cmdVerify->fallthrough();
    std::string suite = "all";
    int maxIndex = 16;
    cmdVerify->add_option("--suite", suite, "theorem1|theorem2|general|degenerate|all")
        ->capture_default_str();
    cmdVerify->add_option("--max-index", maxIndex, "largest index swept")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (!tolStr.empty() && !parseTolerance(tolStr, &g.tolerance)) {
        std::fprintf(stderr, "error: cannot parse --tolerance '%s'\n", tolStr.c_str());
        return kExitUsage;
    }
    if (g.precision < 64) {
        std::fprintf(stderr, "error: --precision must be at least 64 bits\n");
        return kExitUsage;
    }

    if (cmdCheb->parsed()) {
        liss_poly* p = nullptr;
        liss_status st = liss_cheb(chebN, &p);
        if (st != LISS_OK) return reportStatus(st, "cheb");
        char* s = nullptr;
        st = g.format == "json" ? liss_poly_to_json(p, &s) : liss_poly_to_text(p, &s);
        liss_poly_free(p);
        if (st != LISS_OK) return reportStatus(st, "cheb");
        printString(s, g.out);
        return 0;
    }

    if (cmdBuild->parsed()) {
        long dp = 0, dq = 1;
        char sign = 0;
        if (int rc = resolveFamily(buildArgs, &dp, &dq, &sign)) return rc;
        liss_poly* p = nullptr;
        liss_status st =
            buildArgs.degenerate
                ? liss_build_degenerate(buildArgs.n, buildArgs.m, sign, &p)
                : liss_build_nondegenerate(buildArgs.m, buildArgs.n, dp, dq, g.precision,
                                           &p);
        if (st != LISS_OK) return reportStatus(st, "build");
        char* s = nullptr;
        st = g.format == "text" ? liss_poly_to_text(p, &s) : liss_poly_to_json(p, &s);
        liss_poly_free(p);
        if (st != LISS_OK) return reportStatus(st, "build");
        printString(s, g.out);
        return 0;
    }

    if (cmdFactor->parsed()) {
        long dp = 0, dq = 1;
        char sign = 0;
        if (int rc = resolveFamily(factorArgs, &dp, &dq, &sign)) return rc;
        liss_factorization* f = nullptr;
        liss_status st =
            factorArgs.degenerate
                ? liss_factor_degenerate(factorArgs.n, factorArgs.m, sign, g.precision, &f)
                : liss_factor_nondegenerate(factorArgs.m, factorArgs.n, dp, dq,
                                            g.precision, &f);
        if (st != LISS_OK) return reportStatus(st, "factor");
        char* s = nullptr;
        st = liss_factorization_to_json(f, g.tolerance, &s);
        liss_factorization_free(f);
        if (st != LISS_OK && st != LISS_ERR_VERIFY) return reportStatus(st, "factor");
        printString(s, g.out);
        return st == LISS_OK ? 0 : reportStatus(st, "factor");
    }

    if (cmdClassify->parsed()) {
        long dp = 0, dq = 1;
        char sign = 0;
        if (int rc = resolveFamily(classifyArgs, &dp, &dq, &sign)) return rc;
        char* s = nullptr;
        liss_status st =
            classifyArgs.degenerate
                ? liss_classify_degenerate(classifyArgs.n, classifyArgs.m, sign, &s)
                : liss_classify_nondegenerate(classifyArgs.m, classifyArgs.n, dp, dq, &s);
        if (st != LISS_OK) return reportStatus(st, "classify");
        printString(s, g.out);
        return 0;
    }

    if (cmdPlot->parsed()) {
        long dp = 0, dq = 1;
        char sign = 0;
        if (int rc = resolveFamily(plotArgs, &dp, &dq, &sign)) return rc;
        if (g.out.empty()) {
            std::fprintf(stderr, "error: plot requires --out <svg path>\n");
            return kExitUsage;
        }
        const char* csv = csvPrefix.empty() ? nullptr : csvPrefix.c_str();
        char* summary = nullptr;
        liss_status st =
            plotArgs.degenerate
                ? liss_plot_degenerate(plotArgs.n, plotArgs.m, sign, g.precision,
                                       plotPoints, g.tolerance, g.out.c_str(), csv,
                                       &summary)
                : liss_plot_nondegenerate(plotArgs.m, plotArgs.n, dp, dq, g.precision,
                                          plotPoints, g.tolerance, g.out.c_str(), csv,
                                          &summary);
        printString(summary, "");
        return st == LISS_OK ? 0 : reportStatus(st, "plot");
    }

    if (cmdVerify->parsed()) {
        char* report = nullptr;
        int allPass = 0;
        liss_status st = liss_verify_suite(suite.c_str(), maxIndex, g.precision,
                                           g.tolerance, &report, &allPass);
        printString(report, g.out);
        if (st == LISS_OK) return 0;
        return st == LISS_ERR_VERIFY ? static_cast<int>(LISS_ERR_VERIFY)
                                     : reportStatus(st, "verify");
    }

    return kExitUsage;
}
