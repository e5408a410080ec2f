#pragma once

#include <string>
#include <vector>

#include "lissajous.hpp"

namespace liss {

struct SuiteResult {
    std::string suite;
    bool pass = true;
    long casesRun = 0;
    BigReal worstResidual{BigReal::kMinPrec};
    std::string worstCase;   // label of the case with the largest residual
    std::string failedCase;  // first failing case, empty when pass
};

/// suite: one of theorem1, theorem2, general, degenerate, all.
std::vector<SuiteResult> runVerifySuites(const std::string& suite, int maxIndex,
                                         mpfr_prec_t prec, const BigReal& tolerance);

std::string formatSuiteReport(const std::vector<SuiteResult>& results);

} // namespace liss
