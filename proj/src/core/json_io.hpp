#pragma once

#include <json.hpp>

#include "curves.hpp"
#include "lissajous.hpp"

namespace liss {

/// Array of [i, j, coefficient-string] triples in graded-lex order.
nlohmann::ordered_json polyToJson(const BiPoly& poly);

nlohmann::ordered_json parametrizationToJson(const Parametrization& p);

nlohmann::ordered_json factorizationToJson(const Factorization& fact,
                                           const std::string& residual);

nlohmann::ordered_json reportToJson(const IrreducibilityReport& report);

nlohmann::ordered_json conicInfoToJson(const ConicInfo& info);

} // namespace liss
