#include "json_io.hpp"

namespace liss {

using nlohmann::ordered_json;

ordered_json polyToJson(const BiPoly& poly) {
    ordered_json arr = ordered_json::array();
    for (const auto& [e, c] : poly.terms()) {
        arr.push_back(ordered_json::array({e.i, e.j, c.toString()}));
    }
    return arr;
}

ordered_json parametrizationToJson(const Parametrization& p) {
    return ordered_json{
        {"freqX", p.freqX},
        {"freqY", p.freqY},
        {"phaseA", p.phaseA.toString()},
        {"phaseB", p.phaseB.toString()},
    };
}

ordered_json factorizationToJson(const Factorization& fact, const std::string& residual) {
    ordered_json factors = ordered_json::array();
    for (const auto& f : fact.factors) {
        bool conic = f.desc.variant == ComponentDescriptor::Variant::ConicComposed;
        ordered_json item{
            {"kind", conic ? "conic" : "linear"},
            {"nPrime", f.desc.nPrime},
            {"mPrime", f.desc.mPrime},
            {"phi", conic ? ordered_json(f.desc.phi.toString()) : ordered_json(nullptr)},
            {"sign", conic ? ordered_json(nullptr)
                           : ordered_json(f.desc.sign == Sign::Plus ? "+" : "-")},
            {"irreducibleOverC", f.desc.irreducibleOverC},
            {"multiplicity", f.multiplicity},
            {"poly", polyToJson(f.poly)},
            {"parametrization", parametrizationToJson(f.desc.parametrization())},
        };
        factors.push_back(std::move(item));
    }
    return ordered_json{
        {"constant", fact.constant.toString()},
        {"factors", std::move(factors)},
        {"residual", residual},
    };
}

ordered_json reportToJson(const IrreducibilityReport& report) {
    return ordered_json{
        {"d", report.d},
        {"irreducibleOverR", report.irreducibleOverR},
        {"irreducibleOverC", report.irreducibleOverC},
        {"predictedFactorCount", report.predictedFactorCount},
    };
}

ordered_json conicInfoToJson(const ConicInfo& info) {
    const char* shape = info.shape == ConicShape::Circle
                            ? "circle"
                            : info.shape == ConicShape::Ellipse ? "ellipse"
                                                                : "degenerateLinePair";
    ordered_json out{
        {"c", info.c.toString()},
        {"s2", info.s2.toString()},
        {"shape", shape},
    };
    if (info.shape != ConicShape::DegenerateLinePair) {
        out["semiAxisMajor"] = info.semiAxisMajor.toString();
        out["semiAxisMinor"] = info.semiAxisMinor.toString();
        out["semiAxisAlongSum"] = info.semiAxisAlongSum.toString();
        out["semiAxisAlongDiff"] = info.semiAxisAlongDiff.toString();
    }
    return out;
}

} // namespace liss
