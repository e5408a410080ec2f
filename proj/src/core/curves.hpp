#pragma once

#include <string>
#include <vector>

#include "lissajous.hpp"

namespace liss {

struct CurvePoint {
    BigReal t;
    BigReal x;
    BigReal y;
};

struct CurveSample {
    std::vector<CurvePoint> points;
    Parametrization source;
};

/// count points of (cos(freqX t + phaseA), cos(freqY t + phaseB)) at
/// t_i = 2*pi*i/count, i = 0..count-1. All sample angles are exact
/// rational multiples of pi, so points are accurate to the last bit.
CurveSample sampleParametric(const Parametrization& param, int count, mpfr_prec_t prec);

/// max over sample points of |f(x_i, y_i)|.
BigReal residual(const BiPoly& f, const CurveSample& sample);

enum class ConicShape { Circle, Ellipse, DegenerateLinePair };

/// Geometry of x^2 - 2c xy + y^2 - s2: in rotated coordinates
/// u = (x+y)/sqrt(2), v = (x-y)/sqrt(2) the form is (1-c)u^2 + (1+c)v^2 = s2.
struct ConicInfo {
    BigReal c;
    BigReal s2;
    ConicShape shape;
    BigReal semiAxisAlongSum;  // along (1,1)/sqrt(2); equals sqrt(2)|cos(phi/2)|
    BigReal semiAxisAlongDiff; // along (1,-1)/sqrt(2); equals sqrt(2)|sin(phi/2)|
    BigReal semiAxisMajor;
    BigReal semiAxisMinor;
};

ConicInfo classifyConic(const BigReal& c, const BigReal& s2);

struct SvgStyle {
    std::vector<std::string> strokes; // cycled per polyline
    double strokeWidth = 0.015;
};

void emitSVG(const std::vector<CurveSample>& samples, const SvgStyle& style,
             const std::string& path);

void emitCSV(const CurveSample& sample, const std::string& path);

} // namespace liss
