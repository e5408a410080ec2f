#include "curves.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace liss {

CurveSample sampleParametric(const Parametrization& param, int count, mpfr_prec_t prec) {
    if (count < 2) throw InvalidArgumentError("sample count must be at least 2");
    if (param.freqX < 1 || param.freqY < 1) {
        throw InvalidArgumentError("frequencies must be positive");
    }
    CurveSample out;
    out.source = param;
    out.points.reserve(count);
    BigReal twoPi = BigReal::pi(prec) * BigReal(2, prec);
    mpq_class pa = param.phaseA.piMultiple();
    mpq_class pb = param.phaseB.piMultiple();
    for (int i = 0; i < count; ++i) {
        mpq_class frac(2L * i, static_cast<long>(count)); // t_i / pi
        frac.canonicalize();
        BigReal t = twoPi * BigReal(mpq_class(i, count), prec);
        BigReal x = cosPiTimes(mpq_class(frac * param.freqX + pa), prec);
        BigReal y = cosPiTimes(mpq_class(frac * param.freqY + pb), prec);
        out.points.push_back(CurvePoint{t, x, y});
    }
    return out;
}

BigReal residual(const BiPoly& f, const CurveSample& sample) {
    mpfr_prec_t prec = f.domain() == Domain::BigReal ? f.prec() : BigReal::kDefaultPrec;
    BigReal worst(prec);
    for (const auto& pt : sample.points) {
        BigReal v = f.evalReal(pt.x, pt.y).abs();
        if (v > worst) worst = v;
    }
    return worst;
}

ConicInfo classifyConic(const BigReal& c, const BigReal& s2) {
    mpfr_prec_t prec = std::max(c.prec(), s2.prec());
    BigReal one(1, prec);
    if (c.abs() > one) throw InvalidConicError("|c| > 1 cannot arise from cos(phi)");
    ConicInfo info{c, s2, ConicShape::Ellipse, BigReal(prec), BigReal(prec), BigReal(prec),
                   BigReal(prec)};
    if (s2.isZero()) {
        info.shape = ConicShape::DegenerateLinePair;
        return info;
    }
    info.shape = c.isZero() ? ConicShape::Circle : ConicShape::Ellipse;
    info.semiAxisAlongSum = (s2 / (one - c)).sqrt();
    info.semiAxisAlongDiff = (s2 / (one + c)).sqrt();
    if (info.semiAxisAlongSum >= info.semiAxisAlongDiff) {
        info.semiAxisMajor = info.semiAxisAlongSum;
        info.semiAxisMinor = info.semiAxisAlongDiff;
    } else {
        info.semiAxisMajor = info.semiAxisAlongDiff;
        info.semiAxisMinor = info.semiAxisAlongSum;
    }
    return info;
}

namespace {

std::string fmt3(double v) {
    char buf[32];
    // avoid "-0.000"
    if (v > -0.0005 && v < 0.0005) v = 0.0;
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

const char* kDefaultStrokes[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

} // namespace

void emitSVG(const std::vector<CurveSample>& samples, const SvgStyle& style,
             const std::string& path) {
    if (samples.empty()) throw InvalidArgumentError("no samples to plot");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\" "
           "width=\"480\" height=\"480\">\n";
    char widthBuf[32];
    std::snprintf(widthBuf, sizeof(widthBuf), "%.4f", style.strokeWidth);
    size_t nStrokes = sizeof(kDefaultStrokes) / sizeof(kDefaultStrokes[0]);
    for (size_t s = 0; s < samples.size(); ++s) {
        const std::string stroke = style.strokes.empty()
                                       ? kDefaultStrokes[s % nStrokes]
                                       : style.strokes[s % style.strokes.size()];
        out << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
            << widthBuf << "\" points=\"";
        const auto& pts = samples[s].points;
        for (size_t i = 0; i <= pts.size(); ++i) {
            const auto& p = pts[i % pts.size()]; // close the loop
            if (i > 0) out << ' ';
            // y flipped to mathematical orientation
            out << fmt3(p.x.toDouble()) << ',' << fmt3(-p.y.toDouble());
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
    if (!out) throw IoError("write failed: " + path);
}

void emitCSV(const CurveSample& sample, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path);
    out << "t,x,y\n";
    char buf[160];
    for (const auto& p : sample.points) {
        // 20 significant digits, straight off the big floats
        mpfr_snprintf(buf, sizeof(buf), "%.19Re,%.19Re,%.19Re\n", p.t.raw(), p.x.raw(),
                      p.y.raw());
        out << buf;
    }
    if (!out) throw IoError("write failed: " + path);
}

} // namespace liss
