#include "inphase/phasespace.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace inphase::phasespace {

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;
}

Complex PhasePoint::z() const {
    return {q / kSqrt2, p / kSqrt2};
}

PhasePoint PhasePoint::from_z(Complex z) {
    return {kSqrt2 * z.real(), kSqrt2 * z.imag()};
}

Complex coherent_overlap(PhasePoint a, PhasePoint b) {
    double dq = a.q - b.q;
    double dp = a.p - b.p;
    double re = -0.25 * (dq * dq + dp * dp);
    double im = -0.5 * (b.q * a.p - b.p * a.q);
    return std::exp(Complex{re, im});
}

ComposeResult displacement_compose(PhasePoint first_applied, PhasePoint second_applied) {
    ComposeResult out;
    out.label = {first_applied.q + second_applied.q, first_applied.p + second_applied.p};
    out.phase = 0.5 * (first_applied.q * second_applied.p - first_applied.p * second_applied.q);
    return out;
}

double triangle_area(PhasePoint v0, PhasePoint v1, PhasePoint v2) {
    return 0.5 * ((v1.q - v0.q) * (v2.p - v0.p) - (v1.p - v0.p) * (v2.q - v0.q));
}

double pancharatnam_phase(PhasePoint a, PhasePoint b) {
    return 0.5 * (a.q * b.p - b.q * a.p);
}

double bargmann_phase(PhasePoint a, PhasePoint b, PhasePoint c) {
    return triangle_area(a, b, c);
}

double polyline_geometric_phase(const PhaseCurve& curve, CurvePhaseInfo* info) {
    const auto& pts = curve.points;
    if (pts.size() < 2)
        throw std::invalid_argument("polyline_geometric_phase: need at least two points");

    CurvePhaseInfo diag;
    auto accumulate = [&diag](PhasePoint a, PhasePoint b) {
        double swept = pancharatnam_phase(a, b);
        double mag = std::abs(swept);
        diag.max_abs_increment = std::max(diag.max_abs_increment, mag);
        if (mag >= std::numbers::pi / 2.0) ++diag.coarse_segments;
        return swept;
    };

    double dynamical = 0.0;
    for (std::size_t j = 0; j + 1 < pts.size(); ++j)
        dynamical += accumulate(pts[j], pts[j + 1]);

    double geometric;
    if (curve.closed) {
        dynamical += accumulate(pts.back(), pts.front());
        geometric = -dynamical;
    } else {
        geometric = pancharatnam_phase(pts.front(), pts.back()) - dynamical;
    }
    if (info) *info = diag;
    return geometric;
}

} // namespace inphase::phasespace
