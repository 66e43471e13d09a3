#pragma once

#include <complex>
#include <vector>

namespace inphase::phasespace {

using Complex = std::complex<double>;

/// A point (q, p) of the phase plane.  The complex label of the coherent
/// state at that point is z = (q + ip)/sqrt(2).
struct PhasePoint {
    double q = 0.0;
    double p = 0.0;

    Complex z() const;
    static PhasePoint from_z(Complex z);
};

/// A sampled curve.  When closed is true the segment from the last point back
/// to the first is implied; the first point is not repeated.
struct PhaseCurve {
    std::vector<PhasePoint> points;
    bool closed = false;
};

/// Overlap <a|b> of two coherent states,
///   exp[-(q_a-q_b)^2/4 - (p_a-p_b)^2/4 - (i/2)(q_b p_a - p_b q_a)].
Complex coherent_overlap(PhasePoint a, PhasePoint b);

/// Composition of two displacements applied in the given order,
///   D(b) D(a) = e^{i phi} D(a + b),  phi = (q_a p_b - p_a q_b)/2.
struct ComposeResult {
    PhasePoint label;
    double phase = 0.0;
};
ComposeResult displacement_compose(PhasePoint first_applied, PhasePoint second_applied);

/// Signed area of the triangle (v0, v1, v2); anticlockwise is positive.
double triangle_area(PhasePoint v0, PhasePoint v1, PhasePoint v2);

/// Pancharatnam phase arg<a|b> = (q_a p_b - q_b p_a)/2, the signed area of
/// the triangle (0, a, b).  Returned exactly (can exceed pi in magnitude);
/// callers wanting a principal value reduce it themselves.
double pancharatnam_phase(PhasePoint a, PhasePoint b);

/// Phase of the three-point Bargmann invariant <a|b><b|c><c|a>, equal to the
/// signed area of the triangle (a, b, c).
double bargmann_phase(PhasePoint a, PhasePoint b, PhasePoint c);

/// Diagnostics for polyline_geometric_phase: segments whose phase increment
/// reached pi/2 indicate an under-sampled curve.
struct CurvePhaseInfo {
    int coarse_segments = 0;
    double max_abs_increment = 0.0;
};

/// Geometric phase of a sampled curve of coherent states.  Each straight
/// segment contributes its swept area relative to the origin (the dynamical
/// phase of the chord), and for an open curve the Pancharatnam phase between
/// the endpoints is added back.  For a closed curve the result is minus the
/// enclosed signed area, accumulated segment by segment and NOT reduced
/// mod 2 pi.
double polyline_geometric_phase(const PhaseCurve& curve, CurvePhaseInfo* info = nullptr);

} // namespace inphase::phasespace
