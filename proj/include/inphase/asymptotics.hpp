#pragma once

#include <string>

namespace inphase::asymptotics {

/// Result of an asymptotic evaluation.  valid is false when the requested
/// point falls outside the oscillatory window of the method; value is then
/// meaningless and note says why.
struct ApproxValue {
    double value = 0.0;
    bool valid = false;
    std::string note;
};

/// Stationary angle of the oscillator wavefunction, q0 = sqrt(2n) cos theta0.
/// Throws std::domain_error when |q0| >= sqrt(2n).
double hermite_saddle(unsigned n, double q0);

enum class HermiteMethod {
    inphase,          // stationary phase on the circle representation
    plancherel_rotach,// classical large-n Hermite asymptotics
    wkb,              // turning-point form with action integral
};

/// Approximations to <q0,pos|n> inside the classically allowed region.
ApproxValue fock_position_approx(HermiteMethod method, unsigned n, double q0);

/// Pair of stationary angles for <m|D(d,0)|n>, the intersection directions of
/// the two circles of radii sqrt(2m) and sqrt(2n) centered a distance d
/// apart:
///   theta0  = arccos[(d^2+2m-2n)/(2 sqrt(2m) d)]
///   theta0' = pi - arccos[(d^2+2n-2m)/(2 sqrt(2n) d)]
/// Throws std::domain_error outside |sqrt(2m)-sqrt(2n)| < d < sqrt(2m)+sqrt(2n).
struct SaddlePair {
    double theta0 = 0.0;
    double theta0_prime = 0.0;
};
SaddlePair displacement_saddles(unsigned m, unsigned n, double d);

enum class DisplacementMethod {
    inphase,       // two-circle stationary phase (reduces to inphase_equal at m = n)
    inphase_equal, // the m = n specialization
    tricomi,       // Laguerre asymptotics with first-order correction
    dowling_wkb,   // WKB with interfering phase-space areas
};

/// Approximations to <m|D(d,0)|n> inside each method's oscillatory window.
ApproxValue displacement_approx(DisplacementMethod method, unsigned m, unsigned n, double d);

/// Interference area n pi + m theta0 - n theta0' - sqrt(mn) sin(theta0'-theta0)
/// behind the oscillation of <m|D(d,0)|n>.
double interference_area(unsigned m, unsigned n, double d);

} // namespace inphase::asymptotics
