#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "inphase/phasespace.hpp"

namespace inphase::states {

using Complex = std::complex<double>;
using phasespace::PhasePoint;

/// Runtime knobs shared by the builders and the command-line front end.
struct Defaults {
    int cutoff = 128;
    int line_samples = 2001;
    int circle_samples = 500;
    /// Half-length of line discretizations, in units of the local Gaussian
    /// width (8 widths for Gaussian-envelope kinds, a fixed 12 otherwise).
    double line_extent = 12.0;
};

/// Coefficient vector in the truncated number basis, c[n] = <n|psi> for
/// n = 0..cutoff.
struct FockVector {
    std::vector<Complex> coeffs;

    std::size_t cutoff() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    double norm_sq() const;
    double norm() const;
    /// Fraction of the norm carried by the top coefficient; a truncation
    /// health indicator.
    double tail_mass() const;
    Complex inner(const FockVector& other) const; // <this|other>
    void normalize();
};

/// Coefficients of the coherent state at `point`,
/// c_n = e^{-|z|^2/2} z^n / sqrt(n!), assembled in log space.
FockVector coherent_fock_coeffs(PhasePoint point, std::size_t cutoff);

enum class SuperpositionKind {
    momentum_line,
    position_line,
    gaussian_line,
    fock_circle,
    displaced_fock_circle,
    squeezed_line,
};

/// Parameters of a continuous coherent-state superposition together with its
/// discretization (trapezoid rule on lines, uniform angles on circles).
struct SuperpositionSpec {
    SuperpositionKind kind = SuperpositionKind::fock_circle;

    double p0 = 0.0;    // momentum_line eigenvalue / gaussian_line center
    double q0 = 0.0;    // position_line eigenvalue
    double sigma = 1.0; // gaussian_line envelope width parameter
    unsigned n = 0;     // fock_circle / displaced_fock_circle index
    double radius = 0.0;// fock_circle radius (any r > 0; r = sqrt(2n) is in phase)
    double q = 0.0;     // displaced_fock_circle center
    double p = 0.0;
    double mu = 0.0;    // squeezed_line parameter, |mu| > 0
    double anchor = 0.0;// squeezed_line offset line (p0 for mu > 0, q0 for mu < 0)

    /// Line along which an eigenstate kind is expanded.  Defaults to the
    /// in-phase orbit (line through the eigenvalue); setting it elsewhere
    /// exercises the off-orbit expansion with its compensating Gaussian
    /// factor.
    double orbit = 0.0;
    bool has_orbit = false;

    int samples = 0;     // 0 = use Defaults
    double extent = 0.0; // 0 = use Defaults

    static SuperpositionSpec momentum_line(double p0);
    static SuperpositionSpec position_line(double q0);
    static SuperpositionSpec gaussian_line(double sigma, double p0);
    static SuperpositionSpec fock_circle(unsigned n, double radius);
    static SuperpositionSpec displaced_fock_circle(unsigned n, double q, double p);
    static SuperpositionSpec squeezed_line(double mu, double anchor = 0.0);
};

/// Discretize the superposition into the truncated number basis.  Throws
/// std::invalid_argument for parameter errors and std::runtime_error when the
/// truncation tail exceeds 1e-8 of the norm.
FockVector build_superposition(const SuperpositionSpec& spec, std::size_t cutoff,
                               const Defaults& defaults = {});

enum class QConvention {
    per_dqdp,     // normalized against the measure dq dp
    per_d2z_over_pi, // normalized against d^2 z / pi; twice the dq dp density
};

/// Husimi function |<z(point)|psi>|^2 of a normalized state.
double q_function(const FockVector& state, PhasePoint point, QConvention convention);

/// Closed-form Husimi functions in the dq dp convention.
double q_closed_form_position(double q0, PhasePoint point);
double q_closed_form_momentum(double p0, PhasePoint point);
double q_closed_form_fock(unsigned n, PhasePoint point);

/// Pointwise decomposition of the two-source interference pattern for
/// |psi> = |z1> + e^{i theta} |z2>: single-source intensities, local phase
/// difference delta, and the resulting Husimi value in the d^2 z / pi
/// convention.
struct InterferenceBreakdown {
    double i1 = 0.0;
    double i2 = 0.0;
    double delta = 0.0;
    double q_value = 0.0;
};
InterferenceBreakdown two_source_q(PhasePoint z1, PhasePoint z2, double theta,
                                   PhasePoint point);

/// First and second quadrature moments of a normalized truncated state.
struct Moments {
    double mean_q = 0.0;
    double mean_p = 0.0;
    double var_q = 0.0;
    double var_p = 0.0;
    double cov_qp = 0.0;
};
Moments quadrature_stats(const FockVector& state);

/// Unitary maps applied in the truncated basis.
struct Rotate { double t = 0.0; };        // c_n -> e^{i n t} c_n
struct Displace { double q = 0.0, p = 0.0; };
FockVector evolve(const FockVector& state, Rotate r);
FockVector evolve(const FockVector& state, Displace d);

} // namespace inphase::states
