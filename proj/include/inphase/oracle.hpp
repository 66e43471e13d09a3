#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "inphase/states.hpp"

namespace inphase::oracle {

using Complex = std::complex<double>;
using phasespace::PhasePoint;
using states::FockVector;

/// Tensor-product Gauss-Legendre quadrature over a rectangle, refined by node
/// doubling until two successive estimates agree to `tol` in absolute value.
/// Throws std::runtime_error if the refinement limit is reached first.
struct QuadOptions {
    double tol = 1e-10;
    int initial_nodes = 48;
    int max_nodes = 2048;
};

/// Brute-force evaluation of <q0,pos|p0,mom> as the double integral of the
/// coherent-state kernel over both line representations.
Complex quad_posmom_overlap(double q0, double p0, const QuadOptions& opt = {});

/// Brute-force evaluation of the oscillator kernel <q2|e^{-iHt}|q1>,
/// H = n + 1/2, as the double integral over two momentum-line
/// representations.
Complex quad_sho_propagator(double q2, double q1, double t, const QuadOptions& opt = {});

/// <chi|psi> recomputed by inserting the coherent-state resolution of the
/// identity, integral of dq dp / (2 pi) <chi|z><z|psi> over a box covering
/// both truncated states.
Complex quad_resolution_overlap(const FockVector& chi, const FockVector& psi,
                                const QuadOptions& opt = {});

/// A dense operator in the truncated number basis.
struct OperatorMatrix {
    Eigen::MatrixXcd entries;
    std::size_t cutoff = 0;
    std::string kind_tag;

    /// max-norm of U^dagger U - I over the lower (cutoff/2) block, a measure
    /// of how unitary the truncation stayed.
    double unitarity_defect() const;

    FockVector apply(const FockVector& v) const;
};

/// exp(z a^dagger - z^* a) with z = (q + ip)/sqrt(2), via scaling-and-squaring
/// of the truncated generator.  Requires cutoff >= 4|z|^2 + 40 of headroom;
/// throws std::runtime_error otherwise.
OperatorMatrix displacement_matrix(double q, double p, std::size_t cutoff);

/// exp[(mu/4)((a^dagger)^2 - a^2)], same method.  Requires headroom
/// cutoff >= 16 sinh^2(mu/2) + 40.
OperatorMatrix squeeze_matrix(double mu, std::size_t cutoff);

/// exp(i t n), exact diagonal.
OperatorMatrix rotation_matrix(double t, std::size_t cutoff);

/// <m|D(q,p)|n> summed directly from the normally ordered expansion
/// e^{-|z|^2/2} <m|e^{z a^dagger} e^{-z^* a}|n>, a finite double sum with no
/// Laguerre polynomials involved.  Guarded to m, n <= 100.
Complex series_displacement_element(unsigned m, unsigned n, double q, double p);

/// <q2|e^{-iHt}|q1>, H = n + 1/2, reproduced without the kernel formula:
/// both position eigenstates are expanded as finite in-phase line
/// superpositions in truncated Fock space, the number operator phases are
/// applied exactly, and the inner product is taken.  Line extent and cutoff
/// are chosen from q1, q2, t; the sample count is doubled until two
/// successive values agree to 1e-8 (std::runtime_error otherwise).
Complex fock_rotation_propagator(double q2, double q1, double t);

} // namespace inphase::oracle
