#pragma once

#include <complex>

namespace inphase::exact {

using Complex = std::complex<double>;

/// Squeeze parameter mu with the derived scale k = e^{|mu|/2} >= 1.
struct SqueezeParam {
    double mu = 0.0;
    double k = 1.0;

    SqueezeParam() = default;
    explicit SqueezeParam(double mu_);
};

/// <q,pos|p,mom> = e^{iqp} / sqrt(2 pi).
Complex posmom_overlap(double q, double p);

/// Oscillator kernel <q2|e^{-iHt}|q1> for H = n + 1/2,
///   (2 pi i sin t)^{-1/2} exp[i((q1^2+q2^2) cos t - 2 q1 q2)/(2 sin t)]
/// with the principal branch of the square root.  Throws std::domain_error
/// within 1e-9 of a caustic (sin t = 0).
Complex sho_propagator(double q2, double q1, double t);

/// <q0,pos|n> = pi^{-1/4} 2^{-n/2} (n!)^{-1/2} e^{-q0^2/2} H_n(q0),
/// assembled in log space so n up to 500 stays finite.
double fock_position_wavefn(unsigned n, double q0);

/// <m|D(q,p)|n> with z = (q+ip)/sqrt(2):
///   n >= m:  sqrt(m!/n!) (-z^*)^{n-m} e^{-|z|^2/2} L_m^{n-m}(|z|^2)
///   n <  m:  sqrt(n!/m!)    z^{m-n}   e^{-|z|^2/2} L_n^{m-n}(|z|^2)
/// with all large factors composed in log space.  Guarded to m, n <= 300.
Complex displacement_element(unsigned m, unsigned n, double q, double p);

/// <n|D(q,p) S_0(mu)|0> for mu > 0 (mu = 0 falls back to the coherent
/// coefficient; mu < 0 throws):
///   i^n/sqrt(2^n n!) sqrt(2k/(k^2+1)) ((k^2-1)/(k^2+1))^{n/2}
///   exp[-(q-ip)(q+i k^2 p)/(2(k^2+1))] H_n((k^2 p - iq)/sqrt(k^4-1)).
Complex squeezed_coherent_element(unsigned n, SqueezeParam sq, double q, double p);

/// <n|S_0(mu)|m> for the squeeze operator S_0(mu) = exp[(mu/4)(a^dag 2 - a^2)].
/// Zero whenever m - n is odd; the even case is the finite parity sum
///   i^{n-m} sqrt(m!n!)/2^{(n+m)/2} sqrt(2k/(k^2+1)) ((k^2-1)/(k^2+1))^{(n+m)/2}
///   sum_p (4k/(k^2-1))^p (-1)^{(n-p)/2} / [p! ((n-p)/2)! ((m-p)/2)!]
/// over p of the same parity as m, which makes <0|S_0(mu)|0> positive.
/// mu < 0 is served through the transpose identity
/// <n|S_0(-mu)|m> = <m|S_0(mu)|n>.
double squeeze_element(unsigned n, SqueezeParam sq, unsigned m);

} // namespace inphase::exact
