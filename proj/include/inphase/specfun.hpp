#pragma once

#include <complex>

namespace inphase::specfun {

using Complex = std::complex<double>;

/// A complex value stored as (log magnitude, phase) so that quantities whose
/// natural scale overflows or underflows double precision can still be
/// combined multiplicatively.  A zero value is represented with
/// log_magnitude = -infinity.
struct LogScaled {
    double log_magnitude = 0.0;
    double phase = 0.0;

    static LogScaled from_complex(Complex v);
    static LogScaled from_real(double v);
    static LogScaled zero();

    Complex to_complex() const;
    /// Collapse to a real number.  Intended for values known to be real up to
    /// rounding (phase close to 0 or pi); the cosine of the phase carries the
    /// sign.
    double to_real() const;
    bool is_zero() const;

    LogScaled operator*(const LogScaled& other) const;
};

/// ln(n!), accumulated as a cumulative sum of ln k.
double log_factorial(unsigned n);

/// ln C(a, b) for integers 0 <= b <= a, in log space.
double log_binomial(unsigned a, unsigned b);

/// ln N_n for the circle-representation normalization
/// N_n = e^{n/2} n^{-n/2} sqrt(n!); the n = 0 limit is 1.
double norm_factor_log(unsigned n);

/// Physicists' Hermite polynomial H_n evaluated by the three-term upward
/// recurrence H_{k+1} = 2x H_k - 2k H_{k-1}.  Throws std::domain_error for
/// n > 500.  Magnitudes grow fast with n; callers needing large n should use
/// hermite_logscaled instead.
Complex hermite(unsigned n, Complex x);

/// Same recurrence with periodic rescaling, so H_n for large n is returned
/// without overflow.
LogScaled hermite_logscaled(unsigned n, Complex x);

/// Associated Laguerre polynomial L_n^alpha(x) for integer alpha >= -n,
/// evaluated from the explicit series
///   L_n^alpha(x) = sum_k (-1)^k C(n+alpha, n-k) x^k / k!
/// with binomials taken in log space.  Throws std::domain_error when
/// alpha < -n.
double laguerre(unsigned n, int alpha, double x);

/// Series evaluation of L_n^alpha(x) returning a log-scaled value, for use
/// inside matrix-element prefactors that would overflow on their own.
LogScaled laguerre_logscaled(unsigned n, int alpha, double x);

} // namespace inphase::specfun
