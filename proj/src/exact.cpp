#include "inphase/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "inphase/specfun.hpp"

namespace inphase::exact {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
using specfun::LogScaled;
}

SqueezeParam::SqueezeParam(double mu_) : mu(mu_), k(std::exp(0.5 * std::abs(mu_))) {}

Complex posmom_overlap(double q, double p) {
    return std::polar(1.0 / std::sqrt(2.0 * kPi), q * p);
}

Complex sho_propagator(double q2, double q1, double t) {
    double s = std::sin(t);
    if (std::abs(s) <= 1e-9)
        throw std::domain_error("sho_propagator: caustic, sin t vanishes");
    double phase = ((q1 * q1 + q2 * q2) * std::cos(t) - 2.0 * q1 * q2) / (2.0 * s);
    Complex root = std::sqrt(Complex{0.0, 2.0 * kPi * s});
    return std::exp(Complex{0.0, phase}) / root;
}

double fock_position_wavefn(unsigned n, double q0) {
    LogScaled h = specfun::hermite_logscaled(n, Complex{q0, 0.0});
    if (h.is_zero()) return 0.0;
    double lg = -0.25 * std::log(kPi) - 0.5 * n * kLn2 - 0.5 * specfun::log_factorial(n) -
                0.5 * q0 * q0 + h.log_magnitude;
    return std::exp(lg) * std::cos(h.phase);
}

Complex displacement_element(unsigned m, unsigned n, double q, double p) {
    if (m > 300 || n > 300)
        throw std::domain_error("displacement_element: index above guard (300)");
    Complex z{q / std::numbers::sqrt2, p / std::numbers::sqrt2};
    double x = std::norm(z);
    if (x == 0.0) return m == n ? Complex{1.0, 0.0} : Complex{0.0, 0.0};

    unsigned lo = std::min(m, n), hi = std::max(m, n);
    int alpha = static_cast<int>(hi - lo);
    // n >= m pairs with powers of -z^*, m > n with powers of z.
    Complex base = n >= m ? -std::conj(z) : z;
    LogScaled prefactor{0.5 * (specfun::log_factorial(lo) - specfun::log_factorial(hi)) +
                            alpha * std::log(std::abs(z)) - 0.5 * x,
                        alpha * std::arg(base)};
    LogScaled lag = specfun::laguerre_logscaled(lo, alpha, x);
    return (prefactor * lag).to_complex();
}

Complex squeezed_coherent_element(unsigned n, SqueezeParam sq, double q, double p) {
    if (sq.mu < 0.0)
        throw std::domain_error("squeezed_coherent_element: mu must be nonnegative");
    if (sq.mu == 0.0) {
        // D(q,p)|0> is the coherent state at (q,p).
        Complex z{q / std::numbers::sqrt2, p / std::numbers::sqrt2};
        double az = std::abs(z);
        if (az == 0.0) return n == 0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
        LogScaled c{-0.5 * az * az + n * std::log(az) - 0.5 * specfun::log_factorial(n),
                    n * std::arg(z)};
        return c.to_complex();
    }
    const double k2 = sq.k * sq.k;
    const double ratio = (k2 - 1.0) / (k2 + 1.0);
    Complex harg = Complex{k2 * p, -q} / std::sqrt(k2 * k2 - 1.0);
    LogScaled h = specfun::hermite_logscaled(n, harg);
    if (h.is_zero()) return {0.0, 0.0};
    Complex e = -(Complex{q, -p} * Complex{q, k2 * p}) / (2.0 * (k2 + 1.0));
    LogScaled pref{-0.5 * n * kLn2 - 0.5 * specfun::log_factorial(n) +
                       0.5 * std::log(2.0 * sq.k / (k2 + 1.0)) + 0.5 * n * std::log(ratio) +
                       e.real(),
                   0.5 * kPi * n + e.imag()};
    return (pref * h).to_complex();
}

double squeeze_element(unsigned n, SqueezeParam sq, unsigned m) {
    if ((m % 2) != (n % 2)) return 0.0;
    if (sq.mu == 0.0) return m == n ? 1.0 : 0.0;
    if (sq.mu < 0.0) return squeeze_element(m, SqueezeParam{-sq.mu}, n);

    const double k = sq.k;
    const double k2 = k * k;
    const double half_nm = 0.5 * (n + m);
    const double log_common = 0.5 * (specfun::log_factorial(m) + specfun::log_factorial(n)) -
                              half_nm * kLn2 + 0.5 * std::log(2.0 * k / (k2 + 1.0)) -
                              half_nm * std::log(k2 + 1.0);
    const double log_4k = std::log(4.0 * k);
    const double log_k2m1 = std::log(k2 - 1.0);
    const double lead_sign = ((n > m ? n - m : m - n) / 2) % 2 == 0 ? 1.0 : -1.0;

    // p runs over the parity class of m (and n) up to min(m, n); the exponent
    // of (k^2 - 1) stays nonnegative throughout.
    std::vector<double> logs;
    std::vector<double> signs;
    double peak = -std::numeric_limits<double>::infinity();
    for (unsigned p = m % 2; p <= std::min(m, n); p += 2) {
        double lt = log_common + p * log_4k + (half_nm - p) * log_k2m1 -
                    specfun::log_factorial(p) - specfun::log_factorial((n - p) / 2) -
                    specfun::log_factorial((m - p) / 2);
        double sign = ((n - p) / 2) % 2 == 0 ? 1.0 : -1.0;
        logs.push_back(lt);
        signs.push_back(lead_sign * sign);
        peak = std::max(peak, lt);
    }
    long double sum = 0.0L;
    for (std::size_t i = 0; i < logs.size(); ++i)
        sum += static_cast<long double>(signs[i]) *
               std::exp(static_cast<long double>(logs[i] - peak));
    if (sum == 0.0L) return 0.0;
    double mag = peak + static_cast<double>(std::log(std::abs(sum)));
    return sum < 0.0L ? -std::exp(mag) : std::exp(mag);
}

} // namespace inphase::exact
