#include "inphase/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace inphase::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRescaleThreshold = 1e250;
const double kRescaleLog = std::log(kRescaleThreshold);
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

} // namespace

LogScaled LogScaled::from_complex(Complex v) {
    if (v == Complex{0.0, 0.0}) return zero();
    return {std::log(std::abs(v)), std::arg(v)};
}

LogScaled LogScaled::from_real(double v) {
    if (v == 0.0) return zero();
    return {std::log(std::abs(v)), v < 0.0 ? kPi : 0.0};
}

LogScaled LogScaled::zero() {
    return {kNegInf, 0.0};
}

Complex LogScaled::to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    return std::polar(std::exp(log_magnitude), phase);
}

double LogScaled::to_real() const {
    if (is_zero()) return 0.0;
    return std::exp(log_magnitude) * std::cos(phase);
}

bool LogScaled::is_zero() const {
    return std::isinf(log_magnitude) && log_magnitude < 0.0;
}

LogScaled LogScaled::operator*(const LogScaled& other) const {
    if (is_zero() || other.is_zero()) return zero();
    double ph = std::remainder(phase + other.phase, 2.0 * kPi);
    return {log_magnitude + other.log_magnitude, ph};
}

double log_factorial(unsigned n) {
    double acc = 0.0;
    for (unsigned k = 2; k <= n; ++k) acc += std::log(static_cast<double>(k));
    return acc;
}

double log_binomial(unsigned a, unsigned b) {
    if (b > a) throw std::domain_error("log_binomial: b exceeds a");
    return log_factorial(a) - log_factorial(b) - log_factorial(a - b);
}

double norm_factor_log(unsigned n) {
    if (n == 0) return 0.0;
    double dn = static_cast<double>(n);
    return 0.5 * dn - 0.5 * dn * std::log(dn) + 0.5 * log_factorial(n);
}

Complex hermite(unsigned n, Complex x) {
    if (n > 500) throw std::domain_error("hermite: order above recurrence guard (500)");
    if (n == 0) return {1.0, 0.0};
    Complex hm1{1.0, 0.0};
    Complex h = 2.0 * x;
    for (unsigned k = 1; k < n; ++k) {
        Complex hp1 = 2.0 * x * h - 2.0 * static_cast<double>(k) * hm1;
        hm1 = h;
        h = hp1;
    }
    return h;
}

LogScaled hermite_logscaled(unsigned n, Complex x) {
    if (n > 500) throw std::domain_error("hermite_logscaled: order above recurrence guard (500)");
    if (n == 0) return LogScaled::from_real(1.0);
    Complex hm1{1.0, 0.0};
    Complex h = 2.0 * x;
    double shift = 0.0;
    for (unsigned k = 1; k < n; ++k) {
        Complex hp1 = 2.0 * x * h - 2.0 * static_cast<double>(k) * hm1;
        hm1 = h;
        h = hp1;
        double mag = std::max(std::abs(h), std::abs(hm1));
        if (mag > kRescaleThreshold) {
            h /= kRescaleThreshold;
            hm1 /= kRescaleThreshold;
            shift += kRescaleLog;
        }
    }
    if (h == Complex{0.0, 0.0}) return LogScaled::zero();
    return {std::log(std::abs(h)) + shift, std::arg(h)};
}

LogScaled laguerre_logscaled(unsigned n, int alpha, double x) {
    if (alpha < -static_cast<int>(n))
        throw std::domain_error("laguerre: alpha below -n");
    // a = n + alpha >= 0 under the precondition, and C(a, n-k) vanishes for
    // n-k > a, so the series effectively starts at k = max(0, -alpha).
    unsigned a = static_cast<unsigned>(static_cast<int>(n) + alpha);
    unsigned k0 = alpha < 0 ? static_cast<unsigned>(-alpha) : 0u;

    std::vector<double> logs;
    std::vector<double> signs;
    logs.reserve(n + 1 - k0);
    signs.reserve(n + 1 - k0);
    double peak = kNegInf;
    for (unsigned k = k0; k <= n; ++k) {
        if (n - k > a) continue;
        if (k > 0 && x == 0.0) continue;
        double lt = log_binomial(a, n - k) - log_factorial(k);
        if (k > 0) lt += static_cast<double>(k) * std::log(std::abs(x));
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        if (x < 0.0 && k % 2 == 1) sign = -sign;
        logs.push_back(lt);
        signs.push_back(sign);
        peak = std::max(peak, lt);
    }
    if (logs.empty() || std::isinf(peak)) return LogScaled::zero();
    // Shift by the largest term and accumulate in extended precision; the
    // series alternates for x > 0 and cancels heavily near the upper turning
    // point.
    long double sum = 0.0L;
    for (std::size_t i = 0; i < logs.size(); ++i)
        sum += static_cast<long double>(signs[i]) *
               std::exp(static_cast<long double>(logs[i] - peak));
    if (sum == 0.0L) return LogScaled::zero();
    double mag = peak + static_cast<double>(std::log(std::abs(sum)));
    return {mag, sum < 0.0L ? kPi : 0.0};
}

double laguerre(unsigned n, int alpha, double x) {
    return laguerre_logscaled(n, alpha, x).to_real();
}

} // namespace inphase::specfun
