#include "inphase/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "inphase/specfun.hpp"

namespace inphase::asymptotics {

namespace {
constexpr double kPi = std::numbers::pi;

ApproxValue invalid(std::string why) {
    ApproxValue v;
    v.valid = false;
    v.note = std::move(why);
    return v;
}

ApproxValue ok(double value) {
    ApproxValue v;
    v.value = value;
    v.valid = true;
    return v;
}

double clamped_asin(double x) {
    return std::asin(std::clamp(x, -1.0, 1.0));
}

} // namespace

double hermite_saddle(unsigned n, double q0) {
    double r = std::sqrt(2.0 * static_cast<double>(n));
    if (n == 0 || std::abs(q0) >= r)
        throw std::domain_error("hermite_saddle: point outside the oscillatory region");
    return std::acos(q0 / r);
}

ApproxValue fock_position_approx(HermiteMethod method, unsigned n, double q0) {
    if (n == 0) return invalid("order must be positive");
    const double dn = static_cast<double>(n);
    switch (method) {
    case HermiteMethod::inphase: {
        double r = std::sqrt(2.0 * dn);
        if (std::abs(q0) >= r) return invalid("outside |q0| < sqrt(2n)");
        double th = std::acos(q0 / r);
        double amp = std::pow(2.0 / (kPi * kPi * dn), 0.25) / std::sqrt(std::sin(th));
        double phase = 0.25 * kPi - 0.5 * th + dn * (0.5 * std::sin(2.0 * th) - th);
        return ok(amp * std::cos(phase));
    }
    case HermiteMethod::plancherel_rotach: {
        double r = std::sqrt(2.0 * dn + 1.0);
        if (std::abs(q0) >= r) return invalid("outside |q0| < sqrt(2n+1)");
        double th = std::acos(q0 / r);
        double amp = std::pow(2.0 / (kPi * kPi * dn), 0.25) / std::sqrt(std::sin(th));
        double phase = 0.25 * kPi + (dn + 0.5) * (0.5 * std::sin(2.0 * th) - th);
        return ok(amp * std::cos(phase));
    }
    case HermiteMethod::wkb: {
        double p2 = 2.0 * dn + 1.0 - q0 * q0;
        if (p2 <= 0.0) return invalid("outside the classically allowed region");
        double p = std::sqrt(p2);
        // atan2 keeps the angle in (0, pi) so the parity of the wavefunction
        // survives on the q0 < 0 side.
        double action = (dn + 0.5) * std::atan2(p, q0) - 0.5 * q0 * p;
        return ok(std::sqrt(2.0 / (kPi * p)) * std::cos(action - 0.25 * kPi));
    }
    }
    return invalid("unknown method");
}

SaddlePair displacement_saddles(unsigned m, unsigned n, double d) {
    double rm = std::sqrt(2.0 * static_cast<double>(m));
    double rn = std::sqrt(2.0 * static_cast<double>(n));
    if (!(d > std::abs(rm - rn) && d < rm + rn))
        throw std::domain_error("displacement_saddles: circles do not intersect transversally");
    SaddlePair s;
    double ca = (d * d + 2.0 * (static_cast<double>(m) - static_cast<double>(n))) / (2.0 * rm * d);
    double cb = (d * d + 2.0 * (static_cast<double>(n) - static_cast<double>(m))) / (2.0 * rn * d);
    s.theta0 = std::acos(std::clamp(ca, -1.0, 1.0));
    s.theta0_prime = kPi - std::acos(std::clamp(cb, -1.0, 1.0));
    return s;
}

ApproxValue displacement_approx(DisplacementMethod method, unsigned m, unsigned n, double d) {
    const double dm = static_cast<double>(m), dn = static_cast<double>(n);
    switch (method) {
    case DisplacementMethod::inphase: {
        SaddlePair s;
        try {
            s = displacement_saddles(m, n, d);
        } catch (const std::domain_error&) {
            return invalid("outside the two-circle intersection window");
        }
        double diff = s.theta0_prime - s.theta0;
        double sd = std::sin(diff);
        if (sd <= 0.0) return invalid("degenerate saddle separation");
        double amp = std::pow(1.0 / (kPi * kPi * dm * dn), 0.25) / std::sqrt(sd);
        double expo = 0.5 * (std::sqrt(dm) - std::sqrt(dn)) * (std::sqrt(dm) - std::sqrt(dn)) -
                      0.25 * d * d + std::sqrt(dm * dn) * (1.0 - std::cos(diff));
        double phase = (dm + 0.5) * s.theta0 - (dn + 0.5) * s.theta0_prime + 0.25 * kPi -
                       std::sqrt(dm * dn) * sd;
        return ok(amp * std::exp(expo) * std::cos(phase));
    }
    case DisplacementMethod::inphase_equal: {
        if (m != n) return invalid("diagonal method needs m = n");
        if (m == 0) return invalid("order must be positive");
        double r2 = 2.0 * std::sqrt(2.0 * dm); // diameter of the Fock circle
        if (!(d > 0.0 && d < r2)) return invalid("outside 0 < d < 2 sqrt(2m)");
        double th = std::acos(d / r2);
        double s2 = std::sin(2.0 * th);
        if (s2 <= 0.0) return invalid("degenerate tangential geometry");
        double amp = std::sqrt(1.0 / (kPi * dm)) / std::sqrt(s2);
        double expo = -0.25 * d * d + dm * (1.0 + std::cos(2.0 * th));
        double phase = (2.0 * dm + 1.0) * th - (dm + 0.25) * kPi - dm * s2;
        return ok(amp * std::exp(expo) * std::cos(phase));
    }
    case DisplacementMethod::tricomi: {
        double nu = 2.0 * (dn + dm + 1.0);
        double x = 0.5 * d * d;
        if (!(x > 0.0 && x < nu)) return invalid("outside the oscillatory region 0 < x < nu");
        double th = std::acos(d / (2.0 * std::sqrt(dn + dm + 1.0)));
        double sth = std::sin(th);
        double s2 = std::sin(2.0 * th);
        if (sth <= 0.0 || s2 <= 0.0) return invalid("degenerate angle in Laguerre asymptotics");
        double alpha = dn - dm;
        double big = 0.5 * (dn + dm + 1.0) * (2.0 * th - s2) + 0.25 * kPi;
        double corr = (1.0 / 12.0) * (4.0 / (nu * s2)) *
                      (5.0 / (4.0 * sth * sth) - (1.0 - 3.0 * alpha * alpha) * sth * sth - 1.0);
        double osc = std::sin(big) + corr * std::sin(big + 1.5 * kPi);
        double lamp = 0.5 * (specfun::log_factorial(m) - specfun::log_factorial(n)) +
                      0.25 * std::log(2.0 / (kPi * kPi * d * d)) +
                      0.25 * (2.0 * dn - 2.0 * dm - 1.0) * std::log(0.5 * (dn + dm + 1.0));
        double sign = (n % 2 == 0) ? 1.0 : -1.0;
        return ok(sign * std::exp(lamp) / std::sqrt(sth) * osc);
    }
    case DisplacementMethod::dowling_wkb: {
        if (d <= 0.0) return invalid("displacement must be positive");
        double xc = (dm - dn) / d + 0.5 * d;
        double pm2 = 2.0 * dm + 1.0 - xc * xc;
        if (pm2 <= 0.0) return invalid("outside |x_c| < sqrt(2m+1)");
        double pm = std::sqrt(pm2);
        double S = -(dm + 0.5) * clamped_asin(xc / std::sqrt(2.0 * dm + 1.0)) +
                   (dn + 0.5) * clamped_asin((xc - d) / std::sqrt(2.0 * dn + 1.0)) -
                   0.5 * d * pm - 0.5 * (dn - dm) * kPi;
        double A = 1.0 / (2.0 * kPi * pm);
        return ok(2.0 * std::sqrt(A) * std::cos(S + 0.25 * kPi));
    }
    }
    return invalid("unknown method");
}

double interference_area(unsigned m, unsigned n, double d) {
    SaddlePair s = displacement_saddles(m, n, d);
    double dm = static_cast<double>(m), dn = static_cast<double>(n);
    return dn * kPi + dm * s.theta0 - dn * s.theta0_prime -
           std::sqrt(dm * dn) * std::sin(s.theta0_prime - s.theta0);
}

} // namespace inphase::asymptotics
