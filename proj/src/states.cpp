#include "inphase/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "inphase/oracle.hpp"
#include "inphase/specfun.hpp"

namespace inphase::states {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTailLimit = 1e-8;

/// Accumulate w * |point> into acc, with the weight given as
/// w = exp(log_w + i phase_w) so that large prefactors and the coherent
/// Gaussian never meet outside log space.
void add_coherent(FockVector& acc, PhasePoint point, double log_w, double phase_w) {
    const Complex z = point.z();
    const double az = std::abs(z);
    const std::size_t cut = acc.cutoff();
    if (az == 0.0) {
        acc.coeffs[0] += std::polar(std::exp(log_w), phase_w);
        return;
    }
    const double logz = std::log(az);
    const double argz = std::arg(z);
    const double base = log_w - 0.5 * az * az;
    double log_fact = 0.0; // running ln n!
    for (std::size_t n = 0; n <= cut; ++n) {
        if (n > 0) log_fact += std::log(static_cast<double>(n));
        double lmag = base + static_cast<double>(n) * logz - 0.5 * log_fact;
        if (lmag < -745.0) continue; // below double underflow
        acc.coeffs[n] += std::polar(std::exp(lmag), phase_w + static_cast<double>(n) * argz);
    }
}

struct LineGrid {
    double step;
    int samples;
    double extent;
};

LineGrid line_grid(const SuperpositionSpec& spec, const Defaults& defaults, double width_scale) {
    LineGrid g;
    g.samples = spec.samples > 0 ? spec.samples : defaults.line_samples;
    if (g.samples < 2) throw std::invalid_argument("build_superposition: need at least 2 samples");
    g.extent = spec.extent > 0.0 ? spec.extent : width_scale;
    g.step = 2.0 * g.extent / static_cast<double>(g.samples - 1);
    return g;
}

double trap_weight(int j, const LineGrid& g) {
    return (j == 0 || j == g.samples - 1) ? 0.5 * g.step : g.step;
}

} // namespace

double FockVector::norm_sq() const {
    double s = 0.0;
    for (const auto& c : coeffs) s += std::norm(c);
    return s;
}

double FockVector::norm() const { return std::sqrt(norm_sq()); }

double FockVector::tail_mass() const {
    if (coeffs.empty()) return 0.0;
    double n2 = norm_sq();
    if (n2 == 0.0) return 0.0;
    return std::norm(coeffs.back()) / n2;
}

Complex FockVector::inner(const FockVector& other) const {
    std::size_t m = std::min(coeffs.size(), other.coeffs.size());
    Complex s{0.0, 0.0};
    for (std::size_t n = 0; n < m; ++n) s += std::conj(coeffs[n]) * other.coeffs[n];
    return s;
}

void FockVector::normalize() {
    double nr = norm();
    if (nr == 0.0) throw std::runtime_error("FockVector::normalize: zero vector");
    for (auto& c : coeffs) c /= nr;
}

FockVector coherent_fock_coeffs(PhasePoint point, std::size_t cutoff) {
    FockVector v;
    v.coeffs.assign(cutoff + 1, Complex{0.0, 0.0});
    add_coherent(v, point, 0.0, 0.0);
    return v;
}

SuperpositionSpec SuperpositionSpec::momentum_line(double p0) {
    SuperpositionSpec s;
    s.kind = SuperpositionKind::momentum_line;
    s.p0 = p0;
    return s;
}

SuperpositionSpec SuperpositionSpec::position_line(double q0) {
    SuperpositionSpec s;
    s.kind = SuperpositionKind::position_line;
    s.q0 = q0;
    return s;
}

SuperpositionSpec SuperpositionSpec::gaussian_line(double sigma, double p0) {
    SuperpositionSpec s;
    s.kind = SuperpositionKind::gaussian_line;
    s.sigma = sigma;
    s.p0 = p0;
    return s;
}

SuperpositionSpec SuperpositionSpec::fock_circle(unsigned n, double radius) {
    SuperpositionSpec s;
    s.kind = SuperpositionKind::fock_circle;
    s.n = n;
    s.radius = radius;
    return s;
}

SuperpositionSpec SuperpositionSpec::displaced_fock_circle(unsigned n, double q, double p) {
    SuperpositionSpec s;
    s.kind = SuperpositionKind::displaced_fock_circle;
    s.n = n;
    s.q = q;
    s.p = p;
    return s;
}

SuperpositionSpec SuperpositionSpec::squeezed_line(double mu, double anchor) {
    SuperpositionSpec s;
    s.kind = SuperpositionKind::squeezed_line;
    s.mu = mu;
    s.anchor = anchor;
    return s;
}

FockVector build_superposition(const SuperpositionSpec& spec, std::size_t cutoff,
                               const Defaults& defaults) {
    FockVector out;
    out.coeffs.assign(cutoff + 1, Complex{0.0, 0.0});
    const double log_line_norm = -std::log(2.0) - 0.75 * std::log(kPi);

    switch (spec.kind) {
    case SuperpositionKind::momentum_line: {
        // |p0,mom> expanded along the line p = orbit; away from the orbit the
        // compensating factor exp[(p0-orbit)^2/2] keeps the state the same.
        const double line_p = spec.has_orbit ? spec.orbit : spec.p0;
        auto g = line_grid(spec, defaults, defaults.line_extent);
        const double comp = 0.5 * (spec.p0 - line_p) * (spec.p0 - line_p);
        for (int j = 0; j < g.samples; ++j) {
            double q = -g.extent + g.step * j;
            double log_w = std::log(trap_weight(j, g)) + log_line_norm + comp;
            double phase = q * (spec.p0 - 0.5 * line_p);
            add_coherent(out, {q, line_p}, log_w, phase);
        }
        break;
    }
    case SuperpositionKind::position_line: {
        const double line_q = spec.has_orbit ? spec.orbit : spec.q0;
        auto g = line_grid(spec, defaults, defaults.line_extent);
        const double comp = 0.5 * (spec.q0 - line_q) * (spec.q0 - line_q);
        for (int j = 0; j < g.samples; ++j) {
            double p = -g.extent + g.step * j;
            double log_w = std::log(trap_weight(j, g)) + log_line_norm + comp;
            double phase = -p * (spec.q0 - 0.5 * line_q);
            add_coherent(out, {line_q, p}, log_w, phase);
        }
        break;
    }
    case SuperpositionKind::gaussian_line: {
        if (spec.sigma <= 0.0)
            throw std::invalid_argument("gaussian_line: sigma must be positive");
        auto g = line_grid(spec, defaults, 8.0 / spec.sigma);
        for (int j = 0; j < g.samples; ++j) {
            double q = -g.extent + g.step * j;
            double log_w = std::log(trap_weight(j, g)) - 0.5 * spec.sigma * spec.sigma * q * q;
            add_coherent(out, {q, spec.p0}, log_w, 0.5 * q * spec.p0);
        }
        break;
    }
    case SuperpositionKind::fock_circle: {
        if (spec.radius <= 0.0)
            throw std::invalid_argument("fock_circle: radius must be positive");
        int N = spec.samples > 0 ? spec.samples : defaults.circle_samples;
        const double r = spec.radius;
        // (e^{r^2/4}/2pi) sqrt(n!) (sqrt(2)/r)^n, folded with the 2pi/N
        // angular weight.
        double log_pref = 0.25 * r * r + 0.5 * specfun::log_factorial(spec.n) +
                          spec.n * std::log(std::numbers::sqrt2 / r) -
                          std::log(static_cast<double>(N));
        for (int j = 0; j < N; ++j) {
            double theta = 2.0 * kPi * j / N;
            add_coherent(out, {r * std::cos(theta), r * std::sin(theta)}, log_pref,
                         -static_cast<double>(spec.n) * theta);
        }
        break;
    }
    case SuperpositionKind::displaced_fock_circle: {
        int N = spec.samples > 0 ? spec.samples : defaults.circle_samples;
        const double r = std::sqrt(2.0 * spec.n);
        const double amp = std::sqrt(0.5 * spec.n);
        double log_pref = specfun::norm_factor_log(spec.n) - std::log(static_cast<double>(N));
        for (int j = 0; j < N; ++j) {
            double theta = 2.0 * kPi * j / N;
            double c = std::cos(theta), s = std::sin(theta);
            double phase = -static_cast<double>(spec.n) * theta + amp * (spec.p * c - spec.q * s);
            add_coherent(out, {spec.q + r * c, spec.p + r * s}, log_pref, phase);
        }
        break;
    }
    case SuperpositionKind::squeezed_line: {
        if (spec.mu == 0.0)
            throw std::invalid_argument("squeezed_line: mu must be nonzero");
        const double k = std::exp(0.5 * std::abs(spec.mu));
        const double k2m1 = k * k - 1.0;
        const double a = spec.anchor;
        auto g = line_grid(spec, defaults, 8.0 * std::sqrt(k2m1));
        double log_pref = 0.5 * (std::log(k) - std::log(2.0 * kPi * k2m1)) +
                          k * k * a * a / (2.0 * k2m1);
        const double cross = (k * k + 1.0) * a / (2.0 * k2m1);
        for (int j = 0; j < g.samples; ++j) {
            double u = -g.extent + g.step * j;
            double log_w = std::log(trap_weight(j, g)) + log_pref - u * u / (2.0 * k2m1);
            if (spec.mu > 0.0)
                add_coherent(out, {u, a}, log_w, -u * cross);
            else
                add_coherent(out, {a, u}, log_w, u * cross);
        }
        break;
    }
    }

    if (out.norm_sq() == 0.0)
        throw std::runtime_error("build_superposition: discretization produced a zero vector");
    if (out.tail_mass() > kTailLimit)
        throw std::runtime_error("build_superposition: truncation tail above 1e-8, raise the cutoff");
    return out;
}

double q_function(const FockVector& state, PhasePoint point, QConvention convention) {
    double n2 = state.norm_sq();
    if (n2 == 0.0) throw std::invalid_argument("q_function: zero state");
    FockVector coh = coherent_fock_coeffs(point, state.cutoff());
    double val = std::norm(coh.inner(state)) / n2;
    return convention == QConvention::per_dqdp ? val / (2.0 * kPi) : val / kPi;
}

double q_closed_form_position(double q0, PhasePoint point) {
    double d = point.q - q0;
    return std::exp(-d * d) / (2.0 * std::pow(kPi, 1.5));
}

double q_closed_form_momentum(double p0, PhasePoint point) {
    double d = point.p - p0;
    return std::exp(-d * d) / (2.0 * std::pow(kPi, 1.5));
}

double q_closed_form_fock(unsigned n, PhasePoint point) {
    double u = 0.5 * (point.q * point.q + point.p * point.p);
    double lg = -std::log(2.0 * kPi) - specfun::log_factorial(n) - u;
    if (n > 0) {
        if (u == 0.0) return 0.0;
        lg += n * std::log(u);
    }
    return std::exp(lg);
}

InterferenceBreakdown two_source_q(PhasePoint z1, PhasePoint z2, double theta,
                                   PhasePoint point) {
    InterferenceBreakdown out;
    auto sq = [](double x) { return x * x; };
    out.i1 = std::exp(-0.5 * (sq(point.q - z1.q) + sq(point.p - z1.p)));
    out.i2 = std::exp(-0.5 * (sq(point.q - z2.q) + sq(point.p - z2.p)));
    double delta0 = theta + phasespace::triangle_area({0.0, 0.0}, z1, z2);
    out.delta = delta0 + phasespace::triangle_area(z1, point, z2);
    double overlap_mag = std::exp(-0.25 * (sq(z1.q - z2.q) + sq(z1.p - z2.p)));
    double norm_sq = 2.0 * (1.0 + overlap_mag * std::cos(delta0));
    out.q_value = (out.i1 + out.i2 + 2.0 * std::sqrt(out.i1 * out.i2) * std::cos(out.delta)) /
                  (kPi * norm_sq);
    return out;
}

Moments quadrature_stats(const FockVector& state) {
    double n2 = state.norm_sq();
    if (n2 == 0.0) throw std::invalid_argument("quadrature_stats: zero state");
    const auto& c = state.coeffs;
    const std::size_t top = c.size();
    // Ladder actions with one slot of headroom so a^dagger on the top
    // coefficient is kept, not dropped.
    std::vector<Complex> qv(top + 1), pv(top + 1);
    auto at = [&](std::size_t n) -> Complex {
        return n < top ? c[n] : Complex{0.0, 0.0};
    };
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (std::size_t n = 0; n <= top; ++n) {
        double rn = std::sqrt(static_cast<double>(n));
        double rn1 = std::sqrt(static_cast<double>(n + 1));
        Complex lower = n > 0 ? at(n - 1) : Complex{0.0, 0.0};
        qv[n] = inv_sqrt2 * (rn * lower + rn1 * at(n + 1));
        pv[n] = Complex{0.0, 1.0} * inv_sqrt2 * (rn * lower - rn1 * at(n + 1));
    }
    auto dot = [&](const std::vector<Complex>& a, const std::vector<Complex>& b) {
        Complex s{0.0, 0.0};
        for (std::size_t n = 0; n < a.size(); ++n) s += std::conj(a[n]) * b[n];
        return s;
    };
    Complex qpsi_psi{0.0, 0.0}, ppsi_psi{0.0, 0.0};
    for (std::size_t n = 0; n < top; ++n) {
        qpsi_psi += std::conj(qv[n]) * c[n];
        ppsi_psi += std::conj(pv[n]) * c[n];
    }
    Moments m;
    m.mean_q = qpsi_psi.real() / n2;
    m.mean_p = ppsi_psi.real() / n2;
    m.var_q = dot(qv, qv).real() / n2 - m.mean_q * m.mean_q;
    m.var_p = dot(pv, pv).real() / n2 - m.mean_p * m.mean_p;
    m.cov_qp = dot(qv, pv).real() / n2 - m.mean_q * m.mean_p;
    return m;
}

FockVector evolve(const FockVector& state, Rotate r) {
    FockVector out = state;
    for (std::size_t n = 0; n < out.coeffs.size(); ++n)
        out.coeffs[n] *= std::polar(1.0, r.t * static_cast<double>(n));
    return out;
}

FockVector evolve(const FockVector& state, Displace d) {
    if (state.tail_mass() > kTailLimit)
        throw std::runtime_error("evolve: input truncation tail above 1e-8");
    auto U = oracle::displacement_matrix(d.q, d.p, state.cutoff());
    FockVector out = U.apply(state);
    if (out.tail_mass() > kTailLimit)
        throw std::runtime_error("evolve: displaced state does not fit the cutoff");
    return out;
}

} // namespace inphase::states
