#include "inphase/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "inphase/phasespace.hpp"
#include "inphase/specfun.hpp"

namespace inphase::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
/// Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i] = -t;
        x[n - 1 - i] = t;
        double ww = 2.0 / ((1.0 - t * t) * dp * dp);
        w[i] = ww;
        w[n - 1 - i] = ww;
    }
}

using Integrand2D = std::function<Complex(double, double)>;

/// Tensor GL quadrature over [ax,bx] x [ay,by] with node doubling.
Complex integrate_2d(const Integrand2D& f, double ax, double bx, double ay, double by,
                     const QuadOptions& opt) {
    Complex prev{0.0, 0.0};
    bool have_prev = false;
    std::vector<double> x, w;
    for (int n = opt.initial_nodes; n <= opt.max_nodes; n *= 2) {
        gauss_legendre(n, x, w);
        double cx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
        double cy = 0.5 * (ay + by), hy = 0.5 * (by - ay);
        Complex acc{0.0, 0.0};
        for (int i = 0; i < n; ++i) {
            double xi = cx + hx * x[i];
            Complex row{0.0, 0.0};
            for (int j = 0; j < n; ++j)
                row += w[j] * f(xi, cy + hy * x[j]);
            acc += w[i] * row;
        }
        acc *= hx * hy;
        if (have_prev && std::abs(acc - prev) < opt.tol) return acc;
        prev = acc;
        have_prev = true;
    }
    throw std::runtime_error("integrate_2d: node-doubling refinement did not converge");
}

std::size_t required_cutoff(double rate, std::size_t cutoff, const char* what) {
    std::size_t need = static_cast<std::size_t>(std::ceil(4.0 * rate + 40.0));
    if (cutoff < need)
        throw std::runtime_error(std::string(what) +
                                 ": cutoff lacks headroom for the requested generator");
    return need;
}

/// exp(G) by scaling-and-squaring with a Taylor series on the scaled matrix.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& G) {
    const auto dim = G.rows();
    double norm1 = G.cwiseAbs().colwise().sum().maxCoeff();
    int s = 0;
    if (norm1 > 0.25) s = static_cast<int>(std::ceil(std::log2(norm1 / 0.25)));
    Eigen::MatrixXcd B = G / std::pow(2.0, s);
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(dim, dim);
    for (int k = 1; k <= 40; ++k) {
        term = (term * B) / static_cast<double>(k);
        sum += term;
        double tn = term.cwiseAbs().colwise().sum().maxCoeff();
        if (tn < 1e-20 * sum.cwiseAbs().colwise().sum().maxCoeff()) break;
        if (k == 40)
            throw std::runtime_error("expm: Taylor tail failed to fall below tolerance");
    }
    for (int i = 0; i < s; ++i) sum = sum * sum;
    return sum;
}

} // namespace

Complex quad_posmom_overlap(double q0, double p0, const QuadOptions& opt) {
    // <q0,pos|p0,mom>: conjugated position-line weight against the
    // momentum-line weight, integrated over both line parameters.
    auto f = [&](double qp, double pp) {
        Complex w = std::polar(1.0, 0.5 * (q0 * pp + qp * p0));
        return w * phasespace::coherent_overlap({q0, pp}, {qp, p0});
    };
    const double half = 16.0;
    Complex val = integrate_2d(f, q0 - half, q0 + half, p0 - half, p0 + half, opt);
    return val / (4.0 * std::pow(kPi, 1.5));
}

Complex quad_sho_propagator(double q2, double q1, double t, const QuadOptions& opt) {
    const Complex eit = std::exp(Complex{0.0, -t});
    auto f = [&](double p1, double p2) {
        Complex Z = 0.25 * (p1 * p1 + p2 * p2) - 0.5 * p1 * p2 * eit +
                    Complex{0.0, 0.5} * ((q1 - q2 * eit) * p1 - (q2 - q1 * eit) * p2) +
                    0.25 * (q1 * q1 + q2 * q2) - 0.5 * q1 * q2 * eit;
        return std::exp(-Z);
    };
    // The quadratic form is soft along p1 = p2 with stiffness 1 - cos t.
    double soft = 1.0 - std::cos(t);
    if (soft < 1e-6)
        throw std::runtime_error("quad_sho_propagator: integration box unbounded near t = 0");
    double half = 12.0 / std::sqrt(soft) + 4.0;
    Complex val = integrate_2d(f, -half, half, -half, half, opt);
    return std::exp(Complex{0.0, -0.5 * t}) * val / (4.0 * std::pow(kPi, 1.5));
}

Complex quad_resolution_overlap(const FockVector& chi, const FockVector& psi,
                                const QuadOptions& opt) {
    // Box radius from the highest occupied level of either state.
    auto top_level = [](const FockVector& v) {
        double peak = 0.0;
        for (const auto& c : v.coeffs) peak = std::max(peak, std::abs(c));
        std::size_t top = 0;
        for (std::size_t n = 0; n < v.coeffs.size(); ++n)
            if (std::abs(v.coeffs[n]) > 1e-12 * peak) top = n;
        return top;
    };
    std::size_t top = std::max(top_level(chi), top_level(psi));
    double radius = std::sqrt(2.0 * static_cast<double>(top + 1)) + 10.0;
    std::size_t cut = std::max(chi.cutoff(), psi.cutoff());
    auto f = [&](double q, double p) {
        FockVector coh = states::coherent_fock_coeffs({q, p}, cut);
        Complex a = coh.inner(chi); // <z|chi>
        Complex b = coh.inner(psi); // <z|psi>
        return std::conj(a) * b;
    };
    Complex val = integrate_2d(f, -radius, radius, -radius, radius, opt);
    return val / (2.0 * kPi);
}

double OperatorMatrix::unitarity_defect() const {
    Eigen::MatrixXcd P = entries.adjoint() * entries;
    Eigen::Index block = static_cast<Eigen::Index>(cutoff / 2) + 1;
    double defect = 0.0;
    for (Eigen::Index i = 0; i < block; ++i)
        for (Eigen::Index j = 0; j < block; ++j) {
            Complex d = P(i, j) - (i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0});
            defect = std::max(defect, std::abs(d));
        }
    return defect;
}

FockVector OperatorMatrix::apply(const FockVector& v) const {
    if (v.coeffs.size() != static_cast<std::size_t>(entries.rows()))
        throw std::invalid_argument("OperatorMatrix::apply: dimension mismatch");
    Eigen::VectorXcd in(entries.rows());
    for (Eigen::Index n = 0; n < in.size(); ++n) in(n) = v.coeffs[n];
    Eigen::VectorXcd out = entries * in;
    FockVector res;
    res.coeffs.assign(out.data(), out.data() + out.size());
    return res;
}

OperatorMatrix displacement_matrix(double q, double p, std::size_t cutoff) {
    Complex z{q / std::numbers::sqrt2, p / std::numbers::sqrt2};
    required_cutoff(std::norm(z), cutoff, "displacement_matrix");
    Eigen::Index dim = static_cast<Eigen::Index>(cutoff) + 1;
    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index n = 0; n + 1 < dim; ++n) {
        double r = std::sqrt(static_cast<double>(n + 1));
        G(n + 1, n) = z * r;            // z a^dagger
        G(n, n + 1) = -std::conj(z) * r; // -z^* a
    }
    OperatorMatrix M;
    M.entries = expm(G);
    M.cutoff = cutoff;
    M.kind_tag = "displacement";
    return M;
}

OperatorMatrix squeeze_matrix(double mu, std::size_t cutoff) {
    double sh = std::sinh(0.5 * mu);
    required_cutoff(4.0 * sh * sh, cutoff, "squeeze_matrix");
    Eigen::Index dim = static_cast<Eigen::Index>(cutoff) + 1;
    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index n = 0; n + 2 < dim; ++n) {
        double r = std::sqrt(static_cast<double>((n + 1) * (n + 2)));
        G(n + 2, n) = Complex{0.25 * mu * r, 0.0};  // (mu/4) a^dag a^dag
        G(n, n + 2) = Complex{-0.25 * mu * r, 0.0}; // -(mu/4) a a
    }
    OperatorMatrix M;
    M.entries = expm(G);
    M.cutoff = cutoff;
    M.kind_tag = "squeeze";
    return M;
}

OperatorMatrix rotation_matrix(double t, std::size_t cutoff) {
    Eigen::Index dim = static_cast<Eigen::Index>(cutoff) + 1;
    OperatorMatrix M;
    M.entries = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index n = 0; n < dim; ++n)
        M.entries(n, n) = std::polar(1.0, t * static_cast<double>(n));
    M.cutoff = cutoff;
    M.kind_tag = "rotation";
    return M;
}

Complex series_displacement_element(unsigned m, unsigned n, double q, double p) {
    if (m > 100 || n > 100)
        throw std::domain_error("series_displacement_element: index above guard (100)");
    Complex z{q / std::numbers::sqrt2, p / std::numbers::sqrt2};
    double az = std::abs(z);
    if (az == 0.0) return m == n ? Complex{1.0, 0.0} : Complex{0.0, 0.0};

    // e^{-|z|^2/2} sum_k z^{m-n+k} (-z^*)^k sqrt(m!n!) / ((m-n+k)! k! (n-k)!),
    // a finite sum over k with m-n+k >= 0; term phases collapse to
    // (m-n) arg z + k pi.
    using specfun::log_factorial;
    int mn = static_cast<int>(m) - static_cast<int>(n);
    unsigned k0 = mn < 0 ? static_cast<unsigned>(-mn) : 0u;
    double base = -0.5 * az * az + 0.5 * (log_factorial(m) + log_factorial(n));
    double logz = std::log(az);
    double peak = -std::numeric_limits<double>::infinity();
    std::vector<double> logs;
    for (unsigned k = k0; k <= n; ++k) {
        double lt = base + (mn + 2.0 * k) * logz - log_factorial(static_cast<unsigned>(mn + static_cast<int>(k))) -
                    log_factorial(k) - log_factorial(n - k);
        logs.push_back(lt);
        peak = std::max(peak, lt);
    }
    long double sum = 0.0L;
    for (std::size_t i = 0; i < logs.size(); ++i) {
        long double term = std::exp(static_cast<long double>(logs[i] - peak));
        sum += ((k0 + i) % 2 == 0) ? term : -term;
    }
    double mag = peak + static_cast<double>(std::log(std::abs(sum)));
    Complex dir = std::polar(1.0, mn * std::arg(z));
    if (sum == 0.0L) return {0.0, 0.0};
    return (sum < 0.0L ? -1.0 : 1.0) * std::exp(mag) * dir;
}

namespace {

/// Accumulate w e^{i phi} |q,p> into the coefficient vector, log-space weight.
void accumulate_coherent(std::vector<Complex>& acc, double q, double p,
                         double log_w, double phase_w) {
    Complex z{q / std::numbers::sqrt2, p / std::numbers::sqrt2};
    double az = std::abs(z);
    if (az == 0.0) {
        acc[0] += std::polar(std::exp(log_w), phase_w);
        return;
    }
    double logz = std::log(az);
    double argz = std::arg(z);
    double base = log_w - 0.5 * az * az;
    double log_fact = 0.0;
    for (std::size_t n = 0; n < acc.size(); ++n) {
        if (n > 0) log_fact += std::log(static_cast<double>(n));
        double lmag = base + static_cast<double>(n) * logz - 0.5 * log_fact;
        if (lmag < -745.0) continue;
        acc[n] += std::polar(std::exp(lmag), phase_w + static_cast<double>(n) * argz);
    }
}

/// Position eigenstate |q0,pos> as the in-phase line integral over |q0,p>,
/// p in [-L, L], discretized on Gauss-Legendre nodes.
std::vector<Complex> position_line_vector(double q0, double extent, int nodes,
                                          std::size_t cutoff) {
    std::vector<double> x, w;
    gauss_legendre(nodes, x, w);
    std::vector<Complex> acc(cutoff + 1, Complex{0.0, 0.0});
    double log_pref = -std::log(2.0) - 0.75 * std::log(kPi);
    for (int j = 0; j < nodes; ++j) {
        double p = extent * x[j];
        accumulate_coherent(acc, q0, p, log_pref + std::log(extent * w[j]),
                            -0.5 * p * q0);
    }
    return acc;
}

} // namespace

Complex fock_rotation_propagator(double q2, double q1, double t) {
    double st = std::abs(std::sin(t));
    if (st < 0.05)
        throw std::domain_error("fock_rotation_propagator: line extent diverges near t = 0 mod pi");
    double extent = std::clamp((8.0 + std::abs(q1) + std::abs(q2)) / st, 12.0, 60.0);
    double qa = std::max(std::abs(q1), std::abs(q2));
    double top = 0.5 * (qa * qa + extent * extent);
    std::size_t cutoff = static_cast<std::size_t>(std::ceil(top + 8.0 * std::sqrt(top) + 48.0));

    Complex prev{0.0, 0.0};
    bool have_prev = false;
    for (int nodes = 256; nodes <= 4096; nodes *= 2) {
        auto a = position_line_vector(q2, extent, nodes, cutoff);
        auto b = position_line_vector(q1, extent, nodes, cutoff);
        Complex val{0.0, 0.0};
        for (std::size_t n = cutoff + 1; n-- > 0;)
            val += std::conj(a[n]) * b[n] * std::polar(1.0, -t * static_cast<double>(n));
        val *= std::polar(1.0, -0.5 * t);
        if (have_prev && std::abs(val - prev) < 1e-8) return val;
        prev = val;
        have_prev = true;
    }
    throw std::runtime_error("fock_rotation_propagator: node refinement did not settle");
}

} // namespace inphase::oracle
