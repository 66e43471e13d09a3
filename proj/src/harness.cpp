#include "inphase/harness.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "inphase/asymptotics.hpp"
#include "inphase/exact.hpp"

namespace inphase::harness {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> linspace(double lo, double hi, unsigned points) {
    if (points < 2) throw std::invalid_argument("linspace: need at least 2 points");
    std::vector<double> xs(points);
    for (unsigned i = 0; i < points; ++i)
        xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    return xs;
}

asymptotics::HermiteMethod hermite_method(const std::string& tag) {
    using asymptotics::HermiteMethod;
    if (tag == "inphase") return HermiteMethod::inphase;
    if (tag == "pr") return HermiteMethod::plancherel_rotach;
    if (tag == "wkb") return HermiteMethod::wkb;
    throw std::invalid_argument("unknown wavefunction method: " + tag);
}

asymptotics::DisplacementMethod displacement_method(const std::string& tag) {
    using asymptotics::DisplacementMethod;
    if (tag == "inphase") return DisplacementMethod::inphase;
    if (tag == "inphase_equal") return DisplacementMethod::inphase_equal;
    if (tag == "tricomi") return DisplacementMethod::tricomi;
    if (tag == "wkb") return DisplacementMethod::dowling_wkb;
    throw std::invalid_argument("unknown displacement method: " + tag);
}

/// RMSE of approx against exact over the grid.  Points where the
/// approximation declares itself invalid abort unless allow_invalid is set
/// (text-variant grids cross the classical boundary on purpose), in which
/// case they are dropped from the mean.
template <typename Exact, typename Approx>
double grid_rmse(const std::vector<double>& xs, Exact&& exact, Approx&& approx,
                 bool allow_invalid) {
    double sum = 0.0;
    unsigned used = 0;
    for (double x : xs) {
        asymptotics::ApproxValue a = approx(x);
        if (!a.valid) {
            if (allow_invalid) continue;
            throw std::runtime_error("approximation invalid inside the published grid: " + a.note);
        }
        double d = a.value - exact(x);
        sum += d * d;
        ++used;
    }
    if (used == 0) throw std::runtime_error("grid_rmse: no valid grid points");
    return std::sqrt(sum / used);
}

std::map<std::string, double> parse_kv(const std::string& text) {
    std::map<std::string, double> kv;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? text.size() : comma + 1;
        if (item.empty()) continue;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key=value, got: " + item);
        try {
            kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad numeric value in: " + item);
        }
    }
    return kv;
}

double require(const std::map<std::string, double>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::invalid_argument("missing parameter: " + key);
    return it->second;
}

double get_or(const std::map<std::string, double>& kv, const std::string& key, double dflt) {
    auto it = kv.find(key);
    return it == kv.end() ? dflt : it->second;
}

unsigned require_index(const std::map<std::string, double>& kv, const std::string& key) {
    double v = require(kv, key);
    if (v < 0.0 || v != std::floor(v))
        throw std::invalid_argument("parameter must be a nonnegative integer: " + key);
    return static_cast<unsigned>(v);
}

std::string table_name(Table t) {
    switch (t) {
    case Table::I: return "I";
    case Table::II: return "II";
    case Table::III: return "III";
    }
    return "?";
}

} // namespace

std::vector<RmseRow> rmse_table(Table which, const TableOptions& opt) {
    std::vector<RmseRow> rows;
    const unsigned points = opt.fencepost_513 ? 513 : 512;

    auto push = [&](unsigned m, std::optional<unsigned> n, const std::string& method,
                    double lo, double hi, double rmse) {
        RmseRow r;
        r.table = which;
        r.m = m;
        r.n = n;
        r.method = method;
        r.grid_lo = lo;
        r.grid_hi = hi;
        r.points = points;
        r.rmse = rmse;
        rows.push_back(std::move(r));
    };

    switch (which) {
    case Table::I: {
        for (unsigned m : {20u, 30u, 40u, 50u}) {
            double edge = std::sqrt(2.0 * m);
            double lo = -edge + 0.3, hi = edge - 0.3;
            auto xs = linspace(lo, hi, points);
            auto exact = [&](double q0) { return exact::fock_position_wavefn(m, q0); };
            for (const std::string& tag : {"inphase", "pr", "wkb"}) {
                auto method = hermite_method(tag);
                double rmse = grid_rmse(
                    xs, exact,
                    [&](double q0) { return asymptotics::fock_position_approx(method, m, q0); },
                    false);
                push(m, std::nullopt, tag, lo, hi, rmse);
            }
        }
        break;
    }
    case Table::II: {
        for (unsigned m : {20u, 30u, 40u, 50u}) {
            double edge = 2.0 * std::sqrt(2.0 * m);
            double lo = 0.3;
            double hi = opt.range == RangeVariant::caption ? edge - 0.3 : edge + 0.3;
            bool allow_invalid = opt.range == RangeVariant::text;
            auto xs = linspace(lo, hi, points);
            auto exact = [&](double d) {
                return exact::displacement_element(m, m, d, 0.0).real();
            };
            for (const std::string& tag : {"inphase", "tricomi", "wkb"}) {
                auto method = displacement_method(tag);
                double rmse = grid_rmse(
                    xs, exact,
                    [&](double d) { return asymptotics::displacement_approx(method, m, m, d); },
                    allow_invalid);
                push(m, std::nullopt, tag, lo, hi, rmse);
            }
        }
        break;
    }
    case Table::III: {
        const std::pair<unsigned, unsigned> pairs[] = {{30u, 20u}, {40u, 30u}, {50u, 40u}, {30u, 10u}};
        for (auto [m, n] : pairs) {
            double rm = std::sqrt(2.0 * m), rn = std::sqrt(2.0 * n);
            double lo = rm - rn + 5.0, hi = rm + rn - 0.3;
            auto xs = linspace(lo, hi, points);
            auto exact = [&](double d) {
                return exact::displacement_element(m, n, d, 0.0).real();
            };
            for (const std::string& tag : {"inphase", "tricomi", "wkb"}) {
                auto method = displacement_method(tag);
                double rmse = grid_rmse(
                    xs, exact,
                    [&](double d) { return asymptotics::displacement_approx(method, m, n, d); },
                    false);
                push(m, n, tag, lo, hi, rmse);
            }
        }
        break;
    }
    }
    return rows;
}

std::size_t write_rmse_csv(const std::vector<RmseRow>& rows, std::ostream& out) {
    out << "table,m,n,method,grid_lo,grid_hi,points,rmse\n";
    for (const auto& r : rows) {
        out << table_name(r.table) << ',' << r.m << ',';
        if (r.n) out << *r.n;
        out << ',' << r.method << ',' << fmt17(r.grid_lo) << ',' << fmt17(r.grid_hi) << ','
            << r.points << ',' << fmt17(r.rmse) << '\n';
    }
    return rows.size();
}

Config parse_config(std::istream& in) {
    Config c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto strip = [](std::string s) {
            auto notspace = [](unsigned char ch) { return !std::isspace(ch); };
            s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
            s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
            return s;
        };
        std::string body = strip(line);
        if (body.empty()) continue;
        auto eq = body.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = strip(body.substr(0, eq));
        std::string val = strip(body.substr(eq + 1));
        try {
            if (key == "cutoff") c.cutoff = static_cast<unsigned>(std::stoul(val));
            else if (key == "line_extent") c.line_extent = std::stod(val);
            else if (key == "line_samples") c.line_samples = static_cast<unsigned>(std::stoul(val));
            else if (key == "circle_samples") c.circle_samples = static_cast<unsigned>(std::stoul(val));
            else throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key " + key);
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": bad value " + val);
        }
    }
    return c;
}

states::FockVector state_from_text(const std::string& text, const Config& config) {
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon);
    auto kv = colon == std::string::npos ? std::map<std::string, double>{}
                                         : parse_kv(text.substr(colon + 1));
    states::Defaults defaults;
    defaults.cutoff = static_cast<int>(config.cutoff);
    defaults.line_samples = static_cast<int>(config.line_samples);
    defaults.circle_samples = static_cast<int>(config.circle_samples);
    defaults.line_extent = config.line_extent;

    if (kind == "fock") {
        unsigned n = require_index(kv, "n");
        if (n > config.cutoff)
            throw std::invalid_argument("fock state index above the configured cutoff");
        states::FockVector v;
        v.coeffs.assign(config.cutoff + 1, {0.0, 0.0});
        v.coeffs[n] = 1.0;
        return v;
    }
    if (kind == "cat") {
        double q0 = require(kv, "q0");
        double theta = get_or(kv, "theta", 0.0);
        auto a = states::coherent_fock_coeffs({q0, 0.0}, config.cutoff);
        auto b = states::coherent_fock_coeffs({-q0, 0.0}, config.cutoff);
        states::FockVector v = a;
        auto w = std::polar(1.0, theta);
        for (std::size_t j = 0; j < v.coeffs.size(); ++j) v.coeffs[j] += w * b.coeffs[j];
        if (v.tail_mass() > 1e-8)
            throw std::runtime_error("cat state does not fit the configured cutoff");
        return v;
    }
    if (kind == "squeezed") {
        double mu = require(kv, "mu");
        if (mu == 0.0) throw std::invalid_argument("squeezed state needs mu != 0");
        exact::SqueezeParam sq(mu);
        states::FockVector v;
        v.coeffs.assign(config.cutoff + 1, {0.0, 0.0});
        for (unsigned n = 0; n <= config.cutoff; n += 2)
            v.coeffs[n] = exact::squeeze_element(n, sq, 0);
        if (v.tail_mass() > 1e-8)
            throw std::runtime_error("squeezed state does not fit the configured cutoff");
        return v;
    }
    if (kind == "circle") {
        unsigned n = require_index(kv, "n");
        double radius = get_or(kv, "radius", std::sqrt(2.0 * n));
        auto spec = states::SuperpositionSpec::fock_circle(n, radius);
        spec.samples = static_cast<int>(get_or(kv, "samples", defaults.circle_samples));
        return states::build_superposition(spec, config.cutoff, defaults);
    }
    throw std::invalid_argument("unknown state kind: " + kind);
}

namespace {

void write_row(std::ostream& out, const std::vector<double>& cells) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
        if (j) out << ',';
        out << fmt17(cells[j]);
    }
    out << '\n';
}

} // namespace

std::size_t emit_curve(const CurveSpec& spec, std::ostream& out, const Config& config) {
    const auto& kv = spec.params;
    switch (spec.kind) {
    case CurveKind::fock_wavefn: {
        if (spec.methods.empty())
            throw std::invalid_argument("fock_wavefn curve needs at least one method");
        unsigned n = require_index(kv, "n");
        double edge = std::sqrt(2.0 * n) - 0.3;
        double lo = get_or(kv, "lo", -edge), hi = get_or(kv, "hi", edge);
        auto xs = linspace(lo, hi, spec.points);
        out << "q0,exact";
        for (const auto& m : spec.methods) out << ',' << m;
        out << '\n';
        for (double x : xs) {
            std::vector<double> cells{x, exact::fock_position_wavefn(n, x)};
            for (const auto& tag : spec.methods) {
                auto a = asymptotics::fock_position_approx(hermite_method(tag), n, x);
                cells.push_back(a.valid ? a.value : std::nan(""));
            }
            write_row(out, cells);
        }
        return xs.size();
    }
    case CurveKind::displacement_element: {
        if (spec.methods.empty())
            throw std::invalid_argument("displacement_element curve needs at least one method");
        unsigned m = require_index(kv, "m"), n = require_index(kv, "n");
        double rm = std::sqrt(2.0 * m), rn = std::sqrt(2.0 * n);
        double lo = get_or(kv, "lo", std::abs(rm - rn) + 0.3);
        double hi = get_or(kv, "hi", rm + rn - 0.3);
        auto xs = linspace(lo, hi, spec.points);
        out << "d,exact";
        for (const auto& t : spec.methods) out << ',' << t;
        out << '\n';
        for (double d : xs) {
            std::vector<double> cells{d, exact::displacement_element(m, n, d, 0.0).real()};
            for (const auto& tag : spec.methods) {
                auto a = asymptotics::displacement_approx(displacement_method(tag), m, n, d);
                cells.push_back(a.valid ? a.value : std::nan(""));
            }
            write_row(out, cells);
        }
        return xs.size();
    }
    case CurveKind::q_radial: {
        auto state = state_from_text(spec.state, config);
        double lo = get_or(kv, "lo", 0.0), hi = get_or(kv, "hi", 6.0);
        std::vector<double> xs;
        if (auto it = kv.find("step"); it != kv.end()) {
            double step = it->second;
            if (step <= 0.0) throw std::invalid_argument("step must be positive");
            for (double r = lo; r <= hi + 1e-12 * (hi - lo); r += step) xs.push_back(r);
        } else {
            xs = linspace(lo, hi, spec.points);
        }
        out << "r,q\n";
        for (double r : xs)
            write_row(out, {r, states::q_function(state, {r, 0.0}, states::QConvention::per_dqdp)});
        return xs.size();
    }
    case CurveKind::q_grid: {
        auto state = state_from_text(spec.state, config);
        double qmin = require(kv, "qmin"), qmax = require(kv, "qmax");
        double pmin = require(kv, "pmin"), pmax = require(kv, "pmax");
        double step = require(kv, "step");
        if (step <= 0.0 || qmax < qmin || pmax < pmin)
            throw std::invalid_argument("bad q_grid window");
        out << "q,p,value\n";
        std::size_t rows = 0;
        for (double q = qmin; q <= qmax + 1e-12 * step; q += step)
            for (double p = pmin; p <= pmax + 1e-12 * step; p += step) {
                write_row(out, {q, p, states::q_function(state, {q, p}, states::QConvention::per_dqdp)});
                ++rows;
            }
        return rows;
    }
    case CurveKind::two_source_fringes: {
        double q0 = require(kv, "q0");
        if (q0 <= 0.0) throw std::invalid_argument("two_source_fringes needs q0 > 0");
        double theta = get_or(kv, "theta", 0.0);
        double lo = get_or(kv, "lo", -20.0), hi = get_or(kv, "hi", 20.0);
        auto xs = linspace(lo, hi, spec.points);
        phasespace::PhasePoint z1{q0, 0.0}, z2{-q0, 0.0};
        out << "p,i1,i2,delta,q\n";
        for (double p : xs) {
            auto b = states::two_source_q(z1, z2, theta, {0.0, p});
            write_row(out, {p, b.i1, b.i2, b.delta, b.q_value});
        }
        return xs.size();
    }
    }
    throw std::invalid_argument("unknown curve kind");
}

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

bool print_report(const VerifyReport& report, std::ostream& out) {
    for (const auto& c : report.checks) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%-42s measured %.3e  tol %.3e", c.name.c_str(),
                      c.measured, c.tolerance);
        out << (c.passed ? "PASS " : "FAIL ") << buf;
        if (!c.detail.empty()) out << "  [" << c.detail << ']';
        out << '\n';
    }
    std::size_t failed = 0;
    for (const auto& c : report.checks)
        if (!c.passed) ++failed;
    out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) FAILED")
        << " (" << report.checks.size() << " total)\n";
    return report.all_passed();
}

} // namespace inphase::harness
