#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inphase/states.hpp"

namespace inphase::harness {

enum class Table { I, II, III };

/// Grid-range reading for Table II, whose published interval is stated two
/// ways: upper endpoint 2 sqrt(2m) - 0.3 (caption) or 2 sqrt(2m) + 0.3 (text).
enum class RangeVariant { caption, text };

struct TableOptions {
    RangeVariant range = RangeVariant::caption;
    /// Replace the 512-point endpoint-inclusive grid with 512 equal
    /// subintervals (513 points).
    bool fencepost_513 = false;
};

struct RmseRow {
    Table table = Table::I;
    unsigned m = 0;
    std::optional<unsigned> n; // second index, Table III only
    std::string method;
    double grid_lo = 0.0;
    double grid_hi = 0.0;
    unsigned points = 512;
    double rmse = 0.0;
};

/// Root mean squared error of each approximation against the exact value on
/// the published grids.
/// Table I:   <q0,pos|m> for m in {20,30,40,50}, q0 in (-sqrt(2m)+0.3, sqrt(2m)-0.3),
///            methods inphase, pr, wkb.
/// Table II:  <m|D(d,0)|m> for m in {20,30,40,50}, d in (0.3, 2 sqrt(2m)-0.3),
///            methods inphase, tricomi, wkb.
/// Table III: <m|D(d,0)|n> for (m,n) in {(30,20),(40,30),(50,40),(30,10)},
///            d in (sqrt(2m)-sqrt(2n)+5, sqrt(2m)+sqrt(2n)-0.3), same methods.
std::vector<RmseRow> rmse_table(Table which, const TableOptions& opt = {});

/// Write the rows as CSV (header "table,m,n,method,grid_lo,grid_hi,points,rmse").
std::size_t write_rmse_csv(const std::vector<RmseRow>& rows, std::ostream& out);

enum class CurveKind {
    fock_wavefn,         // columns q0, exact, <methods>
    displacement_element,// columns d, exact, <methods>
    q_radial,            // columns r, q       (Husimi value along the +q axis)
    q_grid,              // columns q, p, value
    two_source_fringes,  // columns p, i1, i2, delta, q
};

/// One emitted data set.  `params` carries kind-specific numbers:
///   fock_wavefn:          n (required), lo, hi (default -(sqrt(2n)-0.3)..+)
///   displacement_element: m, n (required), lo, hi (default window +- 0.3)
///   q_radial:             lo (default 0), hi (default 6), step (overrides points)
///   q_grid:               qmin, qmax, pmin, pmax, step (all required)
///   two_source_fringes:   q0 (required), theta (default 0), lo, hi (default +-20)
/// `state` selects the state for the Husimi kinds ("fock:n=5",
/// "cat:q0=0.4,theta=0", "squeezed:mu=1", "circle:n=5,radius=3.16,samples=500").
struct CurveSpec {
    CurveKind kind = CurveKind::fock_wavefn;
    std::map<std::string, double> params;
    std::string state;
    std::vector<std::string> methods;
    unsigned points = 512;
};

/// Runtime configuration, overridable from a key = value text file.
struct Config {
    unsigned cutoff = 128;
    double line_extent = 12.0;
    unsigned line_samples = 2001;
    unsigned circle_samples = 500;
};

/// Parse "key = value" lines ('#' comments, blank lines allowed).  Unknown
/// keys throw std::invalid_argument.
Config parse_config(std::istream& in);

/// Build the truncated state named by a state text such as "fock:n=5",
/// "cat:q0=0.4,theta=0", "squeezed:mu=1", "circle:n=5[,radius=R][,samples=N]".
states::FockVector state_from_text(const std::string& text, const Config& config);

/// Evaluate the curve and write CSV (UTF-8, comma separated, header first,
/// floats at 17 significant digits).  Returns the number of data rows.
std::size_t emit_curve(const CurveSpec& spec, std::ostream& out,
                       const Config& config = {});

struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;  // worst observed deviation
    double tolerance = 0.0;
    std::string detail;
};

enum class VerifyLevel { fast, full };

struct VerifyReport {
    VerifyLevel level = VerifyLevel::fast;
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

/// Run every library invariant and oracle equivalence.  `fast` keeps cutoffs
/// at or below 128 and indices at or below 30; `full` widens grids to the
/// acceptance parameters.
VerifyReport verify_suite(VerifyLevel level);

/// Print one PASS/FAIL line per check; returns all_passed().
bool print_report(const VerifyReport& report, std::ostream& out);

} // namespace inphase::harness
