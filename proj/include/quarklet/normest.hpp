#pragma once

#include <limits>
#include <string>
#include <vector>

#include "quarklet/cascade.hpp"
#include "quarklet/coefficients.hpp"
#include "quarklet/grid_function.hpp"
#include "quarklet/seqspace.hpp"

namespace quarklet {

/// (int |f|^r)^{1/r} over the window by the composite rule on the grid mesh.
double lr_norm(const GridFunction& f, double r);

/// Morrey norm sup |b-a|^{1/u - 1/r} (int_a^b |f|^r)^{1/r}, with the supremum
/// over all dyadic intervals inside the window at levels 0..grid level plus
/// the whole window.  Any interval is covered by at most two dyadic ones of
/// comparable length, so the restricted supremum is equivalent to the full
/// one with constant <= 2^{1/r}.
double morrey_norm(const GridFunction& f, double u, double r);

/// Configuration of the truncated difference quasi-norm.  Zero / negative
/// fields are resolved from the space parameters and the grid:
/// w = min(1, r, q), order = smallest integer above s (at most m-1 when the
/// spline order applies), i_max = grid level - 4,
/// x_level = min(grid level, i_max + 2, 12).
struct DifferenceNormConfig {
    int order = 0;
    double w = 0.0;
    int i_max = -1;
    int x_level = -1;
    int h_nodes = 8;  // Gauss nodes per half h-panel
    int x_nodes = 4;  // Gauss nodes per outer cell
    // optional restriction of the outer integral (NaN = the window widened by
    // the stencil length); used to probe interior sub-windows
    double x_lo = std::numeric_limits<double>::quiet_NaN();
    double x_hi = std::numeric_limits<double>::quiet_NaN();
};

struct DifferenceNormResult {
    double value = 0.0;      // Lebesgue part + difference part
    double lebesgue = 0.0;   // ||f | L_r||
    double difference = 0.0;
    double tail_estimate = 0.0;  // geometric extrapolation of the truncated i-sum
    int order = 0;
    double w = 0.0;
    int i_max = 0;
};

/// Truncated difference characterization
///   ||f|L_r|| + || [ sum_{i<=i_max} 2^{iq(s+1/w)} (int_{|h|<2^-i} |D_h^N f|^w dh)^{q/w} ]^{1/q} | L_r ||
/// with D_h^N the N-th forward difference.  Throws when the parameter
/// condition max(0, 1/r-1, 1/q-1, 1/r-1/w, 1/q-1/w) < s < N fails, naming the
/// violated inequality.
DifferenceNormResult difference_norm_detailed(const GridFunction& f, const SpaceParams& params,
                                              DifferenceNormConfig cfg = {});
double difference_norm(const GridFunction& f, const SpaceParams& params, DifferenceNormConfig cfg = {});

/// Coefficient-side Besov norm
///   ( sum (p+1)^{(2m+3)^2 r} 2^{j(s+1/2-1/r)r} |c_{p,j,k}|^r )^{1/r};
/// at p = 0 this is the classical Besov sequence norm.
double besov_coeff_norm(const CoefficientSet& lambda, double s, double r);

/// One function's worth of norm-equivalence data.
struct EquivalenceRow {
    std::string name;
    double seq = 0.0;    // sequence norm of the analyzed coefficients
    double diff = 0.0;   // function-side difference norm (NaN when one-sided)
    double ratio = 0.0;  // seq / diff
    bool scored = false;
};

struct EquivalenceReport {
    std::vector<EquivalenceRow> rows;
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    double spread = 0.0;  // ratio_max / ratio_min over scored rows
    bool one_sided = false;  // Morrey variant: no function-side difference norm exists
    bool over_budget = false;
    double budget = 0.0;
};

/// Analyzes every family member, compares the coefficient quasi-norm against
/// the difference quasi-norm and reports the ratio spread.  For Morrey
/// parameters (u > r) only the coefficient side is computed and the report is
/// marked one-sided.  Zero functions are excluded from the ratio statistics.
EquivalenceReport equivalence_experiment(const std::vector<std::pair<std::string, GridFunction>>& family,
                                         const SpaceParams& params, const DualBasis& dual, int max_level,
                                         DifferenceNormConfig cfg = {}, double spread_budget = 10.0);

}  // namespace quarklet
