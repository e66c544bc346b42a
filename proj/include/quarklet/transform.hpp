#pragma once

#include "quarklet/cascade.hpp"
#include "quarklet/coefficients.hpp"
#include "quarklet/grid_function.hpp"

namespace quarklet {

/// Local-means analysis: lambda_{j,k} = int f psitilde_{j,k} dx for
/// -1 <= j <= max_level and every k whose dual support meets the window,
/// with f extended by zero outside its window.  All coefficients carry p = 0.
///
/// The integrand is piecewise linear times piecewise constant on the common
/// refinement of the two grids, so the composite rule is exact for the
/// represented operands.  Requires max_level <= f.level() - 4.
CoefficientSet analyze(const GridFunction& f, const DualBasis& dual, int max_level);

/// Pointwise sum  sum c_{p,j,k} psi_{p,j,k}  sampled on the requested grid.
GridFunction synthesize(const CoefficientSet& c, const FilterPair& fp, Window w, int level);

/// Re-tags a wavelet-level coefficient set as a quarkonial one: keeps the
/// p = 0 entries, all higher-degree coefficients vanish.  Rejects inputs that
/// already contain p > 0 entries.
CoefficientSet quarkonial_lift(const CoefficientSet& lambda);

/// Relative L2 error of analyze-then-synthesize over the window interior
/// (a margin of one mother-quarklet support width is trimmed at each end).
/// Falls back to the absolute error when ||f||_2 = 0.
double roundtrip_error(const GridFunction& f, const FilterPair& fp, const DualBasis& dual, int max_level);

}  // namespace quarklet
