#pragma once

#include <vector>

#include "quarklet/filters.hpp"

namespace quarklet {

/// Piecewise-constant function holding exact dyadic cell averages:
/// value avg[i] on [ (start + i) 2^-level, (start + i + 1) 2^-level ).
struct CellAverages {
    long long start = 0;
    int level = 0;
    std::vector<double> avg;

    double lower() const;
    double upper() const;
    double eval(double x) const;
};

/// Approximation of the dual generator phitilde and dual wavelet psitilde of
/// a CDF filter pair on a dyadic grid of step 2^-depth.
///
/// The representation stores cell averages rather than point values: the
/// level-0 averages are the (unique, sum-normalized) fixed point of the
/// box-smoothed transfer operator
///   M[j,l] = (atilde_{2j-l} + atilde_{2j+1-l}) / 2,
/// and finer levels follow from the refinement relation.  Point-value
/// subdivision is not used because several duals in the supported table
/// (notably (2,2) and (4,4)) are discontinuous and have a degenerate
/// point-value transfer eigenproblem.  Averages are well defined for any
/// L2 dual, reproduce all moments up to the quadrature exactly, and their
/// weak error against piecewise polynomials decays at second order in the
/// grid step.
class DualBasis {
  public:
    DualBasis(const FilterPair& fp, int depth);

    int depth() const { return depth_; }
    const FilterPair& filters() const { return fp_; }

    double eval_generator(double x) const { return gen_.eval(x); }
    double eval_wavelet(double x) const { return wav_.eval(x); }

    /// psitilde_{j,k} = 2^{j/2} psitilde(2^j . - k); j = -1 is phitilde(. - k).
    double eval_scaled(int j, long long k, double x) const;

    Interval generator_hull() const { return {gen_.lower(), gen_.upper()}; }
    Interval wavelet_hull() const { return {wav_.lower(), wav_.upper()}; }
    Interval scaled_hull(int j, long long k) const;

    /// Finest dyadic level at which psitilde_{j,k} is piecewise constant.
    int kink_level(int j) const { return depth_ + (j > 0 ? j : 0); }

    const CellAverages& generator_cells() const { return gen_; }
    const CellAverages& wavelet_cells() const { return wav_; }

  private:
    FilterPair fp_;
    int depth_;
    CellAverages gen_;
    CellAverages wav_;
};

/// One-shot conveniences; for anything iterative build a DualBasis once.
double eval_dual_generator(const FilterPair& fp, double x, int depth);
double eval_dual_wavelet(const FilterPair& fp, double x, int depth);

}  // namespace quarklet
