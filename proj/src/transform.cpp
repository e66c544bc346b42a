#include "quarklet/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "quarklet/quadrature.hpp"

namespace quarklet {

namespace {

// k-range of basis functions with support hull `base` (at level j, shift k)
// meeting the open window.
std::pair<long long, long long> shift_range(Interval base, int j, Window w) {
    double scale = std::ldexp(1.0, std::max(j, 0));
    double klo, khi;
    if (j == -1) {
        klo = double(w.lo) - base.hi;
        khi = double(w.hi) - base.lo;
    } else {
        klo = double(w.lo) * scale - base.hi;
        khi = double(w.hi) * scale - base.lo;
    }
    return {(long long)std::floor(klo) + 1, (long long)std::ceil(khi) - 1};
}

}  // namespace

CoefficientSet analyze(const GridFunction& f, const DualBasis& dual, int max_level) {
    if (max_level < -1) throw std::invalid_argument("analysis level must be >= -1");
    if (max_level > f.level() - 4)
        throw std::invalid_argument("analysis needs quadrature headroom: max_level " + std::to_string(max_level) +
                                    " > grid level " + std::to_string(f.level()) + " - 4");
    const FilterPair& fp = dual.filters();
    CoefficientSet out;
    out.meta = {fp.m, fp.mtilde, max_level, f.window()};

    for (int j = -1; j <= max_level; ++j) {
        Interval base = j == -1 ? dual.generator_hull() : dual.wavelet_hull();
        auto [k0, k1] = shift_range(base, j, f.window());
        int mesh = std::max(f.level(), dual.kink_level(j));
        for (long long k = k0; k <= k1; ++k) {
            Interval supp = dual.scaled_hull(j, k);
            double lo = std::max(supp.lo, double(f.window().lo));
            double hi = std::min(supp.hi, double(f.window().hi));
            if (hi <= lo) continue;
            // piecewise linear times piecewise constant on the common mesh:
            // the 2-node rule is exact
            double lambda = integrate_dyadic([&](double x) { return f.eval(x) * dual.eval_scaled(j, k, x); }, lo, hi,
                                             mesh, 2);
            out.set({0, j, k}, lambda);
        }
    }
    return out;
}

GridFunction synthesize(const CoefficientSet& c, const FilterPair& fp, Window w, int level) {
    GridFunction out = GridFunction::zero(w, level);
    auto& s = out.samples();
    const double step = out.step();
    for (const auto& [idx, v] : c.entries) {
        Interval supp = support_of(fp, idx);
        auto i0 = (long long)std::floor((supp.lo - double(w.lo)) / step);
        auto i1 = (long long)std::ceil((supp.hi - double(w.lo)) / step);
        i0 = std::max(i0, 0ll);
        i1 = std::min(i1, out.node_count() - 1);
        for (long long i = i0; i <= i1; ++i) s[size_t(i)] += v * eval_quarklet_scaled(fp, idx, out.node_x(i));
    }
    return out;
}

CoefficientSet quarkonial_lift(const CoefficientSet& lambda) {
    for (const auto& [idx, v] : lambda.entries)
        if (idx.p != 0)
            throw std::invalid_argument("quarkonial lift expects wavelet-level input (p = 0 only), found p = " +
                                        std::to_string(idx.p));
    return lambda;
}

double roundtrip_error(const GridFunction& f, const FilterPair& fp, const DualBasis& dual, int max_level) {
    CoefficientSet c = analyze(f, dual, max_level);
    GridFunction fhat = synthesize(c, fp, f.window(), f.level());
    double margin = quarklet_support(fp).width();
    double lo = double(f.window().lo) + margin;
    double hi = double(f.window().hi) - margin;
    if (hi <= lo) throw std::invalid_argument("window too small for the interior roundtrip margin");
    // snap to the grid so the composite rule is exact for the interpolants
    lo = std::ceil(std::ldexp(lo, f.level())) * f.step();
    hi = std::floor(std::ldexp(hi, f.level())) * f.step();
    double err2 = integrate_dyadic(
        [&](double x) {
            double d = f.eval(x) - fhat.eval(x);
            return d * d;
        },
        lo, hi, f.level(), 4);
    double norm2 = integrate_dyadic([&](double x) { double v = f.eval(x); return v * v; }, lo, hi, f.level(), 4);
    if (norm2 == 0.0) return std::sqrt(err2);
    return std::sqrt(err2 / norm2);
}

}  // namespace quarklet
