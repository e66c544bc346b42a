#include "quarklet/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace quarklet {

namespace {

// Gauss-Legendre abscissas/weights on [0, 1].
constexpr double kX2[] = {0.21132486540518712, 0.78867513459481288};
constexpr double kW2[] = {0.5, 0.5};

constexpr double kX4[] = {0.069431844202973714, 0.33000947820757187, 0.66999052179242813, 0.93056815579702629};
constexpr double kW4[] = {0.17392742256872693, 0.32607257743127307, 0.32607257743127307, 0.17392742256872693};

constexpr double kX8[] = {0.019855071751231856, 0.10166676129318664, 0.2372337950418355,  0.40828267875217512,
                          0.59171732124782488,  0.7627662049581645,  0.89833323870681336, 0.98014492824876814};
constexpr double kW8[] = {0.050614268145188129, 0.11119051722668724, 0.15685332293894364, 0.18134189168918099,
                          0.18134189168918099,  0.15685332293894364, 0.11119051722668724, 0.050614268145188129};

}  // namespace

void gauss_rule_01(int nodes, const double*& x, const double*& w) {
    switch (nodes) {
        case 2: x = kX2; w = kW2; return;
        case 4: x = kX4; w = kW4; return;
        case 8: x = kX8; w = kW8; return;
        default: throw std::invalid_argument("quadrature supports 2, 4 or 8 nodes per cell");
    }
}

double integrate_interval(const std::function<double(double)>& f, double a, double b, int nodes) {
    const double *x, *w;
    gauss_rule_01(nodes, x, w);
    double len = b - a, s = 0.0;
    for (int i = 0; i < nodes; ++i) s += w[i] * f(a + len * x[i]);
    return s * len;
}

double integrate_dyadic(const std::function<double(double)>& f, double a, double b, int level, int nodes) {
    if (b <= a) return 0.0;
    const double *x, *w;
    gauss_rule_01(nodes, x, w);
    const double step = std::ldexp(1.0, -level);
    const auto i0 = (long long)std::llround(std::ldexp(a, level));
    const auto i1 = (long long)std::llround(std::ldexp(b, level));
    double total = 0.0;
    for (long long i = i0; i < i1; ++i) {
        double cell_lo = double(i) * step;
        double s = 0.0;
        for (int n = 0; n < nodes; ++n) s += w[n] * f(cell_lo + step * x[n]);
        total += s * step;
    }
    return total;
}

}  // namespace quarklet
