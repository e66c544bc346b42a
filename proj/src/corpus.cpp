#include "quarklet/corpus.hpp"

#include <cmath>
#include <stdexcept>

#include "quarklet/bspline.hpp"

namespace quarklet {

namespace {

double smooth_envelope(double x) {
    double t = x / 2.0;
    if (std::abs(t) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

double sawtooth(double x) {
    if (std::abs(x) > 2.0) return 0.0;
    double frac = x - std::floor(x);
    return 2.0 * std::min(frac, 1.0 - frac);
}

double lacunary(double x) {
    double env = smooth_envelope(x);
    if (env == 0.0) return 0.0;
    double s = 0.0;
    for (int n = 0; n <= 6; ++n) s += std::exp2(-0.95 * double(n)) * std::sin(std::exp2(double(n)) * M_PI * x);
    return env * s;
}

}  // namespace

std::function<double(double)> make_test_function(const std::string& spec, const FilterPair& fp) {
    std::string name = spec;
    int dilation = 0;
    if (auto at = spec.find('@'); at != std::string::npos) {
        name = spec.substr(0, at);
        dilation = std::stoi(spec.substr(at + 1));
    }

    std::function<double(double)> base;
    if (name == "bump") {
        base = [](double x) { return std::exp(-x * x); };
    } else if (name.rfind("bspline:", 0) == 0) {
        int m = std::stoi(name.substr(8));
        // shifted off the dyadic grid so the spline sits in no
        // multiresolution space and its coefficients decay at the
        // smoothness-driven rate
        base = [m](double x) { return eval_symmetrized(m, x - 1.0 / 3.0); };
    } else if (name == "psi") {
        base = [fp](double x) { return eval_quarklet(fp, 0, x); };
    } else if (name == "sawtooth") {
        base = sawtooth;
    } else if (name == "lacunary") {
        base = lacunary;
    } else if (name == "zero") {
        base = [](double) { return 0.0; };
    } else {
        throw std::invalid_argument("unknown test function '" + name +
                                    "'; known: bump, bspline:M, psi, sawtooth, lacunary, zero");
    }

    if (dilation == 0) return base;
    double scale = std::exp2(double(dilation));
    return [base, scale](double x) { return base(scale * x); };
}

std::vector<std::string> builtin_corpus() { return {"bump", "bspline:2", "bspline:3", "psi", "sawtooth", "lacunary"}; }

}  // namespace quarklet
