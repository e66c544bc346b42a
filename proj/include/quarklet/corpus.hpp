#pragma once

#include <functional>
#include <string>
#include <vector>

#include "quarklet/filters.hpp"

namespace quarklet {

/// Built-in analytic test functions.  Every entry has a closed-form rule:
///   bump        exp(-x^2)
///   bspline:M   symmetrized cardinal B-spline of order M, shifted by 1/3
///   psi         the CDF mother wavelet of the active filter pair
///   sawtooth    2 * dist(x, Z) on [-2, 2], zero outside (Lipschitz, kinks
///               at half-integers)
///   lacunary    envelope(x) * sum_{n=0}^{6} 2^{-0.95 n} sin(2^n pi x),
///               envelope a smooth compact bump on (-2, 2); Hoelder exponent
///               about 0.95
///   zero        identically zero
/// The string may carry a dilation suffix "@t" meaning x -> f(2^t x).
std::function<double(double)> make_test_function(const std::string& spec, const FilterPair& fp);

/// Names accepted by make_test_function (without dilation suffixes).
std::vector<std::string> builtin_corpus();

}  // namespace quarklet
