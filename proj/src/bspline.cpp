#include "quarklet/bspline.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace quarklet {

namespace {

void check_order(int m) {
    if (m < 1) throw std::invalid_argument("B-spline order must be >= 1, got " + std::to_string(m));
    if (m > kMaxSplineOrder)
        throw std::invalid_argument("B-spline order " + std::to_string(m) + " exceeds supported maximum " +
                                    std::to_string(kMaxSplineOrder));
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
    return r;
}

double int_pow(double x, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

// (t)_+^e with the right-open convention at e = 0: the jump sits at t = 0
// and takes the value 1 there, so that N_1 = chi_[0,1).
double truncated_power(double t, int e) {
    if (e == 0) return t >= 0.0 ? 1.0 : 0.0;
    return t > 0.0 ? int_pow(t, e) : 0.0;
}

}  // namespace

double eval_bspline(int m, double x) {
    check_order(m);
    if (x < 0.0 || x > double(m)) return 0.0;
    if (x == double(m)) return 0.0;  // supp N_m = [0,m], pieces right-open
    // Neumaier summation; the alternating terms cancel down to O(1).
    double sum = 0.0, comp = 0.0;
    double fact = 1.0;
    for (int i = 2; i < m; ++i) fact *= double(i);
    for (int k = 0; k <= m; ++k) {
        double term = (k % 2 == 0 ? 1.0 : -1.0) * binomial(m, k) * truncated_power(x - double(k), m - 1);
        double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    return (sum + comp) / fact;
}

double eval_bspline_recursive(int m, double x) {
    check_order(m);
    if (m == 1) return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0;
    return x / double(m - 1) * eval_bspline_recursive(m - 1, x) +
           (double(m) - x) / double(m - 1) * eval_bspline_recursive(m - 1, x - 1.0);
}

double eval_bspline_derivative(int m, int n, double x) {
    check_order(m);
    if (n < 1 || n >= m)
        throw std::invalid_argument("derivative order must satisfy 1 <= n <= m-1, got n = " + std::to_string(n) +
                                    " for m = " + std::to_string(m));
    // N_m^(n)(x) = sum_i (-1)^i C(n,i) N_{m-n}(x - i)
    double sum = 0.0;
    for (int i = 0; i <= n; ++i)
        sum += (i % 2 == 0 ? 1.0 : -1.0) * binomial(n, i) * eval_bspline(m - n, x - double(i));
    return sum;
}

double eval_symmetrized(int m, double x) { return eval_bspline(m, x + double(m / 2)); }

double eval_quark(const Quark& q, double x) {
    if (q.degree < 0) throw std::invalid_argument("quark degree must be >= 0");
    double b = eval_symmetrized(q.order, x);
    if (q.degree == 0) return b;
    double half = double((q.order + 1) / 2);  // ceil(m/2)
    return int_pow(x / half, q.degree) * b;
}

std::vector<double> refinement_mask(int m) {
    check_order(m);
    std::vector<double> a(m + 1);
    double scale = std::ldexp(1.0, 1 - m);
    for (int k = 0; k <= m; ++k) a[k] = scale * binomial(m, k);
    return a;
}

}  // namespace quarklet
