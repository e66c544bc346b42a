#pragma once

#include <vector>

namespace quarklet {

/// Largest B-spline order the explicit truncated-power formula evaluates
/// reliably in double precision.  The alternating binomial sum loses roughly
/// one decimal digit per two orders; beyond 12 the cancellation error exceeds
/// 1e-10 near the right end of the support.
inline constexpr int kMaxSplineOrder = 12;

/// Cardinal B-spline N_m, the m-fold convolution of the characteristic
/// function of [0,1).  Evaluated with the explicit truncated-power formula
///
///   N_m(x) = 1/(m-1)! * sum_{k=0}^{m} (-1)^k C(m,k) (x-k)_+^{m-1}
///
/// using compensated summation.  Exactly 0 outside [0,m].  N_1 is the
/// right-open box chi_[0,1).
double eval_bspline(int m, double x);

/// Same value through the two-term recursion
///   N_m(x) = x/(m-1) N_{m-1}(x) + (m-x)/(m-1) N_{m-1}(x-1),
/// kept as an independent cross-check of the explicit formula.
double eval_bspline_recursive(int m, double x);

/// n-th classical derivative of N_m, valid for 1 <= n <= m-1, via
/// N_m'(x) = N_{m-1}(x) - N_{m-1}(x-1) applied n times.
double eval_bspline_derivative(int m, int n, double x);

/// Symmetrized generator phi(x) = N_m(x + floor(m/2)),
/// supported on [-floor(m/2), ceil(m/2)].
double eval_symmetrized(int m, double x);

/// B-spline quark: phi multiplied by a normalized monomial.
struct Quark {
    int order;   // spline order m >= 1
    int degree;  // polynomial degree p >= 0
};

/// phi_p(x) = (x / ceil(m/2))^p * N_m(x + floor(m/2)).  degree 0 gives the
/// plain symmetrized B-spline.
double eval_quark(const Quark& q, double x);

/// Two-scale mask of N_m: N_m(x) = sum_k a_k N_m(2x - k) with
/// a_k = 2^{1-m} C(m,k), k = 0..m.  The mask sums to 2.
std::vector<double> refinement_mask(int m);

}  // namespace quarklet
