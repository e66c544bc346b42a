#include "quarklet/cascade.hpp"

#include <cmath>
#include <stdexcept>

namespace quarklet {

double CellAverages::lower() const { return std::ldexp(double(start), -level); }
double CellAverages::upper() const { return std::ldexp(double(start + (long long)avg.size()), -level); }

double CellAverages::eval(double x) const {
    double t = std::ldexp(x, level) - double(start);
    if (t < 0.0) return 0.0;
    auto i = (long long)std::floor(t);
    if (i < 0 || i >= (long long)avg.size()) return 0.0;
    return avg[size_t(i)];
}

namespace {

// Solve the overdetermined system A x = b (rows >= cols) by normal equations
// with partial pivoting; returns the max residual of A x - b.
double solve_least_squares(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                           std::vector<double>& x) {
    const size_t rows = A.size(), cols = A[0].size();
    std::vector<std::vector<double>> N(cols, std::vector<double>(cols, 0.0));
    std::vector<double> rhs(cols, 0.0);
    for (size_t i = 0; i < cols; ++i)
        for (size_t j = 0; j < cols; ++j)
            for (size_t r = 0; r < rows; ++r) N[i][j] += A[r][i] * A[r][j];
    for (size_t i = 0; i < cols; ++i)
        for (size_t r = 0; r < rows; ++r) rhs[i] += A[r][i] * b[r];

    for (size_t col = 0; col < cols; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < cols; ++r)
            if (std::abs(N[r][col]) > std::abs(N[piv][col])) piv = r;
        std::swap(N[piv], N[col]);
        std::swap(rhs[piv], rhs[col]);
        if (N[col][col] == 0.0) throw std::runtime_error("transfer operator eigenproblem is singular");
        for (size_t r = col + 1; r < cols; ++r) {
            double f = N[r][col] / N[col][col];
            for (size_t cc = col; cc < cols; ++cc) N[r][cc] -= f * N[col][cc];
            rhs[r] -= f * rhs[col];
        }
    }
    x.assign(cols, 0.0);
    for (size_t col = cols; col-- > 0;) {
        double s = rhs[col];
        for (size_t cc = col + 1; cc < cols; ++cc) s -= N[col][cc] * x[cc];
        x[col] = s / N[col][col];
    }
    double res = 0.0;
    for (size_t r = 0; r < rows; ++r) {
        double s = -b[r];
        for (size_t cc = 0; cc < cols; ++cc) s += A[r][cc] * x[cc];
        res = std::max(res, std::abs(s));
    }
    return res;
}

// Integer-cell averages of the refinable function with the given mask:
// fixed point of the box-smoothed transfer operator, normalized to sum 1.
std::vector<double> level0_averages(const Mask& mask) {
    const int n0 = mask.lo(), n1 = mask.hi();
    const int n = n1 - n0;  // number of integer cells in [n0, n1]
    if (n == 1) return {1.0};
    std::vector<std::vector<double>> A(size_t(n) + 1, std::vector<double>(size_t(n), 0.0));
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
            A[size_t(j)][size_t(l)] =
                0.5 * (mask.at(2 * (j + n0) - (l + n0)) + mask.at(2 * (j + n0) + 1 - (l + n0))) - (j == l ? 1.0 : 0.0);
    for (int l = 0; l < n; ++l) A[size_t(n)][size_t(l)] = 1.0;
    std::vector<double> b(size_t(n) + 1, 0.0);
    b[size_t(n)] = 1.0;
    std::vector<double> v;
    double res = solve_least_squares(A, b, v);
    if (res > 1e-10) throw std::runtime_error("cascade does not converge for this mask (transfer residual " +
                                              std::to_string(res) + ")");
    return v;
}

// One refinement step for cell averages: out[i] = sum_k mask_k in[i - k 2^{d-1}]
// where `in` lives at level d-1 anchored at `start` (same anchor in units of
// its own level).
CellAverages refine(const CellAverages& in, const Mask& mask) {
    CellAverages out;
    out.level = in.level + 1;
    out.start = 2 * in.start;
    out.avg.assign(in.avg.size() * 2, 0.0);
    const long long shift_unit = 1ll << in.level;
    for (int k = mask.lo(); k <= mask.hi(); ++k) {
        double c = mask.at(k);
        if (c == 0.0) continue;
        // cell i of `out` covers [ (out.start+i) 2^{-d}, . ); under x -> 2x - k
        // it maps to cell (out.start + i - (k + in.start) 2^{d-1} ... ) of `in`
        // expressed at level d-1: index = out.start + i - k*2^{d-1} - in.start...
        long long off = in.start + k * shift_unit - out.start;  // in-index = i - off
        long long lo = std::max(0ll, off);
        long long hi = std::min((long long)out.avg.size(), off + (long long)in.avg.size());
        for (long long i = lo; i < hi; ++i) out.avg[size_t(i)] += c * in.avg[size_t(i - off)];
    }
    return out;
}

}  // namespace

DualBasis::DualBasis(const FilterPair& fp, int depth) : fp_(fp), depth_(depth) {
    if (depth < 1) throw std::invalid_argument("cascade depth must be >= 1");
    CellAverages gen;
    gen.level = 0;
    gen.start = fp.atilde.lo();
    gen.avg = level0_averages(fp.atilde);
    CellAverages prev;  // generator averages at depth-1, for the wavelet
    for (int d = 1; d <= depth; ++d) {
        if (d == depth) prev = gen;
        gen = refine(gen, fp.atilde);
    }
    gen_ = gen;
    wav_ = refine(prev, fp.btilde);
}

double DualBasis::eval_scaled(int j, long long k, double x) const {
    if (j == -1) return gen_.eval(x - double(k));
    if (j < -1) throw std::invalid_argument("dual level must be >= -1");
    double scale = std::ldexp(1.0, j);
    return std::sqrt(scale) * wav_.eval(scale * x - double(k));
}

Interval DualBasis::scaled_hull(int j, long long k) const {
    Interval base = j == -1 ? generator_hull() : wavelet_hull();
    if (j == -1) return {base.lo + double(k), base.hi + double(k)};
    double scale = std::ldexp(1.0, -j);
    return {(base.lo + double(k)) * scale, (base.hi + double(k)) * scale};
}

double eval_dual_generator(const FilterPair& fp, double x, int depth) {
    return DualBasis(fp, depth).eval_generator(x);
}

double eval_dual_wavelet(const FilterPair& fp, double x, int depth) { return DualBasis(fp, depth).eval_wavelet(x); }

}  // namespace quarklet
