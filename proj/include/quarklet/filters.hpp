#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quarklet/bspline.hpp"

namespace quarklet {

/// Finitely supported filter mask: coefficient c[i] belongs to shift
/// offset + i.
struct Mask {
    int offset = 0;
    std::vector<double> c;

    int lo() const { return offset; }
    int hi() const { return offset + int(c.size()) - 1; }
    double at(int k) const {
        int i = k - offset;
        return (i >= 0 && i < int(c.size())) ? c[size_t(i)] : 0.0;
    }
    double sum() const;
};

/// Index (p, j, k) of a quarklet psi_{p,j,k}; j = -1 addresses the generator
/// level phi_p(. - k).
struct QuarkletIndex {
    int p = 0;
    int j = 0;
    long long k = 0;

    friend bool operator==(const QuarkletIndex&, const QuarkletIndex&) = default;
    friend auto operator<=>(const QuarkletIndex&, const QuarkletIndex&) = default;
};

/// Dyadic interval Q_{j,k} = 2^{-j}([0,1) + k); j = -1 gives length-2 cells.
struct DyadicCube {
    int j = 0;
    long long k = 0;
    double lower() const;
    double upper() const;
    double length() const;
};

/// Biorthogonal CDF(m, mtilde) filter bank for the symmetrized B-spline
/// generator.  All refinement masks sum to 2; wavelet masks sum to 0.
struct FilterPair {
    int m = 0;       // primal spline order
    int mtilde = 0;  // dual order, mtilde >= m, m + mtilde even
    Mask a;          // primal refinement mask of phi
    Mask atilde;     // dual refinement mask of phitilde
    Mask b;          // primal wavelet mask: psi = sum b_k phi(2. - k)
    Mask btilde;     // dual wavelet mask: psitilde = sum btilde_k phitilde(2. - k)
};

/// Pairs for which exact dual masks are generated.
bool cdf_pair_supported(int m, int mtilde);

/// Build the CDF(m, mtilde) filter bank.  The dual refinement mask comes from
/// the Bezout construction
///   atilde(z) = ((1+z)/2)^mtilde z^{-(mtilde-kappa)/2} P_L((2-z-z^{-1})/4),
/// with L = (m+mtilde)/2, kappa = m mod 2 and
/// P_L(y) = sum_{n<L} C(L-1+n,n) y^n, carried out in exact dyadic rationals.
/// Wavelet masks are the alternating flips b_k = (-1)^k atilde_{1-k} and
/// btilde_k = (-1)^k a_{1-k}.
/// Throws std::invalid_argument for unsupported (m, mtilde).
FilterPair cdf_filters(int m, int mtilde);

/// Max deviation of the four perfect-reconstruction identities
///   sum_k a_k atilde_{k+2l} = 2 delta_l,   sum_k b_k btilde_{k+2l} = 2 delta_l,
///   sum_k a_k btilde_{k+2l} = 0,           sum_k b_k atilde_{k+2l} = 0.
double discrete_biorthogonality_residual(const FilterPair& fp);

/// Quarklet psi_p = sum_k b_k phi_p(2. - k).
double eval_quarklet(const FilterPair& fp, int p, double x);

/// psi_{p,j,k} = 2^{j/2} psi_p(2^j . - k) for j >= 0, phi_p(. - k) at j = -1.
double eval_quarklet_scaled(const FilterPair& fp, const QuarkletIndex& idx, double x);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
};

/// Support hull of the mother quarklet psi_p (independent of p).
Interval quarklet_support(const FilterPair& fp);

/// Support hull of psi_{p,j,k}.
Interval support_of(const FilterPair& fp, const QuarkletIndex& idx);

/// Support hull of phi_p = [-floor(m/2), ceil(m/2)].
Interval generator_support(int m);

/// Plain-text filter table, one line per entry: "name m mtilde offset value"
/// with name in {a, atilde, b, btilde} and 17 significant digits.
void write_filter_table(std::ostream& os, const FilterPair& fp);
FilterPair read_filter_table(std::istream& is);

}  // namespace quarklet
