#pragma once

#include <map>
#include <optional>

#include "quarklet/coefficients.hpp"

namespace quarklet {

/// Parameters (s, r, q, m) of the weighted quarklet sequence space, plus the
/// optional Morrey integrability u >= r.  The polynomial weight exponent
/// sgn(s) (2m+3)^2 is derived, never stored.
struct SpaceParams {
    double s = 0.0;
    double r = 2.0;
    double q = 2.0;
    int m = 2;
    std::optional<double> u;

    void validate() const;
};

/// sgn(s) * (2m+3)^2
double weight_exponent(double s, int m);

/// Weighted sequence quasi-norm: the L_r integral of
///   [ sum_{p,j,k} (p+1)^{sgn(s)(2m+3)^2 q} 2^{jsq} 2^{jq/2} |c_{p,j,k}|^q chi_{j,k}(x)^q ]^{1/q}.
/// The inner sum is piecewise constant on the finest dyadic partition spanned
/// by the supports, so the integral is a finite exact sum (no quadrature).
double seqnorm(const SpaceParams& params, const CoefficientSet& c);

/// Morrey variant: the same inner function measured in M^u_r, with the
/// supremum taken over dyadic intervals (all levels down to the support hull)
/// plus the hull itself.  Requires u >= r and s > 0; equals seqnorm at u = r.
double seqnorm_morrey(const SpaceParams& params, const CoefficientSet& c);

/// Constructive Calderon-product factorization of a coefficient set between
/// two endpoint spaces: level sets A_l of the inner function, index classes
/// K_l selected by the half-measure conditions |Q cap A_l| >= |Q|/2 and
/// |Q cap A_{l+1}| < |Q|/2, and the closed-form endpoint sequences alpha,
/// beta with |c| = |alpha|^{1-theta} |beta|^theta.
struct CalderonSplit {
    CoefficientSet alpha;  // endpoint-0 sequence (nonnegative entries)
    CoefficientSet beta;   // endpoint-1 sequence
    SpaceParams target;    // (s, 1/r, 1/q) convex combination of the endpoints
    SpaceParams endpoint0;
    SpaceParams endpoint1;
    double theta = 0.0;
    double gamma = 0.0;  // 1 - r q0 / (q r0)
    double delta = 0.0;  // 1 - r q1 / (q r1)
    double u = 0.0;      // s + 1/2 - (q0/q)(s0 + 1/2)
    double v = 0.0;      // s + 1/2 - (q1/q)(s1 + 1/2)
    std::map<QuarkletIndex, long long> level_of;  // K_l assignment per entry

    double max_factorization_residual = 0.0;  // relative, over nonzero entries
    double target_norm = 0.0;
    double alpha_norm = 0.0;
    double beta_norm = 0.0;
    double alpha_constant = 0.0;  // alpha_norm / target_norm^{r/r0}
    double beta_constant = 0.0;   // beta_norm / target_norm^{r/r1}
};

CalderonSplit calderon_split(const CoefficientSet& c, const SpaceParams& endpoint0, const SpaceParams& endpoint1,
                             double theta);

/// Bilinear pairing sum g_{p,j,k} c_{p,j,k} together with its Hoelder bound
/// ||g | f^{-s}_{r',q'}(m)|| * ||c | f^s_{r,q}(m)||.  Requires 1 < r, q < inf.
struct DualityResult {
    double pairing = 0.0;
    double bound = 0.0;
};

DualityResult duality_pair(const CoefficientSet& g, const CoefficientSet& c, const SpaceParams& params);

}  // namespace quarklet
