#include "quarklet/normest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "quarklet/quadrature.hpp"
#include "quarklet/transform.hpp"

namespace quarklet {

double lr_norm(const GridFunction& f, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("Lebesgue norm needs r > 0");
    double integral = integrate_dyadic([&](double x) { return std::pow(std::abs(f.eval(x)), r); },
                                       double(f.window().lo), double(f.window().hi), f.level(), 8);
    return std::pow(integral, 1.0 / r);
}

double morrey_norm(const GridFunction& f, double u, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("Morrey norm needs r > 0");
    if (!(u >= r)) throw std::invalid_argument("Morrey norm needs r <= u");
    const int level = f.level();
    const long long ncells = (long long)f.window().width() << level;
    const double step = f.step();

    std::vector<double> prefix(size_t(ncells) + 1, 0.0);
    for (long long i = 0; i < ncells; ++i) {
        double cell = integrate_interval([&](double x) { return std::pow(std::abs(f.eval(x)), r); },
                                         double(f.window().lo) + double(i) * step,
                                         double(f.window().lo) + double(i + 1) * step, 8);
        prefix[size_t(i) + 1] = prefix[size_t(i)] + cell;
    }

    const double morrey_exp = 1.0 / u - 1.0 / r;
    auto candidate = [&](long long c0, long long c1) {  // cells [c0, c1)
        double mass = prefix[size_t(c1)] - prefix[size_t(c0)];
        if (mass <= 0.0) return 0.0;
        double len = double(c1 - c0) * step;
        return std::pow(len, morrey_exp) * std::pow(mass, 1.0 / r);
    };

    double best = candidate(0, ncells);  // the full window
    for (int l = 0; l <= level; ++l) {
        long long cells = 1ll << (level - l);
        for (long long t = 0; t * cells < ncells; ++t) best = std::max(best, candidate(t * cells, (t + 1) * cells));
    }
    return best;
}

namespace {

struct ResolvedDiffConfig {
    int order;
    double w;
    int i_max;
    int x_level;
    int h_nodes;
    int x_nodes;
};

ResolvedDiffConfig resolve(const DifferenceNormConfig& cfg, const GridFunction& f, const SpaceParams& p) {
    ResolvedDiffConfig r{};
    r.w = cfg.w > 0.0 ? cfg.w : std::min({1.0, p.r, p.q});
    if (cfg.order > 0) {
        r.order = cfg.order;
    } else {
        r.order = std::max(1, int(std::floor(p.s)) + 1);
        if (p.m >= 2) r.order = std::min(r.order, p.m - 1);
    }
    r.i_max = cfg.i_max >= 0 ? cfg.i_max : f.level() - 4;
    if (r.i_max < 2) throw std::invalid_argument("difference norm needs i_max >= 2 (grid too coarse)");
    if (r.i_max + 2 > f.level())
        throw std::invalid_argument("grid cannot resolve scale 2^-(i_max+2); refine the grid or lower i_max");
    r.x_level = cfg.x_level >= 0 ? cfg.x_level : std::min({f.level(), r.i_max + 2, 12});
    r.h_nodes = cfg.h_nodes;
    r.x_nodes = cfg.x_nodes;
    return r;
}

void check_parameter_condition(const SpaceParams& p, const ResolvedDiffConfig& cfg) {
    auto fail = [](const std::string& what) {
        throw std::invalid_argument("difference-norm parameter condition violated: " + what);
    };
    if (!(p.s < double(cfg.order))) fail("s < N fails (s = " + std::to_string(p.s) + ", N = " + std::to_string(cfg.order) + ")");
    if (!(p.s > 0.0)) fail("s > 0 fails");
    if (!(p.s > 1.0 / p.r - 1.0)) fail("s > 1/r - 1 fails");
    if (!(p.s > 1.0 / p.q - 1.0)) fail("s > 1/q - 1 fails");
    if (!(p.s > 1.0 / p.r - 1.0 / cfg.w)) fail("s > 1/r - 1/w fails");
    if (!(p.s > 1.0 / p.q - 1.0 / cfg.w)) fail("s > 1/q - 1/w fails");
}

}  // namespace

DifferenceNormResult difference_norm_detailed(const GridFunction& f, const SpaceParams& params,
                                              DifferenceNormConfig cfg) {
    params.validate();
    ResolvedDiffConfig rc = resolve(cfg, f, params);
    check_parameter_condition(params, rc);

    const int N = rc.order;
    std::vector<double> binom(size_t(N) + 1, 1.0);
    for (int l = 1; l <= N; ++l) binom[size_t(l)] = binom[size_t(l) - 1] * double(N - l + 1) / double(l);

    auto diff_n = [&](double x, double h) {
        double s = 0.0;
        for (int l = 0; l <= N; ++l) {
            double term = binom[size_t(l)] * f.eval(x + double(l) * h);
            s += ((N - l) % 2 == 0) ? term : -term;
        }
        return s;
    };

    const double q_over_w = params.q / rc.w;
    const double s_plus = params.s + 1.0 / rc.w;

    // three truncation depths, for the geometric tail estimate
    double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0;
    const double xstep = std::ldexp(1.0, -rc.x_level);
    double xlo = double(f.window().lo) - double(N);
    double xhi = double(f.window().hi) + double(N);
    if (!std::isnan(cfg.x_lo)) xlo = std::ceil(std::ldexp(cfg.x_lo, rc.x_level)) * xstep;
    if (!std::isnan(cfg.x_hi)) xhi = std::floor(std::ldexp(cfg.x_hi, rc.x_level)) * xstep;
    const auto ncells = (long long)std::llround((xhi - xlo) / xstep);

    const double *gx, *gw;
    gauss_rule_01(rc.x_nodes, gx, gw);

    for (long long ci = 0; ci < ncells; ++ci) {
        double cell_lo = xlo + double(ci) * xstep;
        for (int n = 0; n < rc.x_nodes; ++n) {
            double x = cell_lo + xstep * gx[n];
            double weight = gw[n] * xstep;
            double sum = 0.0, partial0 = 0.0, partial1 = 0.0;
            for (int i = 0; i <= rc.i_max; ++i) {
                double radius = std::ldexp(1.0, -i);
                double inner = integrate_interval([&](double h) { return std::pow(std::abs(diff_n(x, h)), rc.w); },
                                                  -radius, 0.0, rc.h_nodes) +
                               integrate_interval([&](double h) { return std::pow(std::abs(diff_n(x, h)), rc.w); },
                                                  0.0, radius, rc.h_nodes);
                sum += std::exp2(double(i) * params.q * s_plus) * std::pow(inner, q_over_w);
                if (i == rc.i_max - 2) partial0 = sum;
                if (i == rc.i_max - 1) partial1 = sum;
            }
            acc0 += weight * std::pow(partial0, params.r / params.q);
            acc1 += weight * std::pow(partial1, params.r / params.q);
            acc2 += weight * std::pow(sum, params.r / params.q);
        }
    }

    DifferenceNormResult out;
    out.order = N;
    out.w = rc.w;
    out.i_max = rc.i_max;
    out.lebesgue = lr_norm(f, params.r);
    out.difference = std::pow(acc2, 1.0 / params.r);
    out.value = out.lebesgue + out.difference;

    double v0 = std::pow(acc0, 1.0 / params.r), v1 = std::pow(acc1, 1.0 / params.r);
    double d1 = v1 - v0, d2 = out.difference - v1;
    if (d1 > 0.0 && d2 > 0.0) {
        double rho = std::min(d2 / d1, 0.95);
        out.tail_estimate = d2 * rho / (1.0 - rho);
    }
    return out;
}

double difference_norm(const GridFunction& f, const SpaceParams& params, DifferenceNormConfig cfg) {
    return difference_norm_detailed(f, params, cfg).value;
}

double besov_coeff_norm(const CoefficientSet& lambda, double s, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("Besov coefficient norm needs r > 0");
    if (lambda.empty()) return 0.0;
    int m = lambda.meta.m;
    if (m < 1) throw std::invalid_argument("coefficient set lacks the spline order in its metadata");
    const double W = double((2 * m + 3) * (2 * m + 3));

    double scale = 0.0;
    auto term_base = [&](const QuarkletIndex& idx, double v) {
        return std::pow(double(idx.p + 1), W) * std::exp2(double(idx.j) * (s + 0.5 - 1.0 / r)) * std::abs(v);
    };
    for (const auto& [idx, v] : lambda.entries) scale = std::max(scale, term_base(idx, v));
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (const auto& [idx, v] : lambda.entries) sum += std::pow(term_base(idx, v) / scale, r);
    return scale * std::pow(sum, 1.0 / r);
}

EquivalenceReport equivalence_experiment(const std::vector<std::pair<std::string, GridFunction>>& family,
                                         const SpaceParams& params, const DualBasis& dual, int max_level,
                                         DifferenceNormConfig cfg, double spread_budget) {
    params.validate();
    EquivalenceReport report;
    report.budget = spread_budget;
    report.one_sided = params.u && *params.u > params.r;

    for (const auto& [name, f] : family) {
        EquivalenceRow row;
        row.name = name;
        CoefficientSet coeffs = analyze(f, dual, max_level);
        row.seq = report.one_sided ? seqnorm_morrey(params, coeffs) : seqnorm(params, coeffs);
        if (report.one_sided) {
            row.diff = std::numeric_limits<double>::quiet_NaN();
        } else {
            row.diff = difference_norm(f, params, cfg);
            if (row.seq > 0.0 && row.diff > 0.0) {
                row.ratio = row.seq / row.diff;
                row.scored = true;
            }
        }
        report.rows.push_back(std::move(row));
    }

    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& row : report.rows)
        if (row.scored) {
            lo = std::min(lo, row.ratio);
            hi = std::max(hi, row.ratio);
        }
    if (hi > 0.0) {
        report.ratio_min = lo;
        report.ratio_max = hi;
        report.spread = hi / lo;
        report.over_budget = report.spread > spread_budget;
    }
    return report;
}

}  // namespace quarklet
