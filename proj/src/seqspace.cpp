#include "quarklet/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace quarklet {

void SpaceParams::validate() const {
    if (!(r > 0.0) || !(q > 0.0)) throw std::invalid_argument("sequence space needs r, q in (0, inf)");
    if (m < 1) throw std::invalid_argument("sequence space needs spline order m >= 1");
    if (u && !(*u >= r)) throw std::invalid_argument("Morrey parameter needs r <= u");
}

double weight_exponent(double s, int m) {
    double w = double((2 * m + 3) * (2 * m + 3));
    return s > 0.0 ? w : (s < 0.0 ? -w : 0.0);
}

namespace {

// Piecewise-constant inner profile sum_{p,j,k} (w_{p,j} |c|)^q chi_{j,k} on
// the finest dyadic partition spanned by the supports.  Positions are cell
// indices at fine_level; values are normalized by scale^q so the running sums
// stay O(#entries).
struct Profile {
    int fine_level = 0;
    double scale = 1.0;                 // max_entry w_{p,j} |c_{p,j,k}|
    std::vector<long long> pos;         // breakpoints, size n+1 (n segments)
    std::vector<double> val;            // inner sum on [pos_i, pos_{i+1})
    std::vector<double> prefix_r;       // prefix integrals of (scale-free G)^r
};

double entry_weight(const SpaceParams& sp, const QuarkletIndex& idx) {
    double w = std::pow(double(idx.p + 1), weight_exponent(sp.s, sp.m));
    return w * std::exp2(double(idx.j) * (sp.s + 0.5));
}

Profile build_profile(const SpaceParams& sp, const CoefficientSet& c, double exponent_r) {
    Profile pr;
    if (c.empty()) return pr;
    int fine = -1;
    for (const auto& [idx, v] : c.entries) fine = std::max(fine, idx.j);
    pr.fine_level = fine;

    pr.scale = 0.0;
    for (const auto& [idx, v] : c.entries) pr.scale = std::max(pr.scale, entry_weight(sp, idx) * std::abs(v));
    if (pr.scale == 0.0) pr.scale = 1.0;

    struct Event {
        long long pos;
        bool open;
        double w;
    };
    std::vector<Event> events;
    events.reserve(2 * c.size());
    for (const auto& [idx, v] : c.entries) {
        double w = std::pow(entry_weight(sp, idx) * std::abs(v) / pr.scale, sp.q);
        long long cells = 1ll << (fine - idx.j);
        events.push_back({idx.k * cells, true, w});
        events.push_back({(idx.k + 1) * cells, false, w});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.pos < b.pos; });

    // The weights span many orders of magnitude (the (p+1)^{(2m+3)^2} factor),
    // so a running sum would absorb small contributions.  Re-sum the active
    // multiset per segment, smallest first.
    std::multiset<double> active;
    size_t i = 0;
    while (i < events.size()) {
        long long p = events[i].pos;
        while (i < events.size() && events[i].pos == p) {
            if (events[i].open)
                active.insert(events[i].w);
            else
                active.erase(active.find(events[i].w));
            ++i;
        }
        double sum = 0.0;
        for (double w : active) sum += w;
        pr.pos.push_back(p);
        pr.val.push_back(sum);
    }
    pr.val.pop_back();  // last breakpoint closes the support

    pr.prefix_r.assign(pr.val.size() + 1, 0.0);
    for (size_t k = 0; k < pr.val.size(); ++k) {
        double cell = std::ldexp(double(pr.pos[k + 1] - pr.pos[k]), -pr.fine_level);
        pr.prefix_r[k + 1] = pr.prefix_r[k] + cell * std::pow(pr.val[k], exponent_r / sp.q);
    }
    return pr;
}

// integral of (scale-free G)^r over [a, b] in fine-cell units
double integral_r(const Profile& pr, const SpaceParams& sp, double exponent_r, long long a, long long b) {
    if (pr.pos.empty()) return 0.0;
    a = std::max(a, pr.pos.front());
    b = std::min(b, pr.pos.back());
    if (b <= a) return 0.0;
    auto seg_of = [&](long long x) {
        return size_t(std::upper_bound(pr.pos.begin(), pr.pos.end(), x) - pr.pos.begin()) - 1;
    };
    auto prefix_at = [&](long long x) {
        if (x <= pr.pos.front()) return 0.0;
        if (x >= pr.pos.back()) return pr.prefix_r.back();
        size_t s = seg_of(x);
        double inside = std::ldexp(double(x - pr.pos[s]), -pr.fine_level);
        return pr.prefix_r[s] + inside * std::pow(pr.val[s], exponent_r / sp.q);
    };
    return prefix_at(b) - prefix_at(a);
}

}  // namespace

double seqnorm(const SpaceParams& params, const CoefficientSet& c) {
    params.validate();
    if (params.s == 0.0) throw std::invalid_argument("sequence quasi-norm requires s != 0");
    if (c.empty()) return 0.0;
    Profile pr = build_profile(params, c, params.r);
    return pr.scale * std::pow(pr.prefix_r.back(), 1.0 / params.r);
}

double seqnorm_morrey(const SpaceParams& params, const CoefficientSet& c) {
    params.validate();
    if (!params.u) throw std::invalid_argument("Morrey sequence norm needs the parameter u");
    if (!(params.s > 0.0)) throw std::invalid_argument("Morrey sequence norm requires s > 0");
    if (c.empty()) return 0.0;
    const double u = *params.u, r = params.r;

    Profile pr = build_profile(params, c, r);
    const long long front = pr.pos.front(), back = pr.pos.back();
    const double morrey_exp = 1.0 / u - 1.0 / r;

    auto candidate = [&](long long a, long long b) {
        double len = std::ldexp(double(b - a), -pr.fine_level);
        double integral = integral_r(pr, params, r, a, b);
        if (integral <= 0.0) return 0.0;
        return std::pow(len, morrey_exp) * std::pow(integral, 1.0 / r);
    };

    // hull plus every dyadic interval from roughly hull-sized cells down to
    // the finest partition
    double best = candidate(front, back);
    long long width = back - front;
    for (long long cells = 1;; cells <<= 1) {
        long long t0 = front >= 0 ? front / cells : -((-front + cells - 1) / cells);
        long long t1 = (back - 1) >= 0 ? (back - 1) / cells : -((-(back - 1) + cells - 1) / cells);
        for (long long t = t0; t <= t1; ++t) best = std::max(best, candidate(t * cells, (t + 1) * cells));
        if (cells >= 2 * width) break;
    }
    return pr.scale * best;
}

CalderonSplit calderon_split(const CoefficientSet& c, const SpaceParams& endpoint0, const SpaceParams& endpoint1,
                             double theta) {
    endpoint0.validate();
    endpoint1.validate();
    if (!(endpoint0.s > 0.0) || !(endpoint1.s > 0.0))
        throw std::invalid_argument("Calderon split requires endpoint smoothness s0, s1 > 0");
    if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("Calderon split requires theta in (0,1)");
    if (endpoint0.m != endpoint1.m) throw std::invalid_argument("Calderon endpoints must share the spline order m");

    SpaceParams e0 = endpoint0, e1 = endpoint1;
    double th = theta;
    bool swapped = false;
    if (e0.r / e0.q > e1.r / e1.q) {  // construction assumes r0/q0 <= r1/q1
        std::swap(e0, e1);
        th = 1.0 - th;
        swapped = true;
    }

    CalderonSplit out;
    out.theta = theta;
    out.endpoint0 = endpoint0;
    out.endpoint1 = endpoint1;
    SpaceParams tgt;
    tgt.m = e0.m;
    tgt.s = (1.0 - th) * e0.s + th * e1.s;
    tgt.r = 1.0 / ((1.0 - th) / e0.r + th / e1.r);
    tgt.q = 1.0 / ((1.0 - th) / e0.q + th / e1.q);
    out.target = tgt;

    const double W = weight_exponent(tgt.s, tgt.m);
    double gamma = 1.0 - tgt.r * e0.q / (tgt.q * e0.r);
    double delta = 1.0 - tgt.r * e1.q / (tgt.q * e1.r);
    double uexp = tgt.s + 0.5 - (e0.q / tgt.q) * (e0.s + 0.5);
    double vexp = tgt.s + 0.5 - (e1.q / tgt.q) * (e1.s + 0.5);
    out.gamma = swapped ? delta : gamma;
    out.delta = swapped ? gamma : delta;
    out.u = swapped ? vexp : uexp;
    out.v = swapped ? uexp : vexp;

    CoefficientSet first, second;  // sequences for e0 and e1 in construction order
    first.meta = second.meta = c.meta;

    if (!c.empty()) {
        Profile pr = build_profile(tgt, c, tgt.r);
        // measure (in fine cells) of {G > 2^l} inside [a, b)
        auto level_measure = [&](long long a, long long b, int l) {
            double thr = std::exp2(double(l)) / pr.scale;
            double thr_q = std::pow(thr, tgt.q);
            long long meas = 0;
            size_t s = size_t(std::upper_bound(pr.pos.begin(), pr.pos.end(), a) - pr.pos.begin()) - 1;
            for (; s < pr.val.size() && pr.pos[s] < b; ++s) {
                if (pr.val[s] > thr_q) meas += std::min(b, pr.pos[s + 1]) - std::max(a, pr.pos[s]);
            }
            return meas;
        };
        double gmax = 0.0;
        for (double v : pr.val) gmax = std::max(gmax, v);
        const int l_hi = int(std::ceil(std::log2(pr.scale * std::pow(gmax, 1.0 / tgt.q)))) + 1;

        for (const auto& [idx, value] : c.entries) {
            long long cells = 1ll << (pr.fine_level - idx.j);
            long long a = idx.k * cells, b = (idx.k + 1) * cells;
            double own = entry_weight(tgt, idx) * std::abs(value);
            int lo = int(std::floor(std::log2(own))) - 2;  // G >= own on the cube, so condition holds here
            if (2 * level_measure(a, b, lo) < cells)
                throw std::runtime_error("Calderon split internal inconsistency: nonzero entry outside all K_l");
            int hi = std::max(l_hi, lo + 1);  // condition fails at hi
            while (hi - lo > 1) {
                int mid = lo + (hi - lo) / 2;
                if (2 * level_measure(a, b, mid) >= cells)
                    lo = mid;
                else
                    hi = mid;
            }
            const int lstar = lo;
            out.level_of[idx] = lstar;

            double cube_len = DyadicCube{idx.j, idx.k}.length();
            double A = std::exp2(double(lstar) * gamma) * std::pow(cube_len, uexp);
            double B = std::exp2(double(lstar) * delta) * std::pow(cube_len, vexp);
            double pw0 = std::pow(double(idx.p + 1), (1.0 - e0.q / tgt.q) * W);
            double pw1 = std::pow(double(idx.p + 1), (1.0 - e1.q / tgt.q) * W);
            double alpha = std::pow(pw0 * std::abs(value) / A, tgt.q / e0.q);
            double beta = std::pow(pw1 * std::abs(value) / B, tgt.q / e1.q);
            first.set(idx, alpha);
            second.set(idx, beta);

            double recon = std::pow(alpha, 1.0 - th) * std::pow(beta, th);
            double resid = std::abs(recon - std::abs(value)) / std::abs(value);
            out.max_factorization_residual = std::max(out.max_factorization_residual, resid);
        }
    }

    out.alpha = swapped ? second : first;
    out.beta = swapped ? first : second;
    out.target_norm = seqnorm(tgt, c);
    out.alpha_norm = seqnorm(endpoint0, out.alpha);
    out.beta_norm = seqnorm(endpoint1, out.beta);
    if (out.target_norm > 0.0) {
        out.alpha_constant = out.alpha_norm / std::pow(out.target_norm, tgt.r / endpoint0.r);
        out.beta_constant = out.beta_norm / std::pow(out.target_norm, tgt.r / endpoint1.r);
    }
    return out;
}

DualityResult duality_pair(const CoefficientSet& g, const CoefficientSet& c, const SpaceParams& params) {
    params.validate();
    if (!(params.r > 1.0) || !(params.q > 1.0))
        throw std::invalid_argument("duality pairing lives in the regime 1 < r, q < inf");
    if (params.s == 0.0) throw std::invalid_argument("duality pairing requires s != 0");

    DualityResult out;
    for (const auto& [idx, cv] : c.entries) {
        auto it = g.entries.find(idx);
        if (it != g.entries.end()) out.pairing += it->second * cv;
    }
    SpaceParams dual{-params.s, params.r / (params.r - 1.0), params.q / (params.q - 1.0), params.m, std::nullopt};
    out.bound = seqnorm(dual, g) * seqnorm(params, c);
    return out;
}

}  // namespace quarklet
