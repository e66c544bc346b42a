#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "quarklet/seqspace.hpp"

using namespace quarklet;

namespace {

double single_norm_formula(const SpaceParams& sp, const QuarkletIndex& idx, double c) {
    double w = std::pow(double(idx.p + 1), weight_exponent(sp.s, sp.m));
    return w * std::exp2(double(idx.j) * sp.s) * std::exp2(double(idx.j) * 0.5) * std::abs(c) *
           std::exp2(-double(idx.j) / sp.r);
}

CoefficientSet random_set(std::mt19937_64& rng, int count, int max_p = 2, int max_level = 5) {
    CoefficientSet c;
    std::uniform_real_distribution<double> val(0.1, 1.0);
    while ((int)c.size() < count) {
        int j = int(rng() % (unsigned)(max_level + 2)) - 1;
        long long kspan = j <= 0 ? 4 : (4ll << j);
        long long k = (long long)(rng() % (unsigned long long)(2 * kspan)) - kspan;
        c.set({int(rng() % (unsigned)(max_p + 1)), j, k}, val(rng) * (rng() % 2 ? 1.0 : -1.0));
    }
    return c;
}

}  // namespace

TEST_CASE("single-coefficient closed form") {
    for (auto [s, r, q, m] : {std::tuple{0.7, 2.0, 2.0, 2}, {1.3, 1.5, 3.0, 3}, {-0.6, 2.5, 1.25, 2}}) {
        SpaceParams sp{s, r, q, m, std::nullopt};
        for (auto [p, j, k] : {std::tuple{0, 0, 0ll}, {1, 3, 5ll}, {2, -1, -2ll}, {0, 6, -17ll}}) {
            CoefficientSet c;
            c.set({p, j, k}, 0.8364);
            double expect = single_norm_formula(sp, {p, j, k}, 0.8364);
            CHECK(seqnorm(sp, c) == doctest::Approx(expect).epsilon(1e-14));
        }
    }
}

TEST_CASE("empty set, zero rejection, homogeneity") {
    SpaceParams sp{0.7, 2.0, 2.0, 2, std::nullopt};
    CHECK(seqnorm(sp, CoefficientSet{}) == 0.0);
    CHECK_THROWS_AS(seqnorm({0.0, 2.0, 2.0, 2, std::nullopt}, CoefficientSet{}), std::invalid_argument);

    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 40; ++trial) {
        CoefficientSet c = random_set(rng, 20);
        double alpha = std::uniform_real_distribution<double>(-5.0, 5.0)(rng);
        CoefficientSet scaled;
        for (const auto& [idx, v] : c.entries) scaled.set(idx, alpha * v);
        double lhs = seqnorm(sp, scaled), rhs = std::abs(alpha) * seqnorm(sp, c);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("overlapping cubes accumulate inside the inner sum") {
    // two coefficients, one nested inside the other: hand-computed integral
    SpaceParams sp{1.0, 2.0, 2.0, 2, std::nullopt};
    CoefficientSet c;
    c.set({0, 0, 0}, 1.0);  // weight 1 on [0,1)
    c.set({0, 1, 0}, 1.0);  // weight 2^{1.5} on [0,1/2)
    // inner(x)^2 = 1 + 8 on [0,1/2), 1 on [1/2,1);  integral = 9/2 + 1/2 = 5
    CHECK(seqnorm(sp, c) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
}

TEST_CASE("lattice monotonicity") {
    std::mt19937_64 rng(321);
    SpaceParams sp{0.9, 1.5, 2.5, 2, std::nullopt};
    for (int trial = 0; trial < 40; ++trial) {
        CoefficientSet c = random_set(rng, 15);
        CoefficientSet d = c;
        for (auto& [idx, v] : d.entries)
            if (rng() % 2) v *= 1.0 + std::uniform_real_distribution<double>(0.0, 2.0)(rng);
        CHECK(seqnorm(sp, c) <= seqnorm(sp, d) * (1.0 + 1e-13));
    }
}

TEST_CASE("quasi-triangle inequality with the expected constant") {
    std::mt19937_64 rng(888);
    for (auto [r, q] : {std::pair{2.0, 2.0}, {0.5, 2.0}, {1.5, 0.75}}) {
        SpaceParams sp{0.8, r, q, 2, std::nullopt};
        double constant = std::exp2(std::max(1.0 / std::min({1.0, r, q}) - 1.0, 0.0) + 1.0);
        for (int trial = 0; trial < 30; ++trial) {
            CoefficientSet a = random_set(rng, 12), b = random_set(rng, 12);
            CoefficientSet sum = a;
            for (const auto& [idx, v] : b.entries) sum.set(idx, sum.at(idx) + v);
            CHECK(seqnorm(sp, sum) <= constant * (seqnorm(sp, a) + seqnorm(sp, b)) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("p-weight law") {
    for (double s : {0.7, -0.7}) {
        SpaceParams sp{s, 2.0, 1.5, 2, std::nullopt};
        CoefficientSet c0, c3;
        c0.set({1, 2, 1}, 0.4);
        c3.set({3, 2, 1}, 0.4);
        double ratio = seqnorm(sp, c3) / seqnorm(sp, c0);
        double expect = std::pow(4.0 / 2.0, weight_exponent(s, 2));
        CHECK(ratio == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("Morrey variant: consistency at u = r and the one-cube supremum") {
    SpaceParams sp{0.7, 2.0, 2.0, 2, std::nullopt};
    std::mt19937_64 rng(246);
    for (int trial = 0; trial < 25; ++trial) {
        CoefficientSet c = random_set(rng, 18);
        SpaceParams spu = sp;
        spu.u = sp.r;
        CHECK(seqnorm_morrey(spu, c) == doctest::Approx(seqnorm(sp, c)).epsilon(1e-12));
    }

    SpaceParams spu = sp;
    spu.u = 4.0;
    CoefficientSet single;
    single.set({1, 3, 5}, 0.6);
    double w = std::pow(2.0, weight_exponent(sp.s, sp.m)) * std::exp2(3.0 * (sp.s + 0.5)) * 0.6;
    CHECK(seqnorm_morrey(spu, single) == doctest::Approx(w * std::pow(std::exp2(-3.0), 1.0 / 4.0)).epsilon(1e-13));
    CHECK(seqnorm_morrey(spu, CoefficientSet{}) == 0.0);

    SpaceParams bad = sp;
    bad.u = 1.0;  // u < r
    CHECK_THROWS_AS(seqnorm_morrey(bad, single), std::invalid_argument);
    SpaceParams neg = spu;
    neg.s = -0.5;
    CHECK_THROWS_AS(seqnorm_morrey(neg, single), std::invalid_argument);
}

TEST_CASE("Morrey supremum matches a brute-force interval oracle") {
    SpaceParams sp{1.1, 1.5, 2.0, 2, std::nullopt};
    sp.u = 3.0;
    std::mt19937_64 rng(135);
    CoefficientSet c = random_set(rng, 12, 1, 4);
    double norm = seqnorm_morrey(sp, c);

    // midpoint Riemann oracle at a level finer than any cube present (exact
    // for the piecewise-constant inner function)
    const int fine = 6;
    const double step = std::exp2(-double(fine));
    auto inner = [&](double x) {
        double sum = 0.0;
        for (const auto& [idx, v] : c.entries) {
            double lo = std::exp2(-double(idx.j)) * double(idx.k);
            double hi = std::exp2(-double(idx.j)) * double(idx.k + 1);
            if (x >= lo && x < hi)
                sum += std::pow(std::pow(double(idx.p + 1), weight_exponent(sp.s, sp.m)) *
                                    std::exp2(double(idx.j) * (sp.s + 0.5)) * std::abs(v),
                                sp.q);
        }
        return std::pow(sum, 1.0 / sp.q);
    };
    auto value_on = [&](double a, double b) {
        double integral = 0.0;
        for (double x = a + step / 2; x < b; x += step) integral += std::pow(inner(x), sp.r) * step;
        if (integral <= 0.0) return 0.0;
        return std::pow(b - a, 1.0 / *sp.u - 1.0 / sp.r) * std::pow(integral, 1.0 / sp.r);
    };

    double hull_lo = 1e9, hull_hi = -1e9;
    for (const auto& [idx, v] : c.entries) {
        hull_lo = std::min(hull_lo, std::exp2(-double(idx.j)) * double(idx.k));
        hull_hi = std::max(hull_hi, std::exp2(-double(idx.j)) * double(idx.k + 1));
    }
    double best = value_on(hull_lo, hull_hi);
    for (int l = -5; l <= fine; ++l) {
        double len = std::exp2(-double(l));
        for (double a = std::floor(hull_lo / len) * len; a < hull_hi; a += len)
            best = std::max(best, value_on(a, a + len));
    }
    CHECK(norm == doctest::Approx(best).epsilon(1e-9));
}

TEST_CASE("Calderon split reproduces the coefficients exactly") {
    std::mt19937_64 rng(9999);
    SpaceParams e0{0.8, 2.0, 2.0, 2, std::nullopt};
    SpaceParams e1{1.6, 3.0, 1.5, 2, std::nullopt};
    for (double theta : {0.25, 0.5, 0.75}) {
        for (int trial = 0; trial < 10; ++trial) {
            CoefficientSet c = random_set(rng, 30);
            CalderonSplit split = calderon_split(c, e0, e1, theta);
            CHECK(split.max_factorization_residual < 1e-12);
            CHECK(split.level_of.size() == c.size());  // every nonzero entry in exactly one K_l
            CHECK(std::isfinite(split.alpha_constant));
            CHECK(std::isfinite(split.beta_constant));
            CHECK(split.alpha_norm > 0.0);
            CHECK(split.beta_norm > 0.0);
        }
    }
}

TEST_CASE("Calderon split with swapped endpoint order") {
    // r0/q0 > r1/q1 exercises the internal endpoint swap
    std::mt19937_64 rng(1717);
    SpaceParams e0{1.0, 3.0, 1.2, 2, std::nullopt};  // r0/q0 = 2.5
    SpaceParams e1{0.6, 1.5, 2.0, 2, std::nullopt};  // r1/q1 = 0.75
    CoefficientSet c = random_set(rng, 25);
    CalderonSplit split = calderon_split(c, e0, e1, 0.4);
    CHECK(split.max_factorization_residual < 1e-12);
    // factorization orientation: |c| = alpha^{1-theta} beta^{theta}
    for (const auto& [idx, v] : c.entries) {
        double recon = std::pow(split.alpha.at(idx), 0.6) * std::pow(split.beta.at(idx), 0.4);
        CHECK(recon == doctest::Approx(std::abs(v)).epsilon(1e-12));
    }
}

TEST_CASE("Calderon split of a single coefficient") {
    SpaceParams e0{0.8, 2.0, 2.0, 2, std::nullopt};
    SpaceParams e1{1.6, 2.0, 2.0, 2, std::nullopt};
    CoefficientSet c;
    c.set({1, 2, 3}, 0.5);
    CalderonSplit split = calderon_split(c, e0, e1, 0.5);
    CHECK(split.alpha.size() == 1);
    CHECK(split.beta.size() == 1);
    double recon = std::pow(split.alpha.at({1, 2, 3}), 0.5) * std::pow(split.beta.at({1, 2, 3}), 0.5);
    CHECK(recon == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("Calderon constants agree for symmetric endpoints at theta = 1/2") {
    std::mt19937_64 rng(2468);
    SpaceParams e0{0.8, 2.0, 2.0, 2, std::nullopt};
    SpaceParams e1{1.6, 2.0, 2.0, 2, std::nullopt};
    for (int trial = 0; trial < 40; ++trial) {
        CoefficientSet c = random_set(rng, 25);
        CalderonSplit split = calderon_split(c, e0, e1, 0.5);
        double ratio = split.alpha_constant / split.beta_constant;
        CHECK(ratio < 2.0);
        CHECK(ratio > 0.5);
    }
}

TEST_CASE("single-coefficient Calderon constants match the closed form") {
    SpaceParams e0{0.8, 2.0, 2.0, 2, std::nullopt};
    SpaceParams e1{1.6, 3.0, 1.5, 2, std::nullopt};
    const double theta = 0.4;
    QuarkletIndex idx{1, 2, 3};
    const double value = 0.5;
    CoefficientSet c;
    c.set(idx, value);
    CalderonSplit split = calderon_split(c, e0, e1, theta);

    double s = (1 - theta) * e0.s + theta * e1.s;
    double r = 1.0 / ((1 - theta) / e0.r + theta / e1.r);
    double q = 1.0 / ((1 - theta) / e0.q + theta / e1.q);
    double W = weight_exponent(s, 2);
    double omega = std::pow(2.0, W) * std::exp2(idx.j * (s + 0.5));
    // level index: largest l with omega |c| > 2^l
    int lstar = int(std::floor(std::log2(omega * value)));
    if (std::exp2(double(lstar)) >= omega * value) --lstar;
    double gamma = 1.0 - r * e0.q / (q * e0.r), uexp = s + 0.5 - (e0.q / q) * (e0.s + 0.5);
    double delta = 1.0 - r * e1.q / (q * e1.r), vexp = s + 0.5 - (e1.q / q) * (e1.s + 0.5);
    CHECK(split.gamma == doctest::Approx(gamma).epsilon(1e-13));
    CHECK(split.delta == doctest::Approx(delta).epsilon(1e-13));
    double alpha = std::pow(std::pow(2.0, (1.0 - e0.q / q) * W) * value /
                                (std::exp2(lstar * gamma) * std::pow(std::exp2(-double(idx.j)), uexp)),
                            q / e0.q);
    double beta = std::pow(std::pow(2.0, (1.0 - e1.q / q) * W) * value /
                               (std::exp2(lstar * delta) * std::pow(std::exp2(-double(idx.j)), vexp)),
                           q / e1.q);
    double norm_c = omega * value * std::exp2(-double(idx.j) / r);
    double norm_a = std::pow(2.0, W) * std::exp2(idx.j * (e0.s + 0.5)) * alpha * std::exp2(-double(idx.j) / e0.r);
    double norm_b = std::pow(2.0, W) * std::exp2(idx.j * (e1.s + 0.5)) * beta * std::exp2(-double(idx.j) / e1.r);
    CHECK(split.alpha_constant == doctest::Approx(norm_a / std::pow(norm_c, r / e0.r)).epsilon(1e-10));
    CHECK(split.beta_constant == doctest::Approx(norm_b / std::pow(norm_c, r / e1.r)).epsilon(1e-10));
}

TEST_CASE("Calderon split rejects bad parameters") {
    SpaceParams e0{0.8, 2.0, 2.0, 2, std::nullopt};
    SpaceParams e1{-0.5, 2.0, 2.0, 2, std::nullopt};
    CoefficientSet c;
    c.set({0, 0, 0}, 1.0);
    CHECK_THROWS_AS(calderon_split(c, e0, e1, 0.5), std::invalid_argument);
    SpaceParams ok{1.0, 2.0, 2.0, 2, std::nullopt};
    CHECK_THROWS_AS(calderon_split(c, e0, ok, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(calderon_split(c, e0, ok, 1.0), std::invalid_argument);
}

TEST_CASE("duality pairing and the Hoelder bound") {
    SpaceParams sp{0.7, 2.0, 2.0, 2, std::nullopt};

    CoefficientSet g, c;
    g.set({0, 0, 0}, 1.0);
    c.set({0, 0, 5}, 1.0);
    CHECK(duality_pair(g, c, sp).pairing == 0.0);  // disjoint supports

    CoefficientSet ones_g, ones_c;
    for (int k = 0; k < 7; ++k) {
        ones_g.set({0, 1, k}, 1.0);
        ones_c.set({0, 1, k}, 1.0);
    }
    CHECK(duality_pair(ones_g, ones_c, sp).pairing == doctest::Approx(7.0));

    std::mt19937_64 rng(31415);
    for (auto [r, q] : {std::pair{2.0, 2.0}, {3.0, 1.5}}) {
        SpaceParams params{0.7, r, q, 2, std::nullopt};
        for (int trial = 0; trial < 200; ++trial) {
            CoefficientSet gg = random_set(rng, 14), cc = random_set(rng, 14);
            DualityResult res = duality_pair(gg, cc, params);
            CHECK(std::abs(res.pairing) <= res.bound * (1.0 + 1e-9));
        }
    }

    SpaceParams bad{0.7, 1.0, 2.0, 2, std::nullopt};
    CHECK_THROWS_AS(duality_pair(g, c, bad), std::invalid_argument);
    SpaceParams badq{0.7, 2.0, 0.8, 2, std::nullopt};
    CHECK_THROWS_AS(duality_pair(g, c, badq), std::invalid_argument);
}
