#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "quarklet/transform.hpp"

using namespace quarklet;

TEST_CASE("analysis of a single primal wavelet recovers the unit coefficient") {
    FilterPair fp = cdf_filters(2, 2);
    DualBasis dual(fp, 12);
    Window w{-2, 2};
    GridFunction f = GridFunction::sampled([&](double x) { return eval_quarklet_scaled(fp, {0, 5, 0}, x); }, w, 11);
    CoefficientSet c = analyze(f, dual, 5);
    CHECK(std::abs(c.at({0, 5, 0}) - 1.0) < 5e-4);
    double worst_other = 0.0;
    for (const auto& [idx, v] : c.entries)
        if (!(idx.j == 5 && idx.k == 0)) worst_other = std::max(worst_other, std::abs(v));
    CHECK(worst_other < 5e-4);
}

TEST_CASE("analysis of a shifted generator lands at level -1") {
    FilterPair fp = cdf_filters(2, 2);
    DualBasis dual(fp, 12);
    Window w{-2, 6};
    GridFunction f = GridFunction::sampled([&](double x) { return eval_symmetrized(2, x - 2.0); }, w, 10);
    CoefficientSet c = analyze(f, dual, 3);
    CHECK(std::abs(c.at({0, -1, 2}) - 1.0) < 5e-4);
    for (const auto& [idx, v] : c.entries)
        if (idx.j >= 0) CHECK(std::abs(v) < 5e-4);
}

TEST_CASE("analysis of the zero function is empty") {
    FilterPair fp = cdf_filters(2, 2);
    DualBasis dual(fp, 8);
    CoefficientSet c = analyze(GridFunction::zero({-2, 2}, 9), dual, 3);
    CHECK(c.empty());
}

TEST_CASE("analysis requires quadrature headroom") {
    FilterPair fp = cdf_filters(2, 2);
    DualBasis dual(fp, 8);
    GridFunction f = GridFunction::zero({-2, 2}, 8);
    CHECK_THROWS_AS(analyze(f, dual, 5), std::invalid_argument);
}

TEST_CASE("synthesis of a unit coefficient samples the quarklet") {
    FilterPair fp = cdf_filters(3, 3);
    CoefficientSet c;
    c.set({0, 2, 3}, 1.0);
    GridFunction g = synthesize(c, fp, {-2, 2}, 8);
    for (long long i = 0; i < g.node_count(); i += 7) {
        double x = g.node_x(i);
        CHECK(g.samples()[size_t(i)] == doctest::Approx(eval_quarklet_scaled(fp, {0, 2, 3}, x)).epsilon(1e-13));
    }
}

TEST_CASE("synthesis is linear") {
    FilterPair fp = cdf_filters(2, 2);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    CoefficientSet c1, c2, mix;
    for (int i = 0; i < 12; ++i) {
        QuarkletIndex idx{i % 3, i % 4 - 1, i - 6};
        double v1 = val(rng), v2 = val(rng);
        c1.set(idx, v1);
        c2.set(idx, v2);
        mix.set(idx, 1.5 * v1 - 0.75 * v2);
    }
    GridFunction g1 = synthesize(c1, fp, {-6, 6}, 7);
    GridFunction g2 = synthesize(c2, fp, {-6, 6}, 7);
    GridFunction gm = synthesize(mix, fp, {-6, 6}, 7);
    for (long long i = 0; i < gm.node_count(); ++i) {
        double expect = 1.5 * g1.samples()[size_t(i)] - 0.75 * g2.samples()[size_t(i)];
        CHECK(std::abs(gm.samples()[size_t(i)] - expect) < 1e-12);
    }
}

TEST_CASE("quarkonial lift keeps wavelet coefficients and rejects enriched input") {
    CoefficientSet lambda;
    lambda.set({0, 2, 1}, 0.5);
    lambda.set({0, -1, 0}, -1.25);
    CoefficientSet lifted = quarkonial_lift(lambda);
    CHECK(lifted.entries == lambda.entries);

    CoefficientSet bad;
    bad.set({1, 0, 0}, 1.0);
    CHECK_THROWS_AS(quarkonial_lift(bad), std::invalid_argument);
    CHECK(quarkonial_lift(CoefficientSet{}).empty());
}

TEST_CASE("roundtrip through analysis and synthesis") {
    FilterPair fp = cdf_filters(2, 2);
    DualBasis dual(fp, 12);

    SUBCASE("zero function") {
        GridFunction f = GridFunction::zero({-4, 4}, 10);
        CHECK(roundtrip_error(f, fp, dual, 4) == 0.0);
    }

    SUBCASE("function in the span of levels <= max_level") {
        std::mt19937_64 rng(77);
        std::uniform_real_distribution<double> val(-1.0, 1.0);
        CoefficientSet truth;
        truth.set({0, -1, 0}, val(rng));
        truth.set({0, 0, 1}, val(rng));
        truth.set({0, 1, -2}, val(rng));
        truth.set({0, 3, 4}, val(rng));
        GridFunction f = synthesize(truth, fp, {-8, 8}, 10);
        CHECK(roundtrip_error(f, fp, dual, 4) < 1e-3);
    }
}

TEST_CASE("coefficient recovery on a random set") {
    FilterPair fp = cdf_filters(2, 2);
    DualBasis dual(fp, 12);
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> val(0.25, 1.0);
    CoefficientSet truth;
    for (int i = 0; i < 20; ++i) {
        int j = int(rng() % 5) - 1;
        long long kspan = j <= 0 ? 4 : (4ll << j);
        long long k = (long long)(rng() % (unsigned long long)(2 * kspan)) - kspan;
        truth.set({0, j, k}, val(rng) * (rng() % 2 ? 1.0 : -1.0));
    }
    GridFunction f = synthesize(truth, fp, {-8, 8}, 10);
    CoefficientSet rec = analyze(f, dual, 3);
    for (const auto& [idx, v] : truth.entries) {
        if (idx.j > 3) continue;
        CHECK(std::abs(rec.at(idx) - v) < 5e-4);
    }
}

TEST_CASE("coefficient decay of a smooth bump follows the vanishing-moment rate") {
    FilterPair fp = cdf_filters(2, 2);
    DualBasis dual(fp, 12);
    GridFunction f = GridFunction::sampled([](double x) { return std::exp(-x * x); }, {-4, 4}, 12);
    CoefficientSet c = analyze(f, dual, 7);
    // max_k |lambda_{j,k}| ~ 2^{-j(m + 1/2)} with m = 2 dual vanishing moments
    double cmin = 1e300, cmax = 0.0;
    for (int j = 2; j <= 7; ++j) {
        double peak = 0.0;
        for (const auto& [idx, v] : c.entries)
            if (idx.j == j) peak = std::max(peak, std::abs(v));
        REQUIRE(peak > 0.0);
        double normalized = peak * std::exp2(double(j) * 2.5);
        cmin = std::min(cmin, normalized);
        cmax = std::max(cmax, normalized);
    }
    CHECK(cmax / cmin < 4.0);
}

TEST_CASE("off-grid spline coefficients decay at the smoothness rate") {
    // N_3(. - 1/3) is W^{2,inf} with non-dyadic knots: peak coefficients fall
    // like 2^{-j(2 + 1/2)} once the dual has at least two vanishing moments
    FilterPair fp = cdf_filters(3, 3);
    DualBasis dual(fp, 12);
    GridFunction f = GridFunction::sampled([](double x) { return eval_symmetrized(3, x - 1.0 / 3.0); }, {-4, 4}, 12);
    CoefficientSet c = analyze(f, dual, 7);
    std::map<int, double> peak;
    for (const auto& [idx, v] : c.entries) peak[idx.j] = std::max(peak[idx.j], std::abs(v));
    for (int j = 2; j < 7; ++j) {
        double slope = std::log2(peak[j] / peak[j + 1]);
        CHECK(slope > 2.3);
        CHECK(slope < 2.7);
    }
}

TEST_CASE("translation covariance under integer shifts") {
    FilterPair fp = cdf_filters(2, 2);
    DualBasis dual(fp, 10);
    auto bump = [](double x) { return std::exp(-4.0 * x * x); };
    GridFunction f = GridFunction::sampled(bump, {-6, 6}, 9);
    GridFunction fs = GridFunction::sampled([&](double x) { return bump(x - 1.0); }, {-6, 6}, 9);
    CoefficientSet c = analyze(f, dual, 3);
    CoefficientSet cs = analyze(fs, dual, 3);
    for (const auto& [idx, v] : c.entries) {
        if (std::abs(v) < 1e-12) continue;
        Interval supp = support_of(fp, idx);
        if (supp.lo < -4.0 || supp.hi > 4.0) continue;  // skip window-boundary coefficients
        QuarkletIndex shifted{idx.p, idx.j, idx.k + (idx.j == -1 ? 1 : (1ll << idx.j))};
        CHECK(cs.at(shifted) == doctest::Approx(v).epsilon(1e-9));
    }
}

TEST_CASE("coefficient CSV round-trips bit-exactly") {
    CoefficientSet c;
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    for (int i = 0; i < 40; ++i) c.set({int(rng() % 3), int(rng() % 6) - 1, (long long)(rng() % 64) - 32}, val(rng));
    std::ostringstream os;
    write_coefficients_csv(os, c);
    std::istringstream is(os.str());
    CoefficientSet back = read_coefficients_csv(is);
    REQUIRE(back.size() == c.size());
    for (const auto& [idx, v] : c.entries) CHECK(back.at(idx) == v);

    std::istringstream bad("p,j,k\n1,2,3\n");
    CHECK_THROWS_AS(read_coefficients_csv(bad), std::runtime_error);
}
