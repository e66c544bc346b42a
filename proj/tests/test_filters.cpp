#include <doctest.h>

#include <cmath>
#include <functional>
#include <stdexcept>
#include <sstream>

#include "quarklet/filters.hpp"

using namespace quarklet;

namespace {

// test-local composite Simpson, independent of the library quadrature
double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    double h = (b - a) / double(n);
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + double(i) * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace

TEST_CASE("Haar pair") {
    FilterPair fp = cdf_filters(1, 1);
    CHECK(fp.a.offset == 0);
    CHECK(fp.a.c == std::vector<double>{1.0, 1.0});
    CHECK(fp.atilde.c == std::vector<double>{1.0, 1.0});
    CHECK(fp.b.at(0) == 1.0);
    CHECK(fp.b.at(1) == -1.0);
    CHECK(discrete_biorthogonality_residual(fp) == 0.0);
}

TEST_CASE("CDF(2,2) masks match the Bezout oracle values") {
    FilterPair fp = cdf_filters(2, 2);
    CHECK(fp.a.offset == -1);
    CHECK(fp.a.c == std::vector<double>{0.5, 1.0, 0.5});
    // dual refinement mask: length 5, centrally symmetric
    CHECK(fp.atilde.offset == -2);
    CHECK(fp.atilde.c == std::vector<double>{-0.25, 0.5, 1.5, 0.5, -0.25});
    CHECK(fp.b.offset == -1);
    CHECK(fp.b.c == std::vector<double>{0.25, 0.5, -1.5, 0.5, 0.25});
    CHECK(discrete_biorthogonality_residual(fp) < 1e-14);
}

TEST_CASE("all supported pairs satisfy the discrete biorthogonality identities") {
    for (auto [m, mt] : {std::pair{1, 1}, {2, 2}, {2, 4}, {3, 3}, {3, 5}, {4, 4}}) {
        FilterPair fp = cdf_filters(m, mt);
        CHECK(discrete_biorthogonality_residual(fp) < 1e-14);
        CHECK(fp.a.sum() == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(fp.atilde.sum() == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(std::abs(fp.b.sum()) < 1e-15);      // at least one vanishing moment
        CHECK(std::abs(fp.btilde.sum()) < 1e-15);
        // discrete moments of b vanish to order mtilde
        for (int l = 0; l < mt; ++l) {
            double mom = 0.0;
            for (int k = fp.b.lo(); k <= fp.b.hi(); ++k) mom += fp.b.at(k) * std::pow(double(k), double(l));
            CHECK(std::abs(mom) < 1e-11);
        }
    }
}

TEST_CASE("unsupported pairs are rejected") {
    CHECK_THROWS_AS(cdf_filters(2, 3), std::invalid_argument);  // odd sum
    CHECK_THROWS_AS(cdf_filters(3, 2), std::invalid_argument);  // mtilde < m
    CHECK_THROWS_AS(cdf_filters(5, 5), std::invalid_argument);  // not in the table
}

TEST_CASE("quarklet degenerates to the CDF wavelet at p = 0") {
    FilterPair fp = cdf_filters(2, 2);
    // psi(x) = sum b_k phi(2x - k) evaluated directly
    for (double x : {-0.9, -0.3, 0.0, 0.24, 0.5, 1.1, 1.9}) {
        double direct = 0.0;
        for (int k = fp.b.lo(); k <= fp.b.hi(); ++k) direct += fp.b.at(k) * eval_symmetrized(2, 2.0 * x - double(k));
        CHECK(eval_quarklet(fp, 0, x) == doctest::Approx(direct).epsilon(1e-15));
    }
    // zero integral by the Simpson oracle
    Interval supp = quarklet_support(fp);
    double integral = simpson([&](double x) { return eval_quarklet(fp, 0, x); }, supp.lo, supp.hi, 4096);
    CHECK(std::abs(integral) < 1e-10);
}

TEST_CASE("scaled quarklets: dilation arithmetic and L2 normalization") {
    FilterPair fp = cdf_filters(2, 2);
    for (double x : {-0.7, 0.1, 0.33, 0.8}) {
        CHECK(eval_quarklet_scaled(fp, {0, 0, 0}, x) == doctest::Approx(eval_quarklet(fp, 0, x)).epsilon(1e-15));
        CHECK(eval_quarklet_scaled(fp, {0, 2, 3}, x) ==
              doctest::Approx(2.0 * eval_quarklet(fp, 0, 4.0 * x - 3.0)).epsilon(1e-14));
        CHECK(eval_quarklet_scaled(fp, {1, -1, 2}, x) == doctest::Approx(eval_quark({2, 1}, x - 2.0)).epsilon(1e-14));
    }
    // int |psi_{j,k}|^2 independent of (j,k)
    double ref = -1.0;
    for (auto [j, k] : {std::pair{0, 0}, {1, 3}, {2, -5}, {3, 1}}) {
        Interval supp = support_of(fp, {0, j, k});
        double n2 = simpson([&](double x) { return std::pow(eval_quarklet_scaled(fp, {0, j, k}, x), 2); }, supp.lo,
                            supp.hi, 1 << 14);
        if (ref < 0.0)
            ref = n2;
        else
            CHECK(n2 == doctest::Approx(ref).epsilon(1e-8));
    }
}

TEST_CASE("support hulls") {
    FilterPair fp = cdf_filters(2, 2);
    Interval gen = support_of(fp, {3, -1, 0});
    CHECK(gen.lo == -1.0);
    CHECK(gen.hi == 1.0);
    Interval base = support_of(fp, {0, 0, 0});
    Interval shifted = support_of(fp, {0, 3, 5});
    CHECK(shifted.lo == doctest::Approx((base.lo + 5.0) / 8.0));
    CHECK(shifted.hi == doctest::Approx((base.hi + 5.0) / 8.0));

    // disjoint supports once the shift distance exceeds the hull width
    Interval a = support_of(fp, {0, 2, 0});
    Interval b = support_of(fp, {0, 2, 13});
    CHECK(a.hi <= b.lo);

    // numerically detected support agrees within one grid cell
    for (auto [m, mt] : {std::pair{2, 2}, {3, 3}}) {
        FilterPair f2 = cdf_filters(m, mt);
        Interval supp = quarklet_support(f2);
        double step = 1.0 / 512.0;
        double lo_seen = supp.hi, hi_seen = supp.lo;
        for (double x = supp.lo - 1.0; x <= supp.hi + 1.0; x += step) {
            if (std::abs(eval_quarklet(f2, 0, x)) > 1e-12) {
                lo_seen = std::min(lo_seen, x);
                hi_seen = std::max(hi_seen, x);
            }
        }
        CHECK(lo_seen >= supp.lo - step);
        CHECK(hi_seen <= supp.hi + step);
        CHECK(lo_seen <= supp.lo + 3 * step);
        CHECK(hi_seen >= supp.hi - 3 * step);
    }
}

TEST_CASE("dyadic cube geometry") {
    DyadicCube q{3, 5};
    CHECK(q.lower() == 5.0 / 8.0);
    CHECK(q.upper() == 6.0 / 8.0);
    CHECK(q.length() == 1.0 / 8.0);
    DyadicCube gen{-1, -2};
    CHECK(gen.lower() == -4.0);
    CHECK(gen.length() == 2.0);
}

TEST_CASE("filter table round-trips through the text format") {
    FilterPair fp = cdf_filters(3, 5);
    std::ostringstream os;
    write_filter_table(os, fp);
    std::istringstream is(os.str());
    FilterPair back = read_filter_table(is);
    CHECK(back.m == 3);
    CHECK(back.mtilde == 5);
    CHECK(back.a.offset == fp.a.offset);
    CHECK(back.a.c == fp.a.c);
    CHECK(back.atilde.c == fp.atilde.c);
    CHECK(back.b.c == fp.b.c);
    CHECK(back.btilde.c == fp.btilde.c);
}
