#include "quarklet/filters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace quarklet {

double Mask::sum() const {
    double s = 0.0;
    for (double v : c) s += v;
    return s;
}

double DyadicCube::lower() const { return std::ldexp(double(k), -j); }
double DyadicCube::upper() const { return std::ldexp(double(k + 1), -j); }
double DyadicCube::length() const { return std::ldexp(1.0, -j); }

namespace {

long long binomial_ll(int n, int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Laurent polynomial with integer coefficients over a common denominator 2^den2.
struct DyadicPoly {
    int lo = 0;
    int den2 = 0;
    std::vector<long long> num;  // coefficient of z^{lo+i} is num[i] / 2^den2

    static DyadicPoly one() { return {0, 0, {1}}; }
};

DyadicPoly mul(const DyadicPoly& a, const DyadicPoly& b) {
    DyadicPoly r;
    r.lo = a.lo + b.lo;
    r.den2 = a.den2 + b.den2;
    r.num.assign(a.num.size() + b.num.size() - 1, 0);
    for (size_t i = 0; i < a.num.size(); ++i)
        for (size_t j = 0; j < b.num.size(); ++j) r.num[i + j] += a.num[i] * b.num[j];
    return r;
}

DyadicPoly add_scaled(const DyadicPoly& a, const DyadicPoly& b, long long factor) {
    // a + factor*b, aligning offsets and denominators
    DyadicPoly r;
    r.den2 = std::max(a.den2, b.den2);
    long long sa = 1ll << (r.den2 - a.den2), sb = 1ll << (r.den2 - b.den2);
    r.lo = std::min(a.lo, b.lo);
    int hi = std::max(a.lo + int(a.num.size()), b.lo + int(b.num.size()));
    r.num.assign(size_t(hi - r.lo), 0);
    for (size_t i = 0; i < a.num.size(); ++i) r.num[size_t(a.lo - r.lo) + i] += sa * a.num[i];
    for (size_t i = 0; i < b.num.size(); ++i) r.num[size_t(b.lo - r.lo) + i] += factor * sb * b.num[i];
    return r;
}

Mask to_mask(const DyadicPoly& p, int extra_pow2) {
    // mask entry = num * 2^{extra_pow2 - den2}
    Mask m;
    m.offset = p.lo;
    m.c.resize(p.num.size());
    for (size_t i = 0; i < p.num.size(); ++i) m.c[i] = std::ldexp(double(p.num[i]), extra_pow2 - p.den2);
    // trim exact zeros at the ends
    while (!m.c.empty() && m.c.back() == 0.0) m.c.pop_back();
    while (!m.c.empty() && m.c.front() == 0.0) {
        m.c.erase(m.c.begin());
        ++m.offset;
    }
    return m;
}

Mask alternating_flip(const Mask& h) {
    // g_n = (-1)^n h_{1-n}
    Mask g;
    g.offset = 1 - h.hi();
    g.c.resize(h.c.size());
    for (int n = g.offset; n <= 1 - h.lo(); ++n) {
        double v = h.at(1 - n);
        g.c[size_t(n - g.offset)] = (n % 2 == 0) ? v : -v;
    }
    return g;
}

constexpr std::pair<int, int> kSupportedPairs[] = {{1, 1}, {2, 2}, {2, 4}, {3, 3}, {3, 5}, {4, 4}};

}  // namespace

bool cdf_pair_supported(int m, int mtilde) {
    for (auto [pm, pmt] : kSupportedPairs)
        if (pm == m && pmt == mtilde) return true;
    return false;
}

FilterPair cdf_filters(int m, int mtilde) {
    if (m < 1 || mtilde < m || (m + mtilde) % 2 != 0)
        throw std::invalid_argument("CDF pair requires mtilde >= m >= 1 and m + mtilde even, got (" +
                                    std::to_string(m) + ", " + std::to_string(mtilde) + ")");
    if (!cdf_pair_supported(m, mtilde))
        throw std::invalid_argument("unsupported CDF pair (" + std::to_string(m) + ", " + std::to_string(mtilde) +
                                    "); supported: (1,1) (2,2) (2,4) (3,3) (3,5) (4,4)");

    FilterPair fp;
    fp.m = m;
    fp.mtilde = mtilde;

    const int mu = m / 2;
    const int kappa = m % 2;
    const int L = (m + mtilde) / 2;

    // primal refinement mask of phi = N_m(. + mu): 2^{1-m} C(m, k+mu)
    fp.a.offset = -mu;
    fp.a.c.resize(size_t(m) + 1);
    for (int k = 0; k <= m; ++k) fp.a.c[size_t(k)] = std::ldexp(double(binomial_ll(m, k)), 1 - m);

    // dual refinement mask via ((1+z)/2)^mtilde z^{-(mtilde-kappa)/2} P_L(y),
    // y = (2 - z - z^{-1})/4
    DyadicPoly spline_factor = DyadicPoly::one();
    const DyadicPoly half_one_plus_z{0, 1, {1, 1}};
    for (int i = 0; i < mtilde; ++i) spline_factor = mul(spline_factor, half_one_plus_z);

    const DyadicPoly y{-1, 2, {-1, 2, -1}};
    DyadicPoly pl{0, 0, {0}};
    DyadicPoly ypow = DyadicPoly::one();
    for (int n = 0; n < L; ++n) {
        pl = add_scaled(pl, ypow, binomial_ll(L - 1 + n, n));
        ypow = mul(ypow, y);
    }
    DyadicPoly dual = mul(spline_factor, pl);
    dual.lo -= (mtilde - kappa) / 2;
    fp.atilde = to_mask(dual, 1);  // symbol sums to 1, mask to 2

    fp.b = alternating_flip(fp.atilde);
    fp.btilde = alternating_flip(fp.a);
    return fp;
}

double discrete_biorthogonality_residual(const FilterPair& fp) {
    auto pr = [](const Mask& u, const Mask& v, double target) {
        double worst = 0.0;
        int lmin = (u.lo() - v.hi()) / 2 - 1, lmax = (u.hi() - v.lo()) / 2 + 1;
        for (int l = lmin; l <= lmax; ++l) {
            double s = 0.0;
            for (int k = u.lo(); k <= u.hi(); ++k) s += u.at(k) * v.at(k + 2 * l);
            worst = std::max(worst, std::abs(s - (l == 0 ? target : 0.0)));
        }
        return worst;
    };
    double r = pr(fp.a, fp.atilde, 2.0);
    r = std::max(r, pr(fp.b, fp.btilde, 2.0));
    r = std::max(r, pr(fp.a, fp.btilde, 0.0));
    r = std::max(r, pr(fp.b, fp.atilde, 0.0));
    return r;
}

double eval_quarklet(const FilterPair& fp, int p, double x) {
    double s = 0.0;
    const Quark q{fp.m, p};
    for (int k = fp.b.lo(); k <= fp.b.hi(); ++k) s += fp.b.at(k) * eval_quark(q, 2.0 * x - double(k));
    return s;
}

double eval_quarklet_scaled(const FilterPair& fp, const QuarkletIndex& idx, double x) {
    if (idx.j == -1) return eval_quark({fp.m, idx.p}, x - double(idx.k));
    if (idx.j < -1) throw std::invalid_argument("quarklet level must be >= -1");
    double scale = std::ldexp(1.0, idx.j);
    return std::sqrt(scale) * eval_quarklet(fp, idx.p, scale * x - double(idx.k));
}

Interval generator_support(int m) { return {-double(m / 2), double((m + 1) / 2)}; }

Interval quarklet_support(const FilterPair& fp) {
    Interval phi = generator_support(fp.m);
    return {(double(fp.b.lo()) + phi.lo) / 2.0, (double(fp.b.hi()) + phi.hi) / 2.0};
}

Interval support_of(const FilterPair& fp, const QuarkletIndex& idx) {
    Interval base = idx.j == -1 ? generator_support(fp.m) : quarklet_support(fp);
    if (idx.j == -1) return {base.lo + double(idx.k), base.hi + double(idx.k)};
    double scale = std::ldexp(1.0, -idx.j);
    return {(base.lo + double(idx.k)) * scale, (base.hi + double(idx.k)) * scale};
}

void write_filter_table(std::ostream& os, const FilterPair& fp) {
    auto dump = [&](const char* name, const Mask& mask) {
        for (int k = mask.lo(); k <= mask.hi(); ++k) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", mask.at(k));
            os << name << ' ' << fp.m << ' ' << fp.mtilde << ' ' << k << ' ' << buf << '\n';
        }
    };
    dump("a", fp.a);
    dump("atilde", fp.atilde);
    dump("b", fp.b);
    dump("btilde", fp.btilde);
}

FilterPair read_filter_table(std::istream& is) {
    FilterPair fp;
    std::map<std::string, std::map<int, double>> entries;
    std::string line;
    bool have_order = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string name;
        int m = 0, mt = 0, k = 0;
        double v = 0.0;
        if (!(ls >> name >> m >> mt >> k >> v)) throw std::runtime_error("malformed filter table line: " + line);
        if (!have_order) {
            fp.m = m;
            fp.mtilde = mt;
            have_order = true;
        } else if (fp.m != m || fp.mtilde != mt) {
            throw std::runtime_error("filter table mixes orders");
        }
        entries[name][k] = v;
    }
    if (!have_order) throw std::runtime_error("empty filter table");
    auto build = [&](const char* name) {
        auto it = entries.find(name);
        if (it == entries.end() || it->second.empty())
            throw std::runtime_error(std::string("filter table is missing mask ") + name);
        Mask mask;
        mask.offset = it->second.begin()->first;
        int hi = it->second.rbegin()->first;
        mask.c.assign(size_t(hi - mask.offset) + 1, 0.0);
        for (auto [k, v] : it->second) mask.c[size_t(k - mask.offset)] = v;
        return mask;
    };
    fp.a = build("a");
    fp.atilde = build("atilde");
    fp.b = build("b");
    fp.btilde = build("btilde");
    return fp;
}

}  // namespace quarklet
