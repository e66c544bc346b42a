#include "quarklet/regions.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace quarklet {

namespace {

long long checked_ll(__int128 v) {
    if (v > __int128(INT64_MAX) || v < __int128(INT64_MIN))
        throw std::overflow_error("rational arithmetic overflow; use the floating-point path");
    return (long long)v;
}

}  // namespace

Rational::Rational(long long n) : num(n), den(1) {}

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

namespace {

// strict integer parse: the whole string must be consumed
long long parse_ll(const std::string& text) {
    try {
        size_t pos = 0;
        long long v = std::stoll(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("not an exact rational literal: '" + text + "'");
    }
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos)
        return Rational(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_ll(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (frac_len > 17) throw std::invalid_argument("decimal literal too long for exact rational: " + text);
    long long d = 1;
    for (size_t i = 0; i < frac_len; ++i) d = checked_ll(__int128(d) * 10);
    return Rational(parse_ll(digits), d);
}

double Rational::to_double() const { return double(num) / double(den); }

Rational Rational::operator-() const { return Rational(-num, den); }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_ll(__int128(a.num) * b.den + __int128(b.num) * a.den),
                    checked_ll(__int128(a.den) * b.den));
}
Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_ll(__int128(a.num) * b.num), checked_ll(__int128(a.den) * b.den));
}
Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::invalid_argument("rational division by zero");
    return Rational(checked_ll(__int128(a.num) * b.den), checked_ll(__int128(a.den) * b.num));
}
bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
bool operator<(const Rational& a, const Rational& b) { return __int128(a.num) * b.den < __int128(b.num) * a.den; }

double sigma_r(double r) { return std::max(0.0, 1.0 / r - 1.0); }
double sigma_rq(double r, double q) { return std::max({0.0, 1.0 / r - 1.0, 1.0 / q - 1.0}); }

std::string region_name(Region r) {
    switch (r) {
        case Region::I: return "I";
        case Region::II: return "II";
        case Region::III: return "III";
        case Region::IV: return "IV";
        case Region::V: return "V";
        default: return "none";
    }
}

namespace {

template <class T>
T tmin(const T& a, const T& b) {
    return b < a ? b : a;
}
template <class T>
T tmax(const T& a, const T& b) {
    return a < b ? b : a;
}

double as_double(double v) { return v; }
double as_double(const Rational& v) { return v.to_double(); }

template <class T>
struct Recorder {
    std::vector<InequalityCheck>* out;
    bool all_ok = true;

    bool lt(const T& lhs, const T& rhs, const std::string& text) {
        bool ok = lhs < rhs;
        out->push_back({text, as_double(lhs), as_double(rhs), true, ok});
        all_ok = all_ok && ok;
        return ok;
    }
    bool le(const T& lhs, const T& rhs, const std::string& text) {
        bool ok = !(rhs < lhs);
        out->push_back({text, as_double(lhs), as_double(rhs), false, ok});
        all_ok = all_ok && ok;
        return ok;
    }
};

template <class T>
RegionVerdict classify_impl(const T& s, const T& r, const T& q, int m) {
    if (!(T(0) < r) || !(T(0) < q)) throw std::invalid_argument("classification needs r, q in (0, inf)");
    if (m < 2) throw std::invalid_argument("the quarklet characterization needs m >= 2");

    RegionVerdict verdict;
    const T one(1), zero(0), tm((long long)m);
    const T inv_r = one / r, inv_q = one / q;

    int matches = 0;
    auto conclude = [&](Region reg, bool ok) {
        if (!ok) return;
        ++matches;
        if (verdict.region == Region::None) verdict.region = reg;
    };

    {  // (I)  max(0, 1/r-1, 1/q-1) < s < m-1
        Recorder<T> rec{&verdict.checks};
        rec.lt(tmax(zero, tmax(inv_r - one, inv_q - one)), s, "(I) max(0, 1/r-1, 1/q-1) < s");
        rec.lt(s, tm - one, "(I) s < m-1");
        conclude(Region::I, rec.all_ok);
    }
    {  // (II)  s >= m-1, r >= 1, max(0, 1/q-1) < s < min(m-1+1/r, m-1+1/q),
       //       1/q < min(m, s+1 - m r (s+1-m))
        Recorder<T> rec{&verdict.checks};
        rec.le(tm - one, s, "(II) s >= m-1");
        rec.le(one, r, "(II) r >= 1");
        rec.lt(tmax(zero, inv_q - one), s, "(II) max(0, 1/q-1) < s");
        rec.lt(s, tmin(tm - one + inv_r, tm - one + inv_q), "(II) s < min(m-1+1/r, m-1+1/q)");
        rec.lt(inv_q, tmin(tm, s + one - tm * r * (s + one - tm)), "(II) 1/q < min(m, s+1-mr(s+1-m))");
        conclude(Region::II, rec.all_ok);
    }
    {  // (III)  s >= m-1, 1/m < r < 1, max(1/r-1, 1/q-1) < s < min(m-1+r/q, m),
       //        1/q < min(m, -sm + m^2 + s/r - m/r + 1/r)
        Recorder<T> rec{&verdict.checks};
        rec.le(tm - one, s, "(III) s >= m-1");
        rec.lt(one / tm, r, "(III) 1/m < r");
        rec.lt(r, one, "(III) r < 1");
        rec.lt(tmax(inv_r - one, inv_q - one), s, "(III) max(1/r-1, 1/q-1) < s");
        rec.lt(s, tmin(tm - one + r / q, tm), "(III) s < min(m-1+r/q, m)");
        rec.lt(inv_q, tmin(tm, -s * tm + tm * tm + s / r - tm / r + inv_r),
               "(III) 1/q < min(m, -sm+m^2+s/r-m/r+1/r)");
        conclude(Region::III, rec.all_ok);
    }
    {  // (IV)  1 < r < inf, 1 < q < inf, -m+1 < s < 0
        Recorder<T> rec{&verdict.checks};
        rec.lt(one, r, "(IV) 1 < r");
        rec.lt(one, q, "(IV) 1 < q");
        rec.lt(one - tm, s, "(IV) -m+1 < s");
        rec.lt(s, zero, "(IV) s < 0");
        conclude(Region::IV, rec.all_ok);
    }
    {  // (V)  1 < r < inf, 1 < q < inf, max(-m+1/r, -m+1/q) < s <= -m+1,
       //      1/q > s + m(1-1/r)(-s+1-m)
        Recorder<T> rec{&verdict.checks};
        rec.lt(one, r, "(V) 1 < r");
        rec.lt(one, q, "(V) 1 < q");
        rec.lt(tmax(inv_r - tm, inv_q - tm), s, "(V) max(-m+1/r, -m+1/q) < s");
        rec.le(s, one - tm, "(V) s <= -m+1");
        rec.lt(s + tm * (one - inv_r) * (-s + one - tm), inv_q, "(V) 1/q > s + m(1-1/r)(-s+1-m)");
        conclude(Region::V, rec.all_ok);
    }

    if (matches > 1) throw std::logic_error("parameter tuple matched two regions; the case split is broken");
    return verdict;
}

template <class T>
MorreyVerdict morrey_impl(const T& s, const T& u, const T& r, const T& q, int m) {
    if (!(T(0) < r) || !(T(0) < q)) throw std::invalid_argument("classification needs r, q in (0, inf)");
    if (r > u) throw std::invalid_argument("Morrey admissibility needs r <= u");
    if (m < 2) throw std::invalid_argument("the quarklet characterization needs m >= 2");
    MorreyVerdict verdict;
    Recorder<T> rec{&verdict.checks};
    const T one(1), zero(0), tm((long long)m);
    rec.le(r, u, "r <= u");
    rec.lt(tmax(zero, tmax(one / r - one, one / q - one)), s, "max(0, 1/r-1, 1/q-1) < s");
    rec.lt(s, tm - one, "s < m-1");
    verdict.admissible = rec.all_ok;
    return verdict;
}

}  // namespace

RegionVerdict classify(double s, double r, double q, int m) { return classify_impl<double>(s, r, q, m); }

RegionVerdict classify(const Rational& s, const Rational& r, const Rational& q, int m) {
    return classify_impl<Rational>(s, r, q, m);
}

MorreyVerdict morrey_admissible(double s, double u, double r, double q, int m) {
    return morrey_impl<double>(s, u, r, q, m);
}

MorreyVerdict morrey_admissible(const Rational& s, const Rational& u, const Rational& r, const Rational& q, int m) {
    return morrey_impl<Rational>(s, u, r, q, m);
}

bool spline_membership(double s, double r, int m) {
    if (!(r > 0.0)) throw std::invalid_argument("spline membership needs r > 0");
    if (m < 1) throw std::invalid_argument("spline membership needs m >= 1");
    return s < double(m) - 1.0 + 1.0 / r;
}

}  // namespace quarklet
