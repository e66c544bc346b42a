#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quarklet {

/// Exact rational number for boundary-tight parameter comparisons.  Decimal
/// CLI inputs parse exactly ("0.7" -> 7/10), so every inequality of the
/// admissibility regions can be decided without floating-point ties.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n);  // NOLINT: implicit from integers is intended
    Rational(long long n, long long d);

    static Rational parse(const std::string& text);  // "3", "-0.25", "7/10"

    double to_double() const;

    Rational operator-() const;
    friend Rational operator+(const Rational&, const Rational&);
    friend Rational operator-(const Rational&, const Rational&);
    friend Rational operator*(const Rational&, const Rational&);
    friend Rational operator/(const Rational&, const Rational&);
    friend bool operator==(const Rational&, const Rational&);
    friend bool operator<(const Rational&, const Rational&);
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
};

/// sigma_r = max(0, 1/r - 1)
double sigma_r(double r);
/// sigma_{r,q} = max(0, 1/r - 1, 1/q - 1)
double sigma_rq(double r, double q);

enum class Region { I, II, III, IV, V, None };

std::string region_name(Region r);

/// One evaluated comparison of the audit trail.
struct InequalityCheck {
    std::string text;  // e.g. "s < m - 1"
    double lhs = 0.0;
    double rhs = 0.0;
    bool strict = true;
    bool ok = false;
};

struct RegionVerdict {
    Region region = Region::None;
    std::vector<InequalityCheck> checks;  // every inequality evaluated, all regions
    bool admissible() const { return region != Region::None; }
};

/// Classify (s, r, q, m) against the five admissibility regions of the
/// quarklet characterization (see README).  All inequalities are strict
/// except the region-V bound s <= -m+1, implemented verbatim; the verdict
/// lists every comparison with its operands.  Requires r, q > 0 and m >= 2.
RegionVerdict classify(double s, double r, double q, int m);

/// Same decision tree with exact rational arithmetic.
RegionVerdict classify(const Rational& s, const Rational& r, const Rational& q, int m);

struct MorreyVerdict {
    bool admissible = false;
    std::vector<InequalityCheck> checks;
};

/// Admissibility for the Morrey-variant characterization:
/// 0 < r <= u < inf, 0 < q < inf, m >= 2 and max(0, 1/r-1, 1/q-1) < s < m-1.
MorreyVerdict morrey_admissible(double s, double u, double r, double q, int m);
MorreyVerdict morrey_admissible(const Rational& s, const Rational& u, const Rational& r, const Rational& q, int m);

/// Whether the order-m cardinal B-spline lies in F^s_{r,q}: s < m - 1 + 1/r
/// (independent of q).
bool spline_membership(double s, double r, int m);

}  // namespace quarklet
