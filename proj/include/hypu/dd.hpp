#pragma once
#include <cmath>
#include <cstdlib>

// Double-double ("compensated pair") arithmetic: an unevaluated sum of two
// binary64 values carrying ~31 significant digits. Built entirely from
// error-free transformations (two_sum / fma-based two_prod); this is still
// binary64 arithmetic, not arbitrary precision. Used where series data or
// least-squares fits would otherwise lose digits to cancellation.

namespace hypu {

struct dd {
    double hi = 0.0;
    double lo = 0.0;

    constexpr dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

namespace detail {

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// requires |a| >= |b| or a == 0
inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace detail

inline dd operator+(dd a, dd b) {
    dd s = detail::two_sum(a.hi, b.hi);
    dd t = detail::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = detail::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
    dd p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - dd(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - dd(q2) * b;
    double q3 = r.hi / b.hi;
    dd q = detail::quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline dd& operator+=(dd& a, dd b) { a = a + b; return a; }
inline dd& operator-=(dd& a, dd b) { a = a - b; return a; }
inline dd& operator*=(dd& a, dd b) { a = a * b; return a; }
inline dd& operator/=(dd& a, dd b) { a = a / b; return a; }

inline bool operator<(dd a, dd b)  { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(dd a, dd b)  { return b < a; }
inline bool operator==(dd a, dd b) { return a.hi == b.hi && a.lo == b.lo; }

inline dd dd_abs(dd a) { return a.hi < 0.0 ? -a : a; }

inline dd dd_ldexp(dd a, int n) { return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)}; }

inline dd dd_sqrt(dd a) {
    if (a.hi == 0.0) return {0.0, 0.0};
    double x = 1.0 / std::sqrt(a.hi);
    double y = a.hi * x;
    dd r = (a - dd(y) * dd(y));       // exact-ish residual
    return detail::quick_two_sum(y, r.hi * (x * 0.5));
}

inline constexpr dd dd_ln2{6.931471805599452862e-01, 2.319046813846299558e-17};

inline dd dd_exp(dd a) {
    if (a.hi <= -709.0) return {0.0, 0.0};
    if (a.hi >= 709.0) return {HUGE_VAL, 0.0};
    double m = std::floor(a.hi / dd_ln2.hi + 0.5);
    dd r = dd_ldexp(a - dd_ln2 * dd(m), -9);   // |r| <= ln2/1024
    dd sum = dd(1.0) + r;
    dd term = r;
    for (int i = 2; i <= 12; ++i) {
        term = term * r / dd(double(i));
        sum += term;
        if (std::abs(term.hi) < 1e-35 * std::abs(sum.hi)) break;
    }
    for (int i = 0; i < 9; ++i) sum = sum * sum;
    return dd_ldexp(sum, int(m));
}

inline dd dd_log(dd a) {
    // Newton iteration on exp(y) = a from a binary64 seed; one compensated
    // step squares the seed's accuracy.
    double y0 = std::log(a.hi);
    dd y = dd(y0) + a * dd_exp(dd(-y0)) - dd(1.0);
    return y;
}

// a^b for a > 0
inline dd dd_pow(dd a, dd b) { return dd_exp(b * dd_log(a)); }

inline dd dd_npow(dd a, int n) {
    if (n < 0) return dd(1.0) / dd_npow(a, -n);
    dd r(1.0), base = a;
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

} // namespace hypu
