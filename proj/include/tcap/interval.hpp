#pragma once

// Directed-rounding interval arithmetic on IEEE doubles.
//
// Endpoints are produced by round-to-nearest arithmetic followed by a
// one-ulp nextafter widening, except when an error-free transform
// (TwoSum / fma residual) proves the nearest result exact or already on
// the safe side.  No rounding-mode switches are performed, so values are
// safe to share across threads.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace tcap {

struct IntervalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace rnd {

inline double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

// TwoSum error term: exact value of a+b is s+err.
inline double sum_err(double a, double b, double s) {
    const double bb = s - a;
    return (a - (s - bb)) + (b - bb);
}

inline double add_down(double a, double b) {
    const double s = a + b;
    if (std::isinf(s)) return s > 0 ? std::numeric_limits<double>::max() : s;
    const double e = sum_err(a, b, s);
    return e >= 0 ? s : down(s);
}

inline double add_up(double a, double b) {
    const double s = a + b;
    if (std::isinf(s)) return s < 0 ? -std::numeric_limits<double>::max() : s;
    const double e = sum_err(a, b, s);
    return e <= 0 ? s : up(s);
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

inline double mul_down(double a, double b) {
    const double p = a * b;
    if (p == 0 && (a == 0 || b == 0)) return 0.0;
    if (std::isinf(p)) return p > 0 ? std::numeric_limits<double>::max() : p;
    const double e = std::fma(a, b, -p);
    return e >= 0 ? p : down(p);
}

inline double mul_up(double a, double b) {
    const double p = a * b;
    if (p == 0 && (a == 0 || b == 0)) return 0.0;
    if (std::isinf(p)) return p < 0 ? -std::numeric_limits<double>::max() : p;
    const double e = std::fma(a, b, -p);
    return e <= 0 ? p : up(p);
}

// Sign of (a/b - q) equals sign of (a - q*b)/b; fma gives the exact sign of a - q*b.
inline double div_down(double a, double b) {
    const double q = a / b;
    if (std::isinf(q)) return q > 0 ? std::numeric_limits<double>::max() : q;
    const double r = std::fma(q, b, -a); // q*b - a
    const bool q_too_big = (b > 0) ? (r > 0) : (r < 0);
    return q_too_big ? down(q) : q;
}

inline double div_up(double a, double b) {
    const double q = a / b;
    if (std::isinf(q)) return q < 0 ? -std::numeric_limits<double>::max() : q;
    const double r = std::fma(q, b, -a);
    const bool q_too_small = (b > 0) ? (r < 0) : (r > 0);
    return q_too_small ? up(q) : q;
}

inline double sqrt_down(double a) {
    const double r = std::sqrt(a);
    const double e = std::fma(r, r, -a); // r^2 - a
    return e > 0 ? down(r) : r;
}

inline double sqrt_up(double a) {
    const double r = std::sqrt(a);
    const double e = std::fma(r, r, -a);
    return e < 0 ? up(r) : r;
}

} // namespace rnd

class Interval {
public:
    Interval() : lo_(0.0), hi_(0.0) {}
    Interval(double point) : Interval(point, point) {}
    Interval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (std::isnan(lo_) || std::isnan(hi_) || lo_ > hi_)
            throw IntervalError("invalid interval endpoints");
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double mid() const { return 0.5 * (lo_ + hi_); }
    double width() const { return rnd::sub_up(hi_, lo_); }
    // mig/mag: smallest and largest magnitude over the interval
    double mig() const { return contains(0.0) ? 0.0 : std::min(std::fabs(lo_), std::fabs(hi_)); }
    double mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }

    bool contains(double x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool is_point() const { return lo_ == hi_; }
    bool is_positive() const { return lo_ > 0; }
    bool is_negative() const { return hi_ < 0; }

    static Interval hull(const Interval& a, const Interval& b) {
        return Interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
    }

private:
    double lo_, hi_;
};

inline Interval operator+(const Interval& a, const Interval& b) {
    return Interval(rnd::add_down(a.lo(), b.lo()), rnd::add_up(a.hi(), b.hi()));
}

inline Interval operator-(const Interval& a, const Interval& b) {
    return Interval(rnd::sub_down(a.lo(), b.hi()), rnd::sub_up(a.hi(), b.lo()));
}

inline Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

inline Interval operator*(const Interval& a, const Interval& b) {
    const double c1d = rnd::mul_down(a.lo(), b.lo()), c1u = rnd::mul_up(a.lo(), b.lo());
    const double c2d = rnd::mul_down(a.lo(), b.hi()), c2u = rnd::mul_up(a.lo(), b.hi());
    const double c3d = rnd::mul_down(a.hi(), b.lo()), c3u = rnd::mul_up(a.hi(), b.lo());
    const double c4d = rnd::mul_down(a.hi(), b.hi()), c4u = rnd::mul_up(a.hi(), b.hi());
    return Interval(std::min(std::min(c1d, c2d), std::min(c3d, c4d)),
                    std::max(std::max(c1u, c2u), std::max(c3u, c4u)));
}

inline Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains(0.0)) throw IntervalError("interval division by interval containing zero");
    const double c1d = rnd::div_down(a.lo(), b.lo()), c1u = rnd::div_up(a.lo(), b.lo());
    const double c2d = rnd::div_down(a.lo(), b.hi()), c2u = rnd::div_up(a.lo(), b.hi());
    const double c3d = rnd::div_down(a.hi(), b.lo()), c3u = rnd::div_up(a.hi(), b.lo());
    const double c4d = rnd::div_down(a.hi(), b.hi()), c4u = rnd::div_up(a.hi(), b.hi());
    return Interval(std::min(std::min(c1d, c2d), std::min(c3d, c4d)),
                    std::max(std::max(c1u, c2u), std::max(c3u, c4u)));
}

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }
inline Interval& operator/=(Interval& a, const Interval& b) { return a = a / b; }

inline Interval iv_abs(const Interval& a) {
    return Interval(a.mig(), a.mag());
}

inline Interval iv_min(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

inline Interval iv_max(const Interval& a, const Interval& b) {
    return Interval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

inline Interval iv_sqrt(const Interval& a) {
    if (a.lo() < 0) throw IntervalError("sqrt of interval containing negative values");
    return Interval(rnd::sqrt_down(a.lo()), rnd::sqrt_up(a.hi()));
}

inline Interval iv_sqr(const Interval& a) {
    const Interval m = iv_abs(a);
    return Interval(rnd::mul_down(m.lo(), m.lo()), rnd::mul_up(m.hi(), m.hi()));
}

// libm exp on this platform is faithful to within 1 ulp; widen by 2 ulps per side.
inline Interval iv_exp(const Interval& a) {
    double lo = std::exp(a.lo()), hi = std::exp(a.hi());
    lo = rnd::down(rnd::down(lo));
    hi = rnd::up(rnd::up(hi));
    if (lo < 0) lo = 0;
    return Interval(lo, hi);
}

inline Interval iv_cosh(const Interval& a) {
    const Interval am = iv_abs(a);
    const Interval e = iv_exp(am);
    const Interval r = (e + Interval(1.0) / e) * Interval(0.5);
    return iv_max(r, Interval(1.0)); // cosh >= 1
}

inline Interval iv_sinh(const Interval& a) {
    auto half_diff = [](const Interval& x) {
        const Interval e = iv_exp(x);
        return (e - Interval(1.0) / e) * Interval(0.5);
    };
    return Interval(half_diff(Interval(a.lo())).lo(), half_diff(Interval(a.hi())).hi());
}

// Nonnegative integer power by repeated squaring.
inline Interval iv_pow(const Interval& a, unsigned n) {
    Interval result(1.0);
    Interval base = a;
    unsigned k = n;
    bool even_total = (n % 2 == 0);
    if (even_total && !a.contains(0.0)) {
        base = iv_abs(a); // keeps even powers tight for sign-definite bases
    } else if (even_total && a.contains(0.0) && n > 0) {
        const Interval m = iv_abs(a);
        Interval mp(1.0);
        for (unsigned i = 0; i < n; ++i) mp = mp * m;
        return Interval(0.0, mp.hi());
    }
    while (k > 0) {
        if (k & 1u) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

inline const Interval& iv_pi() {
    // double below pi, then one ulp up encloses it
    static const Interval pi(0x1.921fb54442d18p+1, rnd::up(0x1.921fb54442d18p+1));
    return pi;
}

inline Interval iv_two_pi() { return iv_pi() * Interval(2.0); }

namespace detail {

// cos on |x| <= pi/4 + slack via the alternating Taylor series.
inline Interval cos_kernel(const Interval& x) {
    const Interval x2 = iv_sqr(x);
    Interval term(1.0), sum(1.0);
    for (int k = 1; k <= 10; ++k) {
        term = term * x2 / Interval(double(2 * k - 1) * double(2 * k));
        sum = (k % 2 == 1) ? sum - term : sum + term;
    }
    // |x2|^11 / 22! remainder, term already carries x2^10/20!
    const Interval rem = iv_abs(term * x2 / Interval(21.0 * 22.0));
    Interval r = sum + Interval(-rem.hi(), rem.hi());
    return Interval(std::max(r.lo(), -1.0), std::min(r.hi(), 1.0));
}

inline Interval sin_kernel(const Interval& x) {
    const Interval x2 = iv_sqr(x);
    Interval term = x, sum = x;
    for (int k = 1; k <= 10; ++k) {
        term = term * x2 / Interval(double(2 * k) * double(2 * k + 1));
        sum = (k % 2 == 1) ? sum - term : sum + term;
    }
    const Interval rem = iv_abs(term * x2 / Interval(22.0 * 23.0));
    Interval r = sum + Interval(-rem.hi(), rem.hi());
    return Interval(std::max(r.lo(), -1.0), std::min(r.hi(), 1.0));
}

} // namespace detail

// cos/sin with quadrant reduction by interval pi/2.  Width grows with |x|
// through the reduction; intended for moderate arguments (twiddle tables,
// pointwise cosine sums).
inline Interval iv_cos(const Interval& x);

inline Interval iv_sin(const Interval& x) {
    if (x.width() > 3.2) return Interval(-1.0, 1.0);
    const Interval half_pi = iv_pi() * Interval(0.5);
    const double k = std::nearbyint(x.mid() / (0.5 * 3.14159265358979323846));
    const Interval y = x - Interval(k) * half_pi;
    if (y.mag() > 0.79) return Interval(-1.0, 1.0);
    const long long ki = (long long)k;
    switch (((ki % 4) + 4) % 4) {
        case 0: return detail::sin_kernel(y);
        case 1: return detail::cos_kernel(y);
        case 2: return -detail::sin_kernel(y);
        default: return -detail::cos_kernel(y);
    }
}

inline Interval iv_cos(const Interval& x) {
    if (x.width() > 3.2) return Interval(-1.0, 1.0);
    const Interval half_pi = iv_pi() * Interval(0.5);
    const double k = std::nearbyint(x.mid() / (0.5 * 3.14159265358979323846));
    const Interval y = x - Interval(k) * half_pi;
    if (y.mag() > 0.79) return Interval(-1.0, 1.0);
    const long long ki = (long long)k;
    switch (((ki % 4) + 4) % 4) {
        case 0: return detail::cos_kernel(y);
        case 1: return -detail::sin_kernel(y);
        case 2: return -detail::cos_kernel(y);
        default: return detail::sin_kernel(y);
    }
}

// cos(pi * p / q) for integers, exact quadrant handling; the workhorse for
// twiddle factors and Chebyshev nodes.
inline Interval iv_cos_pi_ratio(long long p, long long q) {
    if (q <= 0) throw IntervalError("iv_cos_pi_ratio: q must be positive");
    long long r = ((p % (2 * q)) + 2 * q) % (2 * q); // r/q in [0,2)
    if (2 * r > 2 * q) r = 2 * q - r;                // cos symmetry, r/q in [0,1]
    // exact special angles
    if (r == 0) return Interval(1.0);
    if (2 * r == q) return Interval(0.0);
    if (r == q) return Interval(-1.0);
    const Interval x = iv_pi() * Interval(double(r)) / Interval(double(q));
    if (2 * r < q) {
        if (4 * r <= q) return detail::cos_kernel(x);
        return detail::sin_kernel(iv_pi() * Interval(0.5) - x);
    }
    const Interval xr = iv_pi() - x;
    if (4 * (q - r) <= q) return -detail::cos_kernel(xr);
    return -detail::sin_kernel(iv_pi() * Interval(0.5) - xr);
}

inline Interval iv_sin_pi_ratio(long long p, long long q) {
    return iv_cos_pi_ratio(q - 2 * p, 2 * q); // sin(pi p/q) = cos(pi (q-2p)/(2q))
}

// Minimal double-double helpers for sharp sign evaluations of short
// polynomial expressions with exactly representable (point) inputs.
namespace dd {

struct DD {
    double hi = 0.0, lo = 0.0;
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD add(const DD& a, const DD& b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    DD t = two_sum(s.hi, s.lo);
    return t;
}

inline DD mul(const DD& a, const DD& b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    DD t = two_sum(p.hi, p.lo);
    return t;
}

inline DD mul(const DD& a, double b) { return mul(a, DD{b, 0.0}); }

} // namespace dd

inline std::string to_string(const Interval& a, bool hex = false) {
    char buf[128];
    if (hex)
        std::snprintf(buf, sizeof buf, "[%a,%a]", a.lo(), a.hi());
    else
        std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", a.lo(), a.hi());
    return buf;
}

} // namespace tcap
