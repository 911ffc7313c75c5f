#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "tcap/interval.hpp"

using namespace tcap;

namespace {

// deterministic generator for the fuzz suites
std::mt19937_64 rng(0x5eedULL);

double random_double(double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(rng);
}

Interval random_interval(double scale) {
    const double a = random_double(-scale, scale);
    const double w = std::fabs(random_double(0, scale * 1e-3));
    return Interval(a, a + w);
}

} // namespace

TEST_CASE("exact integer arithmetic stays exact", "[interval]") {
    const Interval a(1.0), b(2.0);
    const Interval s = a + b;
    CHECK(s.lo() == 3.0);
    CHECK(s.hi() == 3.0);
    const Interval p = Interval(3.0) * Interval(7.0);
    CHECK(p.lo() == 21.0);
    CHECK(p.hi() == 21.0);
    const Interval q = Interval(1.0) / Interval(4.0);
    CHECK(q.lo() == 0.25);
    CHECK(q.hi() == 0.25);
}

TEST_CASE("mixed-sign multiplication", "[interval]") {
    const Interval r = Interval(0.0, 1.0) * Interval(-1.0, 2.0);
    CHECK(r.lo() == -1.0);
    CHECK(r.hi() == 2.0);
}

TEST_CASE("division encloses one third within 2 ulp", "[interval]") {
    const Interval q = Interval(1.0) / Interval(3.0);
    const long double third = 1.0L / 3.0L;
    CHECK((long double)q.lo() <= third);
    CHECK((long double)q.hi() >= third);
    CHECK(q.hi() - q.lo() <= 2 * std::nextafter(q.hi(), 2.0) - 2 * q.hi());
    CHECK_THROWS_AS(Interval(1.0) / Interval(-1.0, 1.0), IntervalError);
}

TEST_CASE("elementary functions", "[interval]") {
    const Interval s = iv_sqrt(Interval(4.0));
    CHECK(s.lo() == 2.0);
    CHECK(s.hi() == 2.0);
    CHECK_THROWS_AS(iv_sqrt(Interval(-1.0, 1.0)), IntervalError);

    const Interval c = iv_cosh(Interval(0.0));
    CHECK(c.lo() == 1.0);
    CHECK(c.contains(1.0));

    const Interval e = iv_exp(Interval(1.0));
    const long double euler = expl(1.0L);
    CHECK((long double)e.lo() <= euler);
    CHECK((long double)e.hi() >= euler);
    CHECK(e.hi() - e.lo() <= 4 * (std::nextafter(e.hi(), 3.0) - e.hi()));
}

TEST_CASE("pi and trig enclosures", "[interval]") {
    const long double pi = 3.14159265358979323846264338327950288L;
    CHECK((long double)iv_pi().lo() <= pi);
    CHECK((long double)iv_pi().hi() >= pi);

    CHECK(iv_cos_pi_ratio(0, 1).lo() == 1.0);
    CHECK(iv_cos_pi_ratio(1, 2).lo() == 0.0);
    CHECK(iv_cos_pi_ratio(1, 1).hi() == -1.0);
    const Interval half = iv_cos_pi_ratio(1, 3);
    CHECK(half.contains(0.5));
    CHECK(half.width() < 1e-14);
    const Interval s6 = iv_sin_pi_ratio(1, 6);
    CHECK(s6.contains(0.5));
    CHECK(s6.width() < 1e-14);

    for (int k = 0; k < 64; ++k) {
        // the long double oracle carries ~1e-19 argument error of its own
        const long double x = (long double)k * pi / 32.0L;
        const Interval ck = iv_cos_pi_ratio(k, 32) + Interval(-1e-18, 1e-18);
        CHECK(ck.contains((double)cosl(x)));
        const Interval via_cos = iv_cos(Interval(double(k) / 32.0) * iv_pi());
        CHECK(via_cos.lo() <= (double)cosl(x) + 1e-13);
        CHECK(via_cos.hi() >= (double)cosl(x) - 1e-13);
    }
}

TEST_CASE("inclusion fuzzing, 1e5 samples", "[interval][property]") {
    std::size_t violations = 0;
    for (int it = 0; it < 100000; ++it) {
        const Interval a = random_interval(1e3);
        const Interval b = random_interval(1e3);
        const double pa = random_double(a.lo(), a.hi());
        const double pb = random_double(b.lo(), b.hi());
        const long double la = pa, lb = pb;

        if (!(a + b).contains(double(la + lb)) && !(a + b).contains((double)(la + lb)))
            ++violations;
        if (!(a - b).contains((double)(la - lb))) ++violations;
        {
            const long double prod = la * lb;
            const Interval p = a * b;
            if ((long double)p.lo() > prod || (long double)p.hi() < prod) ++violations;
        }
        if (!b.contains(0.0)) {
            const long double quot = la / lb;
            const Interval q = a / b;
            if ((long double)q.lo() > quot || (long double)q.hi() < quot) ++violations;
        }
        {
            const Interval m = iv_abs(a);
            if ((long double)m.lo() > fabsl(la) || (long double)m.hi() < fabsl(la)) ++violations;
        }
        if (a.lo() > 0) {
            const Interval s = iv_sqrt(a);
            const long double r = sqrtl(la);
            if ((long double)s.lo() > r || (long double)s.hi() < r) ++violations;
        }
        if (std::fabs(pa) < 300) {
            const Interval e = iv_exp(a);
            const long double r = expl(la);
            if ((long double)e.lo() > r || (long double)e.hi() < r) ++violations;
            const Interval ch = iv_cosh(a);
            const long double rc = coshl(la);
            if ((long double)ch.lo() > rc || (long double)ch.hi() < rc) ++violations;
            const Interval sh = iv_sinh(a);
            const long double rs = sinhl(la);
            if ((long double)sh.lo() > rs || (long double)sh.hi() < rs) ++violations;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("monotonicity of enclosures", "[interval][property]") {
    for (int it = 0; it < 2000; ++it) {
        const Interval ap = random_interval(10.0);
        const Interval bp = random_interval(10.0);
        const Interval a(ap.lo() + 0.25 * ap.width(), ap.hi() - 0.25 * ap.width());
        const Interval b(bp.lo() + 0.25 * bp.width(), bp.hi() - 0.25 * bp.width());
        CHECK((ap + bp).contains(a + b));
        CHECK((ap - bp).contains(a - b));
        CHECK((ap * bp).contains(a * b));
        if (!bp.contains(0.0)) CHECK((ap / bp).contains(a / b));
    }
}

TEST_CASE("integer powers", "[interval]") {
    CHECK(iv_pow(Interval(2.0), 10).contains(1024.0));
    CHECK(iv_pow(Interval(-2.0, 1.0), 2).contains(4.0));
    CHECK(iv_pow(Interval(-2.0, 1.0), 2).lo() == 0.0);
    CHECK(iv_pow(Interval(-2.0), 3).contains(-8.0));
    CHECK(iv_pow(Interval(1.5), 0).contains(1.0));
}

TEST_CASE("construction errors", "[interval]") {
    CHECK_THROWS_AS(Interval(1.0, 0.0), IntervalError);
    CHECK_THROWS_AS(Interval(std::nan(""), 1.0), IntervalError);
}

TEST_CASE("serialization forms", "[interval]") {
    const Interval q = Interval(1.0) / Interval(3.0);
    const std::string dec = to_string(q);
    CHECK(dec.find("0.333333333333") != std::string::npos);
    const std::string hex = to_string(q, true);
    CHECK(hex.find("0x") != std::string::npos);
}
