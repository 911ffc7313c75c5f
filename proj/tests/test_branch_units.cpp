#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tcap/branch.hpp"

using namespace tcap;

namespace {

std::mt19937_64 rng(0xfeedULL);
double un() {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    return d(rng);
}

Interval eval_scalar(const ScalarFamily& f, double s) {
    // direct c0 + 2 sum c_k T_k(s) with the three-term recurrence
    Interval t0(1.0), t1(s), acc = f.at(0) * Interval(1.0);
    if (f.size() > 1) acc = f[0] + Interval(2.0) * f[1] * t1;
    for (std::size_t k = 2; k < f.size(); ++k) {
        const Interval t2 = Interval(2.0 * s) * t1 - t0;
        acc += Interval(2.0) * f[k] * t2;
        t0 = t1;
        t1 = t2;
    }
    return acc;
}

} // namespace

namespace tcap {
// test access helper
inline const Interval& scalar_at(const ScalarFamily& f, std::size_t k) {
    static const Interval zero(0.0);
    return k < f.size() ? f[k] : zero;
}
} // namespace tcap

TEST_CASE("T1 * T1 = T0/2 + T2/2", "[cheb]") {
    // x in the 2x convention is the single coefficient 1/2 at index 1
    ScalarFamily x{Interval(0.0), Interval(0.5)};
    const ScalarFamily sq = cheb_mul(x, x, 2);
    REQUIRE(sq.size() == 3);
    CHECK(sq[0].contains(0.5));  // x^2 = 1/2 + (1/2) T2
    CHECK(sq[1].contains(0.0));
    CHECK(sq[2].contains(0.25)); // 2 * 0.25 = 0.5
    CHECK_THROWS_AS(cheb_mul(x, x, 1), OrderOverflow);
}

TEST_CASE("constant family scales", "[cheb]") {
    ScalarFamily c{Interval(3.0)};
    ScalarFamily f{Interval(1.0), Interval(-0.5), Interval(0.25)};
    const ScalarFamily g = cheb_mul(c, f, 2);
    for (std::size_t k = 0; k < f.size(); ++k) CHECK(g[k].contains(3.0 * f[k].mid()));
}

TEST_CASE("cheb_mul matches pointwise evaluation", "[cheb][property]") {
    for (int trial = 0; trial < 25; ++trial) {
        ScalarFamily a(5), b(5);
        for (auto& c : a) c = Interval(un());
        for (auto& c : b) c = Interval(un());
        const ScalarFamily p = cheb_mul(a, b, 8);
        for (int k = 0; k < 20; ++k) {
            const double s = std::cos(3.141592653589793 * (k + 0.5) / 20.0);
            const Interval lhs = eval_scalar(p, s);
            const Interval rhs = eval_scalar(a, s) * eval_scalar(b, s);
            CHECK(lhs.lo() <= rhs.hi() + 1e-12);
            CHECK(rhs.lo() <= lhs.hi() + 1e-12);
        }
    }
}

TEST_CASE("sequence family product matches node evaluation", "[cheb][property]") {
    const Interval d(2.0), tau(1.0);
    for (int trial = 0; trial < 10; ++trial) {
        SeqFamily a, b;
        a.c.assign(4, CosineSeq(d, tau, 3));
        b.c.assign(3, CosineSeq(d, tau, 2));
        for (auto& s : a.c)
            for (auto& c : s.c) c = Interval(un());
        for (auto& s : b.c)
            for (auto& c : s.c) c = Interval(un());
        const SeqFamily p = fam_mul(a, b);
        REQUIRE(p.order() == a.order() + b.order());
        // evaluate both sides at a few points s
        for (double s : {1.0, -1.0, 0.31, -0.77}) {
            auto eval_fam = [&](const SeqFamily& f) {
                CosineSeq acc = f.c[0];
                double t0 = 1.0, t1 = s;
                if (f.c.size() > 1) acc = acc + Interval(2.0 * t1) * f.c[1];
                for (std::size_t k = 2; k < f.c.size(); ++k) {
                    const double t2 = 2.0 * s * t1 - t0;
                    acc = acc + Interval(2.0 * t2) * f.c[k];
                    t0 = t1;
                    t1 = t2;
                }
                return acc;
            };
            const CosineSeq lhs = eval_fam(p);
            const CosineSeq rhs = conv(eval_fam(a), eval_fam(b));
            for (std::size_t n = 0; n <= rhs.support(); ++n) {
                CHECK(lhs.at(n).lo() <= rhs.at(n).hi() + 1e-10);
                CHECK(rhs.at(n).lo() <= lhs.at(n).hi() + 1e-10);
            }
        }
    }
}

TEST_CASE("family transforms round trip", "[cheb]") {
    const Interval d(1.0), tau(1.0);
    SeqFamily f;
    f.c.assign(5, CosineSeq(d, tau, 4));
    for (auto& s : f.c)
        for (auto& c : s.c) c = Interval(un());
    const auto vals = fam_to_values(f, 8);
    const SeqFamily back = fam_from_values(vals, 8, 4);
    for (std::size_t k = 0; k <= 4; ++k)
        for (std::size_t n = 0; n <= 4; ++n) {
            CHECK(back.c[k].at(n).contains(f.c[k].at(n).mid()));
            CHECK(back.c[k].at(n).width() < 1e-12);
        }
}

TEST_CASE("con norm dominates pointwise values", "[cheb][property]") {
    const Interval d(1.0), tau(1.02);
    SeqFamily f;
    f.c.assign(6, CosineSeq(d, tau, 5));
    for (auto& s : f.c)
        for (auto& c : s.c) c = Interval(un());
    const Interval cn = con_norm(f);
    for (int k = 0; k < 50; ++k) {
        const double s = std::cos(3.141592653589793 * (k + 0.5) / 50.0);
        CosineSeq acc = f.c[0];
        double t0 = 1.0, t1 = s;
        acc = acc + Interval(2.0 * t1) * f.c[1];
        for (std::size_t j = 2; j < f.c.size(); ++j) {
            const double t2 = 2.0 * s * t1 - t0;
            acc = acc + Interval(2.0 * t2) * f.c[j];
            t0 = t1;
            t1 = t2;
        }
        CHECK(norm(acc, SeqNorm::l1_tau).lo() <= cn.hi() * (1 + 1e-12));
    }
    // endpoint evaluations are inside the con ball too
    CHECK(norm(eval_at_pm1(f, true), SeqNorm::l1_tau).lo() <= cn.hi() * (1 + 1e-12));
    CHECK(norm(eval_at_pm1(f, false), SeqNorm::l1_tau).lo() <= cn.hi() * (1 + 1e-12));
}

TEST_CASE("bordered norms", "[branch]") {
    const Interval tau(1.0);
    const std::size_t N = 3;
    IMatrix id = IMatrix::identity(1 + 2 * (N + 1));
    CHECK(brdet::bordered_norm_xtau(id, N + 1, N + 1, tau).contains(1.0));
    // a single off-diagonal entry scales by the weight ratio
    IMatrix m(9, 9);
    m(1, 0) = Interval(1.0); // u1 mode 0 row, nu5 column
    CHECK(brdet::bordered_norm_xtau(m, N + 1, N + 1, tau).contains(1.0));
    IMatrix m2(9, 9);
    m2(2, 0) = Interval(1.0); // u1 mode 1 row (alpha = 2)
    CHECK(brdet::bordered_norm_xtau(m2, N + 1, N + 1, tau).contains(2.0));
}

TEST_CASE("gluing arithmetic", "[branch]") {
    BranchSegmentCertificate a, b;
    a.pass = b.pass = true;
    a.r_min = Interval(1e-9);
    b.r_max = Interval(5e-7);
    SegmentEndpoint ea, eb;
    ea.nu5 = Interval(67.5);
    eb.nu5 = Interval(67.5);
    const Interval d(5.0), tau(1.0);
    ea.u1 = eb.u1 = e0_seq(d, tau, Interval(2.0));
    ea.u2 = eb.u2 = e0_seq(d, tau, Interval(-1.0));
    const GluingRecord ok = glue_segments(a, b, ea, eb);
    CHECK(ok.pass);
    CHECK(ok.gap.hi() < 1e-12);
    // displacing an endpoint by 2 r_max must fail
    SegmentEndpoint far = eb;
    far.nu5 = eb.nu5 + Interval(2.0) * b.r_max;
    const GluingRecord bad = glue_segments(a, b, ea, far);
    CHECK(!bad.pass);
}
