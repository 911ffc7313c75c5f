#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tcap/neumann.hpp"

using namespace tcap;

namespace {

std::mt19937_64 rng(0xabcdULL);

// long Neumann series oracle for |Phi_inv - Phi^{-1}|_{1,tau}:
// Phi^{-1} = sum_k (1 - Phi*Phi_inv)^k * Phi_inv truncated far out
CosineSeq series_inverse(const InverseData& d, int terms) {
    CosineSeq acc = d.phi_inv;
    CosineSeq pw = d.one_minus_pp;
    std::size_t cap = d.phi.support() * 40 + 64;
    for (int k = 1; k <= terms; ++k) {
        CosineSeq t = conv(pw, d.phi_inv);
        acc = acc + project(t, cap, ProjSide::leq);
        if (k < terms) {
            pw = project(conv(pw, d.one_minus_pp), cap, ProjSide::leq);
            if (norm(pw, SeqNorm::l1_tau).hi() < 1e-300) break;
        }
    }
    return acc;
}

} // namespace

TEST_CASE("exact inverse pair has zero bound", "[neumann]") {
    const Interval d(1.0), tau(1.0);
    const CosineSeq phi = e0_seq(d, tau, Interval(2.0));
    const CosineSeq inv = e0_seq(d, tau, Interval(0.5));
    const InverseData data = make_inverse_data(phi, inv);
    CHECK(data.defect.hi() == 0.0);
    CHECK(inverse_error_bound(data).hi() == 0.0);
    CHECK(ball_inverse_bound(data, Interval(0.0)).contains(0.5));
}

TEST_CASE("fft seed gives tiny defect", "[neumann]") {
    const Interval d(1.0), tau(1.0);
    CosineSeq phi(d, tau, 1);
    phi.c[0] = Interval(1.0);
    phi.c[1] = Interval(0.1);
    const InverseData data = make_inverse_data(phi, 64);
    CHECK(data.defect.hi() < 1e-10);

    CosineSeq bad(d, tau, 1);
    bad.c[0] = Interval(0.2);
    bad.c[1] = Interval(0.1); // function 0.2 + 0.2 cos hits zero on the grid
    CHECK_THROWS_AS(approx_inverse(bad, 32), GridZero);
}

TEST_CASE("defect >= 1 is rejected", "[neumann]") {
    const Interval d(1.0), tau(1.0);
    const CosineSeq phi = e0_seq(d, tau, Interval(2.0));
    const CosineSeq junk = e0_seq(d, tau, Interval(3.0)); // 1 - 6 = -5
    const InverseData data = make_inverse_data(phi, junk);
    CHECK(data.defect.lo() > 1.0);
    CHECK_THROWS_AS(inverse_error_bound(data), DefectNotContractive);
    CHECK_THROWS_AS(ball_inverse_bound(data, Interval(0.0)), BallNotContractive);
}

TEST_CASE("inverse error bound dominates the series oracle", "[neumann][property]") {
    std::uniform_real_distribution<double> un(-1.0, 1.0);
    const Interval d(1.0);
    int well_conditioned_checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const Interval tau(trial % 2 ? 1.0 : 1.01);
        CosineSeq phi(d, tau, 6);
        phi.c[0] = Interval(2.0 + un(rng));
        for (std::size_t n = 1; n <= 6; ++n) phi.c[n] = Interval(0.25 * un(rng) / double(n));
        InverseData data;
        try {
            data = make_inverse_data(phi, 24); // deliberately short support
        } catch (const GridZero&) {
            continue;
        }
        if (!(data.defect.hi() < 0.5)) continue;
        const Interval bound = inverse_error_bound(data);
        // oracle: |Phi_inv - series|_{1,tau} from a long Neumann series
        const CosineSeq inv_oracle = series_inverse(data, 10000 / (int)phi.support());
        const Interval err_oracle = norm(data.phi_inv - inv_oracle, SeqNorm::l1_tau);
        CHECK(bound.hi() >= err_oracle.lo() * (1 - 1e-9));
        if (data.defect.hi() < 1e-3 && err_oracle.lo() > 1e-15) {
            CHECK(bound.hi() <= 10.0 * err_oracle.hi());
            ++well_conditioned_checked;
        }
    }
    CHECK(well_conditioned_checked > 3);
}

TEST_CASE("ball inverse bound dominates sampled perturbations", "[neumann][property]") {
    std::uniform_real_distribution<double> un(-1.0, 1.0);
    const Interval d(1.0), tau(1.0);
    CosineSeq phi(d, tau, 4);
    phi.c[0] = Interval(2.0);
    phi.c[1] = Interval(0.3);
    phi.c[2] = Interval(-0.1);
    const InverseData data = make_inverse_data(phi, 96);
    const double r = 0.05;
    const Interval bound = ball_inverse_bound(data, Interval(r));
    for (int trial = 0; trial < 100; ++trial) {
        // random perturbation with |Delta|_1 = r
        CosineSeq delta(d, tau, 4);
        double mass = 0;
        for (auto& c : delta.c) c = Interval(un(rng));
        for (std::size_t n = 0; n <= 4; ++n) mass += alpha_n(n) * std::fabs(delta.c[n].mid());
        for (auto& c : delta.c) c = Interval(c.mid() * r / mass);
        const CosineSeq pert = phi + delta;
        const InverseData pd = make_inverse_data(pert, 96);
        const CosineSeq inv_o = series_inverse(pd, 400);
        const Interval norm_inv = norm(inv_o, SeqNorm::l1_tau);
        CHECK(bound.hi() >= norm_inv.lo() * (1 - 1e-6));
    }
    // divergence as r approaches the contractivity boundary
    const double rmax = (1.0 - data.defect.hi()) / data.inv_norm.hi();
    double prev = 0.0;
    for (double f : {0.1, 0.5, 0.9, 0.99}) {
        const double b = ball_inverse_bound(data, Interval(f * rmax)).hi();
        CHECK(b > prev);
        prev = b;
    }
    CHECK_THROWS_AS(ball_inverse_bound(data, Interval(rmax * 1.01)), BallNotContractive);
}

TEST_CASE("weighted residual reduces correctly", "[neumann]") {
    const Interval d(1.0), tau(1.0);
    CosineSeq phi(d, tau, 3);
    phi.c[0] = Interval(2.0);
    phi.c[1] = Interval(0.2);
    const InverseData data = make_inverse_data(phi, 64);

    const CosineSeq zero(d, tau, 0);
    auto plain_norm = [](const CosineSeq& s) { return norm(s, SeqNorm::l1_tau); };
    CHECK(weighted_inverse_residual(data, zero, plain_norm).hi() == 0.0);

    // with A = identity the bound is the Xi-weighted inverse error within algebra
    CosineSeq xi(d, tau, 2);
    xi.c[0] = Interval(1.0);
    xi.c[2] = Interval(0.5);
    const Interval weighted = weighted_inverse_residual(data, xi, plain_norm);
    const Interval factored = norm(xi, SeqNorm::l1_tau) * inverse_error_bound(data);
    CHECK(weighted.lo() <= factored.hi() * (1 + 1e-12));
}

TEST_CASE("squared inverse data stays consistent", "[neumann]") {
    const Interval d(2.0), tau(1.0);
    CosineSeq phi(d, tau, 5);
    phi.c[0] = Interval(3.0);
    phi.c[1] = Interval(0.4);
    phi.c[3] = Interval(-0.2);
    const InverseData base = make_inverse_data(phi, 128);
    const InverseData sq = make_inverse_data_squared(base);
    // defect of the squared pair obeys |1-E^2| <= |1-E| (2 + |1-E|)
    const double lhs = sq.defect.hi();
    const double rhs = base.defect.hi() * (2 + base.defect.hi());
    CHECK(lhs <= rhs * (1 + 1e-9) + 1e-300);
    // the squared seed is exactly conv(phi_inv, phi_inv)
    const CosineSeq expect = conv(base.phi_inv, base.phi_inv);
    for (std::size_t n = 0; n <= expect.support(); n += 7)
        CHECK(sq.phi_inv.at(n).contains(expect.at(n).mid()));
}
