#include <catch2/catch_amalgamated.hpp>

#include "tcap/candidate.hpp"

using namespace tcap;

namespace {

ParamsD periodic1_params() { return ParamsD{0.1764, 8, 1, 0.28, 21, 67.46981860371494}; }

} // namespace

TEST_CASE("steady state cubic float root", "[candidate]") {
    const ParamsD p = periodic1_params();
    const double l1 = default_lambda1_hint(p);
    const double f = ((p.nu3 * p.nu2 * l1 - ((p.nu4 * p.nu2 - 1) * p.nu3 - p.nu1)) * l1 +
                      ((p.nu5 * p.nu1 - (p.nu4 - 1)) * p.nu3 - p.nu4 * p.nu1)) *
                         l1 -
                     p.nu4 * p.nu3;
    CHECK(std::fabs(f) < 1e-9);
    CHECK(l1 > 0);
}

TEST_CASE("zero ansatz collapses to the steady state", "[candidate]") {
    const ParamsD p = periodic1_params();
    const ModelD m = derive_params_d(p, default_lambda1_hint(p));
    const AnsatzSpec a{0.0, 1.0, 0.0, 1.0};
    const FloatSeqPair u = sech_ansatz(a, p, m, SystemKind::localized, 5.0, 16);
    for (double c : u.u1) CHECK(std::fabs(c) < 1e-13);
    // periodic variables sit at the constant state: only mode zero
    const FloatSeqPair v = sech_ansatz(a, p, m, SystemKind::periodic, 5.0, 16);
    CHECK(std::fabs(v.u1[0] - m.lambda1) < 1e-12);
    for (std::size_t n = 1; n <= 16; ++n) CHECK(std::fabs(v.u1[n]) < 1e-13);
}

TEST_CASE("sech coefficients match quadrature", "[candidate]") {
    const ParamsD p = periodic1_params();
    const ModelD m = derive_params_d(p, default_lambda1_hint(p));
    const AnsatzSpec a{1.0, 0.7, 0.0, 1.0};
    const double d = 5.0;
    const FloatSeqPair u = sech_ansatz(a, p, m, SystemKind::localized, d, 24);
    for (std::size_t n : {0u, 1u, 2u, 5u}) {
        // (1/2d) integral of beta sech^2(zeta x) cos(pi n x / d) over (-d, d)
        const int K = 200000;
        long double acc = 0.0L;
        for (int k = 0; k < K; ++k) {
            const double x = -d + 2 * d * (k + 0.5) / K;
            acc += 1.0L / coshl(0.7L * x) / coshl(0.7L * x) *
                   cosl(3.14159265358979323846L * (long double)n * x / d);
        }
        acc *= 2.0L * d / K / (2.0L * d);
        CHECK(std::fabs(u.u1[n] - (double)acc) < 1e-6);
    }
}

TEST_CASE("newton converges instantly at the constant state", "[candidate]") {
    const ParamsD p = periodic1_params();
    const ModelD m = derive_params_d(p, default_lambda1_hint(p));
    FloatSeqPair u = sech_ansatz(AnsatzSpec{0, 1, 0, 1}, p, m, SystemKind::periodic, 5.0, 20);
    double res = 1;
    u = newton_refine(SystemKind::periodic, p, m, u, 1e-13, 2, &res);
    CHECK(res < 1e-12);
}

TEST_CASE("newton failure paths", "[candidate]") {
    const ParamsD p = periodic1_params();
    const ModelD m = derive_params_d(p, default_lambda1_hint(p));
    FloatSeqPair u = sech_ansatz(AnsatzSpec{1, 0.5, 0.3, 0.5}, p, m, SystemKind::periodic, 5.0, 20);
    CHECK_THROWS_AS(newton_refine(SystemKind::periodic, p, m, u, 0.0, 3), NewtonDiverged);
}

TEST_CASE("residual decreases monotonically over accepted iterations", "[candidate]") {
    const ParamsD p = periodic1_params();
    const ModelD m = derive_params_d(p, default_lambda1_hint(p));
    const FloatSeqPair u0 = sech_ansatz(AnsatzSpec{1, 0.5, 0.3, 0.5}, p, m, SystemKind::periodic, 5.0, 27);
    std::vector<double> trace;
    const FloatSeqPair u = newton_refine(SystemKind::periodic, p, m, u0, 1e-12, 60, nullptr, &trace);
    REQUIRE(trace.size() >= 3);
    for (std::size_t k = 1; k < trace.size(); ++k) CHECK(trace[k] < trace[k - 1]);
    CHECK(residual(SystemKind::periodic, p, m, u).norm() < 1e-12);
}

TEST_CASE("continuation basics", "[candidate]") {
    const ParamsD p = periodic1_params();
    const double hint = default_lambda1_hint(p);
    const ModelD m = derive_params_d(p, hint);
    FloatSeqPair u = newton_refine(SystemKind::periodic, p, m,
                                   sech_ansatz(AnsatzSpec{1, 0.5, 0.3, 0.5}, p, m,
                                               SystemKind::periodic, 5.0, 40),
                                   1e-11, 50);
    // zero steps: just the start
    const BranchSample only_start = arclength_continue(p, hint, u, 0.05, 0);
    CHECK(only_start.states.size() == 1);

    const BranchSample s = arclength_continue(p, hint, u, 0.05, 8);
    REQUIRE(s.states.size() == 9);
    for (const auto& st : s.states) {
        // every sample solves F_p to tolerance
        ParamsD pk = p;
        pk.nu5 = st.nu5;
        const ModelD mk = derive_params_d(pk, hint);
        CHECK(residual(SystemKind::periodic, pk, mk, st.u).norm() < 1e-9);
        // tangent normalized in the alpha-weighted metric
        double nrm = st.dnu5 * st.dnu5;
        for (std::size_t n = 0; n < st.du.u1.size(); ++n) {
            const double w = n == 0 ? 1 : 2;
            nrm += w * (st.du.u1[n] * st.du.u1[n] + st.du.u2[n] * st.du.u2[n]);
        }
        CHECK(std::fabs(nrm - 1.0) < 1e-9);
    }
    // no direction flips
    for (std::size_t k = 1; k < s.states.size(); ++k) {
        double dot = s.states[k].dnu5 * s.states[k - 1].dnu5;
        for (std::size_t n = 0; n < s.states[k].du.u1.size(); ++n) {
            const double w = n == 0 ? 1 : 2;
            dot += w * (s.states[k].du.u1[n] * s.states[k - 1].du.u1[n] +
                        s.states[k].du.u2[n] * s.states[k - 1].du.u2[n]);
        }
        CHECK(dot > 0);
    }
}

TEST_CASE("chebyshev fit round trip", "[candidate]") {
    const ParamsD p = periodic1_params();
    const double hint = default_lambda1_hint(p);
    const ModelD m = derive_params_d(p, hint);
    FloatSeqPair u = newton_refine(SystemKind::periodic, p, m,
                                   sech_ansatz(AnsatzSpec{1, 0.5, 0.3, 0.5}, p, m,
                                               SystemKind::periodic, 5.0, 40),
                                   1e-11, 50);
    const BranchSample s = arclength_continue(p, hint, u, 0.02, 20);
    const FloatChebBranch fb = chebyshev_fit(p, hint, s, 24);
    REQUIRE(fb.nu5.size() == 25);
    // endpoint s=+1 reproduces the segment start
    double nu5_start = fb.nu5[0];
    for (std::size_t k = 1; k < fb.nu5.size(); ++k) nu5_start += 2.0 * fb.nu5[k];
    CHECK(std::fabs(nu5_start - s.states.front().nu5) < 1e-8);
    // coefficients decay
    CHECK(std::fabs(fb.nu5[24]) < 1e-6 * std::fabs(fb.nu5[0]));
}

TEST_CASE("constant-branch fit has only the zeroth coefficient", "[candidate]") {
    // fitting a constant family: all samples identical
    const ParamsD p = periodic1_params();
    const double hint = default_lambda1_hint(p);
    const ModelD m = derive_params_d(p, hint);
    FloatSeqPair u = newton_refine(SystemKind::periodic, p, m,
                                   sech_ansatz(AnsatzSpec{0, 1, 0, 1}, p, m, SystemKind::periodic,
                                               5.0, 12),
                                   1e-12, 10);
    // cheb transform of constant node data
    std::vector<double> vals(9, 3.25);
    const std::vector<double> coef = cheb_values_to_coeffs_d(vals, 8);
    CHECK(std::fabs(coef[0] - 3.25) < 1e-13);
    for (std::size_t k = 1; k < coef.size(); ++k) CHECK(std::fabs(coef[k]) < 1e-13);
    // nu5(s) = s has the single coefficient 1/2 in the 2x convention
    std::vector<double> nodes(9);
    for (int k = 0; k <= 8; ++k) nodes[k] = std::cos(3.141592653589793 * k / 8.0);
    const std::vector<double> lin = cheb_values_to_coeffs_d(nodes, 8);
    CHECK(std::fabs(lin[1] - 0.5) < 1e-13);
    for (std::size_t k : {0u, 2u, 3u, 4u}) CHECK(std::fabs(lin[k]) < 1e-13);
}
